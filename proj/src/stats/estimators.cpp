#include "streamtree/stats/estimators.hpp"

#include <algorithm>
#include <cmath>

namespace streamtree::stats {

void GaussianEstimator::observe(double value, std::size_t cls) {
  auto& s = classes_.at(cls);
  s.stats.add(value);
  s.min_seen = std::min(s.min_seen, value);
  s.max_seen = std::max(s.max_seen, value);
}

std::size_t GaussianEstimator::observed_classes() const noexcept {
  return static_cast<std::size_t>(std::count_if(
      classes_.begin(), classes_.end(), [](const ClassSummary& s) { return !s.stats.empty(); }));
}

std::vector<double> GaussianEstimator::class_totals() const {
  std::vector<double> totals(classes_.size());
  for (std::size_t c = 0; c < classes_.size(); ++c)
    totals[c] = static_cast<double>(classes_[c].stats.count());
  return totals;
}

double GaussianEstimator::min_seen() const noexcept {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& s : classes_) m = std::min(m, s.min_seen);
  return m;
}

double GaussianEstimator::max_seen() const noexcept {
  double m = -std::numeric_limits<double>::infinity();
  for (const auto& s : classes_) m = std::max(m, s.max_seen);
  return m;
}

double GaussianEstimator::mass_at_or_below(std::size_t cls, double threshold) const {
  const auto& s = classes_.at(cls);
  const auto count = static_cast<double>(s.stats.count());
  if (count == 0.0) return 0.0;
  if (threshold < s.min_seen) return 0.0;
  if (threshold >= s.max_seen) return count;

  const double sd = s.stats.stddev();
  if (!(sd > 0.0)) return s.stats.mean() <= threshold ? count : 0.0;
  const double z = (threshold - s.stats.mean()) / (sd * std::sqrt(2.0));
  return std::clamp(count * 0.5 * std::erfc(-z), 0.0, count);
}

void CategoricalEstimator::observe(std::uint32_t value, std::size_t cls) {
  auto [it, inserted] = table_.try_emplace(value, num_classes_, 0);
  auto& cell = it->second.at(cls);
  if (cell == 0) ++cells_;
  ++cell;
  ++total_;
}

}  // namespace streamtree::stats
