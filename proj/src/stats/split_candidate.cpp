#include "streamtree/stats/split_candidate.hpp"

#include "streamtree/stats/entropy.hpp"

namespace streamtree::stats {

std::vector<SplitCandidate> numeric_split_candidates(std::size_t attribute,
                                                     const GaussianEstimator& est,
                                                     std::size_t n_points) {
  std::vector<SplitCandidate> out;
  if (est.observed_classes() < 2 || n_points == 0) return out;
  const double lo = est.min_seen();
  const double hi = est.max_seen();
  if (!(hi > lo)) return out;

  const std::vector<double> parent = est.class_totals();
  const std::size_t k = est.num_classes();
  out.reserve(n_points);
  for (std::size_t i = 1; i <= n_points; ++i) {
    const double threshold =
        lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n_points + 1);
    SplitCandidate cand;
    cand.kind = SplitKind::Numeric;
    cand.attribute = attribute;
    cand.threshold = threshold;
    cand.distributions.assign(2, std::vector<double>(k, 0.0));
    for (std::size_t c = 0; c < k; ++c) {
      const double left = est.mass_at_or_below(c, threshold);
      cand.distributions[0][c] = left;
      cand.distributions[1][c] = parent[c] - left;
    }
    cand.merit = info_gain(parent, cand.distributions);
    out.push_back(std::move(cand));
  }
  return out;
}

std::optional<SplitCandidate> categorical_split_candidate(std::size_t attribute,
                                                          const CategoricalEstimator& est) {
  const auto& table = est.table();
  if (table.size() < 2) return std::nullopt;

  const std::size_t k = est.num_classes();
  SplitCandidate cand;
  cand.kind = SplitKind::Categorical;
  cand.attribute = attribute;
  std::vector<double> parent(k, 0.0);
  for (const auto& [value, counts] : table) {
    cand.branch_values.push_back(value);
    std::vector<double> dist(k);
    for (std::size_t c = 0; c < k; ++c) {
      dist[c] = static_cast<double>(counts[c]);
      parent[c] += dist[c];
    }
    cand.distributions.push_back(std::move(dist));
  }
  cand.merit = info_gain(parent, cand.distributions);
  return cand;
}

}  // namespace streamtree::stats
