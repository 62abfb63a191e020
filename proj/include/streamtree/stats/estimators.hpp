#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <vector>

#include "streamtree/stats/stat_tracker.hpp"

namespace streamtree::stats {

/// Per-class Gaussian summary of one numeric attribute at a leaf.
class GaussianEstimator {
 public:
  struct ClassSummary {
    StatTracker stats;
    double min_seen = std::numeric_limits<double>::infinity();
    double max_seen = -std::numeric_limits<double>::infinity();
  };

  explicit GaussianEstimator(std::size_t num_classes = 0) : classes_(num_classes) {}

  void observe(double value, std::size_t cls);

  std::size_t num_classes() const noexcept { return classes_.size(); }
  const ClassSummary& summary(std::size_t cls) const { return classes_.at(cls); }

  /// Number of classes with at least one observation.
  std::size_t observed_classes() const noexcept;
  std::vector<double> class_totals() const;
  double min_seen() const noexcept;
  double max_seen() const noexcept;

  /// Estimated number of class `cls` observations with value <= threshold,
  /// clamped to [0, count]. Zero-variance classes put all their mass on the
  /// side of their mean.
  double mass_at_or_below(std::size_t cls, double threshold) const;

 private:
  std::vector<ClassSummary> classes_;
};

/// (attribute value, class) contingency table of one categorical attribute.
class CategoricalEstimator {
 public:
  explicit CategoricalEstimator(std::size_t num_classes = 0) : num_classes_(num_classes) {}

  void observe(std::uint32_t value, std::size_t cls);

  std::size_t num_classes() const noexcept { return num_classes_; }
  /// value -> per-class counts, ordered by value index.
  const std::map<std::uint32_t, std::vector<std::uint64_t>>& table() const noexcept {
    return table_;
  }
  /// Number of non-zero (value, class) cells.
  std::size_t observed_cells() const noexcept { return cells_; }
  std::uint64_t total() const noexcept { return total_; }

 private:
  std::size_t num_classes_;
  std::map<std::uint32_t, std::vector<std::uint64_t>> table_;
  std::size_t cells_ = 0;
  std::uint64_t total_ = 0;
};

}  // namespace streamtree::stats
