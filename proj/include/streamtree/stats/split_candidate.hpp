#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "streamtree/stats/estimators.hpp"

namespace streamtree::stats {

enum class SplitKind {
  Null,         // "do not split"; merit 0, no branches
  Numeric,      // binary: value <= threshold goes to branch 0
  Categorical,  // multiway: one branch per observed value
};

struct SplitCandidate {
  SplitKind kind = SplitKind::Null;
  std::size_t attribute = 0;
  double threshold = 0.0;
  /// Categorical only: attribute value routed to each branch.
  std::vector<std::uint32_t> branch_values;
  double merit = 0.0;
  /// Estimated class distribution per branch.
  std::vector<std::vector<double>> distributions;

  std::size_t branch_count() const noexcept { return distributions.size(); }
  bool is_null() const noexcept { return kind == SplitKind::Null; }

  static SplitCandidate null_split() { return {}; }
};

/// One binary candidate per threshold, `n_points` thresholds evenly spaced
/// strictly inside (min_seen, max_seen). Empty when the observed range is
/// degenerate or fewer than two classes were seen.
std::vector<SplitCandidate> numeric_split_candidates(std::size_t attribute,
                                                     const GaussianEstimator& est,
                                                     std::size_t n_points);

/// Multiway candidate over the observed values, or nullopt when fewer than
/// two distinct values were seen.
std::optional<SplitCandidate> categorical_split_candidate(std::size_t attribute,
                                                          const CategoricalEstimator& est);

}  // namespace streamtree::stats
