#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace streamtree::eval {

/// Critical value q_alpha of the two-tailed Nemenyi test (studentized range
/// with infinite degrees of freedom divided by sqrt 2). Supported: alpha in
/// {0.05, 0.10}, 2 <= k <= 20. Throws std::invalid_argument otherwise.
double nemenyi_q(double alpha, std::size_t k);

/// Ranks of `scores` where rank 1 is the best; tied scores share the mean
/// of the ranks they span.
std::vector<double> rank_row(const std::vector<double>& scores, bool higher_is_better = true);

struct RankSummary {
  std::vector<std::string> algorithms;
  std::vector<double> average_ranks;
  std::size_t datasets = 0;
  double alpha = 0.05;
  double critical_difference = 0.0;
  double friedman_chi2 = 0.0;
  double iman_davenport_f = 0.0;
  double p_value = 1.0;  // Friedman chi-square, k-1 degrees of freedom
  /// significant[i][j]: |rank_i - rank_j| > critical_difference.
  std::vector<std::vector<bool>> significant;
};

/// Friedman test with the Nemenyi post-hoc on a datasets x algorithms
/// matrix. Requires k >= 2 and N >= 2.
RankSummary friedman_nemenyi(const std::vector<std::vector<double>>& scores,
                             std::vector<std::string> algorithms, double alpha,
                             bool higher_is_better = true);

/// Same statistics from already averaged ranks.
RankSummary friedman_from_ranks(std::vector<double> average_ranks, std::size_t datasets,
                                std::vector<std::string> algorithms, double alpha);

}  // namespace streamtree::eval
