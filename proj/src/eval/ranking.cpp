#include "streamtree/eval/ranking.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include <boost/math/distributions/chi_squared.hpp>

namespace streamtree::eval {
namespace {

// k = 2..20. Entries up to k = 10 are the commonly tabulated values; the rest
// are q(inf, k) / sqrt(2) rounded to three decimals.
constexpr std::array<double, 19> kQ05 = {1.960, 2.343, 2.569, 2.728, 2.850, 2.949, 3.031,
                                         3.102, 3.164, 3.219, 3.268, 3.313, 3.354, 3.391,
                                         3.426, 3.458, 3.489, 3.517, 3.544};
constexpr std::array<double, 19> kQ10 = {1.645, 2.052, 2.291, 2.459, 2.589, 2.693, 2.780,
                                         2.855, 2.920, 2.978, 3.030, 3.077, 3.120, 3.159,
                                         3.196, 3.230, 3.261, 3.291, 3.319};

}  // namespace

double nemenyi_q(double alpha, std::size_t k) {
  const std::array<double, 19>* table = nullptr;
  if (std::abs(alpha - 0.05) < 1e-12) table = &kQ05;
  if (std::abs(alpha - 0.10) < 1e-12) table = &kQ10;
  if (!table)
    throw std::invalid_argument("unsupported alpha " + std::to_string(alpha) +
                                "; supported levels: 0.05, 0.10");
  if (k < 2 || k > 20)
    throw std::invalid_argument("Nemenyi critical values cover 2..20 algorithms, got " +
                                std::to_string(k));
  return (*table)[k - 2];
}

std::vector<double> rank_row(const std::vector<double>& scores, bool higher_is_better) {
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return higher_is_better ? scores[a] > scores[b] : scores[a] < scores[b];
  });
  std::vector<double> ranks(scores.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j + 1 < order.size() && scores[order[j + 1]] == scores[order[i]]) ++j;
    const double shared = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
    for (std::size_t t = i; t <= j; ++t) ranks[order[t]] = shared;
    i = j + 1;
  }
  return ranks;
}

RankSummary friedman_from_ranks(std::vector<double> average_ranks, std::size_t datasets,
                                std::vector<std::string> algorithms, double alpha) {
  const std::size_t k = average_ranks.size();
  if (k < 2) throw std::invalid_argument("friedman: need at least two algorithms");
  if (datasets < 2) throw std::invalid_argument("friedman: need at least two datasets");
  if (algorithms.size() != k) throw std::invalid_argument("friedman: one name per algorithm required");

  RankSummary s;
  s.algorithms = std::move(algorithms);
  s.average_ranks = std::move(average_ranks);
  s.datasets = datasets;
  s.alpha = alpha;

  const auto kd = static_cast<double>(k);
  const auto nd = static_cast<double>(datasets);
  double sum_sq = 0.0;
  for (const double r : s.average_ranks) sum_sq += r * r;
  s.friedman_chi2 = std::max(0.0, 12.0 * nd / (kd * (kd + 1.0)) *
                                      (sum_sq - kd * (kd + 1.0) * (kd + 1.0) / 4.0));
  const double denom = nd * (kd - 1.0) - s.friedman_chi2;
  s.iman_davenport_f = denom > 0.0 ? (nd - 1.0) * s.friedman_chi2 / denom
                                   : std::numeric_limits<double>::infinity();
  const boost::math::chi_squared_distribution<double> chi2(kd - 1.0);
  s.p_value = boost::math::cdf(boost::math::complement(chi2, s.friedman_chi2));

  s.critical_difference = nemenyi_q(alpha, k) * std::sqrt(kd * (kd + 1.0) / (6.0 * nd));
  s.significant.assign(k, std::vector<bool>(k, false));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      s.significant[i][j] =
          std::abs(s.average_ranks[i] - s.average_ranks[j]) > s.critical_difference;
  return s;
}

RankSummary friedman_nemenyi(const std::vector<std::vector<double>>& scores,
                             std::vector<std::string> algorithms, double alpha,
                             bool higher_is_better) {
  const std::size_t n = scores.size();
  if (n < 2) throw std::invalid_argument("friedman: need at least two datasets");
  const std::size_t k = scores.front().size();
  if (k < 2) throw std::invalid_argument("friedman: need at least two algorithms");
  nemenyi_q(alpha, k);  // reject unsupported alpha before doing any work

  std::vector<double> avg(k, 0.0);
  for (const auto& row : scores) {
    if (row.size() != k) throw std::invalid_argument("friedman: ragged score matrix");
    const auto ranks = rank_row(row, higher_is_better);
    for (std::size_t j = 0; j < k; ++j) avg[j] += ranks[j];
  }
  for (auto& r : avg) r /= static_cast<double>(n);
  return friedman_from_ranks(std::move(avg), n, std::move(algorithms), alpha);
}

}  // namespace streamtree::eval
