#pragma once

// Independent formulations used as test oracles. Nothing here calls into the
// library's kernels.

#include <cmath>
#include <algorithm>
#include <cstdint>
#include <vector>

namespace streamtree::testing {

/// k * log2(k) with 0 * log2(0) = 0, in extended precision.
inline long double klog2k(std::uint64_t k) {
  if (k == 0) return 0.0L;
  const long double x = static_cast<long double>(k);
  return x * std::log2(x);
}

/// Entropy of integer counts via H = log2(n) - (1/n) sum c log2 c, where the
/// only inexact steps are the integer logarithms.
inline long double entropy_oracle(const std::vector<std::uint64_t>& counts) {
  std::uint64_t n = 0;
  long double s = 0.0L;
  for (auto c : counts) {
    n += c;
    s += klog2k(c);
  }
  return (klog2k(n) - s) / static_cast<long double>(n);
}

/// Information gain of integer partitions:
///   [n log n - sum c log c - sum_b (n_b log n_b - sum_c c_bc log c_bc)] / n
inline long double info_gain_oracle(const std::vector<std::uint64_t>& parent,
                                    const std::vector<std::vector<std::uint64_t>>& children) {
  std::uint64_t n = 0;
  long double acc = 0.0L;
  for (auto c : parent) {
    n += c;
    acc -= klog2k(c);
  }
  acc += klog2k(n);
  for (const auto& child : children) {
    std::uint64_t nb = 0;
    for (auto c : child) {
      nb += c;
      acc += klog2k(c);
    }
    acc -= klog2k(nb);
  }
  return acc / static_cast<long double>(n);
}

/// Two-pass population mean and standard deviation.
struct BatchMoments {
  long double mean = 0.0L;
  long double stddev = 0.0L;
};

inline BatchMoments batch_moments(const std::vector<double>& xs) {
  BatchMoments m;
  if (xs.empty()) return m;
  for (double x : xs) m.mean += x;
  m.mean /= static_cast<long double>(xs.size());
  long double ss = 0.0L;
  for (double x : xs) ss += (x - m.mean) * (x - m.mean);
  m.stddev = std::sqrt(ss / static_cast<long double>(xs.size()));
  return m;
}

/// Column-wise spreadsheet recomputation of the efficiency score: each
/// column normalized by its own min and max (0.5 for a constant column),
/// memory and runtime flipped, then the row mean.
inline std::vector<double> spreadsheet_efficiency(const std::vector<double>& acc,
                                                  const std::vector<double>& mem,
                                                  const std::vector<double>& rt) {
  auto cell = [](const std::vector<double>& col, std::size_t i, bool flip) {
    const auto [lo, hi] = std::minmax_element(col.begin(), col.end());
    if (!(*hi > *lo)) return 0.5;
    return flip ? (*hi - col[i]) / (*hi - *lo) : (col[i] - *lo) / (*hi - *lo);
  };
  std::vector<double> out;
  for (std::size_t i = 0; i < acc.size(); ++i)
    out.push_back((cell(acc, i, false) + cell(mem, i, true) + cell(rt, i, true)) / 3.0);
  return out;
}

/// Standard normal CDF.
inline double phi(double z) { return 0.5 * (1.0 + std::erf(z / std::sqrt(2.0))); }

}  // namespace streamtree::testing
