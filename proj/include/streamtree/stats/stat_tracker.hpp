#pragma once

#include <cmath>
#include <cstdint>

namespace streamtree::stats {

/// Single-pass mean / population variance accumulator (Welford, with the
/// Chan et al. merge for weighted updates).
///
/// An empty tracker reports mean 0 and stddev 0.
class StatTracker {
 public:
  void add(double x) noexcept {
    ++count_;
    const double delta = x - mean_;
    mean_ += delta / static_cast<double>(count_);
    m2_ += delta * (x - mean_);
  }

  /// Equivalent to calling add(x) `copies` times.
  void add(double x, std::uint64_t copies) noexcept {
    if (copies == 0) return;
    const auto n = static_cast<double>(count_);
    const auto k = static_cast<double>(copies);
    const double total = n + k;
    const double delta = x - mean_;
    mean_ += delta * k / total;
    m2_ += delta * delta * n * k / total;
    count_ += copies;
  }

  void merge(const StatTracker& other) noexcept {
    if (other.count_ == 0) return;
    if (count_ == 0) {
      *this = other;
      return;
    }
    const auto n = static_cast<double>(count_);
    const auto k = static_cast<double>(other.count_);
    const double total = n + k;
    const double delta = other.mean_ - mean_;
    mean_ += delta * k / total;
    m2_ += other.m2_ + delta * delta * n * k / total;
    count_ += other.count_;
  }

  std::uint64_t count() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }
  double mean() const noexcept { return mean_; }
  double m2() const noexcept { return m2_; }

  double variance() const noexcept {
    if (count_ == 0) return 0.0;
    const double v = m2_ / static_cast<double>(count_);
    return v > 0.0 ? v : 0.0;
  }

  double stddev() const noexcept { return std::sqrt(variance()); }

 private:
  std::uint64_t count_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

}  // namespace streamtree::stats
