#include "streamtree/stats/hoeffding.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace streamtree::stats {

double hoeffding_bound(double range, double delta, std::uint64_t n) {
  if (n == 0) throw std::domain_error("hoeffding_bound: n must be >= 1");
  if (!(range > 0.0)) throw std::domain_error("hoeffding_bound: range must be positive");
  if (!(delta > 0.0 && delta <= 1.0)) throw std::domain_error("hoeffding_bound: delta must be in (0, 1]");
  return std::sqrt(range * range * std::log(1.0 / delta) / (2.0 * static_cast<double>(n)));
}

double info_gain_range(std::size_t num_classes) {
  return std::log2(static_cast<double>(std::max<std::size_t>(num_classes, 2)));
}

}  // namespace streamtree::stats
