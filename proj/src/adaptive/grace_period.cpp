#include "streamtree/adaptive/grace_period.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "streamtree/stats/hoeffding.hpp"

namespace streamtree::adaptive {
namespace {
constexpr auto kUnbounded = std::numeric_limits<std::uint64_t>::max();
}

std::uint64_t instances_for_bound(double gap, double range, double delta) {
  if (!(gap > 0.0)) return kUnbounded;
  const double exact = range * range * std::log(1.0 / delta) / (2.0 * gap * gap);
  if (!(exact < 1e18)) return kUnbounded;
  auto n = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::ceil(exact)));
  // ceil() of a rounded quotient can be off by one at the crossing; settle it
  // against the bound itself.
  while (stats::hoeffding_bound(range, delta, n) > gap) ++n;
  while (n > 1 && stats::hoeffding_bound(range, delta, n - 1) <= gap) --n;
  return n;
}

std::optional<std::uint64_t> required_grace_period(double delta_g, double epsilon,
                                                   std::optional<double> tau, double range,
                                                   double delta) {
  if (!tau) return std::nullopt;
  if (delta_g < epsilon && delta_g > *tau) return instances_for_bound(delta_g, range, delta);
  if (delta_g < *tau && epsilon > *tau) return instances_for_bound(*tau, range, delta);
  return std::nullopt;
}

std::uint64_t recalc_grace_period(double delta_g, double epsilon, std::optional<double> tau,
                                  double range, double delta, std::uint64_t current,
                                  std::uint64_t floor, std::uint64_t cap) {
  const auto required = required_grace_period(delta_g, epsilon, tau, range, delta);
  const std::uint64_t n = required.value_or(current);
  return std::clamp(n, floor, std::max(floor, cap));
}

}  // namespace streamtree::adaptive
