#pragma once

#include <cstdint>
#include <optional>

namespace streamtree::adaptive {

/// Smallest n with hoeffding_bound(range, delta, n) <= gap.
std::uint64_t instances_for_bound(double gap, double range, double delta);

/// Unclamped grace period after a failed attempt, or nullopt when neither
/// adjustment scenario applies:
///   dG < epsilon and dG > tau   -> instances_for_bound(dG)
///   dG < tau and epsilon > tau  -> instances_for_bound(tau)
std::optional<std::uint64_t> required_grace_period(double delta_g, double epsilon,
                                                   std::optional<double> tau, double range,
                                                   double delta);

/// required_grace_period() clamped to [floor, cap]; `current` when no
/// scenario applies or tau is absent. A zero tau in the second scenario
/// yields `cap`.
std::uint64_t recalc_grace_period(double delta_g, double epsilon, std::optional<double> tau,
                                  double range, double delta, std::uint64_t current,
                                  std::uint64_t floor, std::uint64_t cap);

}  // namespace streamtree::adaptive
