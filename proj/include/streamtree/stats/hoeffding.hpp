#pragma once

#include <cstddef>
#include <cstdint>

namespace streamtree::stats {

/// epsilon = sqrt(R^2 ln(1/delta) / (2n)).
/// Requires range > 0, delta in (0, 1] and n >= 1 (std::domain_error otherwise).
double hoeffding_bound(double range, double delta, std::uint64_t n);

/// Range of information gain under base-2 entropy: log2(#classes).
double info_gain_range(std::size_t num_classes);

}  // namespace streamtree::stats
