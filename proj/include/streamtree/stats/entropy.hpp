#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace streamtree::stats {

/// Shannon entropy in bits of a class-count vector. Zero counts contribute
/// nothing. Throws std::domain_error when every count is zero.
double entropy(std::span<const double> counts);
double entropy(std::span<const std::uint64_t> counts);

/// entropy(parent) minus the size-weighted entropy of the children.
///
/// The children must partition the parent: their element-wise sums have to
/// match the parent counts (relative tolerance 1e-9), otherwise
/// std::invalid_argument is thrown. Empty children carry zero weight.
double info_gain(std::span<const double> parent,
                 const std::vector<std::vector<double>>& children);

}  // namespace streamtree::stats
