#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace streamtree::adaptive {

inline constexpr double kDeactivateBelow = 0.2;
inline constexpr double kGrowFastAbove = 2.0;

enum class ActivityClass { Deactivate, Normal, GrowFast };

std::string_view to_string(ActivityClass a) noexcept;

/// Share of the tree's traffic a leaf received since it was created,
/// relative to an even split over the current leaves:
///
///   (n_l - n_leaf_l) * |LH| / (n - n_tree_l)
///
/// nullopt when no instance reached the tree since the leaf was created.
std::optional<double> activity_fraction(std::uint64_t n_l, std::uint64_t n_leaf_l,
                                        std::size_t leaf_count, std::uint64_t n,
                                        std::uint64_t n_tree_l);

/// Deactivate below `deactivate_below` (only once warm-up is met), GrowFast
/// above `grow_fast_above`, Normal otherwise. Both comparisons are strict.
ActivityClass classify_activity(double fraction, bool warmup_met,
                                double deactivate_below = kDeactivateBelow,
                                double grow_fast_above = kGrowFastAbove) noexcept;

}  // namespace streamtree::adaptive
