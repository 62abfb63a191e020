#include "streamtree/adaptive/activity.hpp"

namespace streamtree::adaptive {

std::string_view to_string(ActivityClass a) noexcept {
  switch (a) {
    case ActivityClass::Deactivate: return "deactivate";
    case ActivityClass::Normal: return "normal";
    case ActivityClass::GrowFast: return "grow_fast";
  }
  return "?";
}

std::optional<double> activity_fraction(std::uint64_t n_l, std::uint64_t n_leaf_l,
                                        std::size_t leaf_count, std::uint64_t n,
                                        std::uint64_t n_tree_l) {
  if (n <= n_tree_l) return std::nullopt;
  const std::uint64_t since_creation = n_l > n_leaf_l ? n_l - n_leaf_l : 0;
  return static_cast<double>(since_creation) * static_cast<double>(leaf_count) /
         static_cast<double>(n - n_tree_l);
}

ActivityClass classify_activity(double fraction, bool warmup_met, double deactivate_below,
                                double grow_fast_above) noexcept {
  if (fraction > grow_fast_above) return ActivityClass::GrowFast;
  if (warmup_met && fraction < deactivate_below) return ActivityClass::Deactivate;
  return ActivityClass::Normal;
}

}  // namespace streamtree::adaptive
