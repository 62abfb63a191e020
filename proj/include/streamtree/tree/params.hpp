#pragma once

#include <cstddef>
#include <cstdint>

#include "streamtree/adaptive/activity.hpp"
#include "streamtree/adaptive/split_control.hpp"

namespace streamtree {

using adaptive::ControlFlags;

struct HoeffdingParams {
  double delta = 1e-7;
  std::uint64_t grace = 200;  // default n_min
  double tau = 0.05;          // fixed tie threshold
  ControlFlags flags;
  std::uint64_t grace_cap = 0;  // 0: 20 * grace
  std::size_t candidate_points = 10;
  std::size_t window = 1000;
  double deactivate_below = adaptive::kDeactivateBelow;
  double grow_fast_above = adaptive::kGrowFastAbove;

  std::uint64_t effective_grace_cap() const noexcept { return grace_cap ? grace_cap : 20 * grace; }

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;
};

}  // namespace streamtree
