#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "streamtree/stats/stat_tracker.hpp"

namespace streamtree::adaptive {

/// Ablation switches. All off is plain VFDT.
struct ControlFlags {
  bool adaptive_grace = false;  // G
  bool adaptive_tie = false;    // T
  bool expansion = false;       // E
  bool strict = false;          // DFDT split constraints

  friend bool operator==(const ControlFlags&, const ControlFlags&) = default;
};

/// Tree-wide histories consulted by the split constraints.
struct SplitHistory {
  stats::StatTracker hoeffding;     // every epsilon computed at an attempt gate
  stats::StatTracker entropy;       // H_l when the statistical gate held
  stats::StatTracker gain;          // G_best when the statistical gate held
  stats::StatTracker count;         // n_l when the statistical gate held
  stats::StatTracker leaf_entropy;  // H_l at every split attempt
};

enum class SplitPath { HBFailed, SkipAccepted, StrictAccepted, StrictRejected, PlainAccepted };

std::string_view to_string(SplitPath p) noexcept;

struct SplitAttemptOutcome {
  bool decision = false;
  double delta_g = 0.0;
  double epsilon = 0.0;
  SplitPath path = SplitPath::HBFailed;
};

/// Mean of every recorded Hoeffding bound; nullopt before the first one.
std::optional<double> adaptive_tie_threshold(const stats::StatTracker& hoeffding);

/// Split decision for one attempt.
///
/// `ranked_merits` is sorted descending; a missing second entry counts as 0.
/// The statistical gate is (dG >= epsilon) or a tie (epsilon below the mean
/// recorded bound with `adaptive_tie`, below `tau_fixed` otherwise). With
/// `strict` the outcome additionally depends on the constraint battery:
///
///   skip (GrowFast leaves, needs `expansion`):
///     H_l  >= avg(H)  + sd(H)    and   G_best >= avg(G) + sd(G)
///   conservative:
///     H_l  >= avg(H_LH) - sd(H_LH),    H_l >= avg(H) - sd(H),
///     G_best >= avg(G) - sd(G),        n_l >= avg(n)
///
/// The conservative inputs are recorded into `history` after they are
/// evaluated. The skip path returns before that. history.leaf_entropy is
/// updated on every call.
SplitAttemptOutcome can_split(bool grow_fast, std::span<const double> ranked_merits,
                              double leaf_entropy, std::uint64_t n_l, double epsilon,
                              SplitHistory& history, const ControlFlags& flags,
                              double tau_fixed);

}  // namespace streamtree::adaptive
