#include "streamtree/adaptive/split_control.hpp"

namespace streamtree::adaptive {
namespace {

bool at_least_mean_minus_sd(double x, const stats::StatTracker& t) {
  return x >= t.mean() - t.stddev();
}

bool at_least_mean_plus_sd(double x, const stats::StatTracker& t) {
  return x >= t.mean() + t.stddev();
}

}  // namespace

std::string_view to_string(SplitPath p) noexcept {
  switch (p) {
    case SplitPath::HBFailed: return "hb_failed";
    case SplitPath::SkipAccepted: return "skip_accepted";
    case SplitPath::StrictAccepted: return "strict_accepted";
    case SplitPath::StrictRejected: return "strict_rejected";
    case SplitPath::PlainAccepted: return "plain_accepted";
  }
  return "?";
}

std::optional<double> adaptive_tie_threshold(const stats::StatTracker& hoeffding) {
  if (hoeffding.empty()) return std::nullopt;
  return hoeffding.mean();
}

SplitAttemptOutcome can_split(bool grow_fast, std::span<const double> ranked_merits,
                              double leaf_entropy, std::uint64_t n_l, double epsilon,
                              SplitHistory& history, const ControlFlags& flags,
                              double tau_fixed) {
  SplitAttemptOutcome out;
  out.epsilon = epsilon;
  const double best = ranked_merits.empty() ? 0.0 : ranked_merits[0];
  const double second = ranked_merits.size() > 1 ? ranked_merits[1] : 0.0;
  out.delta_g = best - second;

  // Compared against the history of other attempts, then recorded whatever
  // the outcome.
  const bool c3 = at_least_mean_minus_sd(leaf_entropy, history.leaf_entropy);
  history.leaf_entropy.add(leaf_entropy);

  bool tie = false;
  if (flags.adaptive_tie) {
    const auto tau = adaptive_tie_threshold(history.hoeffding);
    tie = tau.has_value() && epsilon < *tau;
  } else {
    tie = epsilon < tau_fixed;
  }
  if (!(out.delta_g >= epsilon || tie)) {
    out.path = SplitPath::HBFailed;
    return out;
  }

  if (!flags.strict) {
    out.decision = true;
    out.path = SplitPath::PlainAccepted;
    return out;
  }

  if (grow_fast && flags.expansion) {
    const bool c1 = at_least_mean_plus_sd(leaf_entropy, history.entropy);
    const bool c2 = at_least_mean_plus_sd(best, history.gain);
    if (c1 && c2) {
      out.decision = true;
      out.path = SplitPath::SkipAccepted;
      return out;
    }
  }

  const bool c4 = at_least_mean_minus_sd(leaf_entropy, history.entropy);
  const bool c5 = at_least_mean_minus_sd(best, history.gain);
  const bool c6 = static_cast<double>(n_l) >= history.count.mean();

  history.entropy.add(leaf_entropy);
  history.gain.add(best);
  history.count.add(static_cast<double>(n_l));

  out.decision = c3 && c4 && c5 && c6;
  out.path = out.decision ? SplitPath::StrictAccepted : SplitPath::StrictRejected;
  return out;
}

}  // namespace streamtree::adaptive
