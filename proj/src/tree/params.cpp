#include "streamtree/tree/params.hpp"

#include <stdexcept>

namespace streamtree {

void HoeffdingParams::validate() const {
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("delta must be in (0, 1)");
  if (grace < 1) throw std::invalid_argument("grace period must be >= 1");
  if (!(tau >= 0.0 && tau <= 1.0)) throw std::invalid_argument("tau must be in [0, 1]");
  if (effective_grace_cap() < grace)
    throw std::invalid_argument("grace period cap must be >= the grace period");
  if (candidate_points < 1) throw std::invalid_argument("candidate_points must be >= 1");
  if (window < 1) throw std::invalid_argument("window must be >= 1");
  if (!(deactivate_below >= 0.0 && grow_fast_above > deactivate_below))
    throw std::invalid_argument("activity thresholds must satisfy 0 <= low < high");
}

}  // namespace streamtree
