#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "streamtree/tree/params.hpp"

namespace streamtree::cli {

/// Invalid command-line configuration (exit code 2).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct AlgorithmSpec {
  std::string name;
  ControlFlags flags;
};

/// VFDT or DFDT (strict constraints) followed by the enabled subset of
/// G, T, E in that order: VFDT, VFDT_G, DFDT_GTE, ...
std::string canonical_name(const ControlFlags& flags);

/// `algo` is "vfdt" or "dfdt" (any case) with extra letters in `flags`, or a
/// full name such as "DFDT_GT". Throws ConfigError on unknown names or
/// letters.
AlgorithmSpec parse_algorithm(std::string_view algo, std::string_view flags = {});

/// The thirteen ablation variants: VFDT, VFDT_E, VFDT_G, VFDT_T, VFDT_GT,
/// DFDT and DFDT_{E,G,T,GE,GT,TE,GTE}.
std::vector<AlgorithmSpec> ablation_algorithms();

}  // namespace streamtree::cli
