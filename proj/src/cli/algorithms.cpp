#include "streamtree/cli/algorithms.hpp"

#include <cctype>

namespace streamtree::cli {
namespace {

std::string upper(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

void apply_letters(std::string_view letters, ControlFlags& flags) {
  for (const char raw : letters) {
    switch (std::toupper(static_cast<unsigned char>(raw))) {
      case 'G': flags.adaptive_grace = true; break;
      case 'T': flags.adaptive_tie = true; break;
      case 'E': flags.expansion = true; break;
      case ',':
      case ' ':
      case '_': break;
      default: throw ConfigError(std::string("unknown flag letter '") + raw + "' (expected G, T or E)");
    }
  }
}

}  // namespace

std::string canonical_name(const ControlFlags& flags) {
  std::string name = flags.strict ? "DFDT" : "VFDT";
  std::string suffix;
  if (flags.adaptive_grace) suffix += 'G';
  if (flags.adaptive_tie) suffix += 'T';
  if (flags.expansion) suffix += 'E';
  if (!suffix.empty()) name += "_" + suffix;
  return name;
}

AlgorithmSpec parse_algorithm(std::string_view algo, std::string_view flags) {
  const std::string name = upper(algo);
  ControlFlags f;
  std::string_view letters;
  if (name.rfind("VFDT", 0) == 0) {
    f.strict = false;
  } else if (name.rfind("DFDT", 0) == 0) {
    f.strict = true;
  } else {
    throw ConfigError("unknown algorithm '" + std::string(algo) + "' (expected vfdt or dfdt)");
  }
  letters = std::string_view(name).substr(4);
  if (!letters.empty() && letters.front() != '_')
    throw ConfigError("unknown algorithm '" + std::string(algo) + "'");
  apply_letters(letters, f);
  apply_letters(flags, f);
  return {canonical_name(f), f};
}

std::vector<AlgorithmSpec> ablation_algorithms() {
  std::vector<AlgorithmSpec> out;
  for (const char* name : {"VFDT", "VFDT_E", "VFDT_G", "VFDT_T", "VFDT_GT", "DFDT", "DFDT_E",
                           "DFDT_G", "DFDT_T", "DFDT_GE", "DFDT_GT", "DFDT_TE", "DFDT_GTE"})
    out.push_back(parse_algorithm(name));
  return out;
}

}  // namespace streamtree::cli
