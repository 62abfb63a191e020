#pragma once

// Small synthetic streams for tests.

#include <random>
#include <vector>

#include "streamtree/data/random_tree.hpp"
#include "streamtree/tree/schema.hpp"

namespace streamtree::testing {

struct Labeled {
  Schema schema;
  std::vector<Instance> instances;
};

/// Two numeric and two categorical attributes. The label mixes a random-tree
/// concept over the numeric part with the first categorical value, plus a
/// fraction of uniformly random labels.
inline Labeled mixed_stream(std::uint64_t seed, std::size_t n, std::size_t classes = 3,
                            double noise = 0.1) {
  data::RandomTreeConfig cfg;
  cfg.seed = seed;
  cfg.attributes = 2;
  cfg.classes = classes;
  cfg.depth = 3;
  cfg.instances = n;
  data::RandomTreeStream concept_stream(cfg);

  std::vector<Attribute> attrs{Attribute::numeric("u"), Attribute::numeric("v"),
                               Attribute::categorical("colour", {"red", "green", "blue"}),
                               Attribute::categorical("size", {"s", "m", "l", "xl"})};
  std::vector<std::string> names;
  for (std::size_t c = 0; c < classes; ++c) names.push_back("k" + std::to_string(c));
  Labeled out{Schema(std::move(attrs), std::move(names)), {}};

  std::mt19937_64 rng(seed * 7919 + 1);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    Instance x;
    x.values = {u(rng), u(rng), static_cast<double>(rng() % 3), static_cast<double>(rng() % 4)};
    std::uint32_t label = concept_stream.concept_label({x.values[0], x.values[1]});
    if (x.values[2] == 1.0) label = static_cast<std::uint32_t>((label + 1) % classes);
    if (u(rng) < noise) label = static_cast<std::uint32_t>(rng() % classes);
    x.label = label;
    out.instances.push_back(std::move(x));
  }
  return out;
}

inline data::RandomTreeConfig ablation_config(std::uint64_t seed, std::size_t instances) {
  data::RandomTreeConfig cfg;
  cfg.seed = seed;
  cfg.attributes = 2 + seed % 5;
  cfg.classes = 2 + seed % 3;
  cfg.depth = 2 + seed % 4;
  cfg.noise = 0.05 * static_cast<double>(seed % 4);
  cfg.instances = instances;
  return cfg;
}

}  // namespace streamtree::testing
