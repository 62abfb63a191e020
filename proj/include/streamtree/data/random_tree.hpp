#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "streamtree/data/stream.hpp"

namespace streamtree::data {

struct RandomTreeConfig {
  std::uint64_t seed = 1;
  std::size_t attributes = 5;
  std::size_t classes = 2;
  std::size_t depth = 3;
  std::size_t instances = 100000;
  double noise = 0.0;
};

/// Labels uniform points of [0,1]^d with a fixed random axis-parallel tree
/// of the given depth. With probability `noise` the label is replaced by a
/// uniformly drawn different class. Fully determined by the seed; the
/// random draws are implementation-independent.
class RandomTreeStream final : public InstanceStream {
 public:
  explicit RandomTreeStream(RandomTreeConfig config);

  const Schema& schema() const override { return schema_; }
  std::optional<Instance> next() override;
  std::optional<std::size_t> count_hint() const override { return config_.instances; }
  std::string name() const override;

  /// Noise-free label of a point.
  std::uint32_t concept_label(const std::vector<double>& x) const;
  /// Label emitted for the point at stream position `index`.
  std::uint32_t label_for(const std::vector<double>& x, std::uint64_t index) const;

  struct ConceptNode {
    std::size_t attribute = 0;
    double threshold = 0.0;
    int left = -1;  // child indices; -1 on leaves
    int right = -1;
    std::uint32_t label = 0;
  };
  const std::vector<ConceptNode>& concept_nodes() const noexcept { return nodes_; }

 private:
  int build(std::size_t depth_left, std::vector<double> lo, std::vector<double> hi,
            std::optional<std::uint32_t> avoid);

  RandomTreeConfig config_;
  Schema schema_;
  std::mt19937_64 rng_;
  std::vector<ConceptNode> nodes_;
  std::uint64_t emitted_ = 0;
};

/// Uniform double in [0, 1) from the top 53 bits of one engine draw.
inline double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace streamtree::data
