#include "streamtree/data/random_tree.hpp"

#include <stdexcept>

namespace streamtree::data {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Schema make_schema(const RandomTreeConfig& c) {
  std::vector<Attribute> attrs;
  for (std::size_t i = 0; i < c.attributes; ++i) attrs.push_back(Attribute::numeric("a" + std::to_string(i)));
  std::vector<std::string> classes;
  for (std::size_t i = 0; i < c.classes; ++i) classes.push_back("c" + std::to_string(i));
  return Schema(std::move(attrs), std::move(classes));
}

}  // namespace

RandomTreeStream::RandomTreeStream(RandomTreeConfig config)
    : config_(config), schema_(make_schema(config)), rng_(config.seed) {
  if (config_.depth < 1) throw std::invalid_argument("random tree: depth must be >= 1");
  if (config_.attributes < 1) throw std::invalid_argument("random tree: need at least one attribute");
  if (!(config_.noise >= 0.0 && config_.noise < 0.5))
    throw std::invalid_argument("random tree: noise must be in [0, 0.5)");
  build(config_.depth, std::vector<double>(config_.attributes, 0.0),
        std::vector<double>(config_.attributes, 1.0), std::nullopt);
}

int RandomTreeStream::build(std::size_t depth_left, std::vector<double> lo, std::vector<double> hi,
                            std::optional<std::uint32_t> avoid) {
  const int id = static_cast<int>(nodes_.size());
  nodes_.emplace_back();
  if (depth_left == 0) {
    // Uniform class; a right leaf differs from its left sibling.
    const auto k = static_cast<std::uint64_t>(config_.classes);
    if (avoid) {
      nodes_[id].label = static_cast<std::uint32_t>((*avoid + 1 + rng_() % (k - 1)) % k);
    } else {
      nodes_[id].label = static_cast<std::uint32_t>(rng_() % k);
    }
    return id;
  }
  const auto attr = static_cast<std::size_t>(rng_() % config_.attributes);
  const double width = hi[attr] - lo[attr];
  const double threshold = lo[attr] + width * (0.25 + 0.5 * unit_uniform(rng_));
  nodes_[id].attribute = attr;
  nodes_[id].threshold = threshold;

  auto left_hi = hi;
  left_hi[attr] = threshold;
  const int left = build(depth_left - 1, lo, std::move(left_hi), std::nullopt);
  std::optional<std::uint32_t> sibling;
  if (depth_left == 1) sibling = nodes_[left].label;
  auto right_lo = std::move(lo);
  right_lo[attr] = threshold;
  const int right = build(depth_left - 1, std::move(right_lo), std::move(hi), sibling);
  nodes_[id].left = left;
  nodes_[id].right = right;
  return id;
}

std::string RandomTreeStream::name() const {
  return "randomtree_s" + std::to_string(config_.seed) + "_a" + std::to_string(config_.attributes) +
         "_c" + std::to_string(config_.classes) + "_d" + std::to_string(config_.depth);
}

std::uint32_t RandomTreeStream::concept_label(const std::vector<double>& x) const {
  int id = 0;
  while (nodes_[id].left >= 0) {
    const auto& n = nodes_[id];
    id = x.at(n.attribute) <= n.threshold ? n.left : n.right;
  }
  return nodes_[id].label;
}

std::uint32_t RandomTreeStream::label_for(const std::vector<double>& x, std::uint64_t index) const {
  const std::uint32_t clean = concept_label(x);
  if (config_.noise <= 0.0) return clean;
  const std::uint64_t h = splitmix64(config_.seed ^ splitmix64(index));
  const double u = static_cast<double>(h >> 11) * 0x1.0p-53;
  if (u >= config_.noise) return clean;
  const auto k = static_cast<std::uint64_t>(config_.classes);
  const auto offset = 1 + splitmix64(h) % (k - 1);
  return static_cast<std::uint32_t>((clean + offset) % k);
}

std::optional<Instance> RandomTreeStream::next() {
  if (emitted_ >= config_.instances) return std::nullopt;
  Instance inst;
  inst.values.resize(config_.attributes);
  for (auto& v : inst.values) v = unit_uniform(rng_);
  inst.label = label_for(inst.values, emitted_);
  ++emitted_;
  return inst;
}

}  // namespace streamtree::data
