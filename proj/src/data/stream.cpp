#include "streamtree/data/stream.hpp"

namespace streamtree::data {

VectorStream::VectorStream(Schema schema, std::vector<Instance> instances, std::string name)
    : schema_(std::move(schema)), instances_(std::move(instances)), name_(std::move(name)) {
  for (std::size_t i = 0; i < instances_.size(); ++i) {
    try {
      schema_.validate(instances_[i]);
    } catch (const std::invalid_argument& e) {
      throw DataError(name_, i + 1, e.what());
    }
  }
}

std::optional<Instance> VectorStream::next() {
  if (pos_ >= instances_.size()) return std::nullopt;
  return instances_[pos_++];
}

std::vector<Instance> collect(InstanceStream& stream) {
  std::vector<Instance> out;
  if (auto hint = stream.count_hint()) out.reserve(*hint);
  while (auto inst = stream.next()) out.push_back(std::move(*inst));
  return out;
}

}  // namespace streamtree::data
