#include "streamtree/tree/schema.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace streamtree {

Schema::Schema(std::vector<Attribute> attributes, std::vector<std::string> classes)
    : attributes_(std::move(attributes)), classes_(std::move(classes)) {
  std::unordered_set<std::string> names;
  for (const auto& a : attributes_) {
    if (!names.insert(a.name).second)
      throw std::invalid_argument("schema: duplicate attribute name '" + a.name + "'");
    if (a.kind == AttributeKind::Categorical && a.arity() < 2)
      throw std::invalid_argument("schema: categorical attribute '" + a.name +
                                  "' needs at least two values");
  }
  if (classes_.size() < 2) throw std::invalid_argument("schema: at least two classes are required");
}

std::size_t Schema::num_numeric() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(attributes_.begin(), attributes_.end(),
                    [](const Attribute& a) { return a.is_numeric(); }));
}

void Schema::validate(const Instance& instance) const {
  if (instance.values.size() != attributes_.size())
    throw std::invalid_argument("instance has " + std::to_string(instance.values.size()) +
                                " values, schema expects " + std::to_string(attributes_.size()));
  if (instance.label >= classes_.size())
    throw std::invalid_argument("instance label " + std::to_string(instance.label) +
                                " is out of range");
  for (std::size_t i = 0; i < attributes_.size(); ++i) {
    const double v = instance.values[i];
    if (!std::isfinite(v))
      throw std::invalid_argument("attribute '" + attributes_[i].name + "' is not finite");
    if (attributes_[i].kind == AttributeKind::Categorical) {
      if (v < 0.0 || v != std::floor(v) || v >= static_cast<double>(attributes_[i].arity()))
        throw std::invalid_argument("attribute '" + attributes_[i].name +
                                    "' has an invalid category index");
    }
  }
}

}  // namespace streamtree
