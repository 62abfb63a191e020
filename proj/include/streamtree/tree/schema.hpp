#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace streamtree {

enum class AttributeKind { Numeric, Categorical };

struct Attribute {
  std::string name;
  AttributeKind kind = AttributeKind::Numeric;
  /// Category labels; the value index is the position in this list.
  std::vector<std::string> categories;

  std::size_t arity() const noexcept { return categories.size(); }
  bool is_numeric() const noexcept { return kind == AttributeKind::Numeric; }

  static Attribute numeric(std::string name) { return {std::move(name), AttributeKind::Numeric, {}}; }
  static Attribute categorical(std::string name, std::vector<std::string> values) {
    return {std::move(name), AttributeKind::Categorical, std::move(values)};
  }

  friend bool operator==(const Attribute&, const Attribute&) = default;
};

/// One labeled example. Categorical values hold the category index.
struct Instance {
  std::vector<double> values;
  std::uint32_t label = 0;

  friend bool operator==(const Instance&, const Instance&) = default;
};

class Schema {
 public:
  Schema() = default;
  /// Throws std::invalid_argument on duplicate names, categorical arity < 2
  /// or fewer than two classes.
  Schema(std::vector<Attribute> attributes, std::vector<std::string> classes);

  const std::vector<Attribute>& attributes() const noexcept { return attributes_; }
  const Attribute& attribute(std::size_t i) const { return attributes_.at(i); }
  const std::vector<std::string>& classes() const noexcept { return classes_; }
  std::size_t num_attributes() const noexcept { return attributes_.size(); }
  std::size_t num_classes() const noexcept { return classes_.size(); }
  std::size_t num_numeric() const noexcept;

  /// Throws std::invalid_argument describing the first violation.
  void validate(const Instance& instance) const;

  friend bool operator==(const Schema&, const Schema&) = default;

 private:
  std::vector<Attribute> attributes_;
  std::vector<std::string> classes_;
};

}  // namespace streamtree
