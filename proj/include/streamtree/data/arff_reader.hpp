#pragma once

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <string>

#include "streamtree/data/stream.hpp"

namespace streamtree::data {

struct ArffOptions {
  /// Attribute name used as the label; empty selects the last attribute.
  std::string label_attribute;
};

/// Dense ARFF subset: @relation, numeric/real/integer and nominal
/// {a,b,...} attributes, @data. Sparse rows and '?' missing values are
/// rejected with a positioned DataError.
class ArffStream final : public InstanceStream {
 public:
  ArffStream(const std::filesystem::path& path, ArffOptions options = {});

  const Schema& schema() const override { return schema_; }
  std::optional<Instance> next() override;
  std::string name() const override { return name_; }
  const std::string& relation() const noexcept { return relation_; }

 private:
  std::string source_;
  std::string name_;
  std::string relation_;
  std::ifstream in_;
  std::size_t line_ = 0;
  std::size_t label_index_ = 0;
  std::vector<Attribute> declared_;
  Schema schema_;
  bool done_ = false;
};

}  // namespace streamtree::data
