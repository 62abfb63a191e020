#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "streamtree/tree/schema.hpp"

namespace streamtree::data {

/// Malformed input. what() carries the source and position.
class DataError : public std::runtime_error {
 public:
  DataError(const std::string& source, std::size_t line, const std::string& message)
      : std::runtime_error(source + ":" + std::to_string(line) + ": " + message),
        source_(source),
        line_(line) {}

  const std::string& source() const noexcept { return source_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string source_;
  std::size_t line_;
};

/// Pull-based instance source. Every yielded instance conforms to schema();
/// once next() returns nullopt the stream stays exhausted.
class InstanceStream {
 public:
  virtual ~InstanceStream() = default;
  virtual const Schema& schema() const = 0;
  virtual std::optional<Instance> next() = 0;
  virtual std::optional<std::size_t> count_hint() const { return std::nullopt; }
  /// Short identifier used in run summaries.
  virtual std::string name() const = 0;
};

class VectorStream final : public InstanceStream {
 public:
  VectorStream(Schema schema, std::vector<Instance> instances, std::string name = "memory");

  const Schema& schema() const override { return schema_; }
  std::optional<Instance> next() override;
  std::optional<std::size_t> count_hint() const override { return instances_.size(); }
  std::string name() const override { return name_; }

 private:
  Schema schema_;
  std::vector<Instance> instances_;
  std::size_t pos_ = 0;
  std::string name_;
};

/// Drains `stream` into memory.
std::vector<Instance> collect(InstanceStream& stream);

}  // namespace streamtree::data
