#pragma once

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "streamtree/data/stream.hpp"

namespace streamtree::data {

struct CsvOptions {
  bool header = true;
  /// Column name or zero-based index; empty selects the last column.
  std::string label_column;
  /// Column name or index -> kind, bypassing inference.
  std::map<std::string, AttributeKind> type_overrides;
  /// Rows used for schema inference.
  std::size_t inference_rows = 1000;
  /// Most distinct tokens a column may show and still be inferred categorical.
  std::size_t max_categories = 32;
};

/// Splits one RFC-4180 record. Quoted fields may contain commas and "" escapes.
/// Throws std::invalid_argument on an unterminated quote.
std::vector<std::string> split_csv_record(const std::string& line);

/// Streams a delimited text file. The schema is inferred from the first
/// `inference_rows` rows: a column is categorical when every value there is a
/// non-numeric token and there are at most `max_categories` distinct ones,
/// numeric otherwise. The label column is always categorical. Categories and
/// classes are numbered in order of first appearance and frozen after the
/// inference prefix; later unknown tokens are errors.
class CsvStream final : public InstanceStream {
 public:
  CsvStream(const std::filesystem::path& path, CsvOptions options = {});

  const Schema& schema() const override { return schema_; }
  std::optional<Instance> next() override;
  std::string name() const override { return name_; }

 private:
  std::optional<std::vector<std::string>> read_record();
  Instance convert(const std::vector<std::string>& row, std::size_t line) const;

  std::string source_;
  std::string name_;
  std::ifstream in_;
  std::size_t line_ = 0;
  std::size_t columns_ = 0;
  std::size_t label_index_ = 0;
  std::vector<std::size_t> feature_columns_;
  Schema schema_;
  std::vector<std::pair<std::size_t, std::vector<std::string>>> prefix_;
  std::size_t prefix_pos_ = 0;
  bool done_ = false;
};

}  // namespace streamtree::data
