#include "streamtree/data/csv_reader.hpp"

#include <algorithm>
#include <unordered_map>

#include "text.hpp"

namespace streamtree::data {

using detail::is_missing;
using detail::parse_number;
using detail::trim;

namespace {

bool quotes_balanced(const std::string& s) {
  return std::count(s.begin(), s.end(), '"') % 2 == 0;
}

std::size_t find_in(const std::vector<std::string>& values, const std::string& v) {
  return static_cast<std::size_t>(std::find(values.begin(), values.end(), v) - values.begin());
}

}  // namespace

std::vector<std::string> split_csv_record(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else if (c != '\r') {
      field += c;
    }
  }
  if (quoted) throw std::invalid_argument("unterminated quoted field");
  fields.push_back(std::move(field));
  return fields;
}

std::optional<std::vector<std::string>> CsvStream::read_record() {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_;
    while (!quotes_balanced(line)) {
      std::string more;
      if (!std::getline(in_, more)) throw DataError(source_, line_, "unterminated quoted field");
      ++line_;
      line += '\n';
      line += more;
    }
    if (trim(line).empty()) continue;
    try {
      return split_csv_record(line);
    } catch (const std::invalid_argument& e) {
      throw DataError(source_, line_, e.what());
    }
  }
  return std::nullopt;
}

CsvStream::CsvStream(const std::filesystem::path& path, CsvOptions options)
    : source_(path.string()), name_(path.stem().string()), in_(path) {
  if (!in_) throw DataError(source_, 0, "cannot open file");

  std::vector<std::string> header;
  if (options.header) {
    auto h = read_record();
    if (!h) throw DataError(source_, line_, "empty file");
    header = std::move(*h);
    for (auto& name : header) name = std::string(trim(name));
  }

  while (prefix_.size() < options.inference_rows) {
    auto row = read_record();
    if (!row) break;
    prefix_.emplace_back(line_, std::move(*row));
  }
  if (prefix_.empty()) throw DataError(source_, line_, "no data rows");

  columns_ = options.header ? header.size() : prefix_.front().second.size();
  if (header.empty())
    for (std::size_t c = 0; c < columns_; ++c) header.push_back("col" + std::to_string(c));
  if (columns_ < 2) throw DataError(source_, 1, "need at least one feature and a label column");
  for (const auto& [line, row] : prefix_)
    if (row.size() != columns_)
      throw DataError(source_, line, "expected " + std::to_string(columns_) + " fields, got " +
                                         std::to_string(row.size()));

  auto resolve = [&](const std::string& key) -> std::optional<std::size_t> {
    const auto it = std::find(header.begin(), header.end(), key);
    if (it != header.end()) return static_cast<std::size_t>(it - header.begin());
    if (!key.empty() && std::all_of(key.begin(), key.end(), ::isdigit)) {
      const auto idx = std::stoul(key);
      if (idx < columns_) return idx;
    }
    return std::nullopt;
  };

  if (options.label_column.empty()) {
    label_index_ = columns_ - 1;
  } else if (auto idx = resolve(options.label_column)) {
    label_index_ = *idx;
  } else {
    throw std::invalid_argument("unknown label column '" + options.label_column + "'");
  }

  std::map<std::size_t, AttributeKind> overrides;
  for (const auto& [key, kind] : options.type_overrides) {
    auto idx = resolve(key);
    if (!idx) throw std::invalid_argument("unknown column '" + key + "' in type override");
    overrides[*idx] = kind;
  }

  std::vector<Attribute> attributes;
  for (std::size_t c = 0; c < columns_; ++c) {
    if (c == label_index_) continue;
    feature_columns_.push_back(c);

    bool all_tokens = true;
    std::vector<std::string> tokens;
    for (const auto& [line, row] : prefix_) {
      const auto cell = trim(row[c]);
      if (is_missing(cell)) throw DataError(source_, line, "missing value in column '" + header[c] + "'");
      if (parse_number(cell)) {
        all_tokens = false;
      } else if (find_in(tokens, std::string(cell)) == tokens.size()) {
        tokens.emplace_back(cell);
      }
    }

    AttributeKind kind = all_tokens && tokens.size() <= options.max_categories
                             ? AttributeKind::Categorical
                             : AttributeKind::Numeric;
    if (auto it = overrides.find(c); it != overrides.end()) kind = it->second;

    if (kind == AttributeKind::Numeric) {
      attributes.push_back(Attribute::numeric(header[c]));
      continue;
    }
    std::vector<std::string> categories;
    for (const auto& [line, row] : prefix_) {
      std::string v(trim(row[c]));
      if (find_in(categories, v) == categories.size()) categories.push_back(std::move(v));
    }
    if (categories.size() < 2)
      throw DataError(source_, prefix_.front().first,
                      "categorical column '" + header[c] + "' shows a single value");
    attributes.push_back(Attribute::categorical(header[c], std::move(categories)));
  }

  std::vector<std::string> classes;
  for (const auto& [line, row] : prefix_) {
    const auto cell = trim(row[label_index_]);
    if (is_missing(cell)) throw DataError(source_, line, "missing label");
    if (find_in(classes, std::string(cell)) == classes.size()) classes.emplace_back(cell);
  }
  if (classes.size() < 2) throw DataError(source_, prefix_.front().first, "fewer than two classes in the inference prefix");

  try {
    schema_ = Schema(std::move(attributes), std::move(classes));
  } catch (const std::invalid_argument& e) {
    throw DataError(source_, 1, e.what());
  }
}

Instance CsvStream::convert(const std::vector<std::string>& row, std::size_t line) const {
  if (row.size() != columns_)
    throw DataError(source_, line, "expected " + std::to_string(columns_) + " fields, got " +
                                       std::to_string(row.size()));
  Instance inst;
  inst.values.reserve(feature_columns_.size());
  for (std::size_t a = 0; a < feature_columns_.size(); ++a) {
    const auto& attr = schema_.attribute(a);
    const auto cell = trim(row[feature_columns_[a]]);
    if (is_missing(cell)) throw DataError(source_, line, "missing value for '" + attr.name + "'");
    if (attr.is_numeric()) {
      const auto v = parse_number(cell);
      if (!v) throw DataError(source_, line, "cannot parse '" + std::string(cell) + "' as a number for '" + attr.name + "'");
      inst.values.push_back(*v);
    } else {
      const auto idx = find_in(attr.categories, std::string(cell));
      if (idx == attr.categories.size())
        throw DataError(source_, line, "unknown category '" + std::string(cell) + "' for '" + attr.name + "'");
      inst.values.push_back(static_cast<double>(idx));
    }
  }
  const auto label = trim(row[label_index_]);
  const auto idx = find_in(schema_.classes(), std::string(label));
  if (idx == schema_.classes().size())
    throw DataError(source_, line, "unknown class label '" + std::string(label) + "'");
  inst.label = static_cast<std::uint32_t>(idx);
  return inst;
}

std::optional<Instance> CsvStream::next() {
  if (done_) return std::nullopt;
  if (prefix_pos_ < prefix_.size()) {
    const auto& [line, row] = prefix_[prefix_pos_++];
    auto inst = convert(row, line);
    if (prefix_pos_ == prefix_.size()) {
      prefix_.clear();
      prefix_.shrink_to_fit();
    }
    return inst;
  }
  auto row = read_record();
  if (!row) {
    done_ = true;
    return std::nullopt;
  }
  return convert(*row, line_);
}

}  // namespace streamtree::data
