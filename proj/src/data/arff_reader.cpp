#include "streamtree/data/arff_reader.hpp"

#include <algorithm>

#include "text.hpp"

namespace streamtree::data {

using detail::lower;
using detail::parse_number;
using detail::trim;

namespace {

/// Splits on commas outside single or double quotes and strips the quotes.
std::vector<std::string> split_arff_values(std::string_view s) {
  std::vector<std::string> out;
  std::string field;
  char quote = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (quote) {
      if (c == '\\' && i + 1 < s.size()) {
        field += s[++i];
      } else if (c == quote) {
        quote = 0;
      } else {
        field += c;
      }
    } else if (c == '\'' || c == '"') {
      quote = c;
    } else if (c == ',') {
      out.emplace_back(trim(field));
      field.clear();
    } else {
      field += c;
    }
  }
  if (quote) throw std::invalid_argument("unterminated quote");
  out.emplace_back(trim(field));
  return out;
}

/// Reads a possibly quoted token from the front of `s`, consuming it.
std::string take_token(std::string_view& s) {
  s = trim(s);
  if (s.empty()) return {};
  std::string tok;
  if (s.front() == '\'' || s.front() == '"') {
    const char q = s.front();
    std::size_t i = 1;
    for (; i < s.size() && s[i] != q; ++i) tok += s[i];
    s = i < s.size() ? s.substr(i + 1) : std::string_view{};
    return tok;
  }
  const auto end = s.find_first_of(" \t{");
  tok = std::string(s.substr(0, end));
  s = end == std::string_view::npos ? std::string_view{} : s.substr(end);
  return tok;
}

}  // namespace

ArffStream::ArffStream(const std::filesystem::path& path, ArffOptions options)
    : source_(path.string()), name_(path.stem().string()), in_(path) {
  if (!in_) throw DataError(source_, 0, "cannot open file");

  std::string raw;
  bool in_data = false;
  while (!in_data && std::getline(in_, raw)) {
    ++line_;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '%') continue;
    if (line.front() != '@') throw DataError(source_, line_, "expected a declaration");

    std::string_view rest = line;
    const std::string keyword = lower(take_token(rest));
    if (keyword == "@relation") {
      relation_ = take_token(rest);
    } else if (keyword == "@attribute") {
      std::string name = take_token(rest);
      if (name.empty()) throw DataError(source_, line_, "attribute without a name");
      rest = trim(rest);
      if (!rest.empty() && rest.front() == '{') {
        const auto close = rest.rfind('}');
        if (close == std::string_view::npos) throw DataError(source_, line_, "unterminated nominal list");
        std::vector<std::string> values;
        try {
          values = split_arff_values(rest.substr(1, close - 1));
        } catch (const std::invalid_argument& e) {
          throw DataError(source_, line_, e.what());
        }
        declared_.push_back(Attribute::categorical(std::move(name), std::move(values)));
      } else {
        const std::string type = lower(take_token(rest));
        if (type == "numeric" || type == "real" || type == "integer")
          declared_.push_back(Attribute::numeric(std::move(name)));
        else
          throw DataError(source_, line_, "unsupported attribute type '" + type + "'");
      }
    } else if (keyword == "@data") {
      in_data = true;
    } else {
      throw DataError(source_, line_, "unknown declaration '" + keyword + "'");
    }
  }
  if (!in_data) throw DataError(source_, line_, "missing @data section");
  if (declared_.size() < 2) throw DataError(source_, line_, "need at least one feature and a label");

  if (options.label_attribute.empty()) {
    label_index_ = declared_.size() - 1;
  } else {
    const auto it = std::find_if(declared_.begin(), declared_.end(), [&](const Attribute& a) {
      return a.name == options.label_attribute;
    });
    if (it == declared_.end())
      throw std::invalid_argument("unknown label attribute '" + options.label_attribute + "'");
    label_index_ = static_cast<std::size_t>(it - declared_.begin());
  }
  if (declared_[label_index_].is_numeric())
    throw DataError(source_, 0, "label attribute '" + declared_[label_index_].name + "' must be nominal");

  std::vector<Attribute> features;
  for (std::size_t i = 0; i < declared_.size(); ++i)
    if (i != label_index_) features.push_back(declared_[i]);
  try {
    schema_ = Schema(std::move(features), declared_[label_index_].categories);
  } catch (const std::invalid_argument& e) {
    throw DataError(source_, 0, e.what());
  }
}

std::optional<Instance> ArffStream::next() {
  if (done_) return std::nullopt;
  std::string raw;
  while (std::getline(in_, raw)) {
    ++line_;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '%') continue;
    if (line.front() == '{') throw DataError(source_, line_, "sparse rows are not supported");

    std::vector<std::string> cells;
    try {
      cells = split_arff_values(line);
    } catch (const std::invalid_argument& e) {
      throw DataError(source_, line_, e.what());
    }
    if (cells.size() != declared_.size())
      throw DataError(source_, line_, "expected " + std::to_string(declared_.size()) +
                                          " values, got " + std::to_string(cells.size()));

    Instance inst;
    inst.values.reserve(declared_.size() - 1);
    for (std::size_t i = 0; i < declared_.size(); ++i) {
      const auto& attr = declared_[i];
      const auto& cell = cells[i];
      if (cell == "?") throw DataError(source_, line_, "missing value for '" + attr.name + "'");
      double v = 0.0;
      if (attr.is_numeric()) {
        const auto parsed = parse_number(cell);
        if (!parsed) throw DataError(source_, line_, "cannot parse '" + cell + "' as a number for '" + attr.name + "'");
        v = *parsed;
      } else {
        const auto it = std::find(attr.categories.begin(), attr.categories.end(), cell);
        if (it == attr.categories.end())
          throw DataError(source_, line_, "undeclared value '" + cell + "' for '" + attr.name + "'");
        v = static_cast<double>(it - attr.categories.begin());
      }
      if (i == label_index_)
        inst.label = static_cast<std::uint32_t>(v);
      else
        inst.values.push_back(v);
    }
    return inst;
  }
  done_ = true;
  return std::nullopt;
}

}  // namespace streamtree::data
