#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "streamtree/data/arff_reader.hpp"
#include "streamtree/data/csv_reader.hpp"
#include "streamtree/data/random_tree.hpp"

using namespace streamtree;
using namespace streamtree::data;
namespace fs = std::filesystem;

namespace {

const fs::path kFixtures = STREAMTREE_FIXTURES;

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("streamtree_data_" + std::to_string(std::random_device{}()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  fs::path write(const std::string& name, const std::string& content) const {
    std::ofstream(path_ / name, std::ios::binary) << content;
    return path_ / name;
  }

 private:
  fs::path path_;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Csv, InfersNumericColumnsAndClasses) {
  CsvStream s(kFixtures / "simple.csv");
  const auto& schema = s.schema();
  ASSERT_EQ(schema.num_attributes(), 2u);
  EXPECT_TRUE(schema.attribute(0).is_numeric());
  EXPECT_TRUE(schema.attribute(1).is_numeric());
  EXPECT_EQ(schema.attribute(0).name, "a");
  EXPECT_EQ(schema.classes(), (std::vector<std::string>{"yes", "no"}));
  const auto rows = collect(s);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0], (Instance{{0.1, 2.5}, 0}));
  EXPECT_EQ(rows[2], (Instance{{1e-3, 3.25}, 0}));
  EXPECT_EQ(rows[3].label, 1u);
  EXPECT_FALSE(s.next().has_value());
}

TEST(Csv, TokenColumnBecomesCategorical) {
  CsvStream s(kFixtures / "colours.csv");
  const auto& a = s.schema().attribute(0);
  EXPECT_FALSE(a.is_numeric());
  EXPECT_EQ(a.categories, (std::vector<std::string>{"red", "green", "blue"}));
  const auto rows = collect(s);
  EXPECT_EQ(rows[2].values[0], 2.0);
  EXPECT_EQ(rows[3].values[0], 0.0);
}

TEST(Csv, QuotedFieldsAndEmbeddedNewlines) {
  CsvOptions o;
  o.type_overrides["x"] = AttributeKind::Numeric;
  CsvStream s(kFixtures / "quoted.csv", o);
  EXPECT_EQ(s.schema().attribute(0).name, "name, with comma");
  EXPECT_EQ(s.schema().attribute(0).categories,
            (std::vector<std::string>{"say \"hi\"", "multi\nline", "plain"}));
  const auto rows = collect(s);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[1].values[1], 2.0);
  EXPECT_EQ(rows[1].label, 1u);
}

TEST(Csv, SplitRecord) {
  EXPECT_EQ(split_csv_record("a,\"b,c\",,d"), (std::vector<std::string>{"a", "b,c", "", "d"}));
  EXPECT_EQ(split_csv_record("\"x\"\"y\""), (std::vector<std::string>{"x\"y"}));
  EXPECT_THROW(split_csv_record("\"open"), std::invalid_argument);
}

TEST(Csv, LabelColumnSelection) {
  CsvOptions by_name;
  by_name.label_column = "colour";
  CsvStream s(kFixtures / "colours.csv", by_name);
  EXPECT_EQ(s.schema().classes(), (std::vector<std::string>{"red", "green", "blue"}));
  EXPECT_EQ(s.schema().attribute(0).name, "weight");
  EXPECT_EQ(s.schema().attribute(1).name, "label");

  CsvOptions by_index;
  by_index.label_column = "0";
  CsvStream t(kFixtures / "colours.csv", by_index);
  EXPECT_EQ(t.schema(), s.schema());

  CsvOptions bad;
  bad.label_column = "nope";
  EXPECT_THROW(CsvStream(kFixtures / "colours.csv", bad), std::invalid_argument);
}

TEST(Csv, HeaderlessFiles) {
  TempDir dir;
  const auto p = dir.write("h.csv", "1,2,x\n3,4,y\n");
  CsvOptions o;
  o.header = false;
  CsvStream s(p, o);
  EXPECT_EQ(s.schema().attribute(0).name, "col0");
  EXPECT_EQ(collect(s).size(), 2u);
}

TEST(Csv, PositionedErrors) {
  TempDir dir;
  auto expect_error_at = [&](const std::string& content, std::size_t line, CsvOptions o = {}) {
    const auto p = dir.write("e.csv", content);
    try {
      CsvStream s(p, o);
      collect(s);
      ADD_FAILURE() << "no error for:\n" << content;
    } catch (const DataError& e) {
      EXPECT_EQ(e.line(), line) << e.what();
      EXPECT_NE(std::string(e.what()).find(p.string()), std::string::npos);
    }
  };
  expect_error_at("a,b\n1,x\n,y\n", 3);               // missing value
  expect_error_at("a,b\n1,x\n2\n", 3);                // short row
  expect_error_at("a,b\n1,x\n2,?\n", 3);              // missing label
  CsvOptions small;
  small.inference_rows = 2;
  expect_error_at("a,b\n1,x\n2,y\n3,z\n", 4, small);  // class unseen in the prefix
  expect_error_at("a,b\n1,x\n2,y\nfoo,x\n", 4, small);
  expect_error_at("a,b\n1,x\n2,y\n\"3,x\n", 4, small);
  expect_error_at("a,b\n1,x\n2,x\n", 2);              // single class
  expect_error_at("a,b\n", 1);                        // no data rows
  EXPECT_THROW(CsvStream(dir.write("empty.csv", "")), DataError);
  EXPECT_THROW(CsvStream(dir.write("x", "").parent_path() / "missing.csv"), DataError);
}

TEST(Arff, NominalFile) {
  ArffStream s(kFixtures / "nominal.arff");
  EXPECT_EQ(s.relation(), "tiny");
  ASSERT_EQ(s.schema().num_attributes(), 1u);
  EXPECT_EQ(s.schema().attribute(0).categories, (std::vector<std::string>{"red", "green"}));
  EXPECT_EQ(s.schema().classes(), (std::vector<std::string>{"a", "b"}));
  const auto rows = collect(s);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[1], (Instance{{1.0}, 1}));
}

TEST(Arff, MixedDeclaration) {
  ArffStream s(kFixtures / "table.arff");
  EXPECT_EQ(s.relation(), "weather sample");
  const auto& schema = s.schema();
  ASSERT_EQ(schema.num_attributes(), 4u);
  EXPECT_FALSE(schema.attribute(0).is_numeric());
  EXPECT_TRUE(schema.attribute(1).is_numeric());
  EXPECT_TRUE(schema.attribute(2).is_numeric());
  EXPECT_FALSE(schema.attribute(3).is_numeric());
  EXPECT_EQ(collect(s).size(), 8u);
}

TEST(Arff, MatchesCsvEncodingOfTheSameTable) {
  ArffStream arff(kFixtures / "table.arff");
  CsvStream csv(kFixtures / "table.csv");
  EXPECT_EQ(arff.schema(), csv.schema());
  EXPECT_EQ(collect(arff), collect(csv));
}

TEST(Arff, RejectsUnsupportedContent) {
  TempDir dir;
  const std::string head = "@relation r\n@attribute x numeric\n@attribute c {p,q}\n@data\n";
  auto expect_error_at = [&](const std::string& body, std::size_t line) {
    const auto p = dir.write("e.arff", head + body);
    try {
      ArffStream s(p);
      collect(s);
      ADD_FAILURE() << "no error for:\n" << body;
    } catch (const DataError& e) {
      EXPECT_EQ(e.line(), line) << e.what();
    }
  };
  expect_error_at("1,p\n?,q\n", 6);
  expect_error_at("1,p\n{0 1}\n", 6);
  expect_error_at("1,r\n", 5);
  expect_error_at("1\n", 5);
  expect_error_at("abc,p\n", 5);
  EXPECT_THROW(ArffStream(dir.write("s.arff", "@relation r\n@attribute x string\n@attribute c {p,q}\n@data\n")), DataError);
  EXPECT_THROW(ArffStream(dir.write("n.arff", "@relation r\n@attribute x {a,b}\n@attribute c numeric\n@data\n")), DataError);
}

namespace {

// Every yielded row must satisfy the schema; any problem must surface as a
// DataError (or a configuration error for structural damage to the header).
void drain_checked(InstanceStream& s) {
  while (auto x = s.next()) s.schema().validate(*x);
}

std::string mutate(std::string text, std::mt19937_64& rng) {
  static const std::string alphabet = ",\"?\n{}@x9.-e ";
  const int edits = 1 + static_cast<int>(rng() % 4);
  for (int i = 0; i < edits && !text.empty(); ++i) {
    const std::size_t pos = rng() % text.size();
    switch (rng() % 3) {
      case 0: text[pos] = alphabet[rng() % alphabet.size()]; break;
      case 1: text.erase(pos, 1 + rng() % 3); break;
      default: text.insert(pos, 1, alphabet[rng() % alphabet.size()]); break;
    }
  }
  return text;
}

}  // namespace

TEST(Fuzz, CorruptedFilesErrorInsteadOfYieldingBadRows) {
  TempDir dir;
  std::mt19937_64 rng(31337);
  const std::string csv = slurp(kFixtures / "table.csv");
  const std::string arff = slurp(kFixtures / "table.arff");
  int errors = 0, clean = 0;
  for (int i = 0; i < 600; ++i) {
    const bool use_csv = i % 2 == 0;
    const auto p = dir.write(use_csv ? "f.csv" : "f.arff", mutate(use_csv ? csv : arff, rng));
    try {
      if (use_csv) {
        CsvStream s(p);
        drain_checked(s);
      } else {
        ArffStream s(p);
        drain_checked(s);
      }
      ++clean;
    } catch (const DataError&) {
      ++errors;
    } catch (const std::invalid_argument& e) {
      // Schema construction problems (duplicate names, ...) are reported as
      // configuration errors; a row-level violation would be a bug.
      EXPECT_EQ(std::string(e.what()).find("instance"), std::string::npos) << e.what();
      ++errors;
    }
  }
  EXPECT_GT(errors, 100);
  EXPECT_GT(clean, 10);
}

TEST(RandomTree, Deterministic) {
  RandomTreeConfig cfg;
  cfg.seed = 77;
  cfg.instances = 2000;
  cfg.noise = 0.1;
  RandomTreeStream a(cfg), b(cfg);
  EXPECT_EQ(collect(a), collect(b));
  cfg.seed = 78;
  RandomTreeStream c(cfg);
  RandomTreeStream d(RandomTreeConfig{77, 5, 2, 3, 2000, 0.1});
  EXPECT_NE(collect(c), collect(d));
}

TEST(RandomTree, NoiseFreeLabelsFollowTheConcept) {
  RandomTreeConfig cfg;
  cfg.seed = 5;
  cfg.classes = 3;
  cfg.depth = 4;
  cfg.instances = 5000;
  RandomTreeStream s(cfg);
  std::size_t leaves = 0;
  for (const auto& n : s.concept_nodes()) leaves += n.left < 0;
  EXPECT_EQ(leaves, 16u);
  while (auto x = s.next()) ASSERT_EQ(x->label, s.concept_label(x->values));
}

TEST(RandomTree, FlipRateMatchesNoise) {
  RandomTreeConfig cfg;
  cfg.seed = 9;
  cfg.noise = 0.1;
  cfg.instances = 100000;
  RandomTreeStream s(cfg);
  std::size_t flips = 0, n = 0;
  while (auto x = s.next()) {
    flips += x->label != s.concept_label(x->values);
    ++n;
  }
  EXPECT_EQ(n, 100000u);
  EXPECT_NEAR(static_cast<double>(flips) / static_cast<double>(n), 0.1, 0.01);
}

TEST(RandomTree, LabelIsAPureFunctionOfPointAndIndex) {
  RandomTreeConfig cfg;
  cfg.seed = 12;
  cfg.noise = 0.3;
  cfg.classes = 4;
  RandomTreeStream a(cfg), b(cfg);
  const std::vector<double> x{0.1, 0.9, 0.4, 0.2, 0.6};
  for (std::uint64_t i = 0; i < 1000; ++i) ASSERT_EQ(a.label_for(x, i), b.label_for(x, i));
}

TEST(RandomTree, RejectsBadConfig) {
  EXPECT_THROW(RandomTreeStream(RandomTreeConfig{1, 5, 2, 0, 10, 0.0}), std::invalid_argument);
  EXPECT_THROW(RandomTreeStream(RandomTreeConfig{1, 5, 2, 3, 10, 0.5}), std::invalid_argument);
}

TEST(Electricity, CountAndSchemaWhenAvailable) {
  const char* env = std::getenv("STREAMTREE_ELECTRICITY");
  if (!env || !fs::exists(env)) GTEST_SKIP() << "set STREAMTREE_ELECTRICITY to the dataset path";
  const fs::path p = env;
  std::unique_ptr<InstanceStream> s;
  if (p.extension() == ".arff")
    s = std::make_unique<ArffStream>(p);
  else
    s = std::make_unique<CsvStream>(p);
  EXPECT_EQ(s->schema().num_attributes(), 8u);
  EXPECT_EQ(s->schema().num_classes(), 2u);
  std::size_t n = 0;
  while (s->next()) ++n;
  EXPECT_EQ(n, 45312u);
}
