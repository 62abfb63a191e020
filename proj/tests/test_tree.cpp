#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "reference_vfdt.hpp"
#include "streams.hpp"
#include "streamtree/data/random_tree.hpp"
#include "streamtree/stats/entropy.hpp"
#include "streamtree/tree/hoeffding_tree.hpp"

using namespace streamtree;
namespace st = streamtree::testing;

namespace {

Schema numeric_schema(std::size_t attrs, std::size_t classes = 2) {
  std::vector<Attribute> a;
  for (std::size_t i = 0; i < attrs; ++i) a.push_back(Attribute::numeric("x" + std::to_string(i)));
  std::vector<std::string> c;
  for (std::size_t i = 0; i < classes; ++i) c.push_back("c" + std::to_string(i));
  return Schema(std::move(a), std::move(c));
}

SplitCandidate numeric_candidate(std::size_t attr, double threshold,
                                 std::vector<std::vector<double>> dists) {
  SplitCandidate c;
  c.kind = stats::SplitKind::Numeric;
  c.attribute = attr;
  c.threshold = threshold;
  c.distributions = std::move(dists);
  return c;
}

// Path walk written against the public node view only.
NodeId walk(const HoeffdingTree& t, NodeId id, const Instance& x) {
  const Node& n = t.node(id);
  if (n.is_leaf()) return id;
  const auto& s = n.split();
  if (s.kind == stats::SplitKind::Numeric)
    return walk(t, s.children[x.values[s.attribute] <= s.threshold ? 0 : 1], x);
  for (std::size_t b = 0; b < s.branch_values.size(); ++b)
    if (s.branch_values[b] == static_cast<std::uint32_t>(x.values[s.attribute]))
      return walk(t, s.children[b], x);
  return walk(t, s.children[0], x);
}

}  // namespace

TEST(Schema, ValidatesInstances) {
  Schema s({Attribute::numeric("a"), Attribute::categorical("b", {"x", "y"})}, {"no", "yes"});
  EXPECT_NO_THROW(s.validate(Instance{{0.5, 1.0}, 1}));
  EXPECT_THROW(s.validate(Instance{{0.5}, 1}), std::invalid_argument);
  EXPECT_THROW(s.validate(Instance{{0.5, 2.0}, 1}), std::invalid_argument);
  EXPECT_THROW(s.validate(Instance{{0.5, 0.5}, 1}), std::invalid_argument);
  EXPECT_THROW(s.validate(Instance{{0.5, 1.0}, 2}), std::invalid_argument);
  EXPECT_THROW(s.validate(Instance{{std::nan(""), 1.0}, 0}), std::invalid_argument);
  EXPECT_THROW(Schema({Attribute::numeric("a"), Attribute::numeric("a")}, {"p", "q"}), std::invalid_argument);
  EXPECT_THROW(Schema({Attribute::categorical("a", {"only"})}, {"p", "q"}), std::invalid_argument);
  EXPECT_THROW(Schema({Attribute::numeric("a")}, {"p"}), std::invalid_argument);
  EXPECT_EQ(s.num_numeric(), 1u);
}

TEST(Params, Validation) {
  HoeffdingParams p;
  EXPECT_NO_THROW(p.validate());
  EXPECT_EQ(p.effective_grace_cap(), 4000u);
  p.delta = 0.0;
  EXPECT_THROW(p.validate(), std::invalid_argument);
  p = {};
  p.grace = 0;
  EXPECT_THROW(p.validate(), std::invalid_argument);
  p = {};
  p.tau = -1;
  EXPECT_THROW(p.validate(), std::invalid_argument);
}

TEST(MajorityClass, Examples) {
  EXPECT_EQ(majority_class(std::vector<std::uint64_t>{3, 7}), 1u);
  EXPECT_EQ(majority_class(std::vector<std::uint64_t>{0, 0}), 0u);
  EXPECT_EQ(majority_class(std::vector<std::uint64_t>{4, 4, 2}), 0u);
  EXPECT_EQ(majority_class(std::vector<std::uint64_t>{}), 0u);
}

TEST(Route, FreshTreeAndBoundaryConvention) {
  HoeffdingTree t(numeric_schema(2), {});
  EXPECT_EQ(t.route(Instance{{0.3, 9.0}, 0}), t.root());
  t.execute_split(t.root(), numeric_candidate(0, 5.0, {{1, 0}, {0, 1}}));
  const auto& s = t.node(t.root()).split();
  EXPECT_EQ(t.route(Instance{{5.0, 0.0}, 0}), s.children[0]);
  EXPECT_EQ(t.route(Instance{{5.000001, 0.0}, 0}), s.children[1]);
}

TEST(Route, AgreesWithRecursiveWalk) {
  data::RandomTreeConfig cfg;
  cfg.seed = 4;
  cfg.instances = 30000;
  data::RandomTreeStream stream(cfg);
  HoeffdingParams p;
  p.flags.adaptive_tie = true;
  HoeffdingTree t(stream.schema(), p);
  while (auto x = stream.next()) t.learn_one(*x);
  ASSERT_GE(t.depth(), 3u);

  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0, 1);
  for (int i = 0; i < 1000; ++i) {
    Instance x{std::vector<double>(cfg.attributes), 0};
    for (auto& v : x.values) v = u(rng);
    ASSERT_EQ(t.route(x), walk(t, t.root(), x));
    ASSERT_EQ(t.predict_one(x), majority_class(t.node(walk(t, t.root(), x)).leaf().class_counts));
  }
}

TEST(Route, UnseenCategoryTakesFirstBranch) {
  Schema s({Attribute::categorical("c", {"a", "b", "z"})}, {"p", "q"});
  HoeffdingTree t(s, {});
  SplitCandidate c;
  c.kind = stats::SplitKind::Categorical;
  c.branch_values = {1, 0};
  c.distributions = {{2, 0}, {0, 2}};
  t.execute_split(t.root(), c);
  const auto& kids = t.node(0).split().children;
  EXPECT_EQ(t.route(Instance{{0.0}, 0}), kids[1]);
  EXPECT_EQ(t.route(Instance{{1.0}, 0}), kids[0]);
  EXPECT_EQ(t.route(Instance{{2.0}, 0}), kids[0]);
}

TEST(LearnOne, PureStreamNeverSplits) {
  HoeffdingTree t(numeric_schema(3), {});
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0, 1);
  for (int i = 0; i < 10000; ++i) t.learn_one(Instance{{u(rng), u(rng), u(rng)}, 1});
  EXPECT_EQ(t.node_count(), 1u);
  EXPECT_EQ(t.counters().attempts, 0u);
}

TEST(LearnOne, SeparableStreamSplitsEarlyOnTheRightAttribute) {
  HoeffdingParams p;
  p.grace = 100;
  HoeffdingTree t(numeric_schema(3), p);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0, 1);
  for (int i = 0; i < 1000 && t.split_log().empty(); ++i) {
    Instance x{{u(rng), u(rng), u(rng)}, 0};
    x.label = x.values[0] > 0.5;
    t.learn_one(x);
  }
  ASSERT_FALSE(t.split_log().empty());
  const auto& first = t.split_log().front();
  EXPECT_LE(first.instant, 1000u);
  EXPECT_EQ(first.attribute, 0u);
  const double thr = t.node(0).split().threshold;
  EXPECT_GT(thr, 0.0);
  EXPECT_LT(thr, 1.0);
}

TEST(LearnOne, RejectsSchemaViolations) {
  HoeffdingTree t(numeric_schema(2), {});
  EXPECT_THROW(t.learn_one(Instance{{1.0}, 0}), std::invalid_argument);
  EXPECT_THROW(t.learn_one(Instance{{1.0, 2.0}, 5}), std::invalid_argument);
  EXPECT_EQ(t.instances_seen(), 0u);
}

TEST(RankSplits, PerfectAndConstantAttributes) {
  HoeffdingTree t(numeric_schema(2), {});
  for (int i = 0; i < 100; ++i) t.learn_one(Instance{{i % 2 ? 1.0 : 0.0, 7.0}, static_cast<std::uint32_t>(i % 2)});
  const auto r = t.rank_splits(t.root());
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0].attribute, 0u);
  EXPECT_NEAR(r[0].merit, 1.0, 1e-9);
  std::vector<double> parent{50, 50};
  EXPECT_NEAR(r[0].merit, stats::info_gain(parent, r[0].distributions), 1e-12);
  EXPECT_TRUE(r[1].is_null());
  EXPECT_EQ(r[1].merit, 0.0);
}

TEST(RankSplits, TwinAttributesTie) {
  HoeffdingTree t(numeric_schema(2), {});
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(0, 1);
  for (int i = 0; i < 150; ++i) {
    const double v = u(rng);
    t.learn_one(Instance{{v, v}, v > 0.3});
  }
  const auto r = t.rank_splits(t.root());
  ASSERT_GE(r.size(), 3u);
  EXPECT_LE(std::abs(r[0].merit - r[1].merit), 1e-9);
}

TEST(RankSplits, ConstantAttributesGiveNothing) {
  HoeffdingTree t(numeric_schema(2), {});
  for (int i = 0; i < 100; ++i) t.learn_one(Instance{{1.0, 2.0}, static_cast<std::uint32_t>(i % 2)});
  EXPECT_TRUE(t.rank_splits(t.root()).empty());
}

TEST(ExecuteSplit, LeafAccountingAndInheritance) {
  HoeffdingTree t(numeric_schema(2), {});
  EXPECT_EQ(t.leaf_count(), 1u);
  t.execute_split(t.root(), numeric_candidate(1, 0.5, {{30, 2}, {1.6, 10.4}}));
  EXPECT_EQ(t.leaf_count(), 2u);
  const auto& s = t.node(0).split();
  const auto& left = t.node(s.children[0]).leaf();
  EXPECT_EQ(left.n_l, 32u);
  EXPECT_EQ(left.n_leaf, 32u);
  EXPECT_EQ(left.n_check, 32u);
  EXPECT_EQ(left.class_counts, (std::vector<std::uint64_t>{30, 2}));
  EXPECT_EQ(t.node(s.children[1]).leaf().class_counts, (std::vector<std::uint64_t>{2, 10}));
  EXPECT_EQ(t.node(s.children[1]).depth, 1u);
  EXPECT_THROW(t.execute_split(t.root(), numeric_candidate(1, 0.5, {{1, 1}, {1, 1}})), std::invalid_argument);
}

TEST(ExecuteSplit, MultiwayRegistersEveryChild) {
  Schema s({Attribute::categorical("c", {"a", "b", "c", "d"})}, {"p", "q"});
  HoeffdingTree t(s, {});
  SplitCandidate c;
  c.kind = stats::SplitKind::Categorical;
  c.branch_values = {0, 1, 2, 3};
  c.distributions = {{1, 0}, {0, 1}, {2, 0}, {0, 2}};
  t.execute_split(t.root(), c);
  EXPECT_EQ(t.leaf_count(), 4u);
  for (NodeId kid : t.node(0).split().children) EXPECT_TRUE(t.leaves().count(kid));
  EXPECT_EQ(t.split_log().back().test, "x0 in {0,1,2,3}");
}

TEST(Memory, ModelArithmetic) {
  HoeffdingTree t(numeric_schema(2), {});
  EXPECT_EQ(t.measure_memory(), 64u);
  t.learn_one(Instance{{0.1, 0.2}, 0});
  t.learn_one(Instance{{0.3, 0.4}, 1});
  EXPECT_EQ(t.measure_memory(), 224u);
  t.deactivate(t.root());
  EXPECT_EQ(t.measure_memory(), 64u);
  EXPECT_FALSE(t.node(0).leaf().active);
  EXPECT_TRUE(t.node(0).leaf().estimators.empty());
}

TEST(Memory, SplittingGrowsByMoreThanTheReleasedEstimators) {
  HoeffdingTree t(numeric_schema(2), {});
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0, 1);
  for (int i = 0; i < 50; ++i) t.learn_one(Instance{{u(rng), u(rng)}, static_cast<std::uint32_t>(i % 2)});
  const std::size_t before = t.measure_memory();
  const std::size_t leaf_estimators = 2 * 2 * memory_model::kNumericPair;
  t.execute_split(t.root(), numeric_candidate(0, 0.5, {{20, 5}, {5, 20}}));
  const std::size_t after = t.measure_memory();
  EXPECT_GT(after, before - leaf_estimators);
  // split node + two fresh leaves with empty estimators
  EXPECT_EQ(after, 32u + 16u + 2 * (48u + 16u));
}

TEST(Expansion, OffMeansNoDeactivationAndNoGrowFast) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    HoeffdingParams p;
    p.flags.adaptive_grace = true;
    p.flags.adaptive_tie = true;
    p.flags.strict = true;
    auto s = st::mixed_stream(seed, 8000);
    HoeffdingTree t(s.schema, p);
    for (const auto& x : s.instances) {
      t.learn_one(x);
      for (NodeId id : t.leaves()) ASSERT_FALSE(t.node(id).leaf().grow_fast);
    }
    EXPECT_EQ(t.counters().deactivations, 0u);
    EXPECT_EQ(t.counters().skip_accepted, 0u);
    EXPECT_EQ(t.active_leaf_count(), t.leaf_count());
  }
}

TEST(Expansion, DeactivatedLeavesKeepCountingButStopAttempting) {
  HoeffdingParams p;
  p.flags.expansion = true;
  auto s = st::mixed_stream(3, 30000, 3, 0.2);
  HoeffdingTree t(s.schema, p);
  for (const auto& x : s.instances) t.learn_one(x);
  std::size_t inactive = 0;
  for (NodeId id : t.leaves()) {
    const auto& l = t.node(id).leaf();
    if (l.active) continue;
    ++inactive;
    EXPECT_TRUE(l.estimators.empty());
    std::uint64_t total = 0;
    for (auto c : l.class_counts) total += c;
    EXPECT_EQ(total, l.n_l);
  }
  EXPECT_EQ(inactive, t.counters().deactivations);
}

TEST(Ablation, FlagsOffMatchesReferenceVfdt) {
  std::size_t total_splits = 0;
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    auto s = st::mixed_stream(seed, 20000, 2 + seed % 3, 0.05 * static_cast<double>(seed % 3));
    HoeffdingParams p;
    p.grace = 100 + 50 * (seed % 3);
    p.tau = 0.05 + 0.05 * static_cast<double>(seed % 2);
    HoeffdingTree t(s.schema, p);
    st::ReferenceVfdt ref(s.schema, {p.delta, p.grace, p.tau, p.candidate_points});
    for (const auto& x : s.instances) ASSERT_EQ(t.learn_one(x), ref.learn(x));
    ASSERT_EQ(t.split_log().size(), ref.splits().size()) << "seed " << seed;
    for (std::size_t i = 0; i < ref.splits().size(); ++i) {
      const auto& a = t.split_log()[i];
      const auto& b = ref.splits()[i];
      EXPECT_EQ(a.instant, b.instant);
      EXPECT_EQ(a.attribute, b.attribute);
      EXPECT_EQ(a.test, b.test);
    }
    EXPECT_EQ(t.node_count(), ref.node_count());
    total_splits += ref.splits().size();
  }
  EXPECT_GE(total_splits, 30u);
}

TEST(Serialize, StableAcrossIdenticalRuns) {
  auto run = [] {
    HoeffdingParams p;
    p.flags = {true, true, true, true};
    auto s = st::mixed_stream(12, 6000);
    HoeffdingTree t(s.schema, p);
    for (const auto& x : s.instances) t.learn_one(x);
    return serialize(t);
  };
  const auto a = run();
  EXPECT_EQ(a, run());
  EXPECT_EQ(a.rfind("split id=0 depth=0", 0), 0u);
}

TEST(FormatDouble, RoundTrips) {
  for (double v : {0.1, 1.0 / 3.0, 1e-300, 12345.678, -0.0}) {
    EXPECT_EQ(std::stod(format_double(v)), v);
  }
  EXPECT_EQ(format_double(0.5), "0.5");
}
