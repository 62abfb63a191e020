#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_set>
#include <variant>
#include <vector>

#include "streamtree/adaptive/split_control.hpp"
#include "streamtree/stats/estimators.hpp"
#include "streamtree/stats/split_candidate.hpp"
#include "streamtree/tree/params.hpp"
#include "streamtree/tree/schema.hpp"

namespace streamtree {

using NodeId = std::uint32_t;
using stats::SplitCandidate;

using AttributeEstimator = std::variant<stats::GaussianEstimator, stats::CategoricalEstimator>;

struct LeafState {
  std::vector<std::uint64_t> class_counts;
  /// One per attribute while active; empty once deactivated.
  std::vector<AttributeEstimator> estimators;
  std::uint64_t n_l = 0;      // instances counted at this leaf, inherited ones included
  std::uint64_t n_leaf = 0;   // inherited at creation
  std::uint64_t n_tree = 0;   // tree-wide count when the leaf was created
  std::uint64_t n_check = 0;  // n_l at the last split attempt
  std::uint64_t grace = 0;    // current per-leaf n_min
  bool active = true;
  bool grow_fast = false;
};

struct SplitState {
  std::size_t attribute = 0;
  stats::SplitKind kind = stats::SplitKind::Numeric;
  double threshold = 0.0;
  std::vector<std::uint32_t> branch_values;
  std::vector<NodeId> children;
  /// Leaf class counts frozen at split time.
  std::vector<std::uint64_t> class_counts;
};

struct Node {
  std::uint32_t depth = 0;
  std::variant<LeafState, SplitState> body;

  bool is_leaf() const noexcept { return std::holds_alternative<LeafState>(body); }
  const LeafState& leaf() const { return std::get<LeafState>(body); }
  LeafState& leaf() { return std::get<LeafState>(body); }
  const SplitState& split() const { return std::get<SplitState>(body); }
};

/// One executed split, kept for ablation checks and run summaries.
struct SplitEvent {
  std::uint64_t instant = 0;  // tree-wide instance count at the split
  NodeId node = 0;
  std::size_t attribute = 0;
  std::string test;
  adaptive::SplitPath path = adaptive::SplitPath::PlainAccepted;
  double delta_g = 0.0;
  double epsilon = 0.0;
};

struct AttemptCounters {
  std::uint64_t attempts = 0;
  std::uint64_t no_candidates = 0;
  std::uint64_t hb_failed = 0;
  std::uint64_t skip_accepted = 0;
  std::uint64_t strict_accepted = 0;
  std::uint64_t strict_rejected = 0;
  std::uint64_t plain_accepted = 0;
  std::uint64_t deactivations = 0;
  std::uint64_t grace_changes = 0;
};

/// Majority class; ties go to the lowest index and an empty vector yields 0.
std::uint32_t majority_class(std::span<const std::uint64_t> counts) noexcept;

/// Fixed-cost memory accounting, independent of the host platform.
namespace memory_model {
inline constexpr std::size_t kSplitNode = 32;
inline constexpr std::size_t kPerBranch = 8;
inline constexpr std::size_t kLeaf = 48;
inline constexpr std::size_t kPerClass = 8;
inline constexpr std::size_t kNumericPair = 40;
inline constexpr std::size_t kCategoricalCell = 16;
}  // namespace memory_model

/// Incremental Hoeffding tree. With every ControlFlags switch off this is
/// VFDT; the switches layer on the adaptive grace period (G), the adaptive
/// tie threshold (T), activity-driven expansion and deactivation (E) and the
/// strict split constraints (DFDT).
///
/// Deterministic: identical input streams produce identical trees. Not
/// thread-safe; a tree may move between threads between learn_one() calls.
class HoeffdingTree {
 public:
  HoeffdingTree(Schema schema, HoeffdingParams params);

  /// Predicts, then trains on `instance`. Returns the prediction made before
  /// training. Throws std::invalid_argument if the instance does not match
  /// the schema; nothing else throws.
  std::uint32_t learn_one(const Instance& instance);

  std::uint32_t predict_one(const Instance& instance) const;
  NodeId route(const Instance& instance) const;

  /// Best candidate per attribute, descending merit, followed by the null
  /// split. Empty when no attribute yields a candidate.
  std::vector<SplitCandidate> rank_splits(NodeId leaf) const;

  /// Replaces `leaf` with a split node and registers its children.
  NodeId execute_split(NodeId leaf, const SplitCandidate& candidate);

  /// Stops split attempts at `leaf` and releases its estimators.
  void deactivate(NodeId leaf);

  std::size_t measure_memory() const;

  const Schema& schema() const noexcept { return schema_; }
  const HoeffdingParams& params() const noexcept { return params_; }
  NodeId root() const noexcept { return 0; }
  const Node& node(NodeId id) const { return nodes_.at(id); }
  std::size_t node_count() const noexcept { return nodes_.size(); }
  std::size_t leaf_count() const noexcept { return leaves_.size(); }
  std::size_t active_leaf_count() const;
  std::uint32_t depth() const;
  const std::unordered_set<NodeId>& leaves() const noexcept { return leaves_; }
  std::uint64_t instances_seen() const noexcept { return n_; }
  const adaptive::SplitHistory& history() const noexcept { return history_; }
  const std::vector<SplitEvent>& split_log() const noexcept { return split_log_; }
  const AttemptCounters& counters() const noexcept { return counters_; }
  double merit_range() const noexcept { return range_; }

 private:
  LeafState make_leaf(std::vector<std::uint64_t> counts) const;
  void observe(LeafState& leaf, const Instance& instance) const;
  void evaluate_activity(NodeId id);
  void attempt_split(NodeId id);

  Schema schema_;
  HoeffdingParams params_;
  double range_;
  std::vector<Node> nodes_;
  std::unordered_set<NodeId> leaves_;
  std::uint64_t n_ = 0;
  adaptive::SplitHistory history_;
  std::vector<SplitEvent> split_log_;
  AttemptCounters counters_;
};

/// Pre-order text dump, one node per line. Byte-stable across runs.
std::string serialize(const HoeffdingTree& tree);

/// Shortest round-trip decimal form of `v`.
std::string format_double(double v);

}  // namespace streamtree
