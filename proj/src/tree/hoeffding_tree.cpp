#include "streamtree/tree/hoeffding_tree.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>

#include "streamtree/adaptive/grace_period.hpp"
#include "streamtree/stats/entropy.hpp"
#include "streamtree/stats/hoeffding.hpp"

namespace streamtree {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool impure(std::span<const std::uint64_t> counts) {
  return std::count_if(counts.begin(), counts.end(), [](std::uint64_t c) { return c > 0; }) >= 2;
}

std::string describe_test(const SplitCandidate& c) {
  std::string s = "x" + std::to_string(c.attribute);
  if (c.kind == stats::SplitKind::Numeric) return s + "<=" + format_double(c.threshold);
  s += " in {";
  for (std::size_t i = 0; i < c.branch_values.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(c.branch_values[i]);
  }
  return s + '}';
}

void append_counts(std::string& out, std::span<const std::uint64_t> counts) {
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(counts[i]);
  }
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::uint32_t majority_class(std::span<const std::uint64_t> counts) noexcept {
  std::uint32_t best = 0;
  for (std::uint32_t c = 1; c < counts.size(); ++c)
    if (counts[c] > counts[best]) best = c;
  return best;
}

HoeffdingTree::HoeffdingTree(Schema schema, HoeffdingParams params)
    : schema_(std::move(schema)),
      params_(params),
      range_(stats::info_gain_range(schema_.num_classes())) {
  params_.validate();
  if (schema_.num_classes() < 2) throw std::invalid_argument("tree: schema needs at least two classes");
  nodes_.push_back(Node{0, make_leaf(std::vector<std::uint64_t>(schema_.num_classes(), 0))});
  leaves_.insert(0);
}

LeafState HoeffdingTree::make_leaf(std::vector<std::uint64_t> counts) const {
  LeafState leaf;
  std::uint64_t total = 0;
  for (const auto c : counts) total += c;
  leaf.class_counts = std::move(counts);
  leaf.n_l = leaf.n_leaf = leaf.n_check = total;
  leaf.n_tree = n_;
  leaf.grace = params_.grace;
  leaf.estimators.reserve(schema_.num_attributes());
  for (const auto& a : schema_.attributes()) {
    if (a.is_numeric())
      leaf.estimators.emplace_back(stats::GaussianEstimator(schema_.num_classes()));
    else
      leaf.estimators.emplace_back(stats::CategoricalEstimator(schema_.num_classes()));
  }
  return leaf;
}

void HoeffdingTree::observe(LeafState& leaf, const Instance& instance) const {
  ++leaf.class_counts[instance.label];
  if (!leaf.active) return;
  for (std::size_t i = 0; i < leaf.estimators.size(); ++i) {
    const double v = instance.values[i];
    std::visit(overloaded{
                   [&](stats::GaussianEstimator& e) { e.observe(v, instance.label); },
                   [&](stats::CategoricalEstimator& e) {
                     e.observe(static_cast<std::uint32_t>(v), instance.label);
                   },
               },
               leaf.estimators[i]);
  }
}

NodeId HoeffdingTree::route(const Instance& instance) const {
  NodeId id = 0;
  while (!nodes_[id].is_leaf()) {
    const auto& s = nodes_[id].split();
    const double v = instance.values[s.attribute];
    std::size_t branch = 0;
    if (s.kind == stats::SplitKind::Numeric) {
      branch = v <= s.threshold ? 0 : 1;
    } else {
      const auto value = static_cast<std::uint32_t>(v);
      const auto it = std::find(s.branch_values.begin(), s.branch_values.end(), value);
      // Values unseen when the split was made take branch 0.
      branch = it == s.branch_values.end()
                   ? 0
                   : static_cast<std::size_t>(it - s.branch_values.begin());
    }
    id = s.children[branch];
  }
  return id;
}

std::uint32_t HoeffdingTree::predict_one(const Instance& instance) const {
  schema_.validate(instance);
  return majority_class(nodes_[route(instance)].leaf().class_counts);
}

std::uint32_t HoeffdingTree::learn_one(const Instance& instance) {
  schema_.validate(instance);
  const NodeId id = route(instance);
  LeafState& leaf = nodes_[id].leaf();
  const std::uint32_t prediction = majority_class(leaf.class_counts);

  observe(leaf, instance);
  ++n_;
  ++leaf.n_l;

  if (params_.flags.expansion) evaluate_activity(id);

  if (leaf.active && impure(leaf.class_counts) && leaf.n_l - leaf.n_check > leaf.grace)
    attempt_split(id);
  return prediction;
}

void HoeffdingTree::evaluate_activity(NodeId id) {
  LeafState& leaf = nodes_[id].leaf();
  if (!leaf.active) return;
  const auto fraction = adaptive::activity_fraction(leaf.n_l, leaf.n_leaf, leaves_.size(), n_,
                                                    leaf.n_tree);
  if (!fraction) {
    leaf.grow_fast = false;
    return;
  }
  const bool warmup = leaf.n_l - leaf.n_leaf >= params_.grace;
  switch (adaptive::classify_activity(*fraction, warmup, params_.deactivate_below,
                                      params_.grow_fast_above)) {
    case adaptive::ActivityClass::Deactivate: deactivate(id); break;
    case adaptive::ActivityClass::GrowFast: leaf.grow_fast = true; break;
    case adaptive::ActivityClass::Normal: leaf.grow_fast = false; break;
  }
}

void HoeffdingTree::deactivate(NodeId id) {
  LeafState& leaf = nodes_.at(id).leaf();
  if (!leaf.active) return;
  leaf.active = false;
  leaf.grow_fast = false;
  leaf.estimators.clear();
  leaf.estimators.shrink_to_fit();
  ++counters_.deactivations;
}

std::vector<SplitCandidate> HoeffdingTree::rank_splits(NodeId id) const {
  const LeafState& leaf = nodes_.at(id).leaf();
  std::vector<SplitCandidate> ranked;
  for (std::size_t i = 0; i < leaf.estimators.size(); ++i) {
    std::visit(overloaded{
                   [&](const stats::GaussianEstimator& e) {
                     auto cands = stats::numeric_split_candidates(i, e, params_.candidate_points);
                     if (cands.empty()) return;
                     auto best = cands.begin();
                     for (auto it = cands.begin(); it != cands.end(); ++it)
                       if (it->merit > best->merit) best = it;
                     ranked.push_back(std::move(*best));
                   },
                   [&](const stats::CategoricalEstimator& e) {
                     if (auto c = stats::categorical_split_candidate(i, e)) ranked.push_back(std::move(*c));
                   },
               },
               leaf.estimators[i]);
  }
  if (ranked.empty()) return ranked;
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const SplitCandidate& a, const SplitCandidate& b) { return a.merit > b.merit; });
  ranked.push_back(SplitCandidate::null_split());
  return ranked;
}

void HoeffdingTree::attempt_split(NodeId id) {
  ++counters_.attempts;
  LeafState& leaf = nodes_[id].leaf();
  const double epsilon = stats::hoeffding_bound(range_, params_.delta, leaf.n_l);
  history_.hoeffding.add(epsilon);

  const auto ranked = rank_splits(id);
  if (ranked.empty()) {
    ++counters_.no_candidates;
    leaf.n_check = leaf.n_l;
    return;
  }
  std::vector<double> merits;
  merits.reserve(ranked.size());
  for (const auto& c : ranked) merits.push_back(c.merit);

  const double h_l = stats::entropy(std::span<const std::uint64_t>(leaf.class_counts));
  const auto outcome = adaptive::can_split(leaf.grow_fast, merits, h_l, leaf.n_l, epsilon,
                                           history_, params_.flags, params_.tau);
  switch (outcome.path) {
    case adaptive::SplitPath::HBFailed: ++counters_.hb_failed; break;
    case adaptive::SplitPath::SkipAccepted: ++counters_.skip_accepted; break;
    case adaptive::SplitPath::StrictAccepted: ++counters_.strict_accepted; break;
    case adaptive::SplitPath::StrictRejected: ++counters_.strict_rejected; break;
    case adaptive::SplitPath::PlainAccepted: ++counters_.plain_accepted; break;
  }

  if (outcome.decision) {
    execute_split(id, ranked.front());
    auto& event = split_log_.back();
    event.path = outcome.path;
    event.delta_g = outcome.delta_g;
    event.epsilon = outcome.epsilon;
    return;
  }

  leaf.n_check = leaf.n_l;
  if (params_.flags.adaptive_grace) {
    const std::optional<double> tau = params_.flags.adaptive_tie
                                          ? adaptive::adaptive_tie_threshold(history_.hoeffding)
                                          : std::optional<double>(params_.tau);
    const auto next = adaptive::recalc_grace_period(outcome.delta_g, epsilon, tau, range_,
                                                    params_.delta, leaf.grace, params_.grace,
                                                    params_.effective_grace_cap());
    if (next != leaf.grace) ++counters_.grace_changes;
    leaf.grace = next;
  }
}

NodeId HoeffdingTree::execute_split(NodeId id, const SplitCandidate& candidate) {
  if (candidate.branch_count() < 2) throw std::invalid_argument("execute_split: candidate needs >= 2 branches");
  if (!nodes_.at(id).is_leaf()) throw std::invalid_argument("execute_split: node is not a leaf");

  SplitState split;
  split.attribute = candidate.attribute;
  split.kind = candidate.kind;
  split.threshold = candidate.threshold;
  split.branch_values = candidate.branch_values;
  split.class_counts = nodes_[id].leaf().class_counts;
  const std::uint32_t child_depth = nodes_[id].depth + 1;

  leaves_.erase(id);
  for (const auto& dist : candidate.distributions) {
    std::vector<std::uint64_t> counts(dist.size());
    for (std::size_t c = 0; c < dist.size(); ++c)
      counts[c] = static_cast<std::uint64_t>(std::max<long long>(0, std::llround(dist[c])));
    const auto child = static_cast<NodeId>(nodes_.size());
    nodes_.push_back(Node{child_depth, make_leaf(std::move(counts))});
    leaves_.insert(child);
    split.children.push_back(child);
  }
  nodes_[id].body = std::move(split);

  split_log_.push_back(SplitEvent{n_, id, candidate.attribute, describe_test(candidate),
                                  adaptive::SplitPath::PlainAccepted, 0.0, 0.0});
  return id;
}

std::size_t HoeffdingTree::active_leaf_count() const {
  return static_cast<std::size_t>(std::count_if(leaves_.begin(), leaves_.end(), [&](NodeId id) {
    return nodes_[id].leaf().active;
  }));
}

std::uint32_t HoeffdingTree::depth() const {
  std::uint32_t d = 0;
  for (const auto& n : nodes_) d = std::max(d, n.depth);
  return d;
}

std::size_t HoeffdingTree::measure_memory() const {
  namespace mm = memory_model;
  std::size_t bytes = 0;
  for (const auto& node : nodes_) {
    if (!node.is_leaf()) {
      bytes += mm::kSplitNode + mm::kPerBranch * node.split().children.size();
      continue;
    }
    const auto& leaf = node.leaf();
    bytes += mm::kLeaf + mm::kPerClass * leaf.class_counts.size();
    if (!leaf.active) continue;
    for (const auto& est : leaf.estimators) {
      std::visit(overloaded{
                     [&](const stats::GaussianEstimator& e) {
                       bytes += mm::kNumericPair * e.observed_classes();
                     },
                     [&](const stats::CategoricalEstimator& e) {
                       bytes += mm::kCategoricalCell * e.observed_cells();
                     },
                 },
                 est);
    }
  }
  return bytes;
}

std::string serialize(const HoeffdingTree& tree) {
  std::string out;
  std::vector<NodeId> stack{tree.root()};
  while (!stack.empty()) {
    const NodeId id = stack.back();
    stack.pop_back();
    const Node& node = tree.node(id);
    if (node.is_leaf()) {
      const auto& l = node.leaf();
      out += "leaf id=" + std::to_string(id) + " depth=" + std::to_string(node.depth) +
             " active=" + (l.active ? "1" : "0") + " n_l=" + std::to_string(l.n_l) +
             " n_leaf=" + std::to_string(l.n_leaf) + " n_tree=" + std::to_string(l.n_tree) +
             " n_check=" + std::to_string(l.n_check) + " grace=" + std::to_string(l.grace) +
             " counts=";
      append_counts(out, l.class_counts);
    } else {
      const auto& s = node.split();
      out += "split id=" + std::to_string(id) + " depth=" + std::to_string(node.depth) +
             " attr=" + std::to_string(s.attribute) + " test=";
      if (s.kind == stats::SplitKind::Numeric) {
        out += "<=" + format_double(s.threshold);
      } else {
        out += "in:";
        for (std::size_t i = 0; i < s.branch_values.size(); ++i) {
          if (i) out += ',';
          out += std::to_string(s.branch_values[i]);
        }
      }
      out += " counts=";
      append_counts(out, s.class_counts);
      for (auto it = s.children.rbegin(); it != s.children.rend(); ++it) stack.push_back(*it);
    }
    out += '\n';
  }
  return out;
}

}  // namespace streamtree
