#include "streamtree/eval/prequential.hpp"

#include <chrono>
#include <stdexcept>

namespace streamtree::eval {

RunResult prequential_run(data::InstanceStream& stream, HoeffdingTree& tree,
                          const PrequentialOptions& options, std::string algorithm) {
  if (!(stream.schema() == tree.schema()))
    throw std::invalid_argument("prequential_run: stream and tree schemas differ");
  const std::size_t window = options.window ? options.window : 1;

  RunResult result;
  if (options.keep_records)
    if (auto hint = stream.count_hint()) result.records.reserve(*hint);

  std::vector<std::uint8_t> ring(window, 0);
  std::uint64_t index = 0;
  std::uint64_t correct = 0;
  std::uint64_t window_hits = 0;
  std::uint64_t memory = tree.measure_memory();
  std::chrono::nanoseconds elapsed{0};
  PrequentialRecord last;

  while (auto inst = stream.next()) {
    ++index;
    std::uint32_t prediction = 0;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      prediction = tree.learn_one(*inst);
    } catch (const std::invalid_argument& e) {
      throw data::DataError(stream.name(), index, e.what());
    }
    elapsed += std::chrono::steady_clock::now() - t0;

    const bool hit = prediction == inst->label;
    correct += hit;
    auto& slot = ring[(index - 1) % window];
    if (index > window) window_hits -= slot;
    slot = hit;
    window_hits += hit;
    if (options.sample_every && index % options.sample_every == 0) memory = tree.measure_memory();

    last.index = index;
    last.correct = hit;
    last.cum_accuracy = static_cast<double>(correct) / static_cast<double>(index);
    last.window_accuracy = static_cast<double>(window_hits) /
                           static_cast<double>(index < window ? index : window);
    last.memory_bytes = memory;
    last.elapsed_ns = elapsed.count();
    if (options.keep_records) result.records.push_back(last);
  }

  memory = tree.measure_memory();
  if (!result.records.empty()) result.records.back().memory_bytes = memory;

  auto& s = result.summary;
  s.dataset = stream.name();
  s.algorithm = std::move(algorithm);
  s.params = tree.params();
  s.instances = index;
  s.correct = correct;
  s.accuracy = last.cum_accuracy;
  s.window_accuracy = last.window_accuracy;
  s.memory_bytes = memory;
  s.elapsed_ns = elapsed.count();
  s.nodes = tree.node_count();
  s.leaves = tree.leaf_count();
  s.active_leaves = tree.active_leaf_count();
  s.depth = tree.depth();
  s.counters = tree.counters();
  s.splits = tree.split_log();
  return result;
}

}  // namespace streamtree::eval
