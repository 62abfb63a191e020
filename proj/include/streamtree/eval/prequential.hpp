#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "streamtree/data/stream.hpp"
#include "streamtree/tree/hoeffding_tree.hpp"

namespace streamtree::eval {

struct PrequentialRecord {
  std::uint64_t index = 0;  // 1-based
  bool correct = false;
  double cum_accuracy = 0.0;
  double window_accuracy = 0.0;  // over the last min(window, index) instances
  std::uint64_t memory_bytes = 0;  // latest sample
  std::int64_t elapsed_ns = 0;     // cumulative predict+learn time

  /// Equality on everything except elapsed_ns.
  bool same_outcome(const PrequentialRecord& o) const noexcept {
    return index == o.index && correct == o.correct && cum_accuracy == o.cum_accuracy &&
           window_accuracy == o.window_accuracy && memory_bytes == o.memory_bytes;
  }
};

struct PrequentialOptions {
  std::size_t window = 1000;
  /// Memory is measured every `sample_every` instances and after the last.
  std::size_t sample_every = 100;
  bool keep_records = true;
};

struct RunSummary {
  std::string dataset;
  std::string algorithm;
  HoeffdingParams params;
  std::uint64_t instances = 0;
  std::uint64_t correct = 0;
  double accuracy = 0.0;
  double window_accuracy = 0.0;
  std::uint64_t memory_bytes = 0;
  std::int64_t elapsed_ns = 0;
  std::size_t nodes = 0;
  std::size_t leaves = 0;
  std::size_t active_leaves = 0;
  std::uint32_t depth = 0;
  AttemptCounters counters;
  std::vector<SplitEvent> splits;
};

struct RunResult {
  std::vector<PrequentialRecord> records;
  RunSummary summary;
};

/// Test-then-train over the whole stream. An instance that fails schema
/// validation aborts the run with a data::DataError naming its position.
RunResult prequential_run(data::InstanceStream& stream, HoeffdingTree& tree,
                          const PrequentialOptions& options = {}, std::string algorithm = {});

}  // namespace streamtree::eval
