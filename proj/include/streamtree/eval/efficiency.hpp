#pragma once

#include <string>
#include <vector>

namespace streamtree::eval {

struct RawMetrics {
  std::string algorithm;
  double accuracy = 0.0;
  double memory = 0.0;
  double runtime = 0.0;
};

struct EfficiencyRow {
  RawMetrics raw;
  double accuracy_n = 0.0;  // min-max normalized, in [0, 1]
  double memory_n = 0.0;
  double runtime_n = 0.0;
  double efficiency = 0.0;  // (accuracy_n + (1 - memory_n) + (1 - runtime_n)) / 3
};

struct EfficiencyReport {
  std::string dataset;
  std::vector<EfficiencyRow> rows;

  const EfficiencyRow& row(const std::string& algorithm) const;
  /// Index of the highest efficiency (first on ties).
  std::size_t best() const;
};

/// Per-dataset min-max normalization across algorithms. A metric that does
/// not vary normalizes to 0.5 for everyone. Needs at least two algorithms
/// with distinct names (std::invalid_argument otherwise).
EfficiencyReport efficiency_scores(std::string dataset, const std::vector<RawMetrics>& results);

/// Mean normalized scores across datasets; memory and runtime are inverted
/// so larger is better in every column.
struct RankingRow {
  std::string algorithm;
  double efficiency = 0.0;
  double accuracy = 0.0;
  double memory = 0.0;
  double runtime = 0.0;
};

/// Rows sorted by efficiency (descending, then name). Throws
/// std::invalid_argument if the algorithm sets differ between datasets.
std::vector<RankingRow> aggregate_ranking(const std::vector<EfficiencyReport>& reports);

}  // namespace streamtree::eval
