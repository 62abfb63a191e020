#pragma once

#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "streamtree/cli/algorithms.hpp"
#include "streamtree/data/csv_reader.hpp"
#include "streamtree/data/random_tree.hpp"
#include "streamtree/eval/prequential.hpp"

namespace streamtree::cli {

enum ExitCode : int { kOk = 0, kDataError = 1, kConfigError = 2, kAllFailed = 3 };

enum class DataFormat { Auto, Csv, Arff, Synthetic };

DataFormat parse_format(std::string_view s);

struct DataSpec {
  std::filesystem::path path;
  DataFormat format = DataFormat::Auto;
  data::CsvOptions csv;
  std::string arff_label;
  data::RandomTreeConfig synthetic;
};

std::unique_ptr<data::InstanceStream> open_stream(const DataSpec& spec);

/// One prequential run of `algorithm` over the data.
eval::RunResult run_single(const DataSpec& data, const AlgorithmSpec& algorithm,
                           HoeffdingParams params, const eval::PrequentialOptions& options);

struct RunOptions {
  DataSpec data;
  AlgorithmSpec algorithm;
  HoeffdingParams params;
  eval::PrequentialOptions prequential;
  std::filesystem::path out;
};

struct AblateOptions {
  std::vector<DataSpec> datasets;
  std::vector<AlgorithmSpec> algorithms;
  HoeffdingParams params;
  eval::PrequentialOptions prequential;
  std::filesystem::path out;
  unsigned jobs = 1;
};

struct GridOptions {
  DataSpec data;
  AlgorithmSpec algorithm;
  HoeffdingParams params;
  eval::PrequentialOptions prequential;
  std::vector<std::uint64_t> graces{100, 400, 1000};
  std::vector<double> taus{0.01, 0.05, 0.1};
  std::filesystem::path out;
};

struct ReportOptions {
  std::filesystem::path in;
  std::filesystem::path out;
  double alpha = 0.05;
};

struct GridCell {
  std::uint64_t grace = 0;
  double tau = 0.0;
  eval::RunSummary summary;
};

struct GridResult {
  std::vector<GridCell> cells;
  std::size_t best = 0;
  eval::RunResult best_run;
};

/// Runs every (grace, tau) pair. The best cell has the highest accuracy,
/// then the lowest memory, then the lowest runtime.
GridResult grid_search(const GridOptions& options);
/// Index of the best cell under the ordering above.
std::size_t pick_best(const std::vector<GridCell>& cells);

int cmd_run(const RunOptions& options, std::ostream& log, std::ostream& err);
int cmd_ablate(const AblateOptions& options, std::ostream& log, std::ostream& err);
int cmd_grid(const GridOptions& options, std::ostream& log, std::ostream& err);
int cmd_report(const ReportOptions& options, std::ostream& log, std::ostream& err);

/// Full command-line entry point: `streamtree run|ablate|grid|report ...`.
int main_entry(int argc, const char* const* argv, std::ostream& log, std::ostream& err);

}  // namespace streamtree::cli
