#include <ostream>

#include <CLI11.hpp>

#include "streamtree/cli/commands.hpp"

namespace streamtree::cli {
namespace {

struct Shared {
  std::string format = "auto";
  std::string label;
  bool no_header = false;
  std::uint64_t grace_cap = 0;
  std::size_t candidates = 10;
  std::size_t sample_every = 100;
  data::RandomTreeConfig synthetic;
};

void add_params(CLI::App& cmd, HoeffdingParams& params, Shared& shared) {
  cmd.add_option("--delta", params.delta, "Hoeffding confidence delta")->capture_default_str();
  cmd.add_option("--window", params.window, "window for windowed accuracy")->capture_default_str();
  cmd.add_option("--grace-cap", shared.grace_cap, "upper bound for adaptive grace periods (0: 20 x grace)");
  cmd.add_option("--candidates", shared.candidates, "numeric split thresholds per attribute")->capture_default_str();
  cmd.add_option("--sample-every", shared.sample_every, "memory sampling interval")->capture_default_str();
}

void add_data(CLI::App& cmd, Shared& shared) {
  cmd.add_option("--format", shared.format, "csv | arff | synthetic (default: by extension)");
  cmd.add_option("--label", shared.label, "label column (CSV) or attribute (ARFF)");
  cmd.add_flag("--no-header", shared.no_header, "CSV file has no header row");
  cmd.add_option("--seed", shared.synthetic.seed, "synthetic stream seed")->capture_default_str();
  cmd.add_option("--instances", shared.synthetic.instances, "synthetic stream length")->capture_default_str();
  cmd.add_option("--attributes", shared.synthetic.attributes, "synthetic attribute count")->capture_default_str();
  cmd.add_option("--classes", shared.synthetic.classes, "synthetic class count")->capture_default_str();
  cmd.add_option("--depth", shared.synthetic.depth, "synthetic concept depth")->capture_default_str();
  cmd.add_option("--noise", shared.synthetic.noise, "synthetic label noise")->capture_default_str();
}

DataSpec make_data(const std::string& path, const Shared& shared) {
  DataSpec spec;
  spec.path = path;
  spec.format = parse_format(shared.format);
  if (spec.format != DataFormat::Synthetic && path.empty()) throw ConfigError("--data is required");
  spec.csv.header = !shared.no_header;
  spec.csv.label_column = shared.label;
  spec.arff_label = shared.label;
  spec.synthetic = shared.synthetic;
  return spec;
}

void finish_params(HoeffdingParams& params, eval::PrequentialOptions& preq, const Shared& shared) {
  params.grace_cap = shared.grace_cap;
  params.candidate_points = shared.candidates;
  preq.window = params.window;
  preq.sample_every = shared.sample_every;
}

}  // namespace

int main_entry(int argc, const char* const* argv, std::ostream& log, std::ostream& err) {
  CLI::App app{"Incremental decision-tree stream mining: VFDT and DFDT variants"};
  app.name("streamtree");
  app.require_subcommand(1);

  Shared shared;
  HoeffdingParams params;
  eval::PrequentialOptions preq;
  std::string algo;
  std::string flags;
  std::string data_path;
  std::vector<std::string> data_paths;
  std::vector<std::string> algos;
  bool all = false;
  std::string out;
  unsigned jobs = 1;
  std::vector<std::uint64_t> graces{100, 400, 1000};
  std::vector<double> taus{0.01, 0.05, 0.1};
  std::string in;
  double alpha = 0.05;

  auto* run = app.add_subcommand("run", "prequential run of one algorithm on one dataset");
  run->add_option("--algo", algo, "vfdt | dfdt | full name such as DFDT_GTE")->required();
  run->add_option("--flags", flags, "extra adaptive mechanisms: any of G, T, E");
  run->add_option("--data", data_path, "dataset path");
  run->add_option("--grace", params.grace, "grace period n_min")->capture_default_str();
  run->add_option("--tau", params.tau, "fixed tie threshold")->capture_default_str();
  run->add_option("--out", out, "output directory")->required();
  add_params(*run, params, shared);
  add_data(*run, shared);

  auto* ablate = app.add_subcommand("ablate", "run algorithm variants over datasets");
  ablate->add_option("--data", data_paths, "dataset path (repeatable)");
  ablate->add_option("--algo", algos, "algorithm name (repeatable)");
  ablate->add_flag("--all", all, "all thirteen ablation variants");
  ablate->add_option("--grace", params.grace, "grace period n_min")->capture_default_str();
  ablate->add_option("--tau", params.tau, "fixed tie threshold")->capture_default_str();
  ablate->add_option("--jobs", jobs, "concurrent runs")->capture_default_str();
  ablate->add_option("--out", out, "output directory")->required();
  add_params(*ablate, params, shared);
  add_data(*ablate, shared);

  auto* grid = app.add_subcommand("grid", "grid search over grace period and tie threshold");
  grid->add_option("--algo", algo, "vfdt | dfdt | full name")->required();
  grid->add_option("--flags", flags, "extra adaptive mechanisms: any of G, T, E");
  grid->add_option("--data", data_path, "dataset path");
  grid->add_option("--grace", graces, "grace periods")->delimiter(',')->capture_default_str();
  grid->add_option("--tau", taus, "tie thresholds")->delimiter(',')->capture_default_str();
  grid->add_option("--out", out, "output directory")->required();
  add_params(*grid, params, shared);
  add_data(*grid, shared);

  auto* report = app.add_subcommand("report", "efficiency, ranking and Friedman/Nemenyi tables");
  report->add_option("--in", in, "directory with run outputs")->required();
  report->add_option("--out", out, "output directory (default: <in>/report)");
  report->add_option("--alpha", alpha, "significance level (0.05 or 0.10)")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    log << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    log << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  }

  try {
    finish_params(params, preq, shared);
    if (run->parsed()) {
      RunOptions o{make_data(data_path, shared), parse_algorithm(algo, flags), params, preq, out};
      return cmd_run(o, log, err);
    }
    if (ablate->parsed()) {
      AblateOptions o;
      if (shared.format == "synthetic" && data_paths.empty()) data_paths.push_back("");
      for (const auto& p : data_paths) o.datasets.push_back(make_data(p, shared));
      if (all) o.algorithms = ablation_algorithms();
      for (const auto& a : algos) o.algorithms.push_back(parse_algorithm(a));
      o.params = params;
      o.prequential = preq;
      o.out = out;
      o.jobs = jobs;
      return cmd_ablate(o, log, err);
    }
    if (grid->parsed()) {
      GridOptions o;
      o.data = make_data(data_path, shared);
      o.algorithm = parse_algorithm(algo, flags);
      o.params = params;
      o.prequential = preq;
      o.graces = graces;
      o.taus = taus;
      o.out = out;
      return cmd_grid(o, log, err);
    }
    ReportOptions o{in, out, alpha};
    return cmd_report(o, log, err);
  } catch (const std::invalid_argument& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  }
}

}  // namespace streamtree::cli
