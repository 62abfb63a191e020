#include "streamtree/cli/commands.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <fstream>
#include <map>
#include <mutex>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "streamtree/cli/output.hpp"
#include "streamtree/data/arff_reader.hpp"
#include "streamtree/eval/efficiency.hpp"
#include "streamtree/eval/io.hpp"
#include "streamtree/eval/ranking.hpp"

namespace streamtree::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const data::DataError& e) {
    err << "data error: " << e.what() << '\n';
    return kDataError;
  } catch (const std::invalid_argument& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  }
}

void check_params(HoeffdingParams params, const AlgorithmSpec& algorithm) {
  params.flags = algorithm.flags;
  params.validate();
}

void write_run(const fs::path& dir, const eval::RunResult& run) {
  std::ostringstream records;
  eval::write_records_csv(records, run.records);
  write_file_atomic(dir / "records.csv", records.str());
  write_file_atomic(dir / "summary.json", eval::to_json(run.summary).dump(2) + "\n");
}

std::string summary_line(const eval::RunSummary& s) {
  std::ostringstream o;
  o << s.dataset << ' ' << s.algorithm << ": accuracy=" << format_double(s.accuracy)
    << " memory_bytes=" << s.memory_bytes << " nodes=" << s.nodes
    << " elapsed_ms=" << s.elapsed_ns / 1000000;
  return o.str();
}

}  // namespace

DataFormat parse_format(std::string_view s) {
  if (s.empty() || s == "auto") return DataFormat::Auto;
  if (s == "csv") return DataFormat::Csv;
  if (s == "arff") return DataFormat::Arff;
  if (s == "synthetic") return DataFormat::Synthetic;
  throw ConfigError("unknown format '" + std::string(s) + "' (expected csv, arff or synthetic)");
}

std::unique_ptr<data::InstanceStream> open_stream(const DataSpec& spec) {
  DataFormat format = spec.format;
  if (format == DataFormat::Auto) {
    std::string ext = spec.path.extension().string();
    for (auto& c : ext) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    format = ext == ".arff" ? DataFormat::Arff : DataFormat::Csv;
  }
  switch (format) {
    case DataFormat::Synthetic: return std::make_unique<data::RandomTreeStream>(spec.synthetic);
    case DataFormat::Arff:
      return std::make_unique<data::ArffStream>(spec.path, data::ArffOptions{spec.arff_label});
    default: return std::make_unique<data::CsvStream>(spec.path, spec.csv);
  }
}

eval::RunResult run_single(const DataSpec& data, const AlgorithmSpec& algorithm,
                           HoeffdingParams params, const eval::PrequentialOptions& options) {
  params.flags = algorithm.flags;
  params.validate();
  auto stream = open_stream(data);
  HoeffdingTree tree(stream->schema(), params);
  return eval::prequential_run(*stream, tree, options, algorithm.name);
}

int cmd_run(const RunOptions& o, std::ostream& log, std::ostream& err) {
  return guarded(err, [&] {
    if (o.out.empty()) throw ConfigError("--out is required");
    check_params(o.params, o.algorithm);
    const auto run = run_single(o.data, o.algorithm, o.params, o.prequential);
    write_run(o.out, run);
    write_manifest(o.out);
    log << summary_line(run.summary) << '\n';
    return int{kOk};
  });
}

int cmd_ablate(const AblateOptions& o, std::ostream& log, std::ostream& err) {
  return guarded(err, [&] {
    if (o.datasets.empty()) throw ConfigError("ablate: at least one dataset is required");
    if (o.algorithms.empty()) throw ConfigError("ablate: at least one algorithm is required");
    if (o.out.empty()) throw ConfigError("--out is required");
    for (const auto& a : o.algorithms) check_params(o.params, a);

    // Directory name per dataset; collisions get a numeric suffix.
    std::vector<std::string> names;
    std::vector<std::string> open_errors(o.datasets.size());
    std::set<std::string> taken;
    for (std::size_t d = 0; d < o.datasets.size(); ++d) {
      std::string base;
      try {
        base = open_stream(o.datasets[d])->name();
      } catch (const std::exception& e) {
        open_errors[d] = e.what();
        base = o.datasets[d].path.stem().string();
      }
      base = safe_component(base);
      std::string name = base;
      for (int i = 2; taken.count(name); ++i) name = base + "_" + std::to_string(i);
      taken.insert(name);
      names.push_back(name);
    }

    const std::size_t n_algos = o.algorithms.size();
    const std::size_t n_tasks = o.datasets.size() * n_algos;
    std::vector<std::optional<eval::RunSummary>> summaries(n_tasks);
    std::vector<std::string> failures(n_tasks);
    std::atomic<std::size_t> next{0};
    std::mutex log_mutex;

    auto worker = [&] {
      for (std::size_t t = next++; t < n_tasks; t = next++) {
        const std::size_t d = t / n_algos;
        const auto& algo = o.algorithms[t % n_algos];
        try {
          if (!open_errors[d].empty()) throw std::runtime_error(open_errors[d]);
          auto run = run_single(o.datasets[d], algo, o.params, o.prequential);
          run.summary.dataset = names[d];
          write_run(o.out / names[d] / safe_component(algo.name), run);
          std::lock_guard lock(log_mutex);
          log << summary_line(run.summary) << '\n';
          summaries[t] = std::move(run.summary);
        } catch (const std::exception& e) {
          failures[t] = e.what();
        }
      }
    };
    const unsigned threads = std::max(1u, std::min<unsigned>(o.jobs, static_cast<unsigned>(n_tasks)));
    {
      std::vector<std::jthread> pool;
      for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
      worker();
    }

    std::ostringstream matrix;
    matrix << "dataset,algorithm,accuracy,memory_bytes,elapsed_ns\n";
    std::size_t ok = 0;
    for (std::size_t t = 0; t < n_tasks; ++t) {
      const std::string& ds = names[t / n_algos];
      const std::string& algo = o.algorithms[t % n_algos].name;
      if (!summaries[t]) {
        err << "failed: " << ds << ' ' << algo << ": " << failures[t] << '\n';
        continue;
      }
      ++ok;
      const auto& s = *summaries[t];
      matrix << ds << ',' << algo << ',' << format_double(s.accuracy) << ',' << s.memory_bytes
             << ',' << s.elapsed_ns << '\n';
    }
    if (ok == 0) {
      err << "ablate: every run failed\n";
      return int{kAllFailed};
    }
    write_file_atomic(o.out / "matrix.csv", matrix.str());
    write_manifest(o.out);
    return int{kOk};
  });
}

std::size_t pick_best(const std::vector<GridCell>& cells) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < cells.size(); ++i) {
    const auto& a = cells[i].summary;
    const auto& b = cells[best].summary;
    if (a.accuracy != b.accuracy) {
      if (a.accuracy > b.accuracy) best = i;
    } else if (a.memory_bytes != b.memory_bytes) {
      if (a.memory_bytes < b.memory_bytes) best = i;
    } else if (a.elapsed_ns < b.elapsed_ns) {
      best = i;
    }
  }
  return best;
}

GridResult grid_search(const GridOptions& o) {
  if (o.graces.empty() || o.taus.empty()) throw ConfigError("grid: grace and tau lists must be non-empty");
  GridResult result;
  for (const auto grace : o.graces) {
    for (const auto tau : o.taus) {
      HoeffdingParams p = o.params;
      p.grace = grace;
      p.tau = tau;
      auto run = run_single(o.data, o.algorithm, p, o.prequential);
      result.cells.push_back(GridCell{grace, tau, run.summary});
      if (pick_best(result.cells) == result.cells.size() - 1) {
        result.best = result.cells.size() - 1;
        result.best_run = std::move(run);
      }
    }
  }
  return result;
}

int cmd_grid(const GridOptions& o, std::ostream& log, std::ostream& err) {
  return guarded(err, [&] {
    if (o.out.empty()) throw ConfigError("--out is required");
    for (const auto g : o.graces) {
      HoeffdingParams p = o.params;
      p.grace = g;
      for (const auto t : o.taus) {
        p.tau = t;
        check_params(p, o.algorithm);
      }
    }
    const auto grid = grid_search(o);

    std::ostringstream table;
    table << "algorithm,grace,tau,accuracy,memory_bytes,elapsed_ns,best\n";
    for (std::size_t i = 0; i < grid.cells.size(); ++i) {
      const auto& c = grid.cells[i];
      table << o.algorithm.name << ',' << c.grace << ',' << format_double(c.tau) << ','
            << format_double(c.summary.accuracy) << ',' << c.summary.memory_bytes << ','
            << c.summary.elapsed_ns << ',' << (i == grid.best ? 1 : 0) << '\n';
      const std::string cell_dir =
          "g" + std::to_string(c.grace) + "_t" + safe_component(format_double(c.tau));
      write_file_atomic(o.out / "cells" / cell_dir / "summary.json",
                        eval::to_json(c.summary).dump(2) + "\n");
    }
    write_file_atomic(o.out / "grid.csv", table.str());
    write_run(o.out / "best", grid.best_run);
    const auto& best = grid.cells[grid.best];
    write_file_atomic(o.out / "best.json",
                      json{{"algorithm", o.algorithm.name},
                           {"dataset", best.summary.dataset},
                           {"grace", best.grace},
                           {"tau", best.tau},
                           {"accuracy", best.summary.accuracy},
                           {"memory_bytes", best.summary.memory_bytes},
                           {"elapsed_ns", best.summary.elapsed_ns}}
                              .dump(2) + "\n");
    write_manifest(o.out);
    log << "best " << summary_line(best.summary) << " grace=" << best.grace
        << " tau=" << format_double(best.tau) << '\n';
    return int{kOk};
  });
}

namespace {

struct ReportEntry {
  double accuracy = 0.0;
  double memory = 0.0;
  double runtime = 0.0;
  fs::path records;
  std::string origin;
};

double parse_number(const std::string& s, const std::string& source, std::size_t line) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw data::DataError(source, line, "bad number '" + s + "'");
  return v;
}

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> f;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) f.push_back(field);
  return f;
}

void add_entry(std::map<std::pair<std::string, std::string>, ReportEntry>& entries,
               const std::string& dataset, const std::string& algorithm, ReportEntry e) {
  auto [it, inserted] = entries.try_emplace({dataset, algorithm}, e);
  if (inserted) return;
  auto& have = it->second;
  if (have.accuracy != e.accuracy || have.memory != e.memory || have.runtime != e.runtime)
    throw ConfigError("conflicting results for " + dataset + "/" + algorithm + " in " +
                      have.origin + " and " + e.origin);
  if (have.records.empty()) have.records = e.records;
}

}  // namespace

int cmd_report(const ReportOptions& o, std::ostream& log, std::ostream& err) {
  return guarded(err, [&] {
    if (!fs::is_directory(o.in)) throw ConfigError("report: '" + o.in.string() + "' is not a directory");
    const fs::path out = o.out.empty() ? o.in / "report" : o.out;
    eval::nemenyi_q(o.alpha, 2);

    std::vector<fs::path> files;
    for (const auto& entry : fs::recursive_directory_iterator(o.in)) {
      if (!entry.is_regular_file()) continue;
      const auto name = entry.path().filename();
      if (name == "summary.json" || name == "matrix.csv") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());

    std::map<std::pair<std::string, std::string>, ReportEntry> entries;
    for (const auto& path : files) {
      std::ifstream in(path);
      const std::string origin = fs::relative(path, o.in).generic_string();
      if (path.filename() == "summary.json") {
        const auto s = eval::summary_from_json(json::parse(in));
        ReportEntry e{s.accuracy, static_cast<double>(s.memory_bytes),
                      static_cast<double>(s.elapsed_ns), {}, origin};
        if (fs::exists(path.parent_path() / "records.csv")) e.records = path.parent_path() / "records.csv";
        add_entry(entries, s.dataset, s.algorithm, std::move(e));
        continue;
      }
      std::string line;
      std::getline(in, line);
      if (line.rfind("dataset,algorithm,accuracy,memory_bytes,elapsed_ns", 0) != 0)
        throw data::DataError(path.string(), 1, "unexpected matrix header");
      std::size_t lineno = 1;
      while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        const auto f = split_line(line);
        if (f.size() != 5) throw data::DataError(path.string(), lineno, "expected 5 fields");
        add_entry(entries, f[0], f[1],
                  ReportEntry{parse_number(f[2], origin, lineno), parse_number(f[3], origin, lineno),
                              parse_number(f[4], origin, lineno), {}, origin});
      }
    }
    if (entries.empty()) throw ConfigError("report: no summary.json or matrix.csv under " + o.in.string());

    std::map<std::string, std::map<std::string, const ReportEntry*>> by_dataset;
    for (const auto& [key, e] : entries) by_dataset[key.first][key.second] = &e;

    std::set<std::string> algorithms;
    for (const auto& [ds, algos] : by_dataset)
      for (const auto& [a, e] : algos) algorithms.insert(a);
    for (const auto& [ds, algos] : by_dataset) {
      std::string missing;
      for (const auto& a : algorithms)
        if (!algos.count(a)) missing += (missing.empty() ? "" : ", ") + a;
      if (!missing.empty()) throw ConfigError("report: dataset '" + ds + "' lacks results for " + missing);
    }
    if (algorithms.size() < 2) throw ConfigError("report: need at least two algorithms");

    std::vector<eval::EfficiencyReport> reports;
    for (const auto& [ds, algos] : by_dataset) {
      std::vector<eval::RawMetrics> raw;
      for (const auto& [a, e] : algos) raw.push_back({a, e->accuracy, e->memory, e->runtime});
      reports.push_back(eval::efficiency_scores(ds, raw));
    }
    const auto ranking = eval::aggregate_ranking(reports);

    std::ostringstream eff;
    eval::write_efficiency_csv(eff, reports);
    write_file_atomic(out / "efficiency.csv", eff.str());

    std::ostringstream matrix;
    matrix << "dataset";
    for (const auto& a : algorithms) matrix << ',' << a;
    matrix << '\n';
    for (const auto& rep : reports) {
      matrix << rep.dataset;
      for (const auto& a : algorithms) matrix << ',' << format_double(rep.row(a).efficiency);
      matrix << '\n';
    }
    write_file_atomic(out / "efficiency_matrix.csv", matrix.str());

    std::ostringstream rank_csv;
    eval::write_ranking_csv(rank_csv, ranking);
    write_file_atomic(out / "ranking.csv", rank_csv.str());

    const std::vector<std::string> names(algorithms.begin(), algorithms.end());
    json ranks = json::object();
    ranks["datasets"] = reports.size();
    struct Metric {
      const char* name;
      bool higher_is_better;
      double (*get)(const eval::EfficiencyRow&);
    };
    const Metric metrics[] = {
        {"efficiency", true, [](const eval::EfficiencyRow& r) { return r.efficiency; }},
        {"accuracy", true, [](const eval::EfficiencyRow& r) { return r.raw.accuracy; }},
        {"memory", false, [](const eval::EfficiencyRow& r) { return r.raw.memory; }},
        {"runtime", false, [](const eval::EfficiencyRow& r) { return r.raw.runtime; }},
    };
    for (const auto& m : metrics) {
      if (reports.size() < 2) {
        ranks[m.name] = json{{"error", "Friedman/Nemenyi needs at least two datasets"}};
        continue;
      }
      std::vector<std::vector<double>> scores;
      for (const auto& rep : reports) {
        std::vector<double> row;
        for (const auto& a : names) row.push_back(m.get(rep.row(a)));
        scores.push_back(std::move(row));
      }
      try {
        ranks[m.name] = eval::to_json(eval::friedman_nemenyi(scores, names, o.alpha, m.higher_is_better));
      } catch (const std::invalid_argument& e) {
        ranks[m.name] = json{{"error", e.what()}};
      }
    }
    write_file_atomic(out / "ranks.json", ranks.dump(2) + "\n");

    for (const auto& [key, e] : entries) {
      if (e.records.empty()) continue;
      std::ifstream in(e.records);
      const auto records = eval::read_records_csv(in);
      std::ostringstream ts;
      ts << "index,cum_acc,window_acc,memory_bytes\n";
      for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        if (r.index % 100 != 0 && i + 1 != records.size()) continue;
        ts << r.index << ',' << format_double(r.cum_accuracy) << ','
           << format_double(r.window_accuracy) << ',' << r.memory_bytes << '\n';
      }
      write_file_atomic(out / "timeseries" /
                            (safe_component(key.first) + "__" + safe_component(key.second) + ".csv"),
                        ts.str());
    }
    write_manifest(out);

    log << "report: " << reports.size() << " dataset(s), " << algorithms.size()
        << " algorithm(s) -> " << out.string() << '\n';
    for (const auto& r : ranking)
      log << "  " << r.algorithm << " efficiency=" << format_double(r.efficiency) << '\n';
    return int{kOk};
  });
}

}  // namespace streamtree::cli
