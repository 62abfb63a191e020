#include "streamtree/eval/io.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "streamtree/tree/hoeffding_tree.hpp"

namespace streamtree::eval {

using nlohmann::json;

namespace {

double parse_double(const std::string& s) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw std::invalid_argument("records: bad number '" + s + "'");
  return v;
}

}  // namespace

void write_records_csv(std::ostream& out, const std::vector<PrequentialRecord>& records,
                       bool include_elapsed) {
  out << "index,correct,cum_acc,window_acc,memory_bytes";
  if (include_elapsed) out << ",elapsed_ns";
  out << '\n';
  for (const auto& r : records) {
    out << r.index << ',' << (r.correct ? 1 : 0) << ',' << format_double(r.cum_accuracy) << ','
        << format_double(r.window_accuracy) << ',' << r.memory_bytes;
    if (include_elapsed) out << ',' << r.elapsed_ns;
    out << '\n';
  }
}

std::vector<PrequentialRecord> read_records_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("records: empty input");
  const bool with_elapsed = line.find("elapsed_ns") != std::string::npos;
  std::vector<PrequentialRecord> out;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::string field;
    std::vector<std::string> f;
    while (std::getline(ss, field, ',')) f.push_back(field);
    if (f.size() != (with_elapsed ? 6u : 5u))
      throw std::invalid_argument("records: malformed line " + std::to_string(lineno));
    PrequentialRecord r;
    r.index = std::stoull(f[0]);
    r.correct = f[1] == "1";
    r.cum_accuracy = parse_double(f[2]);
    r.window_accuracy = parse_double(f[3]);
    r.memory_bytes = std::stoull(f[4]);
    if (with_elapsed) r.elapsed_ns = std::stoll(f[5]);
    out.push_back(r);
  }
  return out;
}

json to_json(const HoeffdingParams& p) {
  return json{{"delta", p.delta},
              {"grace", p.grace},
              {"tau", p.tau},
              {"grace_cap", p.effective_grace_cap()},
              {"candidate_points", p.candidate_points},
              {"window", p.window},
              {"deactivate_below", p.deactivate_below},
              {"grow_fast_above", p.grow_fast_above},
              {"flags",
               {{"G", p.flags.adaptive_grace},
                {"T", p.flags.adaptive_tie},
                {"E", p.flags.expansion},
                {"strict", p.flags.strict}}}};
}

HoeffdingParams params_from_json(const json& j) {
  HoeffdingParams p;
  p.delta = j.at("delta").get<double>();
  p.grace = j.at("grace").get<std::uint64_t>();
  p.tau = j.at("tau").get<double>();
  p.grace_cap = j.at("grace_cap").get<std::uint64_t>();
  p.candidate_points = j.at("candidate_points").get<std::size_t>();
  p.window = j.at("window").get<std::size_t>();
  p.deactivate_below = j.at("deactivate_below").get<double>();
  p.grow_fast_above = j.at("grow_fast_above").get<double>();
  const auto& f = j.at("flags");
  p.flags.adaptive_grace = f.at("G").get<bool>();
  p.flags.adaptive_tie = f.at("T").get<bool>();
  p.flags.expansion = f.at("E").get<bool>();
  p.flags.strict = f.at("strict").get<bool>();
  return p;
}

json to_json(const RunSummary& s) {
  json splits = json::array();
  for (const auto& e : s.splits)
    splits.push_back({{"instant", e.instant},
                      {"node", e.node},
                      {"attribute", e.attribute},
                      {"test", e.test},
                      {"path", std::string(adaptive::to_string(e.path))},
                      {"delta_g", e.delta_g},
                      {"epsilon", e.epsilon}});
  const auto& c = s.counters;
  return json{{"dataset", s.dataset},
              {"algorithm", s.algorithm},
              {"params", to_json(s.params)},
              {"instances", s.instances},
              {"correct", s.correct},
              {"accuracy", s.accuracy},
              {"window_accuracy", s.window_accuracy},
              {"memory_bytes", s.memory_bytes},
              {"elapsed_ns", s.elapsed_ns},
              {"nodes", s.nodes},
              {"leaves", s.leaves},
              {"active_leaves", s.active_leaves},
              {"depth", s.depth},
              {"attempts",
               {{"total", c.attempts},
                {"no_candidates", c.no_candidates},
                {"hb_failed", c.hb_failed},
                {"skip_accepted", c.skip_accepted},
                {"strict_accepted", c.strict_accepted},
                {"strict_rejected", c.strict_rejected},
                {"plain_accepted", c.plain_accepted},
                {"deactivations", c.deactivations},
                {"grace_changes", c.grace_changes}}},
              {"splits", std::move(splits)}};
}

RunSummary summary_from_json(const json& j) {
  RunSummary s;
  s.dataset = j.at("dataset").get<std::string>();
  s.algorithm = j.at("algorithm").get<std::string>();
  s.params = params_from_json(j.at("params"));
  s.instances = j.at("instances").get<std::uint64_t>();
  s.correct = j.at("correct").get<std::uint64_t>();
  s.accuracy = j.at("accuracy").get<double>();
  s.window_accuracy = j.at("window_accuracy").get<double>();
  s.memory_bytes = j.at("memory_bytes").get<std::uint64_t>();
  s.elapsed_ns = j.at("elapsed_ns").get<std::int64_t>();
  s.nodes = j.at("nodes").get<std::size_t>();
  s.leaves = j.at("leaves").get<std::size_t>();
  s.active_leaves = j.at("active_leaves").get<std::size_t>();
  s.depth = j.at("depth").get<std::uint32_t>();
  const auto& a = j.at("attempts");
  s.counters.attempts = a.at("total").get<std::uint64_t>();
  s.counters.no_candidates = a.at("no_candidates").get<std::uint64_t>();
  s.counters.hb_failed = a.at("hb_failed").get<std::uint64_t>();
  s.counters.skip_accepted = a.at("skip_accepted").get<std::uint64_t>();
  s.counters.strict_accepted = a.at("strict_accepted").get<std::uint64_t>();
  s.counters.strict_rejected = a.at("strict_rejected").get<std::uint64_t>();
  s.counters.plain_accepted = a.at("plain_accepted").get<std::uint64_t>();
  s.counters.deactivations = a.at("deactivations").get<std::uint64_t>();
  s.counters.grace_changes = a.at("grace_changes").get<std::uint64_t>();
  for (const auto& e : j.at("splits")) {
    SplitEvent ev;
    ev.instant = e.at("instant").get<std::uint64_t>();
    ev.node = e.at("node").get<NodeId>();
    ev.attribute = e.at("attribute").get<std::size_t>();
    ev.test = e.at("test").get<std::string>();
    const auto path = e.at("path").get<std::string>();
    for (auto p : {adaptive::SplitPath::HBFailed, adaptive::SplitPath::SkipAccepted,
                   adaptive::SplitPath::StrictAccepted, adaptive::SplitPath::StrictRejected,
                   adaptive::SplitPath::PlainAccepted})
      if (adaptive::to_string(p) == path) ev.path = p;
    ev.delta_g = e.at("delta_g").get<double>();
    ev.epsilon = e.at("epsilon").get<double>();
    s.splits.push_back(std::move(ev));
  }
  return s;
}

json to_json(const RankSummary& s) {
  json ranks = json::object();
  for (std::size_t i = 0; i < s.algorithms.size(); ++i) ranks[s.algorithms[i]] = s.average_ranks[i];
  json sig = json::array();
  for (std::size_t i = 0; i < s.algorithms.size(); ++i)
    for (std::size_t j = i + 1; j < s.algorithms.size(); ++j)
      if (s.significant[i][j]) sig.push_back({s.algorithms[i], s.algorithms[j]});
  return json{{"algorithms", s.algorithms},
              {"average_ranks", std::move(ranks)},
              {"datasets", s.datasets},
              {"alpha", s.alpha},
              {"critical_difference", s.critical_difference},
              {"friedman_chi2", s.friedman_chi2},
              {"iman_davenport_f", std::isfinite(s.iman_davenport_f) ? json(s.iman_davenport_f) : json(nullptr)},
              {"p_value", s.p_value},
              {"significant_pairs", std::move(sig)}};
}

void write_efficiency_csv(std::ostream& out, const std::vector<EfficiencyReport>& reports) {
  out << "dataset,algorithm,accuracy,memory,runtime,accuracy_n,memory_n,runtime_n,efficiency,best\n";
  for (const auto& rep : reports) {
    const std::size_t best = rep.best();
    for (std::size_t i = 0; i < rep.rows.size(); ++i) {
      const auto& r = rep.rows[i];
      out << rep.dataset << ',' << r.raw.algorithm << ',' << format_double(r.raw.accuracy) << ','
          << format_double(r.raw.memory) << ',' << format_double(r.raw.runtime) << ','
          << format_double(r.accuracy_n) << ',' << format_double(r.memory_n) << ','
          << format_double(r.runtime_n) << ',' << format_double(r.efficiency) << ','
          << (i == best ? 1 : 0) << '\n';
    }
  }
}

void write_ranking_csv(std::ostream& out, const std::vector<RankingRow>& rows) {
  out << "algorithm,efficiency,accuracy,memory,runtime\n";
  for (const auto& r : rows)
    out << r.algorithm << ',' << format_double(r.efficiency) << ',' << format_double(r.accuracy)
        << ',' << format_double(r.memory) << ',' << format_double(r.runtime) << '\n';
}

}  // namespace streamtree::eval
