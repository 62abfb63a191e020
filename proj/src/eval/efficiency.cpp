#include "streamtree/eval/efficiency.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace streamtree::eval {
namespace {

std::vector<double> min_max(const std::vector<double>& v) {
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  std::vector<double> out(v.size(), 0.5);
  if (*hi == *lo) return out;
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = (v[i] - *lo) / (*hi - *lo);
  return out;
}

}  // namespace

const EfficiencyRow& EfficiencyReport::row(const std::string& algorithm) const {
  for (const auto& r : rows)
    if (r.raw.algorithm == algorithm) return r;
  throw std::out_of_range("no row for algorithm '" + algorithm + "' in dataset '" + dataset + "'");
}

std::size_t EfficiencyReport::best() const {
  std::size_t b = 0;
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (rows[i].efficiency > rows[b].efficiency) b = i;
  return b;
}

EfficiencyReport efficiency_scores(std::string dataset, const std::vector<RawMetrics>& results) {
  if (results.size() < 2)
    throw std::invalid_argument("efficiency_scores: need at least two algorithms on '" + dataset + "'");
  std::set<std::string> names;
  for (const auto& r : results)
    if (!names.insert(r.algorithm).second)
      throw std::invalid_argument("efficiency_scores: duplicate algorithm '" + r.algorithm + "'");

  std::vector<double> acc, mem, rt;
  for (const auto& r : results) {
    acc.push_back(r.accuracy);
    mem.push_back(r.memory);
    rt.push_back(r.runtime);
  }
  const auto acc_n = min_max(acc);
  const auto mem_n = min_max(mem);
  const auto rt_n = min_max(rt);

  EfficiencyReport report;
  report.dataset = std::move(dataset);
  for (std::size_t i = 0; i < results.size(); ++i) {
    EfficiencyRow row;
    row.raw = results[i];
    row.accuracy_n = acc_n[i];
    row.memory_n = mem_n[i];
    row.runtime_n = rt_n[i];
    row.efficiency = (acc_n[i] + (1.0 - mem_n[i]) + (1.0 - rt_n[i])) / 3.0;
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::vector<RankingRow> aggregate_ranking(const std::vector<EfficiencyReport>& reports) {
  if (reports.empty()) throw std::invalid_argument("aggregate_ranking: no datasets");

  std::set<std::string> expected;
  for (const auto& r : reports.front().rows) expected.insert(r.raw.algorithm);

  std::map<std::string, RankingRow> sums;
  for (const auto& report : reports) {
    std::set<std::string> got;
    for (const auto& r : report.rows) got.insert(r.raw.algorithm);
    if (got != expected) {
      std::string missing;
      for (const auto& name : expected)
        if (!got.count(name)) missing += " -" + name;
      for (const auto& name : got)
        if (!expected.count(name)) missing += " +" + name;
      throw std::invalid_argument("aggregate_ranking: algorithm set of '" + report.dataset +
                                  "' differs from '" + reports.front().dataset + "':" + missing);
    }
    for (const auto& r : report.rows) {
      auto& s = sums[r.raw.algorithm];
      s.algorithm = r.raw.algorithm;
      s.efficiency += r.efficiency;
      s.accuracy += r.accuracy_n;
      s.memory += 1.0 - r.memory_n;
      s.runtime += 1.0 - r.runtime_n;
    }
  }

  const auto n = static_cast<double>(reports.size());
  std::vector<RankingRow> rows;
  for (auto& [name, s] : sums) {
    s.efficiency /= n;
    s.accuracy /= n;
    s.memory /= n;
    s.runtime /= n;
    rows.push_back(s);
  }
  std::stable_sort(rows.begin(), rows.end(), [](const RankingRow& a, const RankingRow& b) {
    return a.efficiency > b.efficiency;
  });
  return rows;
}

}  // namespace streamtree::eval
