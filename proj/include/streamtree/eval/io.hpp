#pragma once

#include <iosfwd>
#include <vector>

#include <json.hpp>

#include "streamtree/eval/efficiency.hpp"
#include "streamtree/eval/prequential.hpp"
#include "streamtree/eval/ranking.hpp"

namespace streamtree::eval {

inline constexpr const char* kRecordsHeader = "index,correct,cum_acc,window_acc,memory_bytes,elapsed_ns";

/// One line per record. With `include_elapsed` false the last column is
/// dropped, which makes the output a pure function of stream and config.
void write_records_csv(std::ostream& out, const std::vector<PrequentialRecord>& records,
                       bool include_elapsed = true);
/// Accepts files written with or without the elapsed_ns column.
std::vector<PrequentialRecord> read_records_csv(std::istream& in);

nlohmann::json to_json(const HoeffdingParams& params);
HoeffdingParams params_from_json(const nlohmann::json& j);
nlohmann::json to_json(const RunSummary& summary);
RunSummary summary_from_json(const nlohmann::json& j);
nlohmann::json to_json(const RankSummary& summary);

void write_efficiency_csv(std::ostream& out, const std::vector<EfficiencyReport>& reports);
void write_ranking_csv(std::ostream& out, const std::vector<RankingRow>& rows);

}  // namespace streamtree::eval
