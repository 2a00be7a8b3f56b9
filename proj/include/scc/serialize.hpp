#ifndef SCC_SERIALIZE_HPP_
#define SCC_SERIALIZE_HPP_

#include <string>
#include <string_view>

#include <json.hpp>

#include "scc/covering.hpp"
#include "scc/oracle.hpp"
#include "scc/wgmv.hpp"

namespace scc {

// Instance schema (keys sorted, rationals as "num/den"):
//   {"edges": [{"mult", "u", "v"}], "k": int,
//    "links": [{"cost": "num/den", "tag": "red"|"blue"|null, "u", "v"}],
//    "nodes": [{"id", "label"}]}
nlohmann::json InstanceToJson(const Instance& instance);
// Throws InvalidInput on schema violations.
Instance InstanceFromJson(const nlohmann::json& doc);

// Canonical text form: two-space indent, trailing newline.
std::string SerializeInstance(const Instance& instance);
Instance ParseInstance(std::string_view text);

nlohmann::json CutToJson(const Cut& cut);
nlohmann::json DualsToJson(const DualSolution& duals);

// Mirrors RunTrace, plus cost and dual objective of the run.
nlohmann::json TraceToJson(const RunResult& run, TiePolicy policy);

nlohmann::json ReportToJson(const VerificationReport& report);
nlohmann::json GapToJson(const GapResult& gap);

// Graph edges in green labeled by multiplicity; links dashed, colored by
// tag and labeled by cost.
std::string ExportDot(const Instance& instance);

}  // namespace scc

#endif  // SCC_SERIALIZE_HPP_
