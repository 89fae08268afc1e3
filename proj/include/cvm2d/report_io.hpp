#pragma once

#include <string>

#include <json.hpp>

#include "cvm2d/config_vars.hpp"
#include "cvm2d/sweep.hpp"

namespace cvm2d {

enum class ReportFormat { csv, json };

// Parses "csv" / "json" (case-sensitive); throws ValidationError otherwise.
ReportFormat report_format_from_name(const std::string& name);

void to_json(nlohmann::json& j, const ConfigVars& cv);
void from_json(const nlohmann::json& j, ConfigVars& cv);
void to_json(nlohmann::json& j, const InterpretationTriple& t);
void from_json(const nlohmann::json& j, InterpretationTriple& t);
void to_json(nlohmann::json& j, const EquivalenceCheck& c);
void to_json(nlohmann::json& j, const EquivalenceReport& rep);
void to_json(nlohmann::json& j, const SweepRow& row);
void from_json(const nlohmann::json& j, SweepRow& row);
void to_json(nlohmann::json& j, const SweepReport& rep);
void from_json(const nlohmann::json& j, SweepReport& rep);

// CSV: header "h,divergence,F_final,y2,z1,z3" plus one row per grid point
// (y2/z1/z3 are the minimized model's values). JSON: the full report
// including per-h ConfigVars, seeds, initial variables, and the best row.
std::string emit_report(const SweepReport& rep, ReportFormat format);

SweepReport report_from_json(const std::string& text);

}  // namespace cvm2d
