#include "cvm2d/report_io.hpp"

#include <cstdio>

#include "cvm2d/errors.hpp"

namespace cvm2d {

namespace {

// Shortest round-trip formatting (matches the JSON emitter's determinism).
std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

ReportFormat report_format_from_name(const std::string& name) {
    if (name == "csv") return ReportFormat::csv;
    if (name == "json") return ReportFormat::json;
    throw ValidationError("unknown report format '" + name + "' (expected csv or json)");
}

void to_json(nlohmann::json& j, const ConfigVars& cv) {
    j = nlohmann::json{{"x1", cv.x1}, {"x2", cv.x2}, {"y1", cv.y1}, {"y2", cv.y2},
                       {"y3", cv.y3}, {"w1", cv.w1}, {"w2", cv.w2}, {"w3", cv.w3},
                       {"z1", cv.z1}, {"z2", cv.z2}, {"z3", cv.z3}, {"z4", cv.z4},
                       {"z5", cv.z5}, {"z6", cv.z6}};
}

void from_json(const nlohmann::json& j, ConfigVars& cv) {
    j.at("x1").get_to(cv.x1);
    j.at("x2").get_to(cv.x2);
    j.at("y1").get_to(cv.y1);
    j.at("y2").get_to(cv.y2);
    j.at("y3").get_to(cv.y3);
    j.at("w1").get_to(cv.w1);
    j.at("w2").get_to(cv.w2);
    j.at("w3").get_to(cv.w3);
    j.at("z1").get_to(cv.z1);
    j.at("z2").get_to(cv.z2);
    j.at("z3").get_to(cv.z3);
    j.at("z4").get_to(cv.z4);
    j.at("z5").get_to(cv.z5);
    j.at("z6").get_to(cv.z6);
}

void to_json(nlohmann::json& j, const InterpretationTriple& t) {
    j = nlohmann::json{{"y2", t.y2}, {"z3", t.z3}, {"z1", t.z1}};
}

void from_json(const nlohmann::json& j, InterpretationTriple& t) {
    j.at("y2").get_to(t.y2);
    j.at("z3").get_to(t.z3);
    j.at("z1").get_to(t.z1);
}

void to_json(nlohmann::json& j, const EquivalenceCheck& c) {
    j = nlohmann::json{{"relation", c.name},
                       {"lhs", c.lhs},
                       {"rhs", c.rhs},
                       {"residual", c.residual},
                       {"pass", c.pass}};
}

void to_json(nlohmann::json& j, const EquivalenceReport& rep) {
    j = nlohmann::json{{"all_pass", rep.all_pass},
                       {"max_abs_residual", rep.max_abs_residual},
                       {"checks", rep.checks}};
}

void to_json(nlohmann::json& j, const SweepRow& row) {
    j = nlohmann::json{{"h", row.h},
                       {"divergence", row.divergence},
                       {"f_final", row.f_final},
                       {"seed", row.seed},
                       {"vars", row.vars}};
    if (row.analytic_ref)
        j["analytic_ref"] = *row.analytic_ref;
    else
        j["analytic_ref"] = nullptr;
}

void from_json(const nlohmann::json& j, SweepRow& row) {
    j.at("h").get_to(row.h);
    j.at("divergence").get_to(row.divergence);
    j.at("f_final").get_to(row.f_final);
    j.at("seed").get_to(row.seed);
    j.at("vars").get_to(row.vars);
    const auto& ref = j.at("analytic_ref");
    if (ref.is_null())
        row.analytic_ref = std::nullopt;
    else
        row.analytic_ref = ref.get<InterpretationTriple>();
}

void to_json(nlohmann::json& j, const SweepReport& rep) {
    j = nlohmann::json{{"initial_vars", rep.initial_vars},
                       {"rows", rep.rows},
                       {"best_index", rep.best_index},
                       {"best", rep.best()},
                       {"warnings", rep.warnings}};
}

void from_json(const nlohmann::json& j, SweepReport& rep) {
    j.at("initial_vars").get_to(rep.initial_vars);
    j.at("rows").get_to(rep.rows);
    j.at("best_index").get_to(rep.best_index);
    j.at("warnings").get_to(rep.warnings);
    if (rep.best_index >= rep.rows.size())
        throw ValidationError("sweep report best_index out of range");
}

std::string emit_report(const SweepReport& rep, ReportFormat format) {
    if (format == ReportFormat::json) {
        nlohmann::json j = rep;
        return j.dump(2) + "\n";
    }
    std::string out = "h,divergence,F_final,y2,z1,z3\n";
    for (const auto& row : rep.rows) {
        out += fmt(row.h) + "," + fmt(row.divergence) + "," + fmt(row.f_final) + "," +
               fmt(row.vars.y2) + "," + fmt(row.vars.z1) + "," + fmt(row.vars.z3) + "\n";
    }
    return out;
}

SweepReport report_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
        return j.get<SweepReport>();
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("invalid sweep report JSON: ") + e.what());
    }
}

}  // namespace cvm2d
