#pragma once

#include <json.hpp>

#include "madcolor/bounds.hpp"
#include "madcolor/coloring.hpp"
#include "madcolor/densest.hpp"
#include "madcolor/discharge.hpp"
#include "madcolor/hunt.hpp"
#include "madcolor/lemma2.hpp"
#include "madcolor/rational.hpp"

namespace madcolor {

using nlohmann::json;

inline json to_json(const Rational& r) { return json{{"num", r.num()}, {"den", r.den()}}; }

/// {"a":., "b":., "classes": {"D1":[ids...], ..., "O1":[ids...]}}.
/// Every class key is present; for total colorings every vertex appears
/// exactly once across the arrays.
inline json coloring_to_json(ColorSpec spec, const Coloring& c) {
    json classes = json::object();
    for (int code = 0; code < spec.total(); ++code)
        classes[class_label(spec, code)] = json::array();
    for (int v = 0; v < c.size(); ++v)
        if (c.assigned(v)) classes[class_label(spec, c.code(v))].push_back(v);
    return json{{"a", spec.defective}, {"b", spec.independent}, {"classes", classes}};
}

/// Inverse of coloring_to_json for a graph on n vertices. Missing class
/// keys are treated as empty; unknown labels, bad indices, out-of-range
/// ids, and doubly-assigned vertices are rejected.
inline std::pair<ColorSpec, Coloring> coloring_from_json(const json& j, int n) {
    ColorSpec spec{j.at("a").get<int>(), j.at("b").get<int>()};
    spec.validate();
    Coloring c(n);
    if (!j.contains("classes")) return {spec, c};
    for (auto& [label, ids] : j.at("classes").items()) {
        if (label.size() < 2 || (label[0] != 'D' && label[0] != 'O'))
            throw std::invalid_argument("coloring JSON: bad class label '" + label + "'");
        int index = std::stoi(label.substr(1));
        ColorClass cls{label[0] == 'D' ? ColorClass::Kind::defective
                                       : ColorClass::Kind::independent,
                       index};
        int code = encode_class(spec, cls);  // range-checks the index
        for (const auto& id : ids) {
            int v = id.get<int>();
            if (v < 0 || v >= n)
                throw std::out_of_range("coloring JSON: vertex id out of range");
            if (c.assigned(v))
                throw std::invalid_argument("coloring JSON: vertex assigned twice");
            c.assign(v, code);
        }
    }
    return {spec, c};
}

inline json verify_to_json(ColorSpec spec, const VerifyResult& result) {
    json violations = json::array();
    for (const Violation& v : result.violations) {
        json item{{"vertex", v.vertex}, {"conflicting", v.conflicting}};
        switch (v.reason) {
            case Violation::Reason::unassigned:
                item["reason"] = "unassigned";
                break;
            case Violation::Reason::independence:
                item["reason"] = "independence";
                break;
            case Violation::Reason::defect_exceeded:
                item["reason"] = "defect_exceeded";
                break;
        }
        if (v.code != Coloring::kUnassigned) item["class"] = class_label(spec, v.code);
        violations.push_back(item);
    }
    return json{{"ok", result.ok}, {"violations", violations}};
}

inline json audit_to_json(const AuditResult& result) {
    json vertices = json::array();
    for (const ChargeRow& row : result.charges.rows) {
        json item{{"id", row.vertex},     {"degree", row.degree},
                  {"h", row.h},           {"mu", to_json(row.mu)},
                  {"given", to_json(row.given)}, {"received", to_json(row.received)},
                  {"mu_star", to_json(row.mu_star)}};
        if (row.layer == LayerDecomposition::kUncovered)
            item["layer"] = "uncovered";
        else
            item["layer"] = row.layer;
        vertices.push_back(item);
    }
    json checks = json::array();
    for (const AuditCheck& check : result.checks)
        checks.push_back(
            {{"name", check.name}, {"pass", check.pass}, {"witness", check.witness}});
    return json{{"covered", result.layers.covered},
                {"vertices", vertices},
                {"sum_mu", to_json(result.charges.sum_mu)},
                {"sum_mu_star", to_json(result.charges.sum_mu_star)},
                {"checks", checks}};
}

inline json lemma2_to_json(const Lemma2Report& report) {
    return json{{"vertex", report.vertex},
                {"h", report.h},
                {"extendable", report.extendable},
                {"unique_saturated", report.unique_saturated},
                {"unique_one_saturated", report.unique_one_saturated},
                {"required_saturated", report.required_saturated},
                {"required_one_saturated", report.required_one_saturated},
                {"violation", report.violation}};
}

inline json densest_to_json(const DensestResult& result) {
    return json{{"vertices", result.subset}, {"density", to_json(result.density)}};
}

inline json hunt_to_json(const HuntReport& report) {
    json rows = json::array();
    for (const HuntTrial& row : report.rows)
        rows.push_back({{"trial", row.trial},
                        {"seed", row.seed},
                        {"n", row.n},
                        {"m", row.m},
                        {"status", row.status},
                        {"fell_back", row.fell_back},
                        {"swaps", row.swaps}});
    json failures = json::array();
    for (const HuntFailure& failure : report.failures)
        failures.push_back({{"trial", failure.trial},
                            {"seed", failure.seed},
                            {"a", failure.a},
                            {"b", failure.b},
                            {"graph6", failure.graph6},
                            {"status", failure.status}});
    return json{{"a", report.a},
                {"b", report.b},
                {"trials", report.trials},
                {"generated", report.generated},
                {"fallbacks", report.fallbacks},
                {"fallback_rate", to_json(report.fallback_rate())},
                {"rows", rows},
                {"failures", failures}};
}

inline json bounds_to_json(const BoundTable& table) {
    json rows = json::array();
    for (const BoundTableRow& row : table.rows) {
        json item{{"a", row.a},
                  {"b", row.b},
                  {"ours", to_json(row.ours)},
                  {"dkmr_d1", to_json(row.dkmr_d1)},
                  {"improved", row.improved}};
        item["havet_sereni_d1"] =
            row.has_havet_sereni ? to_json(row.havet_sereni_d1) : json(nullptr);
        rows.push_back(item);
    }
    json references = json::array();
    for (const BoundReference& ref : table.references)
        references.push_back({{"name", ref.name}, {"value", to_json(ref.value)}});
    return json{{"rows", rows}, {"references", references}};
}

}  // namespace madcolor
