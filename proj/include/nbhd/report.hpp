#ifndef NBHD_REPORT_HPP
#define NBHD_REPORT_HPP

#include <sstream>
#include <string>

#include <json.hpp>

#include "nbhd/eliminate.hpp"
#include "nbhd/graph.hpp"

namespace nbhd {

using Json = nlohmann::ordered_json;

namespace detail {

inline Json names_json(const Graph& g, const VertexSet& s) {
    Json arr = Json::array();
    for (Vertex v : s) arr.push_back(g.name(v));
    return arr;
}

inline const char* to_string(InvolutionReading r) {
    return r == InvolutionReading::fixed_point_free ? "fixed-point-free" : "any-involution";
}

}  // namespace detail

inline Json witness_json(const Graph& g, const Witness& w) {
    Json j = Json::object();
    if (w.vertex) j["vertex"] = g.name(*w.vertex);
    if (w.class_members) j["class"] = detail::names_json(g, *w.class_members);
    if (w.clique) j["clique"] = detail::names_json(g, *w.clique);
    if (w.common) j["common_neighbourhood"] = detail::names_json(g, *w.common);
    if (w.fixed_subset) j["fixed_subset"] = detail::names_json(g, *w.fixed_subset);
    if (w.prime) j["prime"] = *w.prime;
    if (!w.admissible_orders.empty()) j["admissible_orders"] = w.admissible_orders;
    if (!w.branch.empty()) j["branch"] = w.branch;
    for (const auto& [key, value] : w.numbers) j[key] = value;
    return j;
}

/// Report in the stable JSON schema. Vertex names follow the input labels when present.
inline Json report_json(const Graph& g, const EliminationReport& r) {
    Json j;
    j["input"] = r.input;
    j["n"] = r.stats.n;
    j["m"] = r.stats.m;
    j["asymmetric"] = r.asymmetric;
    j["rules"] = Json::array();
    for (const auto& v : r.verdicts) {
        Json rule;
        rule["id"] = to_string(v.rule);
        rule["outcome"] = to_string(v.outcome);
        rule["scope"] = to_string(v.scope);
        rule["witness"] = witness_json(g, v.witness);
        rule["explanation"] = v.explanation;
        j["rules"].push_back(std::move(rule));
    }
    Json overall;
    overall["outcome"] = to_string(r.overall);
    overall["scope"] = r.overall_scope ? Json(to_string(*r.overall_scope)) : Json(nullptr);
    overall["rule"] = r.overall_rule ? Json(to_string(*r.overall_rule)) : Json(nullptr);
    j["overall"] = std::move(overall);
    Json limits;
    limits["max_clique_order"] = r.limits.max_clique_order;
    limits["iso_enumeration_cap"] = r.limits.iso_enumeration_cap;
    limits["all_rules"] = r.limits.all_rules;
    limits["scope_filter"] = to_string(r.limits.scope_filter);
    limits["involution_reading"] = detail::to_string(r.limits.involution_reading);
    limits["caps_hit"] = Json::array();
    for (auto id : r.caps_hit) limits["caps_hit"].push_back(to_string(id));
    j["limits"] = std::move(limits);
    return j;
}

inline std::string report_text(const Graph& g, const EliminationReport& r) {
    std::ostringstream out;
    out << "input " << r.input << "  n=" << r.stats.n << " m=" << r.stats.m
        << " asymmetric=" << (r.asymmetric ? "yes" : "no") << "\n";
    for (const auto& v : r.verdicts) {
        out << "  " << to_string(v.rule) << ": " << to_string(v.outcome) << " [" << to_string(v.scope)
            << "] " << v.explanation << "\n";
        if (v.outcome == Outcome::eliminated) out << "    witness " << witness_json(g, v.witness).dump() << "\n";
    }
    out << "overall: " << to_string(r.overall);
    if (r.overall_rule) out << " by " << to_string(*r.overall_rule) << " [" << to_string(*r.overall_scope) << "]";
    out << "\nlimits: max_clique_order=" << r.limits.max_clique_order
        << " iso_enumeration_cap=" << r.limits.iso_enumeration_cap
        << " scope_filter=" << to_string(r.limits.scope_filter);
    if (!r.caps_hit.empty()) {
        out << " caps_hit=";
        for (std::size_t i = 0; i < r.caps_hit.size(); ++i) out << (i ? "," : "") << to_string(r.caps_hit[i]);
    }
    out << "\n";
    return out.str();
}

}  // namespace nbhd

#endif  // NBHD_REPORT_HPP
