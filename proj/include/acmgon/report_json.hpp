#pragma once

// JSON renderings of the library's value types (nlohmann::json).

#include <json.hpp>

#include "biliaison.hpp"
#include "gonality.hpp"
#include "hvector.hpp"
#include "quadform.hpp"
#include "verify.hpp"

namespace acm {

using json = nlohmann::ordered_json;

inline json to_json(const HVector& h) { return h.values(); }
inline json to_json(const BiliaisonType& l) { return format_lambda(l); }

inline json to_json(const CurveInvariants& inv) {
    json j;
    j["d"] = inv.d;
    j["g"] = inv.g;
    j["s"] = inv.s;
    j["t"] = inv.t ? json(*inv.t) : json(nullptr);
    j["e"] = inv.e.is_neg_infinity() ? json("-inf") : json(inv.e.value());
    return j;
}

inline json to_json(const GapDecomposition& dec) {
    json arr = json::array();
    for (const auto& p : dec.pieces)
        arr.push_back({{"lambda", to_json(p.lambda)}, {"d", p.invariants.d}, {"g", p.invariants.g}});
    return arr;
}

inline json to_json(const PicardModel& m) {
    json j;
    j["linked"] = to_json(m.linked);
    j["lambda_gamma"] = to_json(m.lambda_gamma);
    json comps = json::array();
    for (std::size_t i = 0; i < m.rank(); ++i)
        comps.push_back({{"lambda", to_json(m.components[i].lambda)},
                         {"degree", m.components[i].degree},
                         {"q", m.components[i].q},
                         {"b", m.b(i)}});
    j["components"] = comps;
    json phi = json::array();
    for (std::size_t i = 0; i < m.rank(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < m.rank(); ++k) row.push_back(m.phi(i, k));
        phi.push_back(row);
    }
    j["phi"] = phi;
    j["phiCC"] = phi_from_dg(m.d, m.g, m.s);
    j["C2"] = c_squared(m.d, m.g, m.s);
    return j;
}

inline json to_json(const DestabilizerCandidate& c) {
    return {{"c", c.cls.c},
            {"a", c.cls.a},
            {"x", c.cls.x},
            {"phiAA", c.phiAA},
            {"phiAC", c.phiAC},
            {"class", std::string(destabilizer_kind_name(c.kind))}};
}

inline json to_json(const CandidateList& list) {
    if (!list) return nullptr;
    json arr = json::array();
    for (const auto& c : *list) arr.push_back(to_json(c));
    return arr;
}

inline json to_json(const GonalityReport& r) {
    json j;
    j["hvector"] = to_json(r.h);
    const json inv = to_json(r.inv);
    for (const auto& [k, v] : inv.items()) j[k] = v;
    j["case"] = std::string(secant_tag_name(r.secant.tag));
    j["l"] = r.secant.l ? json(*r.secant.l) : json(nullptr);
    j["gonality"] = r.gonality ? json(*r.gonality) : json(nullptr);
    j["clifford"] = r.clifford ? json(*r.clifford) : json(nullptr);
    j["unique_pencil"] = r.secant.unique_pencil;
    j["flags"] = {{"thm1_undecided", r.flags.thm1_undecided},
                  {"thm3_undecided", r.flags.thm3_undecided},
                  {"elliptic_quartic_extra_pencil", r.flags.elliptic_quartic_extra_pencil}};
    j["candidates"] = to_json(r.candidates_at_gon);
    j["candidates_below"] = to_json(r.candidates_below_gon);
    j["decreasing_type"] = r.decreasing_type;
    j["lambda"] = r.h.empty() ? json("()") : to_json(lambda_from_h(r.h));
    j["model"] = r.model ? to_json(*r.model) : json(nullptr);
    return j;
}

inline json to_json(const BoundRecord& b) {
    return {{"lambda", to_json(b.lambda)}, {"s", b.s}, {"q", b.q}, {"bound", b.bound}, {"pass", b.pass}};
}

inline json to_json(const CheckResult& c) {
    return {{"name", c.name}, {"pass", c.passed}, {"cases", c.cases}, {"witness", c.witness}};
}

inline json to_json(const VerificationReport& r) {
    json checks = json::array(), bounds = json::array();
    for (const auto& c : r.checks) checks.push_back(to_json(c));
    for (const auto& b : r.bounds) bounds.push_back(to_json(b));
    return {{"s", r.s}, {"pass", r.all_passed()}, {"checks", checks}, {"bounds", bounds}};
}

inline json to_json(const SDG& x) { return {{"s", x.s}, {"d", x.d}, {"g", x.g}}; }

} // namespace acm
