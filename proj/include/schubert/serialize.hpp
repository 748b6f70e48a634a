#pragma once

// JSON emitters. Ordered maps keep key order stable so serialized documents
// are byte-identical across runs.

#include "schubert/presentation.hpp"

#include <json.hpp>

namespace schubert {

using ordered_json = nlohmann::ordered_json;

inline ordered_json to_json(const MultiVector& v) {
    ordered_json out = ordered_json::array();
    for (const auto& [I, c] : v.terms()) {
        ordered_json term;
        term["indices"] = I.indices();
        term["coeff"] = c.str();
        out.push_back(std::move(term));
    }
    return out;
}

inline ordered_json to_json(const ClassCombination& c) {
    ordered_json out = ordered_json::array();
    for (const auto& [l, v] : c.terms()) {
        ordered_json term;
        term["partition"] = l.str();
        term["coeff"] = v.str();
        out.push_back(std::move(term));
    }
    return out;
}

inline ordered_json to_json(const PresentationResult& r) {
    ordered_json out;
    out["k"] = r.k;
    out["n"] = r.n;
    ordered_json ring = ordered_json::array();
    for (const auto& g : r.coeff_ring->generators()) {
        ordered_json gen;
        gen["name"] = g.name;
        gen["degree"] = g.degree;
        ring.push_back(std::move(gen));
    }
    out["ring"] = std::move(ring);
    out["p"] = r.p;
    out["generators"] = r.generators;
    ordered_json relations = ordered_json::array();
    for (const auto& rel : r.relations) relations.push_back(rel.str());
    out["relations"] = std::move(relations);
    return out;
}

inline ordered_json to_json(const std::vector<ProductEntry>& table) {
    ordered_json out = ordered_json::array();
    for (const auto& e : table) {
        ordered_json row;
        row["lhs"] = e.lhs.str();
        row["rhs"] = e.rhs.str();
        row["result"] = to_json(e.result);
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace schubert
