#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cauchy/main_bijection.hpp"
#include "cauchy/quotient_tree.hpp"
#include "cauchy/small_bijection.hpp"

namespace cauchy {

using nlohmann::json;

inline json to_json(const SignSequence& s) { return json(s.entries()); }

inline SignSequence sign_sequence_from_json(const json& j) {
    if (!j.is_array()) throw invalid_input("epsilon: expected an array of 1/-1");
    std::vector<int> entries;
    for (const auto& e : j) {
        if (!e.is_number_integer()) throw invalid_input("epsilon: entries must be integers");
        entries.push_back(e.get<int>());
    }
    return SignSequence(std::move(entries));
}

inline json to_json(const Pairing& p) {
    json arr = json::array();
    for (const auto& [a, b] : p.pairs()) arr.push_back(json::array({a, b}));
    return arr;
}

inline Pairing pairing_from_json(const json& j) {
    if (!j.is_array()) throw invalid_input("pairs: expected an array of index pairs");
    std::vector<std::pair<int, int>> pairs;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2) throw invalid_input("pairs: each entry is [i, j]");
        pairs.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Pairing(std::move(pairs));
}

inline json to_json(const SignSequence& eps, const AlphaElement& alpha) {
    return json{{"epsilon", to_json(eps)}, {"pairs", to_json(alpha.sigma)},
                {"order", alpha.order}};
}

inline AlphaElement alpha_from_json(const json& j, const CauchyParams& params) {
    if (!j.is_object() || !j.contains("pairs") || !j.contains("order"))
        throw invalid_input("alpha element: expected {epsilon, pairs, order}");
    if (j.contains("epsilon")) {
        SignSequence given = sign_sequence_from_json(j.at("epsilon"));
        if (given != epsilon_i(params, params.m()))
            throw invalid_input("alpha element: epsilon does not match the block sequence of l");
    }
    AlphaElement alpha;
    alpha.sigma = pairing_from_json(j.at("pairs"));
    if (!j.at("order").is_array()) throw invalid_input("order: expected an array of ranks");
    for (const auto& r : j.at("order")) alpha.order.push_back(r.get<int>());
    return alpha;
}

inline json to_json(const BetaTuple& b) {
    json sets = json::array();
    for (const auto& set : b.sets) sets.push_back(set);
    return json{{"B", sets}};
}

inline BetaTuple beta_from_json(const json& j) {
    if (!j.is_object() || !j.contains("B") || !j.at("B").is_array())
        throw invalid_input("beta tuple: expected {\"B\": [[...], ...]}");
    BetaTuple b;
    for (const auto& set : j.at("B")) {
        if (!set.is_array()) throw invalid_input("beta tuple: each B_i is an array");
        std::vector<int> s;
        for (const auto& x : set) s.push_back(x.get<int>());
        std::sort(s.begin(), s.end());
        b.sets.push_back(std::move(s));
    }
    return b;
}

inline json tree_to_json(const QuotientTree& t) {
    json vertices = json::array();
    for (int v = 0; v < t.vertex_count(); ++v) vertices.push_back(t.members(v));
    json edges = json::array();
    for (const auto& e : t.edges())
        edges.push_back(json{{"pair", json::array({e.polygon_pair.first, e.polygon_pair.second})},
                             {"head", e.head},
                             {"tail", e.tail}});
    return json{{"epsilon", to_json(t.epsilon())},
                {"pairs", to_json(t.sigma())},
                {"vertices", vertices},
                {"root", t.root()},
                {"edges", edges}};
}

inline json trace_to_json(const RewriteTrace& tr) {
    json moves = json::array();
    for (const auto& [lbl, v] : tr.label_moves) moves.push_back(json::array({lbl, v}));
    json j{{"op", "rewrite"},
           {"dir", tr.forward ? "forward" : "backward"},
           {"S", tr.s_label},
           {"D", tr.d_label},
           {"A", tr.a_label},
           {"B", tr.b_label},
           {"removed", json::array({json::array({tr.removed_pairs[0].first, tr.removed_pairs[0].second}),
                                    json::array({tr.removed_pairs[1].first, tr.removed_pairs[1].second})})},
           {"added", json::array({json::array({tr.added_pairs[0].first, tr.added_pairs[0].second}),
                                  json::array({tr.added_pairs[1].first, tr.added_pairs[1].second})})},
           {"moves", moves}};
    if (tr.c_label)
        j["C"] = *tr.c_label;
    else
        j["C"] = nullptr;
    return j;
}

}  // namespace cauchy
