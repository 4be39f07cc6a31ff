#include <doctest.h>

#include <map>
#include <set>

#include "cauchy/small_bijection.hpp"
#include "test_oracles.hpp"

using cauchy::LabeledTree;
using cauchy::Pairing;
using cauchy::QuotientTree;
using cauchy::SignSequence;

namespace {
SignSequence seq(std::vector<int> v) { return SignSequence(std::move(v)); }
Pairing pairing(std::vector<std::pair<int, int>> v) { return Pairing(std::move(v)); }

std::pair<Pairing, std::vector<int>> key_of(const LabeledTree& t) {
    return {t.tree.sigma(), t.labels};
}
}  // namespace

TEST_CASE("validate_triple on endpoints and a forced violation") {
    // any set (A) element with S = R
    for (const auto& a : oracles::enumerate_set_a(seq({1, -1, 1, -1})))
        CHECK(cauchy::validate_triple(a, a.tree.root()));
    // any set (B) element with S = the maximum of {x ⪰ R}
    for (const auto& b : oracles::enumerate_set_b(seq({1, -1, 1, -1}))) {
        int s = -1;
        for (int v = 0; v < b.tree.vertex_count(); ++v)
            if (b.tree.root_below(v) && (s == -1 || b.vertex_less(s, v))) s = v;
        CHECK(cauchy::validate_triple(b, s));
    }
    // adjacent v ≺ w with v > w and R ⪯ v violates property 3:
    // chain R <- a <- b labeled R=1, a=3, b=2
    QuotientTree chain(seq({1, 1, -1, -1}), pairing({{2, 3}, {1, 4}}));
    LabeledTree bad(chain, {1, 3, 2});
    CHECK_FALSE(cauchy::validate_triple(bad, 0));
}

TEST_CASE("small bijection maps set (A) onto set (B) for every Catalan sequence up to 10") {
    for (int len : {0, 2, 4, 6, 8, 10}) {
        for (const auto& eps : oracles::catalan_sequences(len)) {
            auto set_a = oracles::enumerate_set_a(eps);
            auto set_b = oracles::enumerate_set_b(eps);
            CHECK(set_a.size() == set_b.size());

            std::set<std::pair<Pairing, std::vector<int>>> images;
            for (const auto& a : set_a) {
                auto image = cauchy::small_bijection(a);
                CHECK(cauchy::in_set_b(image));
                CHECK(images.insert(key_of(image)).second);  // injective
                // and the inverse returns exactly the source
                auto back = cauchy::small_bijection_inverse(image);
                CHECK(oracles::same_element(back, a));
            }
            // surjective: the image set equals set (B)
            std::set<std::pair<Pairing, std::vector<int>>> b_keys;
            for (const auto& b : set_b) b_keys.insert(key_of(b));
            CHECK(images == b_keys);

            // the other roundtrip direction
            for (const auto& b : set_b) {
                auto source = cauchy::small_bijection_inverse(b);
                CHECK(cauchy::in_set_a(source));
                CHECK(oracles::same_element(cauchy::small_bijection(source), b));
            }
        }
    }
}

TEST_CASE("set (A) splits 2+2 and set (B) splits 1+3 for the alternating square") {
    auto eps = seq({1, -1, 1, -1});
    std::map<Pairing, int> a_split, b_split;
    for (const auto& a : oracles::enumerate_set_a(eps)) a_split[a.tree.sigma()]++;
    for (const auto& b : oracles::enumerate_set_b(eps)) b_split[b.tree.sigma()]++;
    CHECK(a_split[pairing({{1, 2}, {3, 4}})] == 2);
    CHECK(a_split[pairing({{1, 4}, {2, 3}})] == 2);
    CHECK(b_split[pairing({{1, 2}, {3, 4}})] == 1);
    CHECK(b_split[pairing({{1, 4}, {2, 3}})] == 3);
}

TEST_CASE("element already in (A) and (B) is a fixed point") {
    QuotientTree star(seq({1, -1, 1, -1}), pairing({{1, 2}, {3, 4}}));
    LabeledTree fixed(star, {1, 2, 3});
    REQUIRE(cauchy::in_set_a(fixed));
    REQUIRE(cauchy::in_set_b(fixed));
    CHECK(oracles::same_element(cauchy::small_bijection(fixed), fixed));
    CHECK(oracles::same_element(cauchy::small_bijection_inverse(fixed), fixed));
}

TEST_CASE("forward and backward steps invert each other on every valid triple") {
    for (int len : {2, 4, 6, 8}) {
        for (const auto& eps : oracles::catalan_sequences(len)) {
            for (const auto& sigma : cauchy::enumerate_noncrossing_pairings(eps)) {
                QuotientTree t(eps, sigma);
                for (const auto& ranks : oracles::all_labelings(t.vertex_count())) {
                    LabeledTree lt(t, ranks);
                    for (int s = 0; s < t.vertex_count(); ++s) {
                        if (!cauchy::validate_triple(lt, s)) continue;
                        auto fwd = cauchy::forward_step(lt, s);
                        if (fwd.done) continue;
                        auto back = cauchy::backward_step(fwd.tree, fwd.s_vertex);
                        REQUIRE_FALSE(back.done);
                        CHECK(oracles::same_element(back.tree, lt));
                        CHECK(back.s_vertex == s);
                    }
                }
            }
        }
    }
}

TEST_CASE("reversed comparator mirrors the plain run under label negation") {
    for (const auto& eps : oracles::catalan_sequences(6)) {
        for (const auto& a : oracles::enumerate_set_a(eps)) {
            std::vector<int> mirrored;
            for (int l : a.labels) mirrored.push_back(100 - l);
            LabeledTree twin(a.tree, mirrored, true);
            REQUIRE(cauchy::order_compatible(twin));
            auto image = cauchy::small_bijection(a);
            auto twin_image = cauchy::small_bijection(twin);
            CHECK(twin_image.tree.sigma() == image.tree.sigma());
            std::vector<int> back;
            for (int l : twin_image.labels) back.push_back(100 - l);
            CHECK(back == image.labels);
        }
    }
}

TEST_CASE("termination and inclusion bookkeeping across a full run") {
    // watch the measure |{x : R ⪯ x, S ≤ x}| strictly fall along a run
    auto eps = seq({1, 1, -1, 1, -1, -1, 1, -1});
    for (const auto& a : oracles::enumerate_set_a(eps)) {
        std::vector<int> measures;
        cauchy::StepObserver obs = [&](const LabeledTree& t, int s) {
            int m = 0;
            for (int v = 0; v < t.tree.vertex_count(); ++v)
                if (t.tree.root_below(v) && !t.vertex_less(v, s)) ++m;
            measures.push_back(m);
        };
        cauchy::small_bijection(a, nullptr, obs);
        for (std::size_t i = 1; i < measures.size(); ++i) CHECK(measures[i] < measures[i - 1]);
    }
}

TEST_CASE("rewrite traces replay to the same endpoint") {
    auto eps = seq({1, -1, 1, -1, 1, -1});
    for (const auto& a : oracles::enumerate_set_a(eps)) {
        std::vector<cauchy::RewriteTrace> traces;
        cauchy::TraceSink sink = [&](const cauchy::RewriteTrace& tr) { traces.push_back(tr); };
        auto image = cauchy::small_bijection(a, sink);
        // replay: apply the recorded pair rewrites and label moves mechanically
        Pairing sigma = a.tree.sigma();
        LabeledTree cur = a;
        for (const auto& tr : traces) {
            sigma = sigma.without({tr.removed_pairs[0], tr.removed_pairs[1]})
                        .with({tr.added_pairs[0], tr.added_pairs[1]});
            QuotientTree t2(eps, sigma);
            std::vector<char> strip(static_cast<std::size_t>(cur.tree.vertex_count()), 0);
            for (const auto& [lbl, _] : tr.label_moves)
                strip[static_cast<std::size_t>(cur.vertex_with_label(lbl))] = 1;
            auto by_index = cauchy::expand_labels(cur, strip);
            auto carried = cauchy::collapse_labels(t2, by_index);
            std::vector<int> labels(static_cast<std::size_t>(t2.vertex_count()), 0);
            for (int v = 0; v < t2.vertex_count(); ++v)
                if (carried[static_cast<std::size_t>(v)])
                    labels[static_cast<std::size_t>(v)] = *carried[static_cast<std::size_t>(v)];
            for (const auto& [lbl, vid] : tr.label_moves)
                labels[static_cast<std::size_t>(vid)] = lbl;
            cur = LabeledTree(t2, labels, cur.reversed);
        }
        CHECK(oracles::same_element(cur, image));
    }
}
