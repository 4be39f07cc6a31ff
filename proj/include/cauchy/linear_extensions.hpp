#pragma once

#include <vector>

#include "cauchy/bigint.hpp"
#include "cauchy/errors.hpp"
#include "cauchy/quotient_tree.hpp"

namespace cauchy {

// Number of total orders < on the vertices with x ≺ y implying x < y, i.e.
// linear extensions of the reachability poset. Dynamic programming over the
// structural tree: each subtree carries a vector indexed by the rank of its
// top vertex within the subtree; merging a child is a weighted shuffle with
// the single cross constraint given by the connecting edge's orientation.
inline BigInt count_compatible_orders(const QuotientTree& t) {
    const int n = t.vertex_count();
    std::vector<std::vector<BigInt>> vec(static_cast<std::size_t>(n));
    // ids are preorder ranks, so children have larger ids: iterate backwards
    for (int v = n - 1; v >= 0; --v) {
        std::vector<BigInt> acc{BigInt(1)};
        for (int c : t.children(v)) {
            const auto& b = vec[static_cast<std::size_t>(c)];
            const int na = static_cast<int>(acc.size());
            const int nb = static_cast<int>(b.size());
            // child must come after v iff the edge arrow points at v
            const bool child_above = t.edges()[static_cast<std::size_t>(t.parent_edge(c))].head == v;
            std::vector<BigInt> pre(static_cast<std::size_t>(nb) + 1);
            for (int j = 1; j <= nb; ++j)
                pre[static_cast<std::size_t>(j)] =
                    pre[static_cast<std::size_t>(j - 1)] + b[static_cast<std::size_t>(j - 1)];
            std::vector<BigInt> merged(static_cast<std::size_t>(na + nb));
            for (int tpos = 1; tpos <= na + nb; ++tpos) {
                BigInt total;
                for (int i = 1; i <= na && i <= tpos; ++i) {
                    int before_b = tpos - i;  // child-group elements placed before v
                    if (before_b > nb) continue;
                    BigInt weight = acc[static_cast<std::size_t>(i - 1)] *
                                    BigInt::binomial(tpos - 1, i - 1) *
                                    BigInt::binomial(na + nb - tpos, na - i);
                    BigInt child_ways =
                        child_above
                            ? pre[static_cast<std::size_t>(nb)] - pre[static_cast<std::size_t>(before_b)]
                            : pre[static_cast<std::size_t>(before_b)];
                    total += weight * child_ways;
                }
                merged[static_cast<std::size_t>(tpos - 1)] = total;
            }
            acc = std::move(merged);
        }
        vec[static_cast<std::size_t>(v)] = std::move(acc);
    }
    BigInt result;
    for (const BigInt& x : vec[0]) result += x;
    return result;
}

// All compatible total orders, each as a rank vector indexed by vertex id
// (ranks 1..n; vertex ids are preorder positions). Lexicographic in the
// sequence of vertices placed at ranks 1,2,...
inline std::vector<std::vector<int>> enumerate_compatible_orders(const QuotientTree& t,
                                                                 long long bound = 1000000) {
    const int n = t.vertex_count();
    std::vector<std::vector<int>> out;
    std::vector<int> ranks(static_cast<std::size_t>(n), 0);
    std::vector<char> placed(static_cast<std::size_t>(n), 0);
    // v is placeable when every adjacent ≺-smaller vertex is already placed
    auto placeable = [&](int v) {
        int p = t.parent(v);
        if (p != -1 && t.arrow_toward_parent(v) && !placed[static_cast<std::size_t>(p)])
            return false;
        for (int c : t.children(v)) {
            bool child_below = t.edges()[static_cast<std::size_t>(t.parent_edge(c))].head == c;
            if (child_below && !placed[static_cast<std::size_t>(c)]) return false;
        }
        return true;
    };
    std::vector<int> chosen;
    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == n) {
            if (static_cast<long long>(out.size()) >= bound)
                throw bound_exceeded("enumerate_compatible_orders: more than " +
                                     std::to_string(bound) + " orders");
            out.push_back(ranks);
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (placed[static_cast<std::size_t>(v)] || !placeable(v)) continue;
            placed[static_cast<std::size_t>(v)] = 1;
            ranks[static_cast<std::size_t>(v)] = depth + 1;
            self(self, depth + 1);
            placed[static_cast<std::size_t>(v)] = 0;
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace cauchy
