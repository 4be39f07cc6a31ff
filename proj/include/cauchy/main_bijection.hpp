#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cauchy/errors.hpp"
#include "cauchy/linear_extensions.hpp"
#include "cauchy/small_bijection.hpp"

namespace cauchy {

// The output side of the main bijection: disjoint sets B_1..B_m covering
// {1..L} with |B_1|+...+|B_n| <= l_1+...+l_n for every n < m.
struct BetaTuple {
    std::vector<std::vector<int>> sets;

    friend bool operator==(const BetaTuple& a, const BetaTuple& b) { return a.sets == b.sets; }
    friend bool operator<(const BetaTuple& a, const BetaTuple& b) { return a.sets < b.sets; }
};

// a_1..a_L over {1..m} with at most l_1+...+l_n entries in {1..n} for n < m.
// Reversing the values r -> m+1-r turns these into generalized parking
// functions (the nondecreasing rearrangement stays under a staircase).
using GammaSequence = std::vector<int>;

inline void validate_beta(const BetaTuple& b, const CauchyParams& params) {
    const int m = params.m();
    const int big_l = params.big_l();
    if (static_cast<int>(b.sets.size()) != m)
        throw invalid_input("beta tuple: expected " + std::to_string(m) + " sets, got " +
                            std::to_string(b.sets.size()));
    std::vector<char> seen(static_cast<std::size_t>(big_l) + 1, 0);
    for (const auto& set : b.sets)
        for (int x : set) {
            if (x < 1 || x > big_l)
                throw invalid_input("beta tuple: element " + std::to_string(x) +
                                    " outside {1.." + std::to_string(big_l) + "}");
            if (seen[static_cast<std::size_t>(x)])
                throw invalid_input("beta tuple: sets not disjoint, element " + std::to_string(x) +
                                    " repeated");
            seen[static_cast<std::size_t>(x)] = 1;
        }
    for (int x = 1; x <= big_l; ++x)
        if (!seen[static_cast<std::size_t>(x)])
            throw invalid_input("beta tuple: union misses element " + std::to_string(x));
    int size_prefix = 0, length_prefix = 0;
    for (int n = 1; n < m; ++n) {
        size_prefix += static_cast<int>(b.sets[static_cast<std::size_t>(n - 1)].size());
        length_prefix += params.length(n);
        if (size_prefix > length_prefix)
            throw invalid_input("beta tuple: prefix constraint violated at n=" + std::to_string(n) +
                                ": |B_1|+...+|B_" + std::to_string(n) + "| = " +
                                std::to_string(size_prefix) + " exceeds l_1+...+l_" +
                                std::to_string(n) + " = " + std::to_string(length_prefix));
    }
}

inline void validate_gamma(const GammaSequence& a, const CauchyParams& params) {
    const int m = params.m();
    if (static_cast<int>(a.size()) != params.big_l())
        throw invalid_input("gamma sequence: expected length L = " +
                            std::to_string(params.big_l()));
    for (int x : a)
        if (x < 1 || x > m)
            throw invalid_input("gamma sequence: entry " + std::to_string(x) + " outside {1.." +
                                std::to_string(m) + "}");
    int length_prefix = 0;
    for (int n = 1; n < m; ++n) {
        length_prefix += params.length(n);
        int count = 0;
        for (int x : a)
            if (x <= n) ++count;
        if (count > length_prefix)
            throw invalid_input("gamma sequence: more than l_1+...+l_" + std::to_string(n) +
                                " entries lie in {1.." + std::to_string(n) + "}");
    }
}

// B_j = {k : a_k = j}
inline BetaTuple gamma_to_beta(const GammaSequence& a, const CauchyParams& params) {
    validate_gamma(a, params);
    BetaTuple b;
    b.sets.assign(static_cast<std::size_t>(params.m()), {});
    for (std::size_t k = 0; k < a.size(); ++k)
        b.sets[static_cast<std::size_t>(a[k] - 1)].push_back(static_cast<int>(k) + 1);
    return b;
}

inline GammaSequence beta_to_gamma(const BetaTuple& b, const CauchyParams& params) {
    validate_beta(b, params);
    GammaSequence a(static_cast<std::size_t>(params.big_l()), 0);
    for (std::size_t j = 0; j < b.sets.size(); ++j)
        for (int k : b.sets[j]) a[static_cast<std::size_t>(k - 1)] = static_cast<int>(j) + 1;
    return a;
}

// All valid tuples, ordered by their gamma sequences lexicographically.
inline std::vector<BetaTuple> enumerate_beta(const CauchyParams& params,
                                             long long bound = 10000000) {
    const int m = params.m();
    const int big_l = params.big_l();
    double states = 1;
    for (int i = 0; i < big_l; ++i) states *= m;
    if (states > static_cast<double>(bound))
        throw bound_exceeded("enumerate_beta: m^L = " + std::to_string(states) +
                             " exceeds the bound");
    std::vector<BetaTuple> out;
    GammaSequence a(static_cast<std::size_t>(big_l), 1);
    while (true) {
        bool ok = true;
        int length_prefix = 0;
        for (int n = 1; n < m && ok; ++n) {
            length_prefix += params.length(n);
            int count = 0;
            for (int x : a)
                if (x <= n) ++count;
            if (count > length_prefix) ok = false;
        }
        if (ok) out.push_back(gamma_to_beta(a, params));
        int pos = big_l - 1;
        while (pos >= 0 && a[static_cast<std::size_t>(pos)] == m) {
            a[static_cast<std::size_t>(pos)] = 1;
            --pos;
        }
        if (pos < 0) break;
        ++a[static_cast<std::size_t>(pos)];
    }
    return out;
}

// An element of set (alpha): a non-crossing pairing compatible with
// epsilon_m plus a compatible order, given as preorder-indexed ranks.
struct AlphaElement {
    Pairing sigma;
    std::vector<int> order;  // rank of the t-th vertex in preorder, 1-based

    friend bool operator==(const AlphaElement& a, const AlphaElement& b) {
        return a.sigma == b.sigma && a.order == b.order;
    }
    friend bool operator<(const AlphaElement& a, const AlphaElement& b) {
        if (a.sigma != b.sigma) return a.sigma < b.sigma;
        return a.order < b.order;
    }
};

// Build the labeled tree of an alpha element, naming the violated invariant
// on failure.
inline LabeledTree make_alpha_tree(const AlphaElement& alpha, const CauchyParams& params) {
    SignSequence eps = epsilon_i(params, params.m());
    QuotientTree tree(eps, alpha.sigma);  // compatibility/crossing diagnostics inside
    const int n = tree.vertex_count();
    if (static_cast<int>(alpha.order.size()) != n)
        throw invalid_input("order: expected " + std::to_string(n) + " ranks");
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int r : alpha.order) {
        if (r < 1 || r > n || seen[static_cast<std::size_t>(r)])
            throw invalid_input("order: not a permutation of 1.." + std::to_string(n));
        seen[static_cast<std::size_t>(r)] = 1;
    }
    LabeledTree t(std::move(tree), alpha.order, false);
    for (const auto& e : t.tree.edges())
        if (!t.vertex_less(e.head, e.tail))
            throw invalid_input(
                "order violates the orientation of the edge glued from e" +
                std::to_string(e.polygon_pair.first) + "=e" + std::to_string(e.polygon_pair.second) +
                ": rank " + std::to_string(t.label_of(e.head)) + " must precede rank " +
                std::to_string(t.label_of(e.tail)));
    return t;
}

// All of set (alpha) in deterministic order (pairings lexicographic, then
// order enumeration order).
inline std::vector<AlphaElement> enumerate_alpha(const CauchyParams& params,
                                                 long long bound = 10000000) {
    SignSequence eps = epsilon_i(params, params.m());
    std::vector<AlphaElement> out;
    for (const auto& sigma : enumerate_noncrossing_pairings(eps)) {
        QuotientTree t(eps, sigma);
        for (auto& ranks : enumerate_compatible_orders(t, bound)) {
            out.push_back(AlphaElement{sigma, std::move(ranks)});
            if (static_cast<long long>(out.size()) > bound)
                throw bound_exceeded("enumerate_alpha: more than " + std::to_string(bound) +
                                     " elements");
        }
    }
    return out;
}

// The state threaded between iterations of the main loop, with the artificial
// labels stripped: a partially labeled quotient tree over epsilon_i plus the
// suffix sets harvested so far.
struct IntermediatePoint {
    CauchyParams params;
    int stage = 0;  // i
    SignSequence eps;
    Pairing sigma;
    std::vector<std::optional<int>> labels;     // per vertex; values outside 1..L count as artificial
    std::vector<std::vector<int>> suffix_sets;  // B_{i+1}..B_m
};

// The six defining conditions, plus the artificial-label coincidence that the
// loop maintains. Label comparisons run in the direction the loop uses at
// this stage: reversed iff m - stage is odd.
inline bool validate_point(const IntermediatePoint& pt) {
    const int m = pt.params.m();
    const int big_l = pt.params.big_l();
    if (pt.stage < 0 || pt.stage > m) return false;
    if (static_cast<int>(pt.suffix_sets.size()) != m - pt.stage) return false;
    // 1. sigma compatible with epsilon_i (and the quotient is a tree)
    if (pt.stage >= 1) {
        if (pt.eps != epsilon_i(pt.params, pt.stage)) return false;
    } else if (pt.eps.size() != 0) {
        return false;
    }
    std::optional<QuotientTree> built;
    try {
        built.emplace(pt.eps, pt.sigma);
    } catch (const invalid_input&) {
        return false;
    }
    const QuotientTree& tree = *built;
    const int n = tree.vertex_count();
    if (static_cast<int>(pt.labels.size()) != n) return false;
    const bool reversed = ((m - pt.stage) % 2) == 1;
    auto less = [&](int a, int b) { return reversed ? b < a : a < b; };
    auto is_real = [&](int lbl) { return lbl >= 1 && lbl <= big_l; };

    // 2. real labels distinct within {1..L}
    std::vector<char> used(static_cast<std::size_t>(big_l) + 1, 0);
    std::vector<int> real_of(static_cast<std::size_t>(n), 0);  // 0 = none
    for (int v = 0; v < n; ++v) {
        if (!pt.labels[static_cast<std::size_t>(v)]) continue;
        int lbl = *pt.labels[static_cast<std::size_t>(v)];
        if (!is_real(lbl)) continue;
        if (used[static_cast<std::size_t>(lbl)]) return false;
        used[static_cast<std::size_t>(lbl)] = 1;
        real_of[static_cast<std::size_t>(v)] = lbl;
    }
    // 3. the unlabeled set V
    std::vector<int> v_set;
    for (int v = 0; v < n; ++v)
        if (real_of[static_cast<std::size_t>(v)] == 0) v_set.push_back(v);
    if (pt.stage == m) {
        if (!v_set.empty()) return false;
    } else {
        if (v_set.empty()) return false;
        if (std::find(v_set.begin(), v_set.end(), tree.root()) == v_set.end()) return false;
        for (int v : v_set)
            if (!tree.root_below(v)) return false;
        for (int y : v_set)
            for (int x = 0; x < n; ++x)
                if (x != y && tree.reaches(x, y) &&
                    real_of[static_cast<std::size_t>(x)] != 0)
                    return false;  // x ≺ y with y unlabeled forces x unlabeled
        // V is a tree: every non-root element's parent also lies in V
        for (int v : v_set)
            if (v != tree.root() &&
                real_of[static_cast<std::size_t>(tree.parent(v))] != 0)
                return false;
    }
    // 4. labeled x ≺ y implies label(x) < label(y)
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (x == y) continue;
            int lx = real_of[static_cast<std::size_t>(x)];
            int ly = real_of[static_cast<std::size_t>(y)];
            if (lx == 0 || ly == 0) continue;
            if (tree.reaches(x, y) && !less(lx, ly)) return false;
        }
    // 5. suffix sets and labels partition {1..L}
    for (const auto& set : pt.suffix_sets)
        for (int x : set) {
            if (x < 1 || x > big_l) return false;
            if (used[static_cast<std::size_t>(x)]) return false;
            used[static_cast<std::size_t>(x)] = 1;
        }
    for (int x = 1; x <= big_l; ++x)
        if (!used[static_cast<std::size_t>(x)]) return false;
    // 6. |B_n|+...+|B_m| >= l_n+...+l_m+1 for stage+1 <= n <= m
    for (int nn = pt.stage + 1; nn <= m; ++nn) {
        int have = 0, need = 1;
        for (int j = nn; j <= m; ++j) {
            have += static_cast<int>(pt.suffix_sets[static_cast<std::size_t>(j - pt.stage - 1)].size());
            need += pt.params.length(j);
        }
        if (have < need) return false;
    }
    // extra: artificial labels coincide with the preorder and sit below the reals
    int prev_artificial = -1;
    for (int v = 0; v < n; ++v) {
        if (!pt.labels[static_cast<std::size_t>(v)]) continue;
        int lbl = *pt.labels[static_cast<std::size_t>(v)];
        if (is_real(lbl)) continue;
        if (prev_artificial != -1 &&
            !less(*pt.labels[static_cast<std::size_t>(prev_artificial)], lbl))
            return false;
        prev_artificial = v;
        for (int w = 0; w < n; ++w) {
            if (!pt.labels[static_cast<std::size_t>(w)]) continue;
            int other = *pt.labels[static_cast<std::size_t>(w)];
            if (is_real(other) && !less(lbl, other)) return false;
        }
    }
    return true;
}

using PointObserver = std::function<void(const IntermediatePoint&)>;

namespace detail {

// Drop the first and last l_i polygon edges, negate the signs and reindex the
// pairing: the surgery trimming epsilon_i down to epsilon_{i-1}.
struct TrimmedPolygon {
    SignSequence eps;
    Pairing sigma;
};

inline TrimmedPolygon trim_polygon(const SignSequence& eps, const Pairing& kept_pairs, int li) {
    const int k = eps.size();
    const int k2 = k - 2 * li;
    CAUCHY_CHECK(k2 >= 0);
    for (const auto& [a, b] : kept_pairs.pairs())
        CAUCHY_CHECK_MSG(a > li && b <= k - li,
                         "pairs must survive inside the trimmed index range");
    std::vector<int> entries;
    for (int i = li + 1; i <= k - li; ++i) entries.push_back(-eps.sign(i));
    return TrimmedPolygon{SignSequence(std::move(entries)), kept_pairs.shifted(-li)};
}

// Artificial label values effectively smaller than every label in {1..L}:
// negatives under the plain order, values above L under the reversed one.
// Returned in effectively ascending order.
inline std::vector<int> make_artificial_labels(int count, int big_l, bool reversed) {
    std::vector<int> out;
    for (int i = 0; i < count; ++i)
        out.push_back(reversed ? big_l + count - i : -(count - i));
    return out;
}

inline IntermediatePoint snapshot_point(const LabeledTree& t, const CauchyParams& params,
                                           int stage, const std::vector<std::vector<int>>& bsets) {
    IntermediatePoint pt{params, stage, t.tree.epsilon(), t.tree.sigma(), {}, {}};
    for (int v = 0; v < t.tree.vertex_count(); ++v) pt.labels.push_back(t.label_of(v));
    pt.suffix_sets.assign(bsets.begin() + stage, bsets.end());
    return pt;
}

}  // namespace detail

// Run the main loop: small bijection, harvest B_i, unglue the root subtree,
// trim l_i edges from both sides of the root, flip orientations and the
// comparator, reglue by the Catalan pairing and relabel with fresh artificial
// labels. Returns the beta tuple.
inline BetaTuple main_bijection(const AlphaElement& alpha, const CauchyParams& params,
                                TraceSink trace = nullptr, PointObserver points = nullptr,
                                StepObserver steps = nullptr) {
    const int m = params.m();
    const int big_l = params.big_l();
    LabeledTree t = make_alpha_tree(alpha, params);
    CAUCHY_CHECK(t.tree.vertex_count() == big_l);
    std::vector<std::vector<int>> bsets(static_cast<std::size_t>(m));
    if (points) {
        auto pt = detail::snapshot_point(t, params, m, bsets);
        CAUCHY_CHECK_MSG(validate_point(pt), "input must form an intermediate point for i=m");
        points(pt);
    }

    for (int i = m; i >= 1; --i) {
        t = small_bijection(std::move(t), trace, steps);
        const auto& q = t.tree;
        const int n = q.vertex_count();
        std::vector<char> in_u(static_cast<std::size_t>(n), 0);
        for (int v = 0; v < n; ++v) in_u[static_cast<std::size_t>(v)] = q.root_below(v);

        std::vector<int>& b = bsets[static_cast<std::size_t>(i - 1)];
        for (int v = 0; v < n; ++v) {
            int lbl = t.label_of(v);
            bool real = lbl >= 1 && lbl <= big_l;
            if (in_u[static_cast<std::size_t>(v)]) {
                if (real) b.push_back(lbl);
            } else {
                CAUCHY_CHECK_MSG(real, "artificial labels must all sit inside U");
            }
        }
        std::sort(b.begin(), b.end());

        if (i == 1) {
            int harvested = 0;
            for (const auto& set : bsets) harvested += static_cast<int>(set.size());
            CAUCHY_CHECK_MSG(harvested == big_l, "every real label must be harvested");
            CAUCHY_CHECK_MSG(std::all_of(in_u.begin(), in_u.end(), [](char c) { return c != 0; }),
                             "the final subtree covers everything");
            break;
        }

        // unglue all edges of U, keep the rest
        std::vector<std::pair<int, int>> kept;
        for (const auto& e : q.edges())
            if (!(in_u[static_cast<std::size_t>(e.head)] && in_u[static_cast<std::size_t>(e.tail)]))
                kept.push_back(e.polygon_pair);
        auto by_index = expand_labels(t, in_u);  // strip labels of U

        auto trimmed = detail::trim_polygon(q.epsilon(), Pairing(std::move(kept)),
                                            params.length(i));
        CAUCHY_CHECK_MSG(trimmed.eps == epsilon_i(params, i - 1),
                         "trimming must produce the previous stage sequence");
        bool reversed2 = !t.reversed;
        Pairing full = catalan_complete(trimmed.eps, trimmed.sigma);
        QuotientTree q2(trimmed.eps, full);

        // carry surviving labels through the index shift
        std::vector<std::optional<int>> by_index2(
            static_cast<std::size_t>(trimmed.eps.size()) + 1);
        for (int idx = 1; idx <= trimmed.eps.size(); ++idx)
            by_index2[static_cast<std::size_t>(idx)] =
                by_index[static_cast<std::size_t>(idx + params.length(i))];
        auto carried = collapse_labels(q2, by_index2);

        std::vector<int> unlabeled;
        std::vector<int> labels(static_cast<std::size_t>(q2.vertex_count()));
        for (int v = 0; v < q2.vertex_count(); ++v) {
            if (carried[static_cast<std::size_t>(v)])
                labels[static_cast<std::size_t>(v)] = *carried[static_cast<std::size_t>(v)];
            else
                unlabeled.push_back(v);
        }
        auto artificials = detail::make_artificial_labels(static_cast<int>(unlabeled.size()),
                                                          big_l, reversed2);
        for (std::size_t j = 0; j < unlabeled.size(); ++j)
            labels[static_cast<std::size_t>(unlabeled[j])] = artificials[j];
        t = LabeledTree(std::move(q2), std::move(labels), reversed2);
        CAUCHY_CHECK_MSG(order_compatible(t), "the relabeled tree must re-enter set (A)");

        if (points) {
            auto pt = detail::snapshot_point(t, params, i - 1, bsets);
            CAUCHY_CHECK_MSG(validate_point(pt), "loop state must form an intermediate point");
            points(pt);
        }
    }
    if (points) {
        IntermediatePoint final_pt{params, 0, SignSequence(std::vector<int>{}), Pairing(std::vector<std::pair<int, int>>{}),
                                   {std::nullopt}, bsets};
        CAUCHY_CHECK_MSG(validate_point(final_pt), "the endpoint must form an intermediate point");
        points(final_pt);
    }
    BetaTuple out{std::move(bsets)};
    validate_beta(out, params);
    return out;
}

// The backward transform: rebuild the stage-i tree from the stage-(i-1)
// state and B_i, then undo the small bijection; iterated from the bare
// endpoint up to the alpha element.
inline AlphaElement main_bijection_inverse(const BetaTuple& beta, const CauchyParams& params,
                                           TraceSink trace = nullptr,
                                           PointObserver points = nullptr,
                                           StepObserver steps = nullptr) {
    const int m = params.m();
    const int big_l = params.big_l();
    validate_beta(beta, params);

    bool reversed = (m % 2) == 1;
    QuotientTree start(SignSequence(std::vector<int>{}), Pairing(std::vector<std::pair<int, int>>{}));
    LabeledTree t(std::move(start), {detail::make_artificial_labels(1, big_l, reversed)[0]},
                  reversed);
    if (points) {
        IntermediatePoint pt{params, 0, SignSequence(std::vector<int>{}), Pairing(std::vector<std::pair<int, int>>{}), {std::nullopt}, beta.sets};
        CAUCHY_CHECK_MSG(validate_point(pt), "the starting endpoint must be an intermediate point");
        points(pt);
    }

    for (int i = 1; i <= m; ++i) {
        const auto& q = t.tree;
        const int n = q.vertex_count();
        // undo the final relabeling and Catalan gluing: strip artificial
        // labels, unglue edges with both ends artificial
        std::vector<char> artificial(static_cast<std::size_t>(n), 0);
        for (int v = 0; v < n; ++v) {
            int lbl = t.label_of(v);
            artificial[static_cast<std::size_t>(v)] = lbl < 1 || lbl > big_l;
        }
        std::vector<std::pair<int, int>> kept;
        for (const auto& e : q.edges())
            if (!(artificial[static_cast<std::size_t>(e.head)] &&
                  artificial[static_cast<std::size_t>(e.tail)]))
                kept.push_back(e.polygon_pair);
        auto by_index = expand_labels(t, artificial);

        // undo the flip and the edge removal: negate, then attach l_i edges
        // on each side of the root with the stage-i block signs
        const int li = params.length(i);
        std::vector<int> entries;
        for (int idx = 0; idx < li; ++idx) entries.push_back(1);
        for (int idx = 1; idx <= q.epsilon().size(); ++idx) entries.push_back(-q.epsilon().sign(idx));
        for (int idx = 0; idx < li; ++idx) entries.push_back(-1);
        SignSequence eps2(std::move(entries));
        CAUCHY_CHECK_MSG(eps2 == epsilon_i(params, i), "attaching must rebuild epsilon_i");
        Pairing shifted = Pairing(std::move(kept)).shifted(li);
        bool reversed2 = !t.reversed;

        // undo the ungluing: Catalan-glue the unpaired edges
        Pairing full = catalan_complete(eps2, shifted);
        QuotientTree q2(eps2, full);

        std::vector<std::optional<int>> by_index2(static_cast<std::size_t>(eps2.size()) + 1);
        for (int idx = 1; idx <= q.epsilon().size(); ++idx)
            by_index2[static_cast<std::size_t>(idx + li)] = by_index[static_cast<std::size_t>(idx)];
        auto carried = collapse_labels(q2, by_index2);

        // undo the label removal: fill U with B_i plus fresh artificials
        std::vector<int> unlabeled;
        std::vector<int> labels(static_cast<std::size_t>(q2.vertex_count()));
        for (int v = 0; v < q2.vertex_count(); ++v) {
            if (carried[static_cast<std::size_t>(v)])
                labels[static_cast<std::size_t>(v)] = *carried[static_cast<std::size_t>(v)];
            else
                unlabeled.push_back(v);
        }
        const auto& b_i = beta.sets[static_cast<std::size_t>(i - 1)];
        CAUCHY_CHECK_MSG(static_cast<int>(unlabeled.size()) >= static_cast<int>(b_i.size()),
                         "B_i cannot exceed the unlabeled subtree");
        int art_count = static_cast<int>(unlabeled.size()) - static_cast<int>(b_i.size());
        auto pool = detail::make_artificial_labels(art_count, big_l, reversed2);
        pool.insert(pool.end(), b_i.begin(), b_i.end());
        std::sort(pool.begin(), pool.end(),
                  [&](int a, int b) { return reversed2 ? b < a : a < b; });
        for (std::size_t j = 0; j < unlabeled.size(); ++j)
            labels[static_cast<std::size_t>(unlabeled[j])] = pool[j];
        t = LabeledTree(std::move(q2), std::move(labels), reversed2);

        // undo the small bijection
        t = small_bijection_inverse(std::move(t), trace, steps);

        if (points) {
            std::vector<std::vector<int>> done(beta.sets.begin() + i, beta.sets.end());
            IntermediatePoint pt{params, i, t.tree.epsilon(), t.tree.sigma(), {}, done};
            for (int v = 0; v < t.tree.vertex_count(); ++v) pt.labels.push_back(t.label_of(v));
            CAUCHY_CHECK_MSG(validate_point(pt), "backward state must form an intermediate point");
            points(pt);
        }
    }
    CAUCHY_CHECK_MSG(!t.reversed, "the comparator returns to the plain direction");
    std::vector<int> order = t.labels;
    std::vector<int> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    for (int r = 1; r <= big_l; ++r) CAUCHY_CHECK(sorted[static_cast<std::size_t>(r - 1)] == r);
    CAUCHY_CHECK_MSG(order_compatible(t), "result must lie in set (alpha)");
    return AlphaElement{t.tree.sigma(), std::move(order)};
}

}  // namespace cauchy
