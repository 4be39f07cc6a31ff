#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "cauchy/errors.hpp"
#include "cauchy/labeled_tree.hpp"
#include "cauchy/reglue.hpp"

namespace cauchy {

// One unglue/reglue rewrite, recorded for tracing and replay. Vertices are
// identified by the labels they carried just before the rewrite.
struct RewriteTrace {
    bool forward = true;
    int s_label = 0;
    int d_label = 0;
    int a_label = 0;
    int b_label = 0;
    std::optional<int> c_label;  // absent in the no-bay backward case
    std::array<std::pair<int, int>, 2> removed_pairs{};
    std::array<std::pair<int, int>, 2> added_pairs{};
    std::vector<std::pair<int, int>> label_moves;  // (label, new vertex id)
};

using TraceSink = std::function<void(const RewriteTrace&)>;
using StepObserver = std::function<void(const LabeledTree&, int /*s_vertex*/)>;

// The three defining properties of an intermediate triple (sigma, <, S).
inline bool validate_triple(const LabeledTree& t, int s_vertex) {
    const auto& q = t.tree;
    const int n = q.vertex_count();
    if (s_vertex < 0 || s_vertex >= n) return false;
    // 1. R ⪯ S and R ≤ S
    if (!q.root_below(s_vertex)) return false;
    if (s_vertex != q.root() && !t.vertex_less(q.root(), s_vertex)) return false;
    // 2. on {x : R ⪯ x and x ≤ S} the effective order and the preorder coincide
    int prev = -1;
    for (int v = 0; v < n; ++v) {
        if (!q.root_below(v)) continue;
        if (v != s_vertex && !t.vertex_less(v, s_vertex)) continue;
        if (prev != -1 && !t.vertex_less(prev, v)) return false;
        prev = v;
    }
    // 3. reversed adjacent pairs sit strictly off the root subtree, hang from
    //    it, and leave no room between S and the pair
    for (int v = 1; v < n; ++v) {
        int w = q.parent(v);
        int lo, hi;  // lo ≺ hi along this edge
        if (q.arrow_toward_parent(v)) {
            lo = w;
            hi = v;
        } else {
            lo = v;
            hi = w;
        }
        if (t.vertex_less(lo, hi)) continue;  // not reversed
        if (q.root_below(lo)) return false;
        if (!(q.root_below(hi) && hi != q.root())) return false;
        for (int x = 0; x < n; ++x) {
            if (!q.root_below(x)) continue;
            if (t.vertex_less(s_vertex, x) && t.vertex_less(x, lo)) return false;
        }
    }
    return true;
}

struct StepOutcome {
    bool done = false;
    LabeledTree tree;
    int s_vertex = -1;
};

namespace detail {

// |{x : R ⪯ x and S ≤ x}| — the termination measure of the iteration.
inline int iteration_measure(const LabeledTree& t, int s_vertex) {
    int count = 0;
    for (int v = 0; v < t.tree.vertex_count(); ++v)
        if (t.tree.root_below(v) && !t.vertex_less(v, s_vertex)) ++count;
    return count;
}

// Planar view of the subtree spanned by `in_u` (which must contain the root
// and be closed under parents), vertices kept under their global ids.
inline OrientedPlanarTree subtree_view(const QuotientTree& q, const std::vector<char>& in_u) {
    OrientedPlanarTree u;
    const int n = q.vertex_count();
    u.root = q.root();
    u.parent.assign(static_cast<std::size_t>(n), -1);
    u.children.assign(static_cast<std::size_t>(n), {});
    CAUCHY_CHECK(in_u[static_cast<std::size_t>(q.root())]);
    for (int v = 0; v < n; ++v) {
        if (!in_u[static_cast<std::size_t>(v)]) continue;
        if (v == q.root()) continue;
        int p = q.parent(v);
        CAUCHY_CHECK_MSG(in_u[static_cast<std::size_t>(p)], "U must be closed under parents");
        u.parent[static_cast<std::size_t>(v)] = p;
        u.children[static_cast<std::size_t>(p)].push_back(v);
    }
    for (auto& ch : u.children) std::sort(ch.begin(), ch.end());
    return u;
}

// Is `anc` on the path from v to the root (inclusive)?
inline bool is_ancestor_or_self(const QuotientTree& q, int anc, int v) {
    for (int x = v; x != -1; x = q.parent(x))
        if (x == anc) return true;
    return false;
}

struct RewriteResult {
    QuotientTree tree;
    std::vector<std::optional<int>> carried;  // labels that stayed put
    RegluedPairs reglued;
};

inline RewriteResult apply_reglue(const LabeledTree& t, const std::vector<int>& strip,
                                  std::pair<int, int> e1, std::pair<int, int> e2) {
    std::vector<char> strip_mask(static_cast<std::size_t>(t.tree.vertex_count()), 0);
    for (int v : strip) strip_mask[static_cast<std::size_t>(v)] = 1;
    auto by_index = expand_labels(t, strip_mask);
    RegluedPairs rg = unglue_reglue_pairs(t.tree.epsilon(), t.tree.sigma(), e1, e2);
    CAUCHY_CHECK_MSG(is_non_crossing(rg.pairing), "reglue produced a crossing pairing");
    QuotientTree q2(t.tree.epsilon(), rg.pairing);
    auto carried = collapse_labels(q2, by_index);
    return RewriteResult{std::move(q2), std::move(carried), std::move(rg)};
}

// Labels of removed vertices, sorted ascending in the effective order.
inline std::vector<int> removed_labels_sorted(const LabeledTree& t, const std::vector<int>& strip) {
    std::vector<int> labels;
    for (int v : strip) labels.push_back(t.label_of(v));
    std::sort(labels.begin(), labels.end(),
              [&](int a, int b) { return t.label_less(a, b); });
    return labels;
}

}  // namespace detail

// One forward transformation: either advance S, rewrite the pairing, or
// report that the triple is an endpoint (an element of set (B)).
inline StepOutcome forward_step(const LabeledTree& lt, int s_vertex, TraceSink trace = nullptr) {
    if (!validate_triple(lt, s_vertex))
        throw invalid_input("forward_step: not an intermediate triple");
    const auto& q = lt.tree;
    const int n = q.vertex_count();

    // D = minimum of {x : x ≻ R and x > S} in the effective order
    int d = -1;
    for (int x = 1; x < n; ++x) {
        if (!q.root_below(x)) continue;
        if (!lt.vertex_less(s_vertex, x)) continue;
        if (d == -1 || lt.vertex_less(x, d)) d = x;
    }
    if (d == -1) return StepOutcome{true, lt, s_vertex};
    if (validate_triple(lt, d)) return StepOutcome{false, lt, d};

    // Rewrite. S must be the maximal point up to which the orders coincide.
    {
        std::vector<int> region;
        for (int v = 0; v < n; ++v)
            if (q.root_below(v)) region.push_back(v);
        auto coincide_up_to = [&](int top) {
            int prev = -1;
            for (int v : region) {
                if (v != top && !lt.vertex_less(v, top)) continue;
                if (prev != -1 && !lt.vertex_less(prev, v)) return false;
                prev = v;
            }
            return true;
        };
        for (int v : region)
            CAUCHY_CHECK_MSG(!(lt.vertex_less(s_vertex, v) && coincide_up_to(v)),
                             "S is not the maximal coincidence point");
    }

    std::vector<char> in_u(static_cast<std::size_t>(n), 0);
    for (int x = 0; x < n; ++x)
        in_u[static_cast<std::size_t>(x)] = q.root_below(x) && !lt.vertex_less(d, x);
    // C = preorder successor of D within U; A = father of C; B = the child of
    // A inside U immediately to the left of C (it holds the subtree of D)
    int c = -1;
    for (int x = d + 1; x < n; ++x)
        if (in_u[static_cast<std::size_t>(x)]) {
            c = x;
            break;
        }
    CAUCHY_CHECK_MSG(c != -1, "rewrite: D has a preorder successor in U");
    int a = q.parent(c);
    CAUCHY_CHECK(a != -1 && in_u[static_cast<std::size_t>(a)]);
    int b = -1;
    for (int ch : q.children(a)) {
        if (ch == c) break;
        if (in_u[static_cast<std::size_t>(ch)]) b = ch;
    }
    CAUCHY_CHECK_MSG(b != -1, "rewrite: no U-child of A to the left of C");
    CAUCHY_CHECK_MSG(detail::is_ancestor_or_self(q, b, d), "rewrite: D must lie under B");

    // The corner B–A, C–A is the bay assigned to leaf D in U.
    {
        auto view = detail::subtree_view(q, in_u);
        for (int v = 0; v < n; ++v)
            if (in_u[static_cast<std::size_t>(v)] && v != q.root())
                CAUCHY_CHECK(q.arrow_toward_parent(v));
        auto lb = leaf_bay_pairing(view);
        bool found = false;
        for (const auto& [leaf, bay] : lb.assigned)
            if (leaf == d) {
                CAUCHY_CHECK_MSG((bay == Bay{a, b, c}), "leaf/bay pairing disagrees with B, C");
                found = true;
            }
        CAUCHY_CHECK_MSG(found, "D must be a mapped leaf of U");
    }

    int e_ba = q.edge_between(b, a);
    int e_ca = q.edge_between(c, a);
    CAUCHY_CHECK(e_ba != -1 && e_ca != -1);
    std::vector<int> strip{a, b, c};
    if (d != b) strip.push_back(d);
    auto removed = detail::removed_labels_sorted(lt, strip);

    auto rw = detail::apply_reglue(lt, strip, q.edges()[static_cast<std::size_t>(e_ba)].polygon_pair,
                                   q.edges()[static_cast<std::size_t>(e_ca)].polygon_pair);
    // canonical relabel: unlabeled vertices in preorder get the removed
    // labels in effective order
    std::vector<int> labels(static_cast<std::size_t>(rw.tree.vertex_count()));
    std::vector<int> unlabeled;
    for (int v = 0; v < rw.tree.vertex_count(); ++v) {
        if (rw.carried[static_cast<std::size_t>(v)])
            labels[static_cast<std::size_t>(v)] = *rw.carried[static_cast<std::size_t>(v)];
        else
            unlabeled.push_back(v);
    }
    CAUCHY_CHECK_MSG(unlabeled.size() == removed.size(),
                     "unlabeled vertex count must match removed label count");
    for (std::size_t i = 0; i < unlabeled.size(); ++i)
        labels[static_cast<std::size_t>(unlabeled[i])] = removed[i];

    LabeledTree out(std::move(rw.tree), std::move(labels), lt.reversed);
    int s2 = out.vertex_with_label(lt.label_of(s_vertex));
    CAUCHY_CHECK(s2 != -1);
    CAUCHY_CHECK_MSG(validate_triple(out, s2), "forward rewrite must yield an intermediate triple");
    CAUCHY_CHECK_MSG(detail::iteration_measure(out, s2) < detail::iteration_measure(lt, s_vertex),
                     "forward rewrite must shrink the termination measure");

    if (trace) {
        RewriteTrace tr;
        tr.forward = true;
        tr.s_label = lt.label_of(s_vertex);
        tr.d_label = lt.label_of(d);
        tr.a_label = lt.label_of(a);
        tr.b_label = lt.label_of(b);
        tr.c_label = lt.label_of(c);
        tr.removed_pairs = {q.edges()[static_cast<std::size_t>(e_ba)].polygon_pair,
                            q.edges()[static_cast<std::size_t>(e_ca)].polygon_pair};
        tr.added_pairs = {rw.reglued.added_first, rw.reglued.added_second};
        for (std::size_t i = 0; i < unlabeled.size(); ++i)
            tr.label_moves.emplace_back(removed[i], unlabeled[i]);
        trace(tr);
    }
    return StepOutcome{false, std::move(out), s2};
}

// One backward transformation, the exact inverse of forward_step.
inline StepOutcome backward_step(const LabeledTree& lt, int s_vertex, TraceSink trace = nullptr) {
    if (!validate_triple(lt, s_vertex))
        throw invalid_input("backward_step: not an intermediate triple");
    const auto& q = lt.tree;
    const int n = q.vertex_count();

    // S' = maximum of {x : x ⪰ R and x < S} in the effective order
    int s_prime = -1;
    for (int x = 0; x < n; ++x) {
        if (!q.root_below(x)) continue;
        if (!lt.vertex_less(x, s_vertex)) continue;
        if (s_prime == -1 || lt.vertex_less(s_prime, x)) s_prime = x;
    }
    if (s_prime == -1) {
        CAUCHY_CHECK(s_vertex == q.root());
        return StepOutcome{true, lt, s_vertex};
    }
    if (validate_triple(lt, s_prime)) return StepOutcome{false, lt, s_prime};

    // Rewrite: pick the reversed adjacent pair B ≻ D, B < D whose window
    // {x : R ⪯ x, S' < x < D} is nonempty (it then contains exactly S),
    // with D maximal.
    int d = -1;
    for (int v = 1; v < n; ++v) {
        if (q.arrow_toward_parent(v)) continue;  // need the arrow pointing into v
        int p = q.parent(v);
        if (!lt.vertex_less(p, v)) continue;      // B < D
        if (!lt.vertex_less(s_vertex, v)) continue;  // the window can only contain S
        if (d == -1 || lt.vertex_less(d, v)) d = v;
    }
    CAUCHY_CHECK_MSG(d != -1, "backward rewrite: no reversed pair with nonempty window");
    int b = q.parent(d);
    CAUCHY_CHECK_MSG(b != q.root() && q.root_below(b), "backward rewrite: R ≺ B must hold");
    int a = q.parent(b);
    CAUCHY_CHECK(a != -1);
    for (int x = 0; x < n; ++x)  // nothing of {x ⪰ R} sits strictly between S and D
        CAUCHY_CHECK_MSG(!(q.root_below(x) && lt.vertex_less(s_vertex, x) && lt.vertex_less(x, d)),
                         "the window between S and D must be empty");

    // U = {D} ∪ {x : R ⪯ x and x ≤ S}, with the edge DB flipped toward B.
    std::vector<char> in_u(static_cast<std::size_t>(n), 0);
    for (int x = 0; x < n; ++x)
        in_u[static_cast<std::size_t>(x)] =
            (x == d) || (q.root_below(x) && !lt.vertex_less(s_vertex, x));
    CAUCHY_CHECK(in_u[static_cast<std::size_t>(a)] && in_u[static_cast<std::size_t>(b)]);
    for (int v = 0; v < n; ++v)
        if (in_u[static_cast<std::size_t>(v)] && v != q.root() && v != d)
            CAUCHY_CHECK(q.arrow_toward_parent(v));
    auto view = detail::subtree_view(q, in_u);

    // Bay case: some U-child of B sits immediately left of D; its corner with
    // DB is a bay whose assigned leaf is C. Otherwise only A, B, D move.
    const auto& bch = view.children[static_cast<std::size_t>(b)];
    auto dpos = std::find(bch.begin(), bch.end(), d);
    CAUCHY_CHECK(dpos != bch.end());
    int c = -1;
    if (dpos != bch.begin()) {
        int left = *(dpos - 1);
        auto lb = leaf_bay_pairing(view);
        for (const auto& [leaf, bay] : lb.assigned)
            if (bay == Bay{b, left, d}) c = leaf;
        CAUCHY_CHECK_MSG(c != -1, "backward rewrite: bay has an assigned leaf");
    }

    int e_ba = q.edge_between(b, a);
    int e_bd = q.edge_between(b, d);
    CAUCHY_CHECK(e_ba != -1 && e_bd != -1);
    std::vector<int> strip{a, b, d};
    if (c != -1) strip.push_back(c);
    auto removed = detail::removed_labels_sorted(lt, strip);

    auto rw = detail::apply_reglue(lt, strip, q.edges()[static_cast<std::size_t>(e_ba)].polygon_pair,
                                   q.edges()[static_cast<std::size_t>(e_bd)].polygon_pair);

    // Role identification: the two restored pairs are edges sharing a vertex
    // (the new A); their other endpoints in planar order are the new B and C;
    // in the bay case the leftover unlabeled vertex is the new D, otherwise
    // the new D is the new B itself.
    const auto& q2 = rw.tree;
    auto endpoints_of_pair = [&](std::pair<int, int> pr) {
        for (const auto& e : q2.edges())
            if (e.polygon_pair == pr) return std::pair<int, int>{e.head, e.tail};
        CAUCHY_CHECK_MSG(false, "restored pair is not an edge");
        return std::pair<int, int>{-1, -1};
    };
    auto [h1, t1] = endpoints_of_pair(rw.reglued.added_first);
    auto [h2, t2] = endpoints_of_pair(rw.reglued.added_second);
    int new_a = -1, o1 = -1, o2 = -1;
    for (int x : {h1, t1})
        for (int y : {h2, t2})
            if (x == y) new_a = x;
    CAUCHY_CHECK_MSG(new_a != -1, "restored edges share the vertex A");
    o1 = h1 == new_a ? t1 : h1;
    o2 = h2 == new_a ? t2 : h2;
    CAUCHY_CHECK(q2.parent(o1) == new_a && q2.parent(o2) == new_a);
    int new_b = std::min(o1, o2);
    int new_c = std::max(o1, o2);

    std::vector<int> unlabeled;
    for (int v = 0; v < q2.vertex_count(); ++v)
        if (!rw.carried[static_cast<std::size_t>(v)]) unlabeled.push_back(v);
    CAUCHY_CHECK(unlabeled.size() == removed.size());
    auto is_unlabeled = [&](int v) {
        return std::find(unlabeled.begin(), unlabeled.end(), v) != unlabeled.end();
    };
    CAUCHY_CHECK_MSG(is_unlabeled(new_a) && is_unlabeled(new_b) && is_unlabeled(new_c),
                     "role vertices must be the freshly reglued classes");

    std::vector<int> labels(static_cast<std::size_t>(q2.vertex_count()));
    for (int v = 0; v < q2.vertex_count(); ++v)
        if (rw.carried[static_cast<std::size_t>(v)])
            labels[static_cast<std::size_t>(v)] = *rw.carried[static_cast<std::size_t>(v)];
    if (c != -1) {
        int new_d = -1;
        for (int v : unlabeled)
            if (v != new_a && v != new_b && v != new_c) new_d = v;
        CAUCHY_CHECK_MSG(new_d != -1, "bay case leaves a fourth unlabeled vertex");
        CAUCHY_CHECK_MSG(q2.members(new_d) == q.members(c), "the old C survives as the new D");
        labels[static_cast<std::size_t>(new_a)] = removed[0];
        labels[static_cast<std::size_t>(new_b)] = removed[1];
        labels[static_cast<std::size_t>(new_c)] = removed[2];
        labels[static_cast<std::size_t>(new_d)] = removed[3];
    } else {
        CAUCHY_CHECK(removed.size() == 3);
        labels[static_cast<std::size_t>(new_a)] = removed[0];
        labels[static_cast<std::size_t>(new_c)] = removed[1];
        labels[static_cast<std::size_t>(new_b)] = removed[2];  // new B doubles as the new D
    }

    LabeledTree out(rw.tree, std::move(labels), lt.reversed);
    int s2 = out.vertex_with_label(lt.label_of(s_vertex));
    CAUCHY_CHECK(s2 != -1);
    CAUCHY_CHECK_MSG(validate_triple(out, s2), "backward rewrite must yield an intermediate triple");
    CAUCHY_CHECK_MSG(detail::iteration_measure(out, s2) > detail::iteration_measure(lt, s_vertex),
                     "backward rewrite must grow the termination measure");

    if (trace) {
        RewriteTrace tr;
        tr.forward = false;
        tr.s_label = lt.label_of(s_vertex);
        tr.d_label = lt.label_of(d);
        tr.a_label = lt.label_of(a);
        tr.b_label = lt.label_of(b);
        if (c != -1) tr.c_label = lt.label_of(c);
        tr.removed_pairs = {q.edges()[static_cast<std::size_t>(e_ba)].polygon_pair,
                            q.edges()[static_cast<std::size_t>(e_bd)].polygon_pair};
        tr.added_pairs = {rw.reglued.added_first, rw.reglued.added_second};
        if (c != -1) {
            tr.label_moves = {{removed[0], new_a}, {removed[1], new_b}, {removed[2], new_c}};
            for (int v : unlabeled)
                if (v != new_a && v != new_b && v != new_c)
                    tr.label_moves.emplace_back(removed[3], v);
        } else {
            tr.label_moves = {{removed[0], new_a}, {removed[1], new_c}, {removed[2], new_b}};
        }
        trace(tr);
    }
    return StepOutcome{false, std::move(out), s2};
}

namespace detail {

// Labels of {x : R ⪯ x and x ≤ S}, the monotone region of a run.
inline std::vector<int> region_label_set(const LabeledTree& t, int s_vertex) {
    std::vector<int> out;
    for (int v = 0; v < t.tree.vertex_count(); ++v)
        if (t.tree.root_below(v) && !t.vertex_less(s_vertex, v)) out.push_back(t.label_of(v));
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<int> root_below_label_set(const LabeledTree& t) {
    std::vector<int> out;
    for (int v = 0; v < t.tree.vertex_count(); ++v)
        if (t.tree.root_below(v)) out.push_back(t.label_of(v));
    std::sort(out.begin(), out.end());
    return out;
}

// U ⊆ U'; every new element above every old one, in the effective order and
// in the preorders of both trees; {x ⪰ R} shrinks.
inline void check_region_monotone(const LabeledTree& before, int s_before,
                                  const LabeledTree& after, int s_after) {
    auto u_old = region_label_set(before, s_before);
    auto u_new = region_label_set(after, s_after);
    CAUCHY_CHECK_MSG(std::includes(u_new.begin(), u_new.end(), u_old.begin(), u_old.end()),
                     "region monotonicity: U ⊆ U'");
    std::vector<int> fresh;
    std::set_difference(u_new.begin(), u_new.end(), u_old.begin(), u_old.end(),
                        std::back_inserter(fresh));
    for (int nl : fresh)
        for (int ol : u_old) {
            CAUCHY_CHECK_MSG(before.label_less(ol, nl), "region monotonicity: new element above old");
            for (const LabeledTree* t : {&before, &after})
                CAUCHY_CHECK_MSG(t->vertex_with_label(ol) < t->vertex_with_label(nl),
                                 "region monotonicity: new element later in preorder");
        }
    auto rb_old = root_below_label_set(before);
    auto rb_new = root_below_label_set(after);
    CAUCHY_CHECK_MSG(std::includes(rb_old.begin(), rb_old.end(), rb_new.begin(), rb_new.end()),
                     "region monotonicity: {x ⪰ R} shrinks");
}

}  // namespace detail

// Iterate the forward transformation from S = R to the endpoint: maps set (A)
// onto set (B). Internal invariants are checked at every step.
inline LabeledTree small_bijection(LabeledTree t, TraceSink trace = nullptr,
                                   StepObserver observer = nullptr) {
    if (!is_catalan(t.tree.epsilon()))
        throw invalid_input("small_bijection: sequence is not Catalan");
    if (!order_compatible(t))
        throw invalid_input("small_bijection: order not compatible with orientations");
    auto label_multiset = t.labels;
    std::sort(label_multiset.begin(), label_multiset.end());
    int s = t.tree.root();
    if (observer) observer(t, s);
    while (true) {
        auto out = forward_step(t, s, trace);
        if (out.done) break;
        CAUCHY_CHECK_MSG(detail::iteration_measure(out.tree, out.s_vertex) <
                             detail::iteration_measure(t, s),
                         "termination measure must strictly decrease");
        detail::check_region_monotone(t, s, out.tree, out.s_vertex);
        t = std::move(out.tree);
        s = out.s_vertex;
        if (observer) observer(t, s);
    }
    CAUCHY_CHECK_MSG(in_set_b(t), "small_bijection must land in set (B)");
    auto final_multiset = t.labels;
    std::sort(final_multiset.begin(), final_multiset.end());
    CAUCHY_CHECK_MSG(final_multiset == label_multiset, "label multiset must be preserved");
    return t;
}

// Iterate the backward transformation from S = max{x ⪰ R} down to S = R:
// maps set (B) onto set (A), inverting small_bijection.
inline LabeledTree small_bijection_inverse(LabeledTree t, TraceSink trace = nullptr,
                                           StepObserver observer = nullptr) {
    if (!is_catalan(t.tree.epsilon()))
        throw invalid_input("small_bijection_inverse: sequence is not Catalan");
    if (!in_set_b(t)) throw invalid_input("small_bijection_inverse: input not in set (B)");
    auto label_multiset = t.labels;
    std::sort(label_multiset.begin(), label_multiset.end());
    int s = -1;
    for (int v = 0; v < t.tree.vertex_count(); ++v)
        if (t.tree.root_below(v) && (s == -1 || t.vertex_less(s, v))) s = v;
    CAUCHY_CHECK(s != -1);
    if (observer) observer(t, s);
    while (true) {
        auto out = backward_step(t, s, trace);
        if (out.done) break;
        CAUCHY_CHECK_MSG(detail::iteration_measure(out.tree, out.s_vertex) >
                             detail::iteration_measure(t, s),
                         "termination measure must strictly increase");
        detail::check_region_monotone(out.tree, out.s_vertex, t, s);
        t = std::move(out.tree);
        s = out.s_vertex;
        if (observer) observer(t, s);
    }
    CAUCHY_CHECK_MSG(s == t.tree.root(), "backward iteration ends at S = R");
    CAUCHY_CHECK_MSG(in_set_a(t), "small_bijection_inverse must land in set (A)");
    auto final_multiset = t.labels;
    std::sort(final_multiset.begin(), final_multiset.end());
    CAUCHY_CHECK_MSG(final_multiset == label_multiset, "label multiset must be preserved");
    return t;
}

}  // namespace cauchy
