#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cauchy/errors.hpp"
#include "cauchy/quotient_tree.hpp"

namespace cauchy {

// A quotient tree with injective integer labels and a comparator-direction
// flag: the effective order compares labels ascending normally, descending
// when `reversed` is set. All order-sensitive bijection code reads labels
// only through this effective order.
struct LabeledTree {
    QuotientTree tree;
    std::vector<int> labels;  // by vertex id
    bool reversed = false;

    LabeledTree(QuotientTree t, std::vector<int> lab, bool rev = false)
        : tree(std::move(t)), labels(std::move(lab)), reversed(rev) {
        if (static_cast<int>(labels.size()) != tree.vertex_count())
            throw invalid_input("labeled tree: one label per vertex required");
        auto sorted = labels;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw invalid_input("labeled tree: labels must be injective");
    }

    bool label_less(int a, int b) const { return reversed ? b < a : a < b; }
    bool vertex_less(int v, int w) const {
        return label_less(labels[static_cast<std::size_t>(v)],
                          labels[static_cast<std::size_t>(w)]);
    }
    int label_of(int v) const { return labels[static_cast<std::size_t>(v)]; }
    int vertex_with_label(int label) const {
        for (int v = 0; v < tree.vertex_count(); ++v)
            if (labels[static_cast<std::size_t>(v)] == label) return v;
        return -1;
    }
};

// Set (A)/(alpha) body: the label order respects every arrow, head before tail.
inline bool order_compatible(const LabeledTree& t) {
    for (const auto& e : t.tree.edges())
        if (!t.vertex_less(e.head, e.tail)) return false;
    return true;
}

inline bool in_set_a(const LabeledTree& t) {
    return is_catalan(t.tree.epsilon()) && order_compatible(t);
}

// Set (B): the effective order and the preorder coincide on {x : R ⪯ x}, and
// among vertices with R ⋠ x the order still respects reachability.
inline bool in_set_b(const LabeledTree& t) {
    const int n = t.tree.vertex_count();
    int prev = -1;
    for (int v = 0; v < n; ++v) {  // ids are preorder ranks
        if (!t.tree.root_below(v)) continue;
        if (prev != -1 && !t.vertex_less(prev, v)) return false;
        prev = v;
    }
    for (int v = 0; v < n; ++v) {
        if (t.tree.root_below(v)) continue;
        for (int w = 0; w < n; ++w) {
            if (w == v || t.tree.root_below(w)) continue;
            if (t.tree.reaches(v, w) && !t.vertex_less(v, w)) return false;
        }
    }
    return true;
}

// Labels per polygon-vertex index (1..k), std::nullopt where the class is
// being stripped; survives repartitioning of the classes.
inline std::vector<std::optional<int>> expand_labels(const LabeledTree& t,
                                                     const std::vector<char>& strip) {
    const int k = t.tree.epsilon().size();
    std::vector<std::optional<int>> by_index(static_cast<std::size_t>(k) + 1);
    for (int v = 0; v < t.tree.vertex_count(); ++v) {
        if (strip[static_cast<std::size_t>(v)]) continue;
        for (int idx : t.tree.members(v))
            by_index[static_cast<std::size_t>(idx)] = t.label_of(v);
    }
    return by_index;
}

// Collapse per-index labels onto the classes of a (re-glued) tree. Every
// class must carry at most one distinct label value across its members.
inline std::vector<std::optional<int>> collapse_labels(
    const QuotientTree& tree, const std::vector<std::optional<int>>& by_index) {
    std::vector<std::optional<int>> per_vertex(static_cast<std::size_t>(tree.vertex_count()));
    for (int v = 0; v < tree.vertex_count(); ++v) {
        for (int idx : tree.members(v)) {
            const auto& lbl = by_index[static_cast<std::size_t>(idx)];
            if (!lbl) continue;
            auto& slot = per_vertex[static_cast<std::size_t>(v)];
            CAUCHY_CHECK_MSG(!slot || *slot == *lbl, "class carries conflicting labels");
            slot = lbl;
        }
        if (per_vertex[static_cast<std::size_t>(v)])  // labeled classes survive whole
            for (int idx : tree.members(v))
                CAUCHY_CHECK_MSG(by_index[static_cast<std::size_t>(idx)].has_value(),
                                 "labeled class mixed with stripped members");
    }
    return per_vertex;
}

}  // namespace cauchy
