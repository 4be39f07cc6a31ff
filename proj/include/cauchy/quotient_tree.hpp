#pragma once

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "cauchy/errors.hpp"
#include "cauchy/pairing.hpp"
#include "cauchy/sign_sequence.hpp"

namespace cauchy {

// The planar rooted oriented tree obtained by gluing paired polygon edges:
// pair {i,j} identifies v_i with v_{j+1} and v_{i+1} with v_j (indices mod k).
// Vertex ids are preorder ranks: classes sorted by minimal polygon-vertex
// member, which is the first-visit time of the journey v_1,...,v_k,v_1.
// The root (class of v_1) is therefore always id 0.
class QuotientTree {
public:
    struct Edge {
        std::pair<int, int> polygon_pair;  // the sigma pair {i,j}, i < j
        int head = -1;                     // arrow destination; head comes before tail in every
        int tail = -1;                     // compatible order (head precedes tail under the arrows)
    };

    QuotientTree(SignSequence s, Pairing sigma) : eps_(std::move(s)), sigma_(std::move(sigma)) {
        const int k = eps_.size();
        if (k % 2 != 0) throw invalid_input("quotient tree: sequence length must be even");
        if (!sigma_.is_perfect_over(k))
            throw invalid_input("quotient tree: pairing is not a perfect matching of {1..k}");
        if (!is_compatible(eps_, sigma_)) {
            for (const auto& [a, b] : sigma_.pairs())
                if (eps_.sign(a) + eps_.sign(b) != 0)
                    throw invalid_input("quotient tree: pair {" + std::to_string(a) + "," +
                                        std::to_string(b) + "} violates compatibility (equal signs)");
        }
        if (!is_non_crossing(sigma_))
            throw invalid_input("quotient tree: crossing pairing does not yield a tree");

        if (k == 0) {  // degenerate polygon: the lone distinguished vertex
            members_ = {{1}};
            vertex_of_ = {-1, 0};
            parent_ = {-1};
            children_ = {{}};
            parent_edge_ = {-1};
            root_below_ = {true};
            return;
        }

        // Union-find over polygon vertices 1..k.
        std::vector<int> uf(static_cast<std::size_t>(k) + 1);
        std::iota(uf.begin(), uf.end(), 0);
        auto find = [&uf](int x) {
            while (uf[static_cast<std::size_t>(x)] != x) {
                uf[static_cast<std::size_t>(x)] =
                    uf[static_cast<std::size_t>(uf[static_cast<std::size_t>(x)])];
                x = uf[static_cast<std::size_t>(x)];
            }
            return x;
        };
        auto unite = [&](int a, int b) {
            a = find(a);
            b = find(b);
            if (a != b) uf[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
        };
        auto wrap = [k](int v) { return (v - 1) % k + 1; };
        for (const auto& [i, j] : sigma_.pairs()) {
            unite(i, wrap(j + 1));
            unite(wrap(i + 1), j);
        }

        // Classes sorted by minimal member = preorder.
        vertex_of_.assign(static_cast<std::size_t>(k) + 1, -1);
        for (int v = 1; v <= k; ++v) {
            int rep = find(v);
            if (vertex_of_[static_cast<std::size_t>(rep)] == -1) {
                vertex_of_[static_cast<std::size_t>(rep)] = static_cast<int>(members_.size());
                members_.push_back({});
            }
            int id = vertex_of_[static_cast<std::size_t>(rep)];
            members_[static_cast<std::size_t>(id)].push_back(v);
            vertex_of_[static_cast<std::size_t>(v)] = id;
        }
        CAUCHY_CHECK_MSG(vertex_count() == k / 2 + 1,
                         "quotient of a non-crossing pairing must be a tree");

        // One tree edge per pair, consistently oriented from both polygon edges.
        for (const auto& [i, j] : sigma_.pairs()) {
            Edge e;
            e.polygon_pair = {i, j};
            int a = vertex_of(i);
            int b = vertex_of(wrap(i + 1));
            CAUCHY_CHECK(vertex_of(wrap(j + 1)) == a && vertex_of(j) == b);
            if (eps_.sign(i) > 0) {  // arrow points from v_{i+1} to v_i
                e.head = a;
                e.tail = b;
            } else {
                e.head = b;
                e.tail = a;
            }
            edges_.push_back(e);
        }

        // Rooted structure; children in preorder = planar order.
        const int n = vertex_count();
        std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(n));
        for (std::size_t ei = 0; ei < edges_.size(); ++ei) {
            adj[static_cast<std::size_t>(edges_[ei].head)].emplace_back(edges_[ei].tail,
                                                                        static_cast<int>(ei));
            adj[static_cast<std::size_t>(edges_[ei].tail)].emplace_back(edges_[ei].head,
                                                                        static_cast<int>(ei));
        }
        parent_.assign(static_cast<std::size_t>(n), -1);
        parent_edge_.assign(static_cast<std::size_t>(n), -1);
        children_.assign(static_cast<std::size_t>(n), {});
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            auto& nb = adj[static_cast<std::size_t>(v)];
            std::sort(nb.begin(), nb.end());
            for (auto [w, ei] : nb) {
                if (seen[static_cast<std::size_t>(w)]) continue;
                seen[static_cast<std::size_t>(w)] = 1;
                parent_[static_cast<std::size_t>(w)] = v;
                parent_edge_[static_cast<std::size_t>(w)] = ei;
                children_[static_cast<std::size_t>(v)].push_back(w);
                stack.push_back(w);
            }
        }
        CAUCHY_CHECK_MSG(std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; }),
                         "quotient tree must be connected");
        for (auto& ch : children_) std::sort(ch.begin(), ch.end());

        root_below_.assign(static_cast<std::size_t>(n), false);
        root_below_[0] = true;
        for (int v = 1; v < n; ++v) {  // ids are preorder, so parents precede children
            int p = parent_[static_cast<std::size_t>(v)];
            CAUCHY_CHECK(p >= 0 && p < v);
            root_below_[static_cast<std::size_t>(v)] =
                root_below_[static_cast<std::size_t>(p)] && arrow_toward_parent(v);
        }
    }

    int vertex_count() const { return static_cast<int>(members_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int root() const { return 0; }
    const SignSequence& epsilon() const { return eps_; }
    const Pairing& sigma() const { return sigma_; }

    const std::vector<int>& members(int v) const {
        return members_[static_cast<std::size_t>(v)];
    }
    int min_member(int v) const { return members(v).front(); }
    int vertex_of(int polygon_vertex) const {  // 1..k; k+1 folds to 1
        int k = eps_.size();
        if (k > 0) polygon_vertex = (polygon_vertex - 1) % k + 1;
        return vertex_of_[static_cast<std::size_t>(polygon_vertex)];
    }

    const std::vector<Edge>& edges() const { return edges_; }
    int parent(int v) const { return parent_[static_cast<std::size_t>(v)]; }
    const std::vector<int>& children(int v) const {
        return children_[static_cast<std::size_t>(v)];
    }
    int parent_edge(int v) const { return parent_edge_[static_cast<std::size_t>(v)]; }

    // Is v's parent edge oriented v -> parent (i.e. parent ≺ v)?
    bool arrow_toward_parent(int v) const {
        int ei = parent_edge(v);
        CAUCHY_CHECK(ei >= 0);
        return edges_[static_cast<std::size_t>(ei)].head == parent(v);
    }

    // R ⪯ v: every edge on the path from v to the root points root-ward.
    bool root_below(int v) const { return root_below_[static_cast<std::size_t>(v)]; }

    // x ≺ y or x == y: one can travel from y to x following the arrows.
    bool reaches(int x, int y) const {
        if (x < 0 || y < 0 || x >= vertex_count() || y >= vertex_count())
            throw invalid_input("reaches: unknown vertex");
        if (x == y) return true;
        // walk the unique tree path from y to x, checking arrow alignment
        std::vector<int> up_x, up_y;
        for (int v = x; v != -1; v = parent(v)) up_x.push_back(v);
        for (int v = y; v != -1; v = parent(v)) up_y.push_back(v);
        std::vector<char> on_x(static_cast<std::size_t>(vertex_count()), 0);
        for (int v : up_x) on_x[static_cast<std::size_t>(v)] = 1;
        int meet = y;
        while (!on_x[static_cast<std::size_t>(meet)]) {
            // ascending from y: edge must allow travel y-side -> parent
            if (!arrow_toward_parent(meet)) return false;
            meet = parent(meet);
        }
        // descending from meet to x: each edge must allow travel parent -> child
        for (int v = x; v != meet; v = parent(v))
            if (arrow_toward_parent(v)) return false;
        return true;
    }

    int edge_between(int u, int v) const {
        if (parent(u) == v) return parent_edge(u);
        if (parent(v) == u) return parent_edge(v);
        return -1;
    }

    // The classes visited by the journey v_1, v_2, ..., v_k, v_1.
    std::vector<int> journey() const {
        std::vector<int> j;
        int k = eps_.size();
        for (int v = 1; v <= k + 1; ++v) j.push_back(vertex_of(v));
        if (k == 0) j.push_back(0);
        return j;
    }

private:
    SignSequence eps_;
    Pairing sigma_;
    std::vector<std::vector<int>> members_;
    std::vector<int> vertex_of_;  // by polygon vertex (and transiently by uf rep)
    std::vector<Edge> edges_;
    std::vector<int> parent_;
    std::vector<int> parent_edge_;
    std::vector<std::vector<int>> children_;
    std::vector<bool> root_below_;
};

// A rooted planar tree in which every arrow points toward the root; the
// shape data needed for the leaf/bay pairing.
struct OrientedPlanarTree {
    int root = 0;
    std::vector<int> parent;                 // -1 at root
    std::vector<std::vector<int>> children;  // planar order
    int vertex_count() const { return static_cast<int>(parent.size()); }
};

// A bay: the corner at `vertex` between the edges to two planar-adjacent
// children, both of whose arrows point at `vertex`.
struct Bay {
    int vertex = -1;
    int left_child = -1;
    int right_child = -1;
    friend bool operator==(const Bay& a, const Bay& b) {
        return a.vertex == b.vertex && a.left_child == b.left_child &&
               a.right_child == b.right_child;
    }
};

struct LeafBayPairing {
    std::vector<std::pair<int, Bay>> assigned;  // (leaf l_t, bay b_t) in journey order
    int last_leaf = -1;                         // l_{p+1}, unmapped
};

// Journey order interleaves leaves and bays as l_1,b_1,l_2,b_2,...,l_p,b_p,l_{p+1};
// the pairing maps l_t to b_t, the first bay visited after leaving l_t.
inline LeafBayPairing leaf_bay_pairing(const OrientedPlanarTree& u) {
    if (u.vertex_count() < 2)
        throw invalid_input("leaf_bay_pairing: tree must have at least two vertices");
    std::vector<int> leaves;
    std::vector<Bay> bays;
    struct Frame {  // explicit DFS to keep journey order

        int v;
        std::size_t next_child = 0;
    };
    std::vector<Frame> frames{{u.root, 0}};
    while (!frames.empty()) {
        Frame& f = frames.back();
        const auto& ch = u.children[static_cast<std::size_t>(f.v)];
        if (ch.empty() && f.v != u.root) leaves.push_back(f.v);
        if (f.next_child >= ch.size()) {
            frames.pop_back();
            continue;
        }
        if (f.next_child > 0)
            bays.push_back(Bay{f.v, ch[f.next_child - 1], ch[f.next_child]});
        int c = ch[f.next_child++];
        frames.push_back(Frame{c, 0});
    }
    CAUCHY_CHECK_MSG(leaves.size() == bays.size() + 1,
                     "leaf/bay alternation broken; tree not all-arrows-toward-root?");
    LeafBayPairing out;
    for (std::size_t t = 0; t < bays.size(); ++t) out.assigned.emplace_back(leaves[t], bays[t]);
    out.last_leaf = leaves.back();
    return out;
}

// View of a quotient-tree restricted to an all-arrows-toward-root subtree.
inline OrientedPlanarTree toward_root_view(const QuotientTree& t) {
    OrientedPlanarTree u;
    u.root = t.root();
    u.parent.assign(static_cast<std::size_t>(t.vertex_count()), -1);
    u.children.assign(static_cast<std::size_t>(t.vertex_count()), {});
    for (int v = 0; v < t.vertex_count(); ++v) {
        if (v != t.root() && !t.arrow_toward_parent(v))
            throw invalid_input("leaf_bay_pairing: an edge does not point toward the root");
        u.parent[static_cast<std::size_t>(v)] = t.parent(v);
        u.children[static_cast<std::size_t>(v)] = t.children(v);
    }
    return u;
}

inline LeafBayPairing leaf_bay_pairing(const QuotientTree& t) {
    return leaf_bay_pairing(toward_root_view(t));
}

// Deterministic DOT rendering; the doubled glued edges are drawn as single
// directed edges following the arrows, the root doubly circled.
inline std::string export_dot(const QuotientTree& t,
                              const std::vector<int>* labels = nullptr) {
    std::ostringstream os;
    os << "digraph quotient_tree {\n";
    os << "  node [shape=circle];\n";
    for (int v = 0; v < t.vertex_count(); ++v) {
        os << "  n" << v << " [label=\"";
        const auto& mem = t.members(v);
        for (std::size_t i = 0; i < mem.size(); ++i) {
            if (i) os << "=";
            os << "v" << mem[i];
        }
        if (labels) os << " : " << (*labels)[static_cast<std::size_t>(v)];
        os << "\"";
        if (v == t.root()) os << " shape=doublecircle";
        os << "];\n";
    }
    for (const auto& e : t.edges()) {
        os << "  n" << e.tail << " -> n" << e.head << " [label=\"e" << e.polygon_pair.first
           << "=e" << e.polygon_pair.second << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace cauchy
