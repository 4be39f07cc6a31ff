#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cauchy/errors.hpp"
#include "cauchy/sign_sequence.hpp"

namespace cauchy {

// A set of disjoint unordered index pairs over {1..k}. Stored canonically
// (each pair low<high, pairs sorted by low element), so equality and
// ordering are structural.
class Pairing {
public:
    Pairing() = default;
    explicit Pairing(std::vector<std::pair<int, int>> pairs) : pairs_(std::move(pairs)) {
        for (auto& [a, b] : pairs_) {
            if (a == b) throw invalid_input("pairing: pair with equal endpoints");
            if (a > b) std::swap(a, b);
            if (a < 1) throw invalid_input("pairing: indices must be >= 1");
        }
        std::sort(pairs_.begin(), pairs_.end());
        std::vector<int> seen;
        for (auto& [a, b] : pairs_) {
            seen.push_back(a);
            seen.push_back(b);
        }
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
            throw invalid_input("pairing: pairs are not disjoint");
    }

    int pair_count() const { return static_cast<int>(pairs_.size()); }
    const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }

    bool contains(std::pair<int, int> p) const {
        if (p.first > p.second) std::swap(p.first, p.second);
        return std::binary_search(pairs_.begin(), pairs_.end(), p);
    }
    std::optional<int> partner(int i) const {
        for (const auto& [a, b] : pairs_) {
            if (a == i) return b;
            if (b == i) return a;
        }
        return std::nullopt;
    }
    bool covers(int i) const { return partner(i).has_value(); }

    // Union of pairs equals {1..k}?
    bool is_perfect_over(int k) const {
        if (2 * pair_count() != k) return false;
        for (const auto& [a, b] : pairs_)
            if (b > k) return false;
        return true;
    }

    Pairing without(const std::vector<std::pair<int, int>>& removed) const {
        std::vector<std::pair<int, int>> kept;
        for (auto p : pairs_) {
            bool drop = false;
            for (auto r : removed) {
                if (r.first > r.second) std::swap(r.first, r.second);
                if (r == p) drop = true;
            }
            if (!drop) kept.push_back(p);
        }
        if (kept.size() + removed.size() != pairs_.size())
            throw invalid_input("pairing: pair to remove not present");
        return Pairing(std::move(kept));
    }
    Pairing with(const std::vector<std::pair<int, int>>& added) const {
        std::vector<std::pair<int, int>> all = pairs_;
        all.insert(all.end(), added.begin(), added.end());
        return Pairing(std::move(all));
    }
    Pairing shifted(int delta) const {
        std::vector<std::pair<int, int>> moved;
        moved.reserve(pairs_.size());
        for (auto [a, b] : pairs_) moved.emplace_back(a + delta, b + delta);
        return Pairing(std::move(moved));
    }

    friend bool operator==(const Pairing& a, const Pairing& b) { return a.pairs_ == b.pairs_; }
    friend bool operator!=(const Pairing& a, const Pairing& b) { return !(a == b); }
    friend bool operator<(const Pairing& a, const Pairing& b) { return a.pairs_ < b.pairs_; }

    std::string to_string() const {
        std::string s = "{";
        for (std::size_t i = 0; i < pairs_.size(); ++i) {
            if (i) s += ",";
            s += "{" + std::to_string(pairs_[i].first) + "," + std::to_string(pairs_[i].second) + "}";
        }
        return s + "}";
    }

private:
    std::vector<std::pair<int, int>> pairs_;
};

// Opposite signs within every pair.
inline bool is_compatible(const SignSequence& s, const Pairing& p) {
    for (const auto& [a, b] : p.pairs()) {
        if (b > s.size()) return false;
        if (s.sign(a) + s.sign(b) != 0) return false;
    }
    return true;
}

// No indices p<q<r<s with {p,r} and {q,s} both present.
inline bool is_non_crossing(const Pairing& p) {
    const auto& ps = p.pairs();
    for (std::size_t i = 0; i < ps.size(); ++i)
        for (std::size_t j = i + 1; j < ps.size(); ++j) {
            auto [a, b] = ps[i];
            auto [c, d] = ps[j];
            bool c_inside = a < c && c < b;
            bool d_inside = a < d && d < b;
            if (c_inside != d_inside) return false;
        }
    return true;
}

// Bracket-match a Catalan sequence: +1 opens, -1 closes. The unique
// compatible pairing whose quotient tree has the root below every vertex.
inline Pairing catalan_pairing(const SignSequence& s) {
    if (!is_catalan(s)) throw invalid_input("catalan_pairing: sequence is not Catalan");
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> stack;
    for (int i = 1; i <= s.size(); ++i) {
        if (s.sign(i) > 0) {
            stack.push_back(i);
        } else {
            CAUCHY_CHECK(!stack.empty());
            pairs.emplace_back(stack.back(), i);
            stack.pop_back();
        }
    }
    CAUCHY_CHECK(stack.empty());
    return Pairing(std::move(pairs));
}

// Extend `partial` by bracket-matching the unpaired positions in index order.
inline Pairing catalan_complete(const SignSequence& s, const Pairing& partial) {
    std::vector<int> free_positions;
    for (int i = 1; i <= s.size(); ++i)
        if (!partial.covers(i)) free_positions.push_back(i);
    std::vector<int> sub;
    sub.reserve(free_positions.size());
    for (int i : free_positions) sub.push_back(s.sign(i));
    SignSequence restricted{std::move(sub)};
    if (!is_catalan(restricted))
        throw invalid_input("catalan_complete: unpaired subsequence is not Catalan");
    Pairing matched = catalan_pairing(restricted);
    std::vector<std::pair<int, int>> lifted;
    for (auto [a, b] : matched.pairs())
        lifted.emplace_back(free_positions[static_cast<std::size_t>(a - 1)],
                            free_positions[static_cast<std::size_t>(b - 1)]);
    return partial.with(lifted);
}

namespace detail {
// Enumerate over a contiguous index interval: match the first position with
// some compatible partner at odd offset, recurse on the enclosed and the
// trailing interval. The split makes crossings impossible by construction.
inline std::vector<std::vector<std::pair<int, int>>> enumerate_nc_rec(
    const SignSequence& s, const std::vector<int>& positions) {
    if (positions.empty()) return {{}};
    std::vector<std::vector<std::pair<int, int>>> out;
    int first = positions.front();
    for (std::size_t j = 1; j < positions.size(); j += 2) {
        int cand = positions[j];
        if (s.sign(first) + s.sign(cand) != 0) continue;
        std::vector<int> inside(positions.begin() + 1, positions.begin() + static_cast<long>(j));
        std::vector<int> outside(positions.begin() + static_cast<long>(j) + 1, positions.end());
        auto inner = enumerate_nc_rec(s, inside);
        if (inner.empty()) continue;
        auto outer = enumerate_nc_rec(s, outside);
        for (const auto& in : inner)
            for (const auto& ou : outer) {
                std::vector<std::pair<int, int>> merged;
                merged.reserve(1 + in.size() + ou.size());
                merged.emplace_back(first, cand);
                merged.insert(merged.end(), in.begin(), in.end());
                merged.insert(merged.end(), ou.begin(), ou.end());
                out.push_back(std::move(merged));
            }
    }
    return out;
}
}  // namespace detail

// All pairings compatible with s and non-crossing, in lexicographic order of
// their canonical pair lists. Odd length yields the empty list.
inline std::vector<Pairing> enumerate_noncrossing_pairings(const SignSequence& s) {
    if (s.size() % 2 != 0) return {};
    std::vector<int> positions(static_cast<std::size_t>(s.size()));
    for (int i = 0; i < s.size(); ++i) positions[static_cast<std::size_t>(i)] = i + 1;
    std::vector<Pairing> out;
    for (auto& pairs : detail::enumerate_nc_rec(s, positions)) out.emplace_back(std::move(pairs));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace cauchy
