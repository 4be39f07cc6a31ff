#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "cauchy/errors.hpp"

namespace cauchy {

// The +/-1 sequence encoding an oriented polygon: sign(i) = +1 means the
// arrow on polygon edge e_i points from v_{i+1} to v_i. Indices are 1-based
// throughout, matching the usual notation.
class SignSequence {
public:
    SignSequence() = default;
    explicit SignSequence(std::vector<int> entries) : entries_(std::move(entries)) {
        for (int e : entries_)
            if (e != 1 && e != -1) throw invalid_input("sign sequence entries must be +1 or -1");
    }

    int size() const { return static_cast<int>(entries_.size()); }
    int sign(int i) const {  // 1-based
        CAUCHY_CHECK(i >= 1 && i <= size());
        return entries_[static_cast<std::size_t>(i - 1)];
    }
    const std::vector<int>& entries() const { return entries_; }

    SignSequence negated() const {
        std::vector<int> e = entries_;
        for (int& x : e) x = -x;
        return SignSequence(std::move(e));
    }

    friend bool operator==(const SignSequence& a, const SignSequence& b) {
        return a.entries_ == b.entries_;
    }
    friend bool operator!=(const SignSequence& a, const SignSequence& b) { return !(a == b); }

    std::string to_string() const {
        std::string s = "(";
        for (int i = 0; i < size(); ++i) {
            if (i) s += ",";
            s += entries_[static_cast<std::size_t>(i)] > 0 ? "+1" : "-1";
        }
        return s + ")";
    }

private:
    std::vector<int> entries_;
};

// Total sum zero and every prefix sum nonnegative. The empty sequence counts.
inline bool is_catalan(const SignSequence& s) {
    int sum = 0;
    for (int e : s.entries()) {
        sum += e;
        if (sum < 0) return false;
    }
    return sum == 0;
}

// The weakly increasing block lengths l_1 <= ... <= l_m of the generalized
// Cauchy identity; L = l_1 + ... + l_m + 1.
class CauchyParams {
public:
    explicit CauchyParams(std::vector<int> lengths) : lengths_(std::move(lengths)) {
        if (lengths_.empty()) throw invalid_input("params: need at least one length");
        for (std::size_t i = 0; i < lengths_.size(); ++i) {
            if (lengths_[i] < 1) throw invalid_input("params: lengths must be >= 1");
            if (i > 0 && lengths_[i] < lengths_[i - 1])
                throw invalid_input("params: lengths must be weakly increasing");
        }
    }

    int m() const { return static_cast<int>(lengths_.size()); }
    int length(int i) const {  // l_i, 1-based
        CAUCHY_CHECK(i >= 1 && i <= m());
        return lengths_[static_cast<std::size_t>(i - 1)];
    }
    int big_l() const {  // L
        return std::accumulate(lengths_.begin(), lengths_.end(), 0) + 1;
    }
    const std::vector<int>& lengths() const { return lengths_; }
    bool all_equal() const {
        for (int l : lengths_)
            if (l != lengths_[0]) return false;
        return true;
    }

private:
    std::vector<int> lengths_;
};

// The sequence epsilon_i: 2i sign-alternating blocks of sizes
// l_i, l_{i-1}, ..., l_1, l_1, ..., l_{i-1}, l_i starting with +1.
inline SignSequence epsilon_i(const CauchyParams& params, int i) {
    if (i < 1 || i > params.m()) throw invalid_input("epsilon_i: index out of range");
    std::vector<int> block_sizes;
    for (int j = i; j >= 1; --j) block_sizes.push_back(params.length(j));
    for (int j = 1; j <= i; ++j) block_sizes.push_back(params.length(j));
    std::vector<int> entries;
    int sign = 1;
    for (int size : block_sizes) {
        entries.insert(entries.end(), static_cast<std::size_t>(size), sign);
        sign = -sign;
    }
    SignSequence result{std::move(entries)};
    CAUCHY_CHECK(is_catalan(result));
    return result;
}

}  // namespace cauchy
