#pragma once

#include <utility>
#include <vector>

#include "cauchy/errors.hpp"
#include "cauchy/pairing.hpp"
#include "cauchy/sign_sequence.hpp"

namespace cauchy {

struct RegluedPairs {
    Pairing pairing;
    std::pair<int, int> added_first;   // the two pairs that replaced e1, e2,
    std::pair<int, int> added_second;  // in canonical (sorted) order
};

// Unglue the two tree edges given by sigma pairs e1, e2 and reglue their four
// polygon edges in the unique other sign-compatible way. An involution. The
// result can cross; callers validate tree-ness.
inline RegluedPairs unglue_reglue_pairs(const SignSequence& s, const Pairing& p,
                                        std::pair<int, int> e1, std::pair<int, int> e2) {
    if (e1.first > e1.second) std::swap(e1.first, e1.second);
    if (e2.first > e2.second) std::swap(e2.first, e2.second);
    if (e1 == e2) throw invalid_input("unglue_reglue: edges must be distinct");
    if (!p.contains(e1) || !p.contains(e2))
        throw invalid_input("unglue_reglue: edge not present in pairing");
    std::vector<int> plus, minus;
    for (int idx : {e1.first, e1.second, e2.first, e2.second})
        (s.sign(idx) > 0 ? plus : minus).push_back(idx);
    if (plus.size() != 2 || minus.size() != 2)
        throw invalid_input("unglue_reglue: the four indices must carry two +1 and two -1");
    if (s.sign(e1.first) + s.sign(e1.second) != 0 || s.sign(e2.first) + s.sign(e2.second) != 0)
        throw invalid_input("unglue_reglue: no alternative compatible matching exists");
    auto mk = [](int a, int b) {
        return a < b ? std::pair<int, int>{a, b} : std::pair<int, int>{b, a};
    };
    std::pair<int, int> m1a = mk(plus[0], minus[0]), m1b = mk(plus[1], minus[1]);
    std::pair<int, int> m2a = mk(plus[0], minus[1]), m2b = mk(plus[1], minus[0]);
    bool current_is_first = (m1a == e1 && m1b == e2) || (m1a == e2 && m1b == e1);
    std::pair<int, int> n1 = current_is_first ? m2a : m1a;
    std::pair<int, int> n2 = current_is_first ? m2b : m1b;
    if (n1 > n2) std::swap(n1, n2);
    RegluedPairs out{p.without({e1, e2}).with({n1, n2}), n1, n2};
    return out;
}

inline Pairing unglue_reglue(const SignSequence& s, const Pairing& p, std::pair<int, int> e1,
                             std::pair<int, int> e2) {
    return unglue_reglue_pairs(s, p, e1, e2).pairing;
}

}  // namespace cauchy
