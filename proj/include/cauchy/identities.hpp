#pragma once

#include <vector>

#include "cauchy/bigint.hpp"
#include "cauchy/linear_extensions.hpp"
#include "cauchy/main_bijection.hpp"
#include "cauchy/rational.hpp"

namespace cauchy {

// ±1 step sequences of lattice paths share the sign-sequence representation.
using PathSequence = SignSequence;

// Sum over p+q=l of binom(2p,p) binom(2q,q); equals 4^l.
inline BigInt cauchy_rhs_m2(int l) {
    if (l < 0) throw invalid_input("cauchy_rhs_m2: l must be nonnegative");
    BigInt total;
    for (int p = 0; p <= l; ++p)
        total += BigInt::binomial(2 * p, p) * BigInt::binomial(2 * (l - p), l - p);
    return total;
}

// The m=3 expansion: trinomial top terms plus three times the constrained
// triple sum; equals 27^l.
inline BigInt cauchy_rhs_m3(int l) {
    if (l < 0) throw invalid_input("cauchy_rhs_m3: l must be nonnegative");
    BigInt total;
    for (int p = 0; p <= l; ++p) {
        int q = l - p;
        total += BigInt::multinomial({p, p, p}) * BigInt::multinomial({q, q, q});
    }
    BigInt second;
    for (int p = 0; p <= l - 1; ++p)
        for (int q = 0; p + q <= l - 1; ++q) {
            int r = l - 1 - p - q;
            for (int rp = 0; rp <= r + q + 1; ++rp) {
                int qp = r + q + 1 - rp;
                for (int pp = 0; pp <= p + r + 1; ++pp) {
                    int rpp = p + r + 1 - pp;
                    second += BigInt::multinomial({p, p, pp}) * BigInt::multinomial({q, q, qp}) *
                              BigInt::multinomial({r, rp, rpp});
                }
            }
        }
    return total + BigInt(3) * second;
}

// Sum over non-crossing compatible pairings of the number of compatible
// orders: the left-hand side m^{ml} of the generalized identity when all
// block lengths agree.
inline BigInt count_alpha(const CauchyParams& params, int max_polygon = 26) {
    SignSequence eps = epsilon_i(params, params.m());
    if (eps.size() > max_polygon)
        throw bound_exceeded("count_alpha: polygon with " + std::to_string(eps.size()) +
                             " edges exceeds the bound of " + std::to_string(max_polygon));
    BigInt total;
    for (const auto& sigma : enumerate_noncrossing_pairings(eps))
        total += count_compatible_orders(QuotientTree(eps, sigma));
    return total;
}

// count_alpha for equal block lengths divided exactly by (ml+1)!.
inline Rational moment(int l, int m, int max_polygon = 26) {
    if (l < 1 || m < 1) throw invalid_input("moment: l and m must be positive");
    CauchyParams params(std::vector<int>(static_cast<std::size_t>(m), l));
    return Rational(count_alpha(params, max_polygon),
                    BigInt::factorial(static_cast<unsigned>(m * l + 1)));
}

// Discrete transform Z_s = T_s - 2 min_{0<=r<=s} T_r, evaluated at integer
// points and returned as a step sequence (the steps stay in ±1).
inline PathSequence pitman_transform(const PathSequence& t) {
    int height = 0, low = 0;
    std::vector<int> steps;
    int prev_z = 0;
    for (int i = 1; i <= t.size(); ++i) {
        height += t.sign(i);
        low = std::min(low, height);
        int z = height - 2 * low;
        steps.push_back(z - prev_z);
        prev_z = z;
    }
    return PathSequence(std::move(steps));
}

struct CauchyDecomposition {
    int p = 0;
    PathSequence balanced;  // the first 2p steps, summing to zero
    PathSequence positive;  // the remaining 2q+1 steps, all prefix sums positive
};

// Split a positive-sum odd-length path at the last return to the origin.
inline CauchyDecomposition cauchy_decompose(const PathSequence& x) {
    if (x.size() % 2 != 1) throw invalid_input("cauchy_decompose: length must be odd");
    int sum = 0;
    int last_zero = 0;
    std::vector<int> prefix{0};
    for (int i = 1; i <= x.size(); ++i) {
        sum += x.sign(i);
        prefix.push_back(sum);
        if (sum == 0) last_zero = i;
    }
    if (sum <= 0) throw invalid_input("cauchy_decompose: total sum must be positive");
    CAUCHY_CHECK(last_zero % 2 == 0);
    std::vector<int> head, tail;
    for (int i = 1; i <= last_zero; ++i) head.push_back(x.sign(i));
    for (int i = last_zero + 1; i <= x.size(); ++i) tail.push_back(x.sign(i));
    CauchyDecomposition out{last_zero / 2, PathSequence(std::move(head)),
                            PathSequence(std::move(tail))};
    int check = 0;
    for (int s : out.positive.entries()) {
        check += s;
        CAUCHY_CHECK_MSG(check > 0, "suffix after the last zero has positive prefix sums");
    }
    return out;
}

// The exact law of the rescaled last visit to the origin:
// P = sum over p+q=l with p < x(2l+1) of binom(2p,p) binom(2q,q) / 4^l.
inline Rational last_zero_cdf(int l, const Rational& x) {
    if (l < 0) throw invalid_input("last_zero_cdf: l must be nonnegative");
    BigInt num;
    for (int p = 0; p <= l; ++p) {
        if (!(Rational(p) < x * Rational(2 * l + 1))) continue;
        num += BigInt::binomial(2 * p, p) * BigInt::binomial(2 * (l - p), l - p);
    }
    return Rational(num, BigInt::pow(4, static_cast<unsigned>(l)));
}

}  // namespace cauchy
