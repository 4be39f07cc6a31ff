#include <doctest.h>

#include <map>
#include <set>

#include "cauchy/identities.hpp"
#include "test_oracles.hpp"

using cauchy::BigInt;
using cauchy::CauchyParams;
using cauchy::PathSequence;
using cauchy::Rational;

namespace {
PathSequence path(std::vector<int> v) { return PathSequence(std::move(v)); }
}  // namespace

TEST_CASE("cauchy_rhs_m2 equals 4^l") {
    CHECK(cauchy::cauchy_rhs_m2(0) == BigInt(1));
    CHECK(cauchy::cauchy_rhs_m2(1) == BigInt(4));
    CHECK(cauchy::cauchy_rhs_m2(2) == BigInt(16));
    for (int l = 0; l <= 10; ++l)
        CHECK(cauchy::cauchy_rhs_m2(l) == BigInt::pow(4, static_cast<unsigned>(l)));
}

TEST_CASE("cauchy_rhs_m3 equals 27^l, splitting 12 + 15 at l=1") {
    CHECK(cauchy::cauchy_rhs_m3(0) == BigInt(1));
    CHECK(cauchy::cauchy_rhs_m3(1) == BigInt(27));
    // direct evaluation of the two sums at l=1: 6+6 and 3*(1+1+2+1)
    BigInt first = BigInt::multinomial({1, 1, 1}) * BigInt(1) + BigInt(1) * BigInt::multinomial({1, 1, 1});
    CHECK(first == BigInt(12));
    CHECK(cauchy::cauchy_rhs_m3(1) - first == BigInt(15));
    for (int l = 0; l <= 6; ++l)
        CHECK(cauchy::cauchy_rhs_m3(l) == BigInt::pow(27, static_cast<unsigned>(l)));
}

TEST_CASE("count_alpha matches m^{ml} and the beta enumeration") {
    CHECK(cauchy::count_alpha(CauchyParams({1, 1})) == BigInt(4));
    CHECK(cauchy::count_alpha(CauchyParams({1, 1, 1})) == BigInt(27));
    CHECK(cauchy::count_alpha(CauchyParams({1, 2})) == BigInt(5));
    for (auto lengths : {std::vector<int>{1}, {2}, {3}, {1, 1}, {1, 2}, {2, 2}, {1, 1, 1}}) {
        CauchyParams params(lengths);
        CHECK(cauchy::count_alpha(params) ==
              BigInt(static_cast<long long>(cauchy::enumerate_beta(params).size())));
    }
    CHECK_THROWS_AS(cauchy::count_alpha(CauchyParams({9, 9}), 26), cauchy::bound_exceeded);
}

TEST_CASE("moments are the exact rationals m^{ml}/(ml+1)!") {
    CHECK(cauchy::moment(1, 1) == Rational(1, 2));
    CHECK(cauchy::moment(1, 2) == Rational(2, 3));
    CHECK(cauchy::moment(2, 2) == Rational(2, 15));
    CHECK(cauchy::moment(1, 2).to_string() == "2/3");
    CHECK(cauchy::moment(2, 2).to_string() == "2/15");
}

TEST_CASE("pitman transform point values") {
    CHECK(cauchy::pitman_transform(path({1, -1})) == path({1, -1}));
    CHECK(cauchy::pitman_transform(path({-1, 1})) == path({1, 1}));
    CHECK(cauchy::pitman_transform(path({-1, -1, 1, 1})) == path({1, 1, 1, 1}));
}

TEST_CASE("pitman transform bijects balanced paths onto nonnegative paths") {
    for (int q = 0; q <= 6; ++q) {
        std::set<std::vector<int>> images;
        std::size_t domain = 0, target = 0;
        for (const auto& s : oracles::all_sign_sequences(2 * q)) {
            int sum = 0, low = 0, run = 0;
            for (int e : s.entries()) {
                sum += e;
                run += e;
                low = std::min(low, run);
            }
            if (low >= 0) ++target;  // nonnegative prefix sums
            if (sum != 0) continue;
            ++domain;
            images.insert(cauchy::pitman_transform(s).entries());
        }
        // the image consists of nonnegative-prefix paths, hit exactly once each
        CHECK(images.size() == domain);
        CHECK(domain == target);
        for (const auto& img : images) {
            int run = 0;
            for (int e : img) {
                run += e;
                CHECK(run >= 0);
            }
        }
    }
}

TEST_CASE("cauchy_decompose splits at the last return to the origin") {
    auto d0 = cauchy::cauchy_decompose(path({1}));
    CHECK(d0.p == 0);
    CHECK(d0.balanced.size() == 0);
    CHECK(d0.positive == path({1}));

    auto d1 = cauchy::cauchy_decompose(path({1, -1, 1}));
    CHECK(d1.p == 1);
    CHECK(d1.balanced == path({1, -1}));
    CHECK(d1.positive == path({1}));

    // the 25-step staircase: last zero at 18, so 2p=18 and 2q+1=7
    auto d2 = cauchy::cauchy_decompose(path({1, -1, 1, 1, 1, -1, -1, 1, -1, 1, -1, -1, -1,
                                             -1, -1, 1, 1, 1, 1, 1, 1, -1, 1, -1, 1}));
    CHECK(d2.p == 9);
    CHECK(d2.positive.size() == 7);

    CHECK_THROWS_AS(cauchy::cauchy_decompose(path({1, -1})), cauchy::invalid_input);
    CHECK_THROWS_AS(cauchy::cauchy_decompose(path({-1, 1, -1})), cauchy::invalid_input);
}

TEST_CASE("decomposition fibers reproduce the m=2 summands") {
    for (int l = 0; l <= 6; ++l) {
        std::map<int, long long> fiber;
        long long total = 0;
        for (const auto& x : oracles::all_sign_sequences(2 * l + 1)) {
            int sum = 0;
            for (int e : x.entries()) sum += e;
            if (sum <= 0) continue;
            ++total;
            auto d = cauchy::cauchy_decompose(x);
            ++fiber[d.p];
            // reassembling head and tail restores x
            std::vector<int> glued = d.balanced.entries();
            glued.insert(glued.end(), d.positive.entries().begin(), d.positive.entries().end());
            CHECK(glued == x.entries());
        }
        long long check_total = 0;
        for (int p = 0; p <= l; ++p) {
            int q = l - p;
            BigInt expected = BigInt::binomial(2 * p, p) * BigInt::binomial(2 * q, q);
            CHECK(BigInt(fiber[p]) == expected);
            check_total += fiber[p];
        }
        CHECK(check_total == total);
        CHECK(BigInt(total) == cauchy::cauchy_rhs_m2(l));
    }
}

TEST_CASE("last_zero_cdf steps through the exact distribution") {
    CHECK(cauchy::last_zero_cdf(1, Rational(0)) == Rational(0));
    CHECK(cauchy::last_zero_cdf(1, Rational(1)) == Rational(1));
    // at l=1 the summands are 2/4 (p=0) and 2/4 (p=1)
    CHECK(cauchy::last_zero_cdf(1, Rational(1, 3)) == Rational(1, 2));
    CHECK(cauchy::last_zero_cdf(1, Rational(2, 3)) == Rational(1));
    CHECK(cauchy::last_zero_cdf(2, Rational(2, 5)) == Rational(6 + 4, 16));
}

TEST_CASE("bigint and rational basics") {
    CHECK(BigInt::factorial(7) == BigInt(5040));
    CHECK(BigInt::binomial(20, 10) == BigInt(184756));
    CHECK(BigInt::multinomial({2, 2, 2}) == BigInt(90));
    CHECK((BigInt::pow(3, 20)).to_string() == "3486784401");
    CHECK(BigInt(-5) + BigInt(3) == BigInt(-2));
    CHECK((BigInt(1000000007) * BigInt(998244353)).to_string() == "998244359987710471");
    CHECK(BigInt::gcd(BigInt(1071), BigInt(462)) == BigInt(21));
    CHECK(Rational(4, 6) == Rational(2, 3));
    CHECK(Rational(16, 120).to_string() == "2/15");
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(7, 1).to_string() == "7");
    CHECK(Rational(BigInt(-4), BigInt(-6)) == Rational(2, 3));
    CHECK(Rational(BigInt(4), BigInt(-6)).to_string() == "-2/3");
}
