#include <doctest.h>

#include "cauchy/sign_sequence.hpp"

using cauchy::CauchyParams;
using cauchy::SignSequence;

namespace {
SignSequence seq(std::vector<int> v) { return SignSequence(std::move(v)); }
}  // namespace

TEST_CASE("is_catalan on small sequences") {
    CHECK(cauchy::is_catalan(seq({1, -1})));
    CHECK_FALSE(cauchy::is_catalan(seq({-1, 1})));
    // prefix sums 1,2,1,2,1,0
    CHECK(cauchy::is_catalan(seq({1, 1, -1, 1, -1, -1})));
    CHECK(cauchy::is_catalan(seq({})));
    CHECK_FALSE(cauchy::is_catalan(seq({1})));
    CHECK_FALSE(cauchy::is_catalan(seq({1, 1, -1, -1, -1, 1})));
}

TEST_CASE("epsilon_i block structure") {
    CHECK(cauchy::epsilon_i(CauchyParams({1, 1}), 2) == seq({1, -1, 1, -1}));
    CHECK(cauchy::epsilon_i(CauchyParams({2}), 1) == seq({1, 1, -1, -1}));
    // blocks (+1^{l_2}, -1^{l_1}, +1^{l_1}, -1^{l_2}) for l = (1,2)
    CHECK(cauchy::epsilon_i(CauchyParams({1, 2}), 2) == seq({1, 1, -1, 1, -1, -1}));
    CHECK(cauchy::epsilon_i(CauchyParams({1, 2}), 1) == seq({1, -1}));
    CHECK_THROWS_AS(cauchy::epsilon_i(CauchyParams({1, 1}), 3), cauchy::invalid_input);
    CHECK_THROWS_AS(cauchy::epsilon_i(CauchyParams({1, 1}), 0), cauchy::invalid_input);
}

TEST_CASE("epsilon_i is Catalan for every stage") {
    for (auto lengths : {std::vector<int>{1}, {2}, {1, 1}, {1, 2}, {2, 2}, {1, 1, 1}, {1, 2, 3}}) {
        CauchyParams params(lengths);
        for (int i = 1; i <= params.m(); ++i) {
            auto eps = cauchy::epsilon_i(params, i);
            CHECK(cauchy::is_catalan(eps));
            int total = 0;
            for (int j = 1; j <= i; ++j) total += params.length(j);
            CHECK(eps.size() == 2 * total);
        }
    }
}

TEST_CASE("params validation") {
    CHECK_THROWS_AS(CauchyParams({2, 1}), cauchy::invalid_input);
    CHECK_THROWS_AS(CauchyParams({0}), cauchy::invalid_input);
    CHECK_THROWS_AS(CauchyParams({}), cauchy::invalid_input);
    CHECK(CauchyParams({1, 2}).big_l() == 4);
    CHECK(CauchyParams({1, 1}).big_l() == 3);
}

TEST_CASE("sign sequence rejects junk entries") {
    CHECK_THROWS_AS(seq({1, 0}), cauchy::invalid_input);
    CHECK_THROWS_AS(seq({2}), cauchy::invalid_input);
}
