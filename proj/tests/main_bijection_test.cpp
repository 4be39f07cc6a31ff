#include <doctest.h>

#include <set>

#include "cauchy/main_bijection.hpp"
#include "test_oracles.hpp"

using cauchy::AlphaElement;
using cauchy::BetaTuple;
using cauchy::CauchyParams;
using cauchy::GammaSequence;
using cauchy::Pairing;

namespace {
BetaTuple beta(std::vector<std::vector<int>> sets) { return BetaTuple{std::move(sets)}; }
}  // namespace

TEST_CASE("beta and gamma conversions") {
    CauchyParams p11({1, 1});
    CHECK(cauchy::beta_to_gamma(beta({{2}, {1, 3}}), p11) == GammaSequence{2, 1, 2});
    CHECK(cauchy::gamma_to_beta({2, 1, 2}, p11) == beta({{2}, {1, 3}}));
    CHECK(cauchy::beta_to_gamma(beta({{}, {1, 2, 3}}), p11) == GammaSequence{2, 2, 2});
    for (auto lengths : {std::vector<int>{1, 1}, {1, 2}, {1, 1, 1}}) {
        CauchyParams params(lengths);
        if (params.big_l() > 6) continue;
        for (const auto& b : cauchy::enumerate_beta(params))
            CHECK(cauchy::gamma_to_beta(cauchy::beta_to_gamma(b, params), params) == b);
    }
}

TEST_CASE("beta validation names the violated invariant") {
    CauchyParams p11({1, 1});
    CHECK_THROWS_WITH_AS(cauchy::validate_beta(beta({{1, 2}, {3}}), p11),
                         doctest::Contains("prefix constraint"), cauchy::invalid_input);
    CHECK_THROWS_WITH_AS(cauchy::validate_beta(beta({{1}, {1, 2, 3}}), p11),
                         doctest::Contains("disjoint"), cauchy::invalid_input);
    CHECK_THROWS_WITH_AS(cauchy::validate_beta(beta({{1}, {2}}), p11),
                         doctest::Contains("misses"), cauchy::invalid_input);
    CHECK_THROWS_WITH_AS(cauchy::validate_beta(beta({{1, 2, 3}}), p11),
                         doctest::Contains("expected 2 sets"), cauchy::invalid_input);
}

TEST_CASE("enumerate_beta counts") {
    CHECK(cauchy::enumerate_beta(CauchyParams({1, 1})).size() == 4);
    CHECK(cauchy::enumerate_beta(CauchyParams({1, 2})).size() == 5);  // C(4,0)+C(4,1)
    CHECK(cauchy::enumerate_beta(CauchyParams({1})).size() == 1);
}

TEST_CASE("main bijection for m=1 is forced") {
    CauchyParams params({1});
    auto alphas = cauchy::enumerate_alpha(params);
    REQUIRE(alphas.size() == 1);
    auto b = cauchy::main_bijection(alphas[0], params);
    CHECK(b == beta({{1, 2}}));
}

TEST_CASE("main bijection image for l=(1,1) is the full beta set") {
    CauchyParams params({1, 1});
    auto alphas = cauchy::enumerate_alpha(params);
    REQUIRE(alphas.size() == 4);
    std::set<BetaTuple> images;
    for (const auto& a : alphas) images.insert(cauchy::main_bijection(a, params));
    std::set<BetaTuple> expected{beta({{}, {1, 2, 3}}), beta({{1}, {2, 3}}),
                                 beta({{2}, {1, 3}}), beta({{3}, {1, 2}})};
    CHECK(images == expected);
}

TEST_CASE("main bijection is a checked bijection across parameter sets") {
    for (auto lengths : {std::vector<int>{1}, {2}, {1, 1}, {2, 2}, {1, 2}, {1, 1, 1},
                         {1, 1, 2}, {2, 2, 2}}) {
        CauchyParams params(lengths);
        auto alphas = cauchy::enumerate_alpha(params);
        auto betas = cauchy::enumerate_beta(params);
        CHECK(alphas.size() == betas.size());

        std::set<BetaTuple> expected(betas.begin(), betas.end());
        std::set<BetaTuple> images;
        for (const auto& a : alphas) {
            auto b = cauchy::main_bijection(a, params);
            CHECK(images.insert(b).second);  // injective
            auto back = cauchy::main_bijection_inverse(b, params);
            CHECK(back == a);  // left inverse
        }
        CHECK(images == expected);  // surjective

        for (const auto& b : betas) {
            auto a = cauchy::main_bijection_inverse(b, params);
            CHECK(cauchy::main_bijection(a, params) == b);  // right inverse
        }
    }
}

TEST_CASE("every loop state validates as an intermediate point") {
    for (auto lengths : {std::vector<int>{1, 1}, {1, 2}, {1, 1, 1}}) {
        CauchyParams params(lengths);
        for (const auto& a : cauchy::enumerate_alpha(params)) {
            int seen = 0;
            cauchy::PointObserver obs = [&](const cauchy::IntermediatePoint& pt) {
                ++seen;
                CHECK(cauchy::validate_point(pt));  // re-checked from outside
            };
            auto b = cauchy::main_bijection(a, params, nullptr, obs);
            CHECK(seen == params.m() + 1);  // stages m, m-1, ..., 0
            seen = 0;
            cauchy::main_bijection_inverse(b, params, nullptr, obs);
            CHECK(seen == params.m() + 1);
        }
    }
}

TEST_CASE("validate_point rejects overlapping suffix sets") {
    CauchyParams params({1, 1});
    cauchy::IntermediatePoint pt{params, 0, cauchy::SignSequence(std::vector<int>{}), Pairing(std::vector<std::pair<int, int>>{}),
                                 {std::nullopt},
                                 {{1, 2}, {2, 3}}};
    CHECK_FALSE(cauchy::validate_point(pt));
    cauchy::IntermediatePoint ok{params, 0, cauchy::SignSequence(std::vector<int>{}), Pairing(std::vector<std::pair<int, int>>{}),
                                 {std::nullopt},
                                 {{1}, {2, 3}}};
    CHECK(cauchy::validate_point(ok));
}

TEST_CASE("alpha validation names the violated invariant") {
    CauchyParams params({1, 1});
    CHECK_THROWS_WITH_AS(
        cauchy::make_alpha_tree(AlphaElement{Pairing({{1, 3}, {2, 4}}), {1, 2, 3}}, params),
        doctest::Contains("compatibility"), cauchy::invalid_input);
    CHECK_THROWS_WITH_AS(
        cauchy::make_alpha_tree(AlphaElement{Pairing({{1, 2}, {3, 4}}), {1, 1, 2}}, params),
        doctest::Contains("permutation"), cauchy::invalid_input);
    CHECK_THROWS_WITH_AS(
        cauchy::make_alpha_tree(AlphaElement{Pairing({{1, 2}, {3, 4}}), {2, 1, 3}}, params),
        doctest::Contains("orientation"), cauchy::invalid_input);
}

TEST_CASE("artificial labels stay clear of the real range in both directions") {
    for (int count : {0, 1, 3}) {
        for (bool reversed : {false, true}) {
            auto labels = cauchy::detail::make_artificial_labels(count, 5, reversed);
            REQUIRE(static_cast<int>(labels.size()) == count);
            for (std::size_t i = 0; i < labels.size(); ++i) {
                CHECK((labels[i] < 1 || labels[i] > 5));
                for (int real = 1; real <= 5; ++real)
                    CHECK((reversed ? real < labels[i] : labels[i] < real));
                if (i > 0) CHECK((reversed ? labels[i] < labels[i - 1] : labels[i - 1] < labels[i]));
            }
        }
    }
}
