#include <doctest.h>

#include "cauchy/json_io.hpp"

using cauchy::CauchyParams;
using cauchy::json;

TEST_CASE("alpha element serialization round-trips") {
    CauchyParams params({1, 1});
    json j = json::parse(R"({"epsilon":[1,-1,1,-1],"pairs":[[1,2],[3,4]],"order":[1,3,2]})");
    auto alpha = cauchy::alpha_from_json(j, params);
    CHECK(alpha.sigma == cauchy::Pairing({{1, 2}, {3, 4}}));
    CHECK(alpha.order == std::vector<int>{1, 3, 2});
    auto eps = cauchy::epsilon_i(params, 2);
    CHECK(cauchy::alpha_from_json(cauchy::to_json(eps, alpha), params) == alpha);
}

TEST_CASE("alpha parsing rejects malformed input") {
    CauchyParams params({1, 1});
    CHECK_THROWS_AS(cauchy::alpha_from_json(json::parse("[1,2]"), params),
                    cauchy::invalid_input);
    CHECK_THROWS_AS(
        cauchy::alpha_from_json(
            json::parse(R"({"epsilon":[1,-1],"pairs":[[1,2]],"order":[1,2]})"), params),
        cauchy::invalid_input);  // epsilon does not match l=(1,1)
}

TEST_CASE("beta tuple serialization round-trips") {
    auto b = cauchy::BetaTuple{{{2}, {1, 3}}};
    CHECK(cauchy::beta_from_json(cauchy::to_json(b)) == b);
    CHECK(cauchy::to_json(b).dump() == R"({"B":[[2],[1,3]]})");
    CHECK(cauchy::beta_from_json(json::parse(R"({"B":[[3,1],[2]]})")).sets[0] ==
          std::vector<int>{1, 3});  // sets arrive sorted
    CHECK_THROWS_AS(cauchy::beta_from_json(json::parse(R"({"beta":[]})")),
                    cauchy::invalid_input);
}

TEST_CASE("tree serialization carries provenance") {
    cauchy::QuotientTree t(cauchy::SignSequence({1, -1, 1, 1, -1, -1, 1, -1}),
                           cauchy::Pairing({{1, 6}, {2, 3}, {4, 5}, {7, 8}}));
    json j = cauchy::tree_to_json(t);
    CHECK(j["root"] == 0);
    CHECK(j["vertices"].size() == 5);
    CHECK(j["vertices"][0] == json::array({1, 7}));
    CHECK(j["edges"].size() == 4);
    CHECK(j["edges"][0]["pair"] == json::array({1, 6}));
    // rebuildable from epsilon and pairs alone
    cauchy::QuotientTree back(cauchy::sign_sequence_from_json(j["epsilon"]),
                              cauchy::pairing_from_json(j["pairs"]));
    CHECK(back.vertex_count() == t.vertex_count());
}
