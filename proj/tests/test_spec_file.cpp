#include "doctest.h"

#include <cmath>

#include "haarent/entropy.hpp"
#include "haarent/error.hpp"
#include "haarent/spec_file.hpp"

using namespace haarent;

TEST_CASE("interval spec with an expression density") {
    auto s = parse_measure_spec(
        R"({"space": {"kind": "interval", "bounds": [0, 1]}, "density": {"kind": "expr", "payload": "2*x"}})");
    CHECK_FALSE(s.group.has_value());
    CHECK(total_mass(s.measure) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(s.measure.label() == "2*x");
}

TEST_CASE("finite specs") {
    auto coins = parse_measure_spec(
        R"({"space": {"kind": "finite", "atoms": ["H", "T"]}, "density": {"kind": "table", "payload": [0.5, 0.5]},
            "label": "coin"})");
    CHECK(coins.measure.label() == "coin");
    CHECK(coins.measure.space().label(1) == "T");
    CHECK(entropy_prob(coins.measure, Measure::base(coins.measure.space()), coins.measure.space().whole()).nats ==
          doctest::Approx(std::log(2.0)).epsilon(1e-15));

    auto nums = parse_measure_spec(
        R"({"space": {"kind": "finite", "atoms": [1, 2.5, 4]}, "density": {"kind": "expr", "payload": "x"}})");
    CHECK(total_mass(nums.measure) == 7.5);
    CHECK(nums.measure.space().label(1) == "2.5");
}

TEST_CASE("group specs and builtins") {
    auto d4 = parse_measure_spec(R"({"space": {"kind": "group", "group": "D4"}, "density": {"kind": "builtin",
                                     "payload": "haar"}})");
    REQUIRE(d4.group.has_value());
    CHECK(d4.group->order() == 8);
    CHECK(total_mass(d4.measure) == 8.0);

    auto mul = parse_measure_spec(
        R"({"space": {"kind": "interval", "bounds": [2, 8]}, "density": {"kind": "builtin", "payload": "haar:R*"}})");
    CHECK(total_mass(mul.measure) == doctest::Approx(std::log(4.0)).epsilon(1e-10));

    auto uni = parse_measure_spec(
        R"({"space": {"kind": "interval", "bounds": [0, 4]}, "density": {"kind": "builtin", "payload": "uniform"}})");
    CHECK(total_mass(uni.measure) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("malformed specs") {
    try {
        parse_measure_spec(R"({"space": {"kind": "interval", "bounds": [0, 1]}, )");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.offset() > 0);
    }
    auto dsl_error = R"({"space": {"kind": "interval", "bounds": [0, 1]}, "density": {"kind": "expr", "payload": "2*"}})";
    try {
        parse_measure_spec(dsl_error);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 2);
    }
    CHECK_THROWS_AS(parse_measure_spec(R"({"space": {"kind": "torus"}, "density": {"kind": "builtin",
                                          "payload": "lebesgue"}})"),
                    DomainError);
    CHECK_THROWS_AS(parse_measure_spec(R"({"space": {"kind": "interval", "bounds": [0, 1]},
                                          "density": {"kind": "builtin", "payload": "counting"}})"),
                    DomainError);
    CHECK_THROWS_AS(parse_measure_spec(R"({"space": {"kind": "finite", "atoms": ["a"]},
                                          "density": {"kind": "table", "payload": [-1]}})"),
                    DomainError);
    CHECK_THROWS_AS(load_measure_spec("/nonexistent/spec.json"), DomainError);
}
