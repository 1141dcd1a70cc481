#include "doctest.h"

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "haarent/dsl.hpp"
#include "haarent/error.hpp"
#include "haarent/maxent.hpp"

#include "dsl_oracle.hpp"

using namespace haarent;
using namespace dsl_oracle;

TEST_CASE("evaluator matches reference evaluation exactly") {
    std::mt19937_64 rng(2024);
    std::size_t compared = 0, errors = 0;
    for (int e = 0; e < 200; ++e) {
        auto tree = random_ref(rng, 4);
        const auto src = show(*tree);
        CAPTURE(src);
        auto parsed = dsl::parse(src);
        for (int p = 0; p < 5; ++p) {
            const double x = -3 + 6 * uniform01(rng);
            bool ref_failed = false;
            double expect = 0;
            try {
                expect = ref_eval(*tree, x);
            } catch (const RefError&) {
                ref_failed = true;
            }
            if (ref_failed) {
                CHECK_THROWS_AS(dsl::evaluate(parsed, x), EvaluationError);
                ++errors;
            } else {
                CHECK(dsl::evaluate(parsed, x) == expect);
            }
            ++compared;
        }
    }
    CHECK(compared == 1000);
    CHECK(errors < compared);
}

TEST_CASE("round-trip corpus") {
    CHECK(std::size(kCorpus) == 50);
    for (const char* src : kCorpus) {
        CAPTURE(src);
        const auto e = dsl::parse(src);
        const auto printed = dsl::print(e);
        const auto again = dsl::parse(printed);
        CHECK(again == e);
        CHECK(dsl::print(again) == printed);
    }
}

TEST_CASE("fuzzed inputs never crash the parser") {
    std::mt19937_64 rng(77);
    std::size_t ok = 0, rejected = 0;
    for (int t = 0; t < 10000; ++t) {
        const auto src = fuzz_input(rng);
        try {
            const auto e = dsl::parse(src);
            CHECK(dsl::parse(dsl::print(e)) == e);
            ++ok;
        } catch (const ParseError& err) {
            CHECK(err.offset() <= src.size());
            ++rejected;
        }
    }
    CHECK(ok + rejected == 10000);
}

TEST_CASE("deep nesting is rejected, not a stack overflow") {
    std::string deep(100000, '(');
    CHECK_THROWS_AS(dsl::parse(deep), ParseError);
    std::string ok = std::string(90, '(') + "x" + std::string(90, ')');
    CHECK_NOTHROW(dsl::parse(ok));
}

TEST_CASE("precedence and associativity") {
    auto at = [](const char* s, double x) { return dsl::evaluate(dsl::parse(s), x); };
    CHECK(at("-x^2", 3) == -9);
    CHECK(at("2^3^2", 0) == 512);
    CHECK(at("1-2-3", 0) == -4);
    CHECK(at("8/4/2", 0) == 1);
    CHECK(at("2+3*4", 0) == 14);
    CHECK(at("x^-1", 4) == 0.25);
    CHECK(at("piecewise{x<0.5:1; else:2}", 0.5) == 2);
}

TEST_CASE("parse errors carry offsets and expectations") {
    auto offset_of = [](const char* s) -> std::size_t {
        try {
            dsl::parse(s);
        } catch (const ParseError& e) {
            CHECK_FALSE(e.expected().empty());
            return e.offset();
        }
        FAIL("parsed " << s);
        return 0;
    };
    CHECK(offset_of("2*") == 2);
    CHECK(offset_of("log(x") == 5);
    CHECK(offset_of("(1+2))") == 5);
    CHECK(offset_of("foo(x)") == 0);
    CHECK_THROWS_AS(dsl::parse("min(x)"), ParseError);
    CHECK_THROWS_AS(dsl::parse("piecewise{x<1:0; x<2:1}"), ParseError);
    CHECK_THROWS_AS(dsl::parse("piecewise{else:0; x<1:1}"), ParseError);
    CHECK_THROWS_AS(dsl::parse("1e999"), ParseError);
}

TEST_CASE("evaluation errors name the subexpression") {
    auto e = dsl::parse("1 + log(x - 1)");
    try {
        dsl::evaluate(e, 0.5);
        FAIL("expected an evaluation error");
    } catch (const EvaluationError& err) {
        CHECK(err.subexpression() == "log(x - 1)");
        CHECK(err.x() == 0.5);
    }
    CHECK_THROWS_AS(dsl::evaluate(dsl::parse("1/x"), 0), EvaluationError);
    CHECK_THROWS_AS(dsl::evaluate(dsl::parse("piecewise{x<0:1}"), 1), EvaluationError);
}

TEST_CASE("breakpoints") {
    auto s = MeasurableSet::interval(0, 1);
    auto has = [](const std::vector<double>& v, double x) {
        for (double b : v)
            if (std::abs(b - x) < 1e-12) return true;
        return false;
    };
    CHECK(has(dsl::breakpoints(dsl::parse("1/(x-0.3)"), s), 0.3));
    CHECK(has(dsl::breakpoints(dsl::parse("abs(x-0.7)"), s), 0.7));
    CHECK(has(dsl::breakpoints(dsl::parse("min(x, 1-x)"), s), 0.5));
    CHECK(has(dsl::breakpoints(dsl::parse("piecewise{x<0.25:1; else:2}"), s), 0.25));
    CHECK(dsl::breakpoints(dsl::parse("x^2+1"), s).empty());
}

TEST_CASE("densities from expressions") {
    auto sp = Space::interval(0, 1);
    auto c = dsl::make_density(dsl::parse("0.5*2"), sp);
    REQUIRE(c.constant.has_value());
    CHECK(*c.constant == 1.0);
    auto d = dsl::make_density(dsl::parse("3*x^2"), sp);
    CHECK(total_mass(Measure(sp, d)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("set literals") {
    auto iv = Space::interval(0, 10);
    CHECK(dsl::parse_set("[0,2]", iv) == MeasurableSet::interval(0, 2));
    CHECK(dsl::parse_set("[0,1]U[2,3]", iv) == MeasurableSet::segments({{0, 1}, {2, 3}}));
    CHECK(dsl::parse_set("[0,1] \xe2\x88\xaa [1/2,2*2]", iv) == MeasurableSet::interval(0, 4));
    CHECK_THROWS_AS(dsl::parse_set("[0,11]", iv), DomainError);
    CHECK_THROWS_AS(dsl::parse_set("[0,1", iv), ParseError);
    CHECK_THROWS_AS(dsl::parse_set("{1,2}", iv), ParseError);

    auto fin = Space::finite({1.0, 3.0, 5.0}, {"1", "3", "5"});
    CHECK(dsl::parse_set("{1,5}", fin) == MeasurableSet::atoms({0, 2}));
    CHECK(dsl::parse_set("{}", fin).empty());
    CHECK_THROWS_AS(dsl::parse_set("{2}", fin), ParseError);
    auto named = Space::finite(std::vector<std::string>{"H", "T"});
    CHECK(dsl::parse_set("{T}", named) == MeasurableSet::atoms({1}));
}
