#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "haarent/error.hpp"
#include "haarent/kernels.hpp"
#include "haarent/measure.hpp"
#include "haarent/quadrature.hpp"
#include "haarent/space.hpp"

using namespace haarent;

TEST_CASE("segment sets normalize, merge and subtract") {
    auto s = MeasurableSet::segments({{2, 3}, {0, 1}, {0.5, 1.5}, {4, 4}});
    REQUIRE(s.pieces().size() == 2);
    CHECK(s.pieces()[0] == Segment{0, 1.5});
    CHECK(s.pieces()[1] == Segment{2, 3});
    CHECK(s.size() == doctest::Approx(2.5));

    auto t = MeasurableSet::interval(1, 2.5);
    CHECK(s.intersect(t) == MeasurableSet::segments({{1, 1.5}, {2, 2.5}}));
    CHECK(s.unite(t) == MeasurableSet::interval(0, 3));
    CHECK(s.minus(t) == MeasurableSet::segments({{0, 1}, {2.5, 3}}));
    CHECK(MeasurableSet::interval(0.2, 0.4).subset_of(s));
    CHECK_FALSE(t.subset_of(s));
    CHECK(MeasurableSet::interval(1, 1).empty());
}

TEST_CASE("atom sets behave like sorted index sets") {
    auto a = MeasurableSet::atoms({3, 1, 3, 0});
    REQUIRE(a.atom_indices().size() == 3);
    CHECK(a.contains_atom(1));
    CHECK_FALSE(a.contains_atom(2));
    auto b = MeasurableSet::atoms({1, 2});
    CHECK(a.intersect(b) == MeasurableSet::atoms({1}));
    CHECK(a.unite(b) == MeasurableSet::atoms({0, 1, 2, 3}));
    CHECK(a.minus(b) == MeasurableSet::atoms({0, 3}));
    CHECK_THROWS_AS(a.unite(MeasurableSet::interval(0, 1)), DomainError);
}

TEST_CASE("spaces validate their carriers") {
    CHECK_THROWS_AS(Space::interval(1, 1), DomainError);
    CHECK_THROWS_AS(Space::finite(std::vector<std::string>{}), DomainError);
    CHECK_THROWS_AS(Space::finite({1.0, 1.0}, {"a", "b"}), DomainError);
    auto sp = Space::finite({"H", "T"});
    CHECK(sp.find_label("T") == 1u);
    CHECK(sp.whole() == MeasurableSet::atoms({0, 1}));
    CHECK_FALSE(sp.contains(MeasurableSet::atoms({2})));
    auto iv = Space::interval(0, 2);
    CHECK(iv.contains(MeasurableSet::interval(0.5, 2)));
    CHECK_FALSE(iv.contains(MeasurableSet::interval(0.5, 2.1)));
}

TEST_CASE("xlogx") {
    CHECK(xlogx(0.0) == 0.0);
    CHECK(xlogx(1.0) == 0.0);
    CHECK(xlogx(std::numbers::e) == doctest::Approx(std::numbers::e).epsilon(1e-15));
    CHECK_THROWS_AS(xlogx(-1.0), DomainError);
}

TEST_CASE("quadrature matches closed forms") {
    const Integrator cfg;
    CHECK(integrate([](double x) { return x * x; }, MeasurableSet::interval(0, 1), cfg) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(integrate([](double x) { return std::sin(x); }, MeasurableSet::interval(0, std::numbers::pi), cfg) ==
          doctest::Approx(2.0).epsilon(1e-10));
    const double e = std::numbers::e;
    CHECK(integrate([](double x) { return std::exp(x); }, MeasurableSet::segments({{0, 1}, {2, 3}}), cfg) ==
          doctest::Approx((e - 1) + (e * e * e - e * e)).epsilon(1e-10));
    CHECK(integrate(xlogx, MeasurableSet::interval(0, 1), cfg) == doctest::Approx(-0.25).epsilon(1e-10));
}

TEST_CASE("quadrature honours breakpoints on jumps") {
    auto step = [](double x) { return x < 0.3 ? 1.0 : 5.0; };
    const double bp[] = {0.3};
    CHECK(integrate(step, MeasurableSet::interval(0, 1), {}, bp) == doctest::Approx(0.3 + 3.5).epsilon(1e-13));
}

TEST_CASE("quadrature reports non-convergence") {
    Integrator cfg;
    cfg.max_depth = 2;
    auto wiggle = [](double x) { return std::sin(200 * x); };
    auto r = integrate_detailed(wiggle, MeasurableSet::interval(0, 3), cfg);
    CHECK_FALSE(r.converged);
    CHECK_THROWS_AS(integrate(wiggle, MeasurableSet::interval(0, 3), cfg), ConvergenceError);
    cfg.rel_tol = 0;
    CHECK_THROWS_AS(cfg.validate(), DomainError);
}

TEST_CASE("atom sums are exact") {
    auto sp = Space::finite({1.0, 2.0, 4.0}, {"a", "b", "c"});
    CHECK(sum_atoms([](double x) { return x * x; }, MeasurableSet::atoms({0, 2}), sp) == 17.0);
    CHECK(integrate_over([](double x) { return x; }, sp.whole(), sp) == 7.0);
}

TEST_CASE("serial and parallel kernels agree bit for bit") {
    std::mt19937_64 rng(7);
    std::vector<double> xs(5000);
    for (auto& x : xs) x = std::uniform_real_distribution<double>(-3, 3)(rng);
    std::vector<double> a(xs.size()), b(xs.size());
    auto f = [](double x) { return std::exp(-x * x) * std::cos(3 * x); };
    kernels::evaluate(f, xs, a, Execution::Serial);
    kernels::evaluate(f, xs, b, Execution::Parallel);
    CHECK(a == b);
    CHECK(kernels::ordered_sum(a) == kernels::ordered_sum(b));

    auto s = kernels::map_indices(xs.size(), [&](std::size_t i) { return f(xs[i]); }, Execution::Serial);
    auto p = kernels::map_indices(xs.size(), [&](std::size_t i) { return f(xs[i]); }, Execution::Parallel);
    CHECK(s == p);

    Integrator serial, parallel;
    serial.exec = Execution::Serial;
    auto wavy = [](double x) { return std::sin(x) * std::sin(x * 7); };
    auto set = MeasurableSet::segments({{0, 1}, {1.5, 4}, {5, 9}});
    CHECK(integrate(wavy, set, serial) == integrate(wavy, set, parallel));
}

TEST_CASE("parallel map rethrows the lowest failing index") {
    auto fn = [](std::size_t i) -> int {
        if (i == 17 || i == 40) throw DomainError("bad " + std::to_string(i));
        return 1;
    };
    try {
        kernels::map_indices(64, fn, Execution::Parallel);
        FAIL("expected a throw");
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()) == "bad 17");
    }
}

TEST_CASE("extrema skips NaN and keeps first ties") {
    const double v[] = {NAN, 2.0, -1.0, 2.0, -1.0};
    auto e = kernels::extrema(v);
    CHECK(e.min == -1.0);
    CHECK(e.argmin == 2);
    CHECK(e.max == 2.0);
    CHECK(e.argmax == 1);
    auto none = kernels::extrema(std::span<const double>{});
    CHECK(std::isinf(none.min));
}

TEST_CASE("measure masses") {
    auto sp = Space::interval(0, 1);
    Measure m(sp, Density::function([](double x) { return 2 * x; }));
    CHECK(mass(m, MeasurableSet::interval(0, 0.5)) == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(total_mass(m) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(total_mass(m.scaled(3)) == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(total_mass(m.restricted(MeasurableSet::interval(0.5, 1))) == doctest::Approx(0.75).epsilon(1e-12));
    CHECK_THROWS_AS(mass(m, MeasurableSet::interval(0, 2)), DomainError);

    auto fin = Space::finite({"a", "b", "c"});
    Measure t(fin, Density::table(fin, {0.5, 1.5, 2.0}));
    CHECK(total_mass(t) == 4.0);
    CHECK(mass(t, MeasurableSet::atoms({1, 2})) == 3.5);
    CHECK_THROWS_AS(Density::table(fin, {1.0, -1.0, 0.0}), DomainError);
}

TEST_CASE("integrate_wrt skips the integrand where the density vanishes") {
    auto sp = Space::interval(0, 2);
    Measure m(sp, Density::piecewise_constant({0, 1, 2}, {0.0, 3.0}));
    // NaN on [0, 1), where the density is zero
    auto f = [](double x) { return std::sqrt(x - 1); };
    CHECK(integrate_wrt(f, m, sp.whole()) == doctest::Approx(2.0).epsilon(1e-8));
}

TEST_CASE("radon-nikodym quotient and absolute continuity") {
    auto sp = Space::interval(0, 1);
    Measure ref(sp, Density::function([](double x) { return 1 + x; }));
    Measure m = Measure::relative_to(ref, Density::function([](double x) { return x * x; }));
    auto q = radon_nikodym(m, ref);
    for (double x : {0.1, 0.5, 0.9}) CHECK(q(x) == doctest::Approx(x * x).epsilon(1e-14));
    // m = x^2 (1 + x) dx, mass 1/3 + 1/4
    CHECK(total_mass(m) == doctest::Approx(7.0 / 12.0).epsilon(1e-12));

    Measure holey(sp, Density::piecewise_constant({0, 0.5, 1}, {1.0, 0.0}));
    Measure full(sp, Density::constant_value(1.0));
    CHECK_THROWS_AS(radon_nikodym(full, holey), AbsoluteContinuityError);
    CHECK_NOTHROW(radon_nikodym(holey, full));
}

TEST_CASE("weight functions") {
    auto sp = Space::interval(0, 1);
    Measure ref = Measure::base(sp);
    Measure info(sp, Density::piecewise_constant({0, 0.5, 1}, {0.25, 0.0}));
    auto phi = weight_of(info, ref);
    CHECK(phi(0.2) == doctest::Approx(std::log(4.0)).epsilon(1e-15));
    CHECK(std::isinf(phi(0.7)));
    CHECK(information_value(phi(0.7)) == 0.0);
    auto back = measure_of_weight(phi, ref);
    CHECK(total_mass(back) == doctest::Approx(0.125).epsilon(1e-12));

    Measure heavy(sp, Density::constant_value(2.0));
    CHECK_THROWS_AS(weight_of(heavy, ref), NotInformationMeasureError);
}
