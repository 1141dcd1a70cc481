#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "haarent/entropy.hpp"
#include "haarent/error.hpp"
#include "haarent/maxent.hpp"

using namespace haarent;

namespace {

// Independent finite-space oracles over counting measure.
double oracle_finite(const std::vector<double>& w) {
    double m = 0, acc = 0;
    for (double v : w) m += v;
    for (double v : w)
        if (v > 0) acc += v * std::log(v);
    return std::log(m) - acc / m;
}

double oracle_shannon(const std::vector<double>& w) {
    double m = 0, h = 0;
    for (double v : w) m += v;
    for (double v : w)
        if (v > 0) h -= (v / m) * std::log(v / m);
    return h;
}

Measure table_measure(const Space& sp, std::vector<double> w) { return Measure(sp, Density::table(sp, std::move(w))); }

std::vector<double> random_weights(std::size_t n, std::mt19937_64& rng, double lo = 0.0, double hi = 1.0) {
    std::vector<double> w(n);
    for (auto& v : w) v = lo + (hi - lo) * (1.0 - uniform01(rng));
    return w;
}

}  // namespace

TEST_CASE("finite form against the Shannon oracle on counting measure") {
    std::mt19937_64 rng(11);
    auto sp = Space::finite(std::vector<std::string>{"a", "b", "c", "d", "e", "f"});
    auto nu = Measure::base(sp);
    for (int t = 0; t < 100; ++t) {
        auto w = random_weights(6, rng, 0.0, 3.0);
        auto eta = table_measure(sp, w);
        auto v = entropy_finite(eta, nu, sp.whole());
        CHECK(v.nats == doctest::Approx(oracle_finite(w)).epsilon(1e-13));
        CHECK(v.nats == doctest::Approx(oracle_shannon(w)).epsilon(1e-12));
        CHECK(v.form == EntropyForm::Finite);
    }
}

TEST_CASE("closed forms on an interval") {
    auto sp = Space::interval(0, 1);
    auto leb = Measure::base(sp);
    Measure lin(sp, Density::function([](double x) { return 2 * x; }));
    // -int 2x log 2x dx = 1/2 - log 2
    const double expect = 0.5 - std::log(2.0);
    CHECK(entropy_prob(lin, leb, sp.whole()).nats == doctest::Approx(expect).epsilon(1e-10));
    CHECK(entropy_finite(lin, leb, sp.whole()).nats == doctest::Approx(expect).epsilon(1e-10));
    // scaling does not change the finite form
    CHECK(entropy_finite(lin.scaled(5), leb, sp.whole()).nats == doctest::Approx(expect).epsilon(1e-10));

    auto wide = Space::interval(0, 2);
    auto u = Measure::base(wide);
    auto s = MeasurableSet::interval(0, 2);
    auto v = entropy_finite(u, u, s);
    CHECK(v.nats == doctest::Approx(std::log(2.0)).epsilon(1e-12));
    CHECK(v.mass == doctest::Approx(2.0));
}

TEST_CASE("the three worked examples") {
    const double a = 2, b = 8;
    auto add = Group::additive_reals(0, 10);
    auto nu = haar(add).measure();
    CHECK(entropy_finite(nu, nu, MeasurableSet::interval(a, b)).nats ==
          doctest::Approx(std::log(b - a)).epsilon(1e-12));

    auto mul = Group::multiplicative_reals(0.5, 20);
    auto mu = haar(mul).measure();
    auto s = MeasurableSet::interval(a, b);
    CHECK(entropy_finite(mu, mu, s).nats == doctest::Approx(std::log(std::log(b / a))).epsilon(1e-10));
    auto leb = Measure::base(mul.space());
    CHECK(entropy_prob(mu, leb, s).nats == doctest::Approx(0.5 * std::log(b / a) * std::log(a * b)).epsilon(1e-10));
    CHECK(entropy_finite(mu, leb, s).nats ==
          doctest::Approx(std::log(std::log(b / a)) + 0.5 * std::log(a * b)).epsilon(1e-10));
}

TEST_CASE("probability form warns off unit mass") {
    auto sp = Space::interval(0, 3);
    auto leb = Measure::base(sp);
    auto v = entropy_prob(leb, leb, sp.whole());
    CHECK_FALSE(v.warning.empty());
    CHECK(v.nats == 0.0);
    auto ok = entropy_prob(leb.scaled(1.0 / 3.0), leb, sp.whole());
    CHECK(ok.warning.empty());
}

TEST_CASE("degenerate and invalid inputs") {
    auto sp = Space::finite(std::vector<std::string>{"a", "b"});
    auto nu = Measure::base(sp);
    auto zero = table_measure(sp, {0.0, 0.0});
    CHECK_THROWS_AS(entropy_finite(zero, nu, sp.whole()), DegenerateMeasureError);
    WeightFunction neg{[](double) { return -1.0; }, {}};
    CHECK_THROWS_AS(entropy_weight(neg, nu, sp.whole()), DomainError);
    auto holey = table_measure(sp, {1.0, 0.0});
    CHECK_THROWS_AS(entropy_finite(nu, holey, sp.whole()), AbsoluteContinuityError);
}

TEST_CASE("uniform measure maximizes entropy") {
    std::mt19937_64 rng(3);
    auto sp = Space::finite(std::vector<std::string>{"a", "b", "c", "d", "e"});
    auto nu = table_measure(sp, {1.0, 2.0, 0.5, 4.0, 1.5});
    auto s = MeasurableSet::atoms({0, 1, 3});
    const double bound = std::log(7.0);
    CHECK(entropy_finite(uniform_measure(nu, s), nu, s).nats == doctest::Approx(bound).epsilon(1e-14));
    for (int t = 0; t < 200; ++t) {
        auto eta = table_measure(sp, random_weights(5, rng, 0.0, 2.0));
        CHECK(entropy_finite(eta, nu, s).nats <= bound + 1e-12);
    }
}

TEST_CASE("weight form") {
    auto sp = Space::interval(0, 3);
    auto nu = Measure::base(sp);
    auto s = MeasurableSet::segments({{0, 1}, {2, 3}});
    for (double a : {0.0, 1.0, 7.0}) {
        WeightFunction phi{[a](double) { return a; }, {}};
        CHECK(entropy_weight(phi, nu, s).nats == doctest::Approx(std::log(2.0)).epsilon(1e-12));
    }
    // phi = x on [0, 1]: log Z + int x e^-x / Z, Z = 1 - 1/e, int x e^-x = 1 - 2/e
    auto unit = Space::interval(0, 1);
    WeightFunction lin{[](double x) { return x; }, {}};
    const double e = std::numbers::e;
    const double z = 1 - 1 / e;
    CHECK(entropy_weight(lin, Measure::base(unit), unit.whole()).nats ==
          doctest::Approx(std::log(z) + (1 - 2 / e) / z).epsilon(1e-12));

    // infinite weight contributes nothing
    WeightFunction half{[](double x) { return x < 0.5 ? 0.0 : INFINITY; }, {0.5}};
    CHECK(entropy_weight(half, Measure::base(unit), unit.whole()).nats ==
          doctest::Approx(std::log(0.5)).epsilon(1e-12));
}

TEST_CASE("weight form agrees with finite form") {
    std::mt19937_64 rng(5);
    auto sp = Space::finite(std::vector<std::string>{"a", "b", "c", "d"});
    auto nu = table_measure(sp, {1.0, 2.0, 3.0, 0.5});
    for (int t = 0; t < 100; ++t) {
        auto m = Measure::relative_to(nu, Density::table(sp, random_weights(4, rng)));
        CHECK(entropy_weight(weight_of(m, nu), nu, sp.whole()).nats ==
              doctest::Approx(entropy_finite(m, nu, sp.whole()).nats).epsilon(1e-12));
    }
}

TEST_CASE("change of reference") {
    std::mt19937_64 rng(9);
    auto sp = Space::finite(std::vector<std::string>{"a", "b", "c", "d", "e"});
    for (int t = 0; t < 100; ++t) {
        auto nw = random_weights(5, rng, 0.2, 2.0);
        auto mw = random_weights(5, rng, 0.2, 2.0);
        auto rw = random_weights(5, rng, 0.0, 2.0);
        auto nu = table_measure(sp, nw), mu = table_measure(sp, mw), rho = table_measure(sp, rw);
        // oracle: finite form of rho w.r.t. nu computed from its own definition
        std::vector<double> q(5);
        double m = 0, acc = 0;
        for (int i = 0; i < 5; ++i) {
            m += rw[i];
            q[i] = rw[i] / nw[i];
            if (q[i] > 0) acc += q[i] * std::log(q[i]) * nw[i];
        }
        const double direct = std::log(m) - acc / m;
        CHECK(change_reference(rho, mu, nu, sp.whole()).nats == doctest::Approx(direct).epsilon(1e-12));
    }
}

TEST_CASE("entropic gap") {
    auto g = Group::cyclic(4);
    auto h = haar(g);
    auto sp = g.space();
    std::vector<double> xw{0.5, 1.0, 0.25, 0.8}, rw{1.0, 2.0, 0.0, 3.0};
    auto xi = table_measure(sp, xw), rho = table_measure(sp, rw);
    double oracle = 0;
    for (int i = 0; i < 4; ++i) oracle -= rw[i] * std::log(xw[i]);
    oracle /= 6.0;
    const double gap = entropic_gap(rho, xi, h, sp.whole());
    CHECK(gap == doctest::Approx(oracle).epsilon(1e-14));
    CHECK(gap >= 0);
    auto diff = entropy_finite(rho, h.measure(), sp.whole()).nats - entropy_finite(rho, xi, sp.whole()).nats;
    CHECK(gap == doctest::Approx(diff).epsilon(1e-12));
    CHECK_THROWS_AS(entropic_gap(rho, table_measure(sp, {2, 1, 1, 1}), h, sp.whole()), NotInformationMeasureError);
}

TEST_CASE("nonnegativity certificate") {
    auto sp = Space::interval(0, 1);
    auto leb = Measure::base(sp);
    auto wide = Space::interval(0, 2);
    auto c1 = nonneg_certificate(Measure::base(wide), Measure::base(wide), wide.whole());
    CHECK(c1.verdict == NonnegVerdict::MassAtLeastOne);
    CHECK_THROWS_AS(nonneg_certificate(leb.scaled(2), leb, sp.whole()), NotInformationMeasureError);

    // mass 0.1 uniform: entropy log 0.1 < 0
    auto small = MeasurableSet::interval(0, 0.1);
    auto c2 = nonneg_certificate(leb, leb, small);
    CHECK(c2.verdict == NonnegVerdict::MayBeNegative);
    CHECK(entropy_finite(leb, leb, small).nats < 0);

    auto fin = Space::finite(std::vector<std::string>{"a", "b"});
    auto c3 = nonneg_certificate(table_measure(fin, {0.1, 0.1}), Measure::base(fin), fin.whole());
    CHECK(c3.verdict == NonnegVerdict::ConditionHolds);
    CHECK(entropy_finite(table_measure(fin, {0.1, 0.1}), Measure::base(fin), fin.whole()).nats ==
          doctest::Approx(std::log(2.0)).epsilon(1e-14));
}

TEST_CASE("certified condition and computed sign agree") {
    // the condition is equivalent to the finite form being >= 0
    std::mt19937_64 rng(21);
    auto sp = Space::finite(std::vector<std::string>{"a", "b", "c"});
    auto nu = Measure::base(sp);
    for (int t = 0; t < 300; ++t) {
        auto w = random_weights(3, rng, 0.0, 0.3);
        auto eta = table_measure(sp, w);
        auto cert = nonneg_certificate(eta, nu, sp.whole());
        const double s = entropy_finite(eta, nu, sp.whole()).nats;
        if (cert.verdict != NonnegVerdict::MayBeNegative) CHECK(s >= -1e-12);
        else CHECK(s <= 1e-12);
    }
}

TEST_CASE("monotonicity over subgroups can fail") {
    // counting reference: the entropy of xi is the Shannon entropy of its
    // normalized weights, so concentrating xi outside H lowers S(xi, G)
    auto g = Group::cyclic(4);
    auto ref = haar(g).measure();
    const double eps = 1e-3;
    auto xi = table_measure(g.space(), {eps, 1.0, eps, 0.0});
    auto h = MeasurableSet::atoms({0, 2});
    const double on_h = entropy_finite(xi, ref, h).nats;
    const double on_g = entropy_finite(xi, ref, g.space().whole()).nats;
    CHECK(on_h == doctest::Approx(std::log(2.0)).epsilon(1e-14));
    CHECK(on_g < on_h);

    // certification of A \ H does not rule this out
    auto rest = g.space().whole().minus(h);
    CHECK(nonneg_certificate(xi, ref, rest).verdict == NonnegVerdict::MassAtLeastOne);
}

TEST_CASE("entropy is identical under serial and parallel quadrature") {
    auto sp = Space::interval(0, 4);
    Measure m(sp, Density::piecewise_linear({0, 1, 2.5, 4}, {0.2, 1.7, 0.4, 1.1}));
    Integrator serial, parallel;
    serial.exec = Execution::Serial;
    auto s = MeasurableSet::segments({{0, 1.2}, {2, 4}});
    CHECK(entropy_finite(m, Measure::base(sp), s, serial).nats ==
          entropy_finite(m, Measure::base(sp), s, parallel).nats);
}
