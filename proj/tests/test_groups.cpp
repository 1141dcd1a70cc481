#include "doctest.h"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <set>
#include <vector>

#include "haarent/error.hpp"
#include "haarent/groups.hpp"

using namespace haarent;

namespace {

// Closed subsets containing the identity, by exhaustive bitmask search.
std::set<std::vector<std::size_t>> brute_force_subgroups(const Group& g) {
    const std::size_t n = g.order();
    const std::size_t e = g.identity().index();
    std::set<std::vector<std::size_t>> out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (!(mask >> e & 1u)) continue;
        bool closed = true;
        for (std::size_t a = 0; a < n && closed; ++a) {
            if (!(mask >> a & 1u)) continue;
            for (std::size_t b = 0; b < n; ++b) {
                if (!(mask >> b & 1u)) continue;
                auto c = g.compose(g.element(a), g.element(b)).index();
                if (!(mask >> c & 1u)) {
                    closed = false;
                    break;
                }
            }
        }
        if (!closed) continue;
        std::vector<std::size_t> elems;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1u) elems.push_back(i);
        out.insert(elems);
    }
    return out;
}

void check_axioms(const Group& g) {
    const auto els = g.elements();
    const auto e = g.identity();
    for (const auto& a : els) {
        CHECK(g.compose(a, e) == a);
        CHECK(g.compose(e, a) == a);
        CHECK(g.compose(a, g.inverse(a)) == e);
        for (const auto& b : els)
            for (const auto& c : els) REQUIRE(g.compose(g.compose(a, b), c) == g.compose(a, g.compose(b, c)));
    }
}

}  // namespace

TEST_CASE("finite groups satisfy the group axioms") {
    for (const char* d : {"Z1", "Z6", "D3", "D4", "S3", "S4"}) {
        CAPTURE(d);
        check_axioms(parse_group(d));
    }
}

TEST_CASE("orders and dihedral relations") {
    CHECK(Group::cyclic(12).order() == 12);
    CHECK(Group::dihedral(6).order() == 12);
    CHECK(Group::symmetric(5).order() == 120);
    auto d = Group::dihedral(5);
    auto r = d.dihedral_element(1, false);
    auto s = d.dihedral_element(0, true);
    auto p = d.identity();
    for (int i = 0; i < 5; ++i) p = d.compose(p, r);
    CHECK(p == d.identity());
    CHECK(d.compose(s, s) == d.identity());
    CHECK(d.compose(d.compose(s, r), s) == d.inverse(r));
}

TEST_CASE("symmetric group composes permutations") {
    auto g = Group::symmetric(3);
    auto a = g.permutation_element({1, 0, 2});
    auto b = g.permutation_element({0, 2, 1});
    // (a b)(i) = a(b(i))
    auto ab = g.permutation(g.compose(a, b));
    std::vector<int> expect(3);
    auto pa = g.permutation(a), pb = g.permutation(b);
    for (int i = 0; i < 3; ++i) expect[i] = pa[pb[i]];
    CHECK(ab == expect);
    CHECK_THROWS_AS(g.permutation_element({0, 0, 1}), DomainError);
}

TEST_CASE("subgroup enumeration matches brute force") {
    for (const char* d : {"Z1", "Z6", "Z12", "D3", "D4", "D6", "S3"}) {
        CAPTURE(d);
        auto g = parse_group(d);
        auto subs = subgroups(g);
        std::set<std::vector<std::size_t>> got;
        for (const auto& s : subs) got.insert(s.elements);
        CHECK(got.size() == subs.size());
        CHECK(got == brute_force_subgroups(g));
        for (std::size_t i = 1; i < subs.size(); ++i)
            CHECK(subs[i - 1].elements.size() <= subs[i].elements.size());
    }
}

TEST_CASE("known subgroup counts") {
    // d(n) for cyclic; d(n) + sigma(n) for dihedral
    CHECK(subgroups(Group::cyclic(30)).size() == 8);
    CHECK(subgroups(Group::dihedral(8)).size() == 4 + 15);
    CHECK(subgroups(Group::symmetric(4)).size() == 30);
    CHECK(subgroups(Group::symmetric(5)).size() == 156);
}

TEST_CASE("Lagrange and induced groups") {
    auto g = Group::symmetric(4);
    for (const auto& s : subgroups(g)) {
        CHECK(g.order() % s.elements.size() == 0);
        CHECK(s.induced.order() == s.elements.size());
    }
    CHECK_THROWS_AS(g.induced({0, 1, 2}, "bad"), DomainError);
}

TEST_CASE("serial and parallel enumeration agree") {
    auto g = Group::dihedral(6);
    auto a = subgroups(g, Execution::Serial);
    auto b = subgroups(g, Execution::Parallel);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].elements == b[i].elements);
}

TEST_CASE("continuous groups canonicalize and reject bad elements") {
    auto c = Group::circle();
    CHECK(c.real_element(2 * std::numbers::pi + 1).value() == doctest::Approx(1.0));
    auto m = Group::multiplicative_reals(0.1, 10);
    CHECK_THROWS_AS(m.real_element(-1), DomainError);
    CHECK(m.compose(m.real_element(2), m.real_element(3)).value() == 6);
    CHECK(m.inverse(m.real_element(4)).value() == 0.25);
    CHECK_THROWS_AS(m.order(), UnsupportedOperationError);
}

TEST_CASE("group descriptors") {
    CHECK(parse_group("Z6").order() == 6);
    CHECK(parse_group("R+add:[0,10]").window().hi == 10);
    CHECK(parse_group("R*mul:[0.1,100]").kind() == GroupKind::MultiplicativePositiveReals);
    CHECK_THROWS_AS(parse_group("Q8"), ParseError);
    CHECK_THROWS_AS(parse_group("Z"), ParseError);
    CHECK_THROWS_AS(parse_group("S9"), ParseError);
    CHECK_THROWS_AS(parse_group("R*mul:[0,1]"), ParseError);
}

TEST_CASE("Haar measures are translation invariant") {
    auto z = Group::cyclic(10);
    auto hz = haar(z).measure();
    auto a = MeasurableSet::atoms({1, 4, 5});
    for (const auto& g : z.elements()) CHECK(mass(hz, translate_set(z, g, a)) == 3.0);

    auto add = Group::additive_reals(-5, 5);
    auto ha = haar(add).measure();
    auto s = MeasurableSet::segments({{-1, 0}, {0.5, 2}});
    for (double t : {-2.5, 0.25, 3.0})
        CHECK(mass(ha, translate_set(add, add.real_element(t), s)) == doctest::Approx(2.5).epsilon(1e-12));

    auto mul = Group::multiplicative_reals(0.01, 100);
    auto hm = haar(mul).measure();
    auto iv = MeasurableSet::interval(2, 5);
    for (double t : {0.1, 2.0, 10.0})
        CHECK(mass(hm, translate_set(mul, mul.real_element(t), iv)) ==
              doctest::Approx(std::log(2.5)).epsilon(1e-10));

    auto chart = haar_log_chart(mul);
    CHECK(total_mass(chart) == doctest::Approx(std::log(1e4)).epsilon(1e-12));
}

TEST_CASE("translates leaving the window overflow, the circle wraps") {
    auto add = Group::additive_reals(0, 1);
    CHECK_THROWS_AS(translate_set(add, add.real_element(0.8), MeasurableSet::interval(0.2, 0.5)),
                    WindowOverflowError);
    auto c = Group::circle();
    auto moved = translate_set(c, c.real_element(0.5), MeasurableSet::interval(5.5, 6.2));
    CHECK(moved.size() == doctest::Approx(0.7).epsilon(1e-12));
    CHECK(moved.pieces().size() == 2);
}

TEST_CASE("pushforward preserves mass of translated sets") {
    auto add = Group::additive_reals(0, 10);
    auto m = Measure(add.space(), Density::function([](double x) { return 1 + x; }))
                 .restricted(MeasurableSet::interval(0, 5));
    auto g = add.real_element(2);
    auto pushed = translate_measure(add, g, m);
    auto a = MeasurableSet::interval(1, 3);
    CHECK(mass(pushed, translate_set(add, g, a)) == doctest::Approx(mass(m, a)).epsilon(1e-12));

    auto mul = Group::multiplicative_reals(0.1, 50);
    auto w = Measure(mul.space(), Density::function([](double x) { return x; }))
                 .restricted(MeasurableSet::interval(0.1, 10));
    auto h = mul.real_element(3);
    auto pw = translate_measure(mul, h, w);
    auto b = MeasurableSet::interval(1, 2);
    CHECK(mass(pw, translate_set(mul, h, b)) == doctest::Approx(mass(w, b)).epsilon(1e-10));
}

TEST_CASE("invariance checks") {
    auto add = Group::additive_reals(0, 10);
    auto a = MeasurableSet::interval(1, 2);
    auto samples = sample_translations(add, a, 16);
    CHECK(samples.size() == 16);
    auto ok = check_invariance(haar(add).measure(), add, {a}, samples, 1e-10);
    CHECK(ok.passed);
    Measure tilted(add.space(), Density::function([](double x) { return x; }));
    CHECK_FALSE(check_invariance(tilted, add, {a}, samples, 1e-10).passed);

    auto d = Group::dihedral(4);
    CHECK(sample_translations(d, MeasurableSet::atoms({0}), 3).size() == 8);
}
