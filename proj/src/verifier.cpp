#include "haarent/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <map>
#include <numbers>
#include <sstream>

#include "json.hpp"

#include "haarent/error.hpp"
#include "haarent/maxent.hpp"
#include "haarent/supnorm.hpp"

namespace haarent {

namespace gen {

namespace {

double open_unit(std::mt19937_64& rng) { return 1.0 - uniform01(rng); }  // (0, 1]

std::size_t pick(std::size_t n, std::mt19937_64& rng) {
    return std::min(n - 1, static_cast<std::size_t>(uniform01(rng) * static_cast<double>(n)));
}

std::vector<double> random_edges(double lo, double hi, std::size_t pieces, std::mt19937_64& rng) {
    std::vector<double> edges{lo, hi};
    for (std::size_t i = 1; i < pieces; ++i) edges.push_back(lo + (hi - lo) * uniform01(rng));
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

}  // namespace

std::vector<double> unit_weights(std::size_t n, std::mt19937_64& rng) { return positive_weights(n, 1.0, rng); }

std::vector<double> positive_weights(std::size_t n, double hi, std::mt19937_64& rng) {
    std::vector<double> w(n);
    for (auto& v : w) v = hi * open_unit(rng);
    return w;
}

Density piecewise_constant(double lo, double hi, double vmin, double vmax, std::mt19937_64& rng,
                           std::size_t max_pieces) {
    const auto edges = random_edges(lo, hi, 1 + pick(max_pieces, rng), rng);
    std::vector<double> values(edges.size() - 1);
    for (auto& v : values) v = vmin + (vmax - vmin) * open_unit(rng);
    return Density::piecewise_constant(edges, values);
}

Density piecewise_linear(double lo, double hi, double vmin, double vmax, std::mt19937_64& rng,
                         std::size_t max_knots) {
    const auto knots = random_edges(lo, hi, 1 + pick(std::max<std::size_t>(max_knots, 2) - 1, rng), rng);
    std::vector<double> values(knots.size());
    for (auto& v : values) v = vmin + (vmax - vmin) * open_unit(rng);
    return Density::piecewise_linear(knots, values);
}

MeasurableSet finite_subset(std::size_t n, std::mt19937_64& rng) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
        if (uniform01(rng) < 0.5) idx.push_back(i);
    if (idx.empty()) idx.push_back(pick(n, rng));
    return MeasurableSet::atoms(std::move(idx));
}

MeasurableSet interval_union(double lo, double hi, std::mt19937_64& rng) {
    const double width = hi - lo;
    std::vector<double> cuts{lo + width * uniform01(rng), lo + width * uniform01(rng)};
    std::sort(cuts.begin(), cuts.end());
    if (cuts[1] - cuts[0] < 0.05 * width) {
        cuts[0] = std::max(lo, cuts[0] - 0.05 * width);
        cuts[1] = std::min(hi, cuts[0] + 0.1 * width);
    }
    std::vector<Segment> pieces{{cuts[0], cuts[1]}};
    if (uniform01(rng) < 0.5) {
        // a second piece carved out of the middle
        const double a = cuts[0] + (cuts[1] - cuts[0]) * (0.2 + 0.2 * uniform01(rng));
        const double b = cuts[0] + (cuts[1] - cuts[0]) * (0.6 + 0.2 * uniform01(rng));
        pieces = {{cuts[0], a}, {b, cuts[1]}};
    }
    return MeasurableSet::segments(std::move(pieces));
}

}  // namespace gen

namespace {

using gen::pick;

constexpr double kTwoPi = 2.0 * std::numbers::pi;
// Exact-arithmetic claims on finite carriers.
constexpr double kFiniteTol = 1e-12;
constexpr double kNonnegTol = 1e-10;

struct Trial {
    const std::string& id;
    std::uint64_t index;
    std::mt19937_64 rng;
    double tol;
    double tol_exact;
    Integrator cfg;

    VerificationReport report(Relation rel, double lhs, double rhs, double tolerance, std::string notes) const {
        return make_report(id, rel, lhs, rhs, tolerance, 0, index, std::move(notes));
    }
    VerificationReport skip(std::string notes) const {
        auto r = make_report(id, Relation::LessEqual, 0.0, 0.0, tol, 0, index, std::move(notes));
        r.skipped = true;
        return r;
    }
};

using Reports = std::vector<VerificationReport>;
using Checker = std::function<Reports(Trial&)>;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

// A reference measure with random sets and measures on it.
struct Setting {
    std::string name;
    Space space;
    Measure nu;
    bool finite;
};

Setting cyclic_setting(std::size_t n) {
    auto g = Group::cyclic(n);
    return {g.name(), g.space(), Measure::base(g.space()), true};
}

Setting interval_setting(double a, double b) {
    auto sp = Space::interval(a, b);
    return {"[" + fmt(a) + "," + fmt(b) + "]", sp, Measure::base(sp), false};
}

MeasurableSet random_set(const Setting& s, std::mt19937_64& rng) {
    if (s.finite) return gen::finite_subset(s.space.atom_count(), rng);
    return gen::interval_union(s.space.lower(), s.space.upper(), rng);
}

// Random measure with density in (vmin, vmax] relative to s.nu.
Measure random_measure(const Setting& s, double vmin, double vmax, std::mt19937_64& rng, bool linear,
                       std::string label) {
    if (s.finite) {
        auto w = gen::positive_weights(s.space.atom_count(), 1.0, rng);
        for (auto& v : w) v = vmin + (vmax - vmin) * v;
        return Measure::relative_to(s.nu, Density::table(s.space, w), std::move(label));
    }
    auto d = linear ? gen::piecewise_linear(s.space.lower(), s.space.upper(), vmin, vmax, rng)
                    : gen::piecewise_constant(s.space.lower(), s.space.upper(), vmin, vmax, rng);
    return Measure::relative_to(s.nu, std::move(d), std::move(label));
}

double tol_for(const Setting& s, const Trial& t) { return s.finite ? t.tol_exact : t.tol; }

// Groups with their Haar measure and a region for random sets.
struct GroupSetting {
    Group group;
    Measure haar;
    Segment region;  // continuous kinds: where random sets are drawn
    std::vector<Subgroup> subs;
};

const std::vector<GroupSetting>& group_settings() {
    static const std::vector<GroupSetting> settings = [] {
        std::vector<GroupSetting> out;
        for (const char* d : {"Z12", "D6", "S4", "R+add:[0,6]", "R*mul:[0.5,8]", "circle"}) {
            auto g = parse_group(d);
            auto h = haar(g).measure();
            Segment region{g.window().lo, g.window().hi};
            if (g.kind() == GroupKind::AdditiveReals) region = {0.0, 3.0};
            if (g.kind() == GroupKind::MultiplicativePositiveReals) region = {0.5, 2.5};
            std::vector<Subgroup> subs;
            if (g.is_finite()) subs = subgroups(g, Execution::Serial);
            out.push_back({g, h, region, std::move(subs)});
        }
        return out;
    }();
    return settings;
}

constexpr std::size_t kFiniteGroupSettings = 3;

MeasurableSet random_group_set(const GroupSetting& gs, std::mt19937_64& rng) {
    if (gs.group.is_finite()) return gen::finite_subset(gs.group.order(), rng);
    return gen::interval_union(gs.region.lo, gs.region.hi, rng);
}

// Information measure w.r.t. the Haar measure, density in (vmin, 1].
Measure random_information(const GroupSetting& gs, std::mt19937_64& rng, double vmin = 0.0) {
    const auto& sp = gs.group.space();
    if (gs.group.is_finite()) {
        auto w = gen::unit_weights(sp.atom_count(), rng);
        for (auto& v : w) v = vmin + (1.0 - vmin) * v;
        return Measure::relative_to(gs.haar, Density::table(sp, w), "xi");
    }
    return Measure::relative_to(gs.haar, gen::piecewise_constant(sp.lower(), sp.upper(), vmin, 1.0, rng), "xi");
}

double haar_tol(const GroupSetting& gs, const Trial& t) { return gs.group.is_finite() ? t.tol_exact : t.tol; }

std::string scope(const GroupSetting& gs) {
    return "group=" + gs.group.name() + (gs.group.is_finite() ? " scope=exhaustive" : " scope=sampled");
}

std::optional<GroupElement> random_translation(const GroupSetting& gs, const MeasurableSet& a,
                                               std::mt19937_64& rng) {
    const auto samples = sample_translations(gs.group, a, 16);
    if (samples.empty()) return std::nullopt;
    return samples[pick(samples.size(), rng)];
}

const Subgroup& random_subgroup(const GroupSetting& gs, std::mt19937_64& rng) {
    return gs.subs[pick(gs.subs.size(), rng)];
}

// Random subgroup containing h (h itself with probability about 1/4).
const Subgroup& random_oversubgroup(const GroupSetting& gs, const Subgroup& h, std::mt19937_64& rng) {
    if (uniform01(rng) < 0.25) return h;
    std::vector<const Subgroup*> over;
    const auto hs = h.as_set();
    for (const auto& s : gs.subs)
        if (hs.subset_of(s.as_set())) over.push_back(&s);
    return *over[pick(over.size(), rng)];
}

double entropy(const Measure& m, const Measure& ref, const MeasurableSet& s, const Integrator& cfg) {
    return entropy_finite(m, ref, s, cfg).nats;
}

// ---- claims ---------------------------------------------------------------

Reports lemma_finite_entropy(Trial& t) {
    const auto st = t.index % 2 == 0 ? cyclic_setting(16) : interval_setting(0.0, 2.0);
    const auto eta = random_measure(st, 0.0, 3.0, t.rng, true, "eta");
    const auto s = random_set(st, t.rng);
    const double lhs = entropy(eta, st.nu, s, t.cfg);
    const double m = mass(eta, s, t.cfg);
    const double rhs = entropy_prob(eta.scaled(1.0 / m), st.nu, s, t.cfg).nats;
    return {t.report(Relation::Equal, lhs, rhs, tol_for(st, t), "space=" + st.name + " set=" + to_string(s))};
}

Reports prop_uniform_max(Trial& t) {
    const auto st = t.index % 2 == 0 ? cyclic_setting(16) : interval_setting(0.0, 2.0);
    const auto eta = random_measure(st, 0.0, 3.0, t.rng, t.index % 4 < 2, "eta");
    const auto s = random_set(st, t.rng);
    const double bound = std::log(mass(st.nu, s, t.cfg));
    const double attained = entropy(uniform_measure(st.nu, s, t.cfg), st.nu, s, t.cfg);
    return {t.report(Relation::LessEqual, entropy(eta, st.nu, s, t.cfg), bound, tol_for(st, t), "space=" + st.name),
            t.report(Relation::Equal, attained, bound, tol_for(st, t), "space=" + st.name + " part=uniform")};
}

Reports prop_concavity(Trial& t) {
    const auto nu = gen::positive_weights(8, 2.0, t.rng);
    auto r = concavity_probe(nu, 5, t.rng());
    r.claim_id = t.id;
    r.trial = t.index;
    r.seed = 0;
    return {r};
}

Reports weight_constant_invariance(Trial& t) {
    const auto st = t.index % 2 == 0 ? cyclic_setting(16) : interval_setting(0.0, 2.0);
    const double a = t.index % 5 == 0 ? 0.0 : 10.0 * uniform01(t.rng);
    const WeightFunction phi{[a](double) { return a; }, {}};
    const auto s = random_set(st, t.rng);
    const double lhs = entropy_weight(phi, st.nu, s, t.cfg).nats;
    const double rhs = std::log(mass(st.nu, s, t.cfg));
    return {t.report(Relation::Equal, lhs, rhs, tol_for(st, t), "space=" + st.name + " a=" + fmt(a))};
}

Reports weight_form_agreement(Trial& t) {
    const auto st = t.index % 2 == 0 ? cyclic_setting(16) : interval_setting(0.0, 2.0);
    const auto m = random_measure(st, 0.0, 1.0, t.rng, t.index % 4 < 2, "m");
    const auto s = random_set(st, t.rng);
    const double lhs = entropy_weight(weight_of(m, st.nu), st.nu, s, t.cfg).nats;
    const double rhs = entropy(m, st.nu, s, t.cfg);
    return {t.report(Relation::Equal, lhs, rhs, tol_for(st, t), "space=" + st.name)};
}

Reports prop_supnorm_bounds(Trial& t) {
    static const GroupSetting additive = [] {
        auto g = Group::additive_reals(0.0, 10.0);
        return GroupSetting{g, haar(g).measure(), {0.0, 10.0}, {}};
    }();
    const GroupSetting& gs = t.index % 2 == 0 ? group_settings()[0] : additive;
    auto rho = random_information(gs, t.rng).with_label("rho");
    const auto& sp = gs.group.space();
    rho = sup_normalize(rho, gs.haar, gs.haar, sp.whole()).rho;
    MeasurableSet a;
    if (gs.group.is_finite()) {
        a = gen::finite_subset(gs.group.order(), t.rng);
    } else {
        const double lo = 8.0 * uniform01(t.rng);
        a = MeasurableSet::interval(lo, lo + 0.1 + 1.9 * uniform01(t.rng));
    }
    const auto samples = sample_translations(gs.group, a, 50);
    auto bound = check_translate_bound(rho, gs.haar, gs.group, a, samples, haar_tol(gs, t), t.cfg);
    bound.claim_id = t.id;
    bound.trial = t.index;
    // xi = c * nu with c = 1
    const double ra = mass(rho, a, t.cfg);
    const double xa = mass(gs.haar, a, t.cfg);
    return {bound, t.report(Relation::LessEqual, ra, xa, haar_tol(gs, t), "part=ii " + scope(gs))};
}

Reports haar_supnorm_consistency(Trial& t) {
    const auto& gs = group_settings()[t.index % group_settings().size()];
    const double s1 = 0.5 + 4.5 * uniform01(t.rng);
    const double s2 = 0.5 + 4.5 * uniform01(t.rng);
    const auto h1 = haar(gs.group, s1).measure();
    const auto h2 = haar(gs.group, s2).measure();
    const auto ref = Measure::base(gs.group.space());
    const auto n = sup_normalize(h1, h2, ref, gs.group.space().whole());
    const auto a = random_group_set(gs, t.rng);
    return {t.report(Relation::Equal, mass(n.rho, a, t.cfg), mass(n.xi, a, t.cfg), haar_tol(gs, t),
                     scope(gs) + " scales=" + fmt(s1) + "," + fmt(s2))};
}

Reports haar_invariance(Trial& t) {
    const auto& gs = group_settings()[t.index % group_settings().size()];
    const auto a = random_group_set(gs, t.rng);
    auto r = check_invariance(gs.haar, gs.group, {a}, sample_translations(gs.group, a, 16), haar_tol(gs, t), t.cfg);
    r.claim_id = t.id;
    r.trial = t.index;
    return {r};
}

Reports lemma_nonnegativity(Trial& t) {
    Reports out;
    const auto st = t.index % 2 == 0 ? cyclic_setting(16) : interval_setting(0.0, 2.0);
    // mass >= 1 by construction: densities in (0.5, 1] over a carrier of size >= 2
    {
        const auto m = random_measure(st, 0.5, 1.0, t.rng, false, "mu");
        const auto s = st.space.whole();
        const auto cert = nonneg_certificate(m, st.nu, s, t.cfg);
        auto r = t.report(Relation::LessEqual, 0.0, entropy(m, st.nu, s, t.cfg), kNonnegTol,
                          "space=" + st.name + " part=mass>=1 verdict=" + to_string(cert.verdict));
        if (cert.verdict == NonnegVerdict::MayBeNegative) r.passed = false;
        out.push_back(std::move(r));
    }
    // certificate soundness on small sets
    {
        const auto m = random_measure(st, 0.0, 1.0, t.rng, false, "mu");
        MeasurableSet s;
        if (st.finite) {
            s = MeasurableSet::atoms({pick(16, t.rng), pick(16, t.rng)});
        } else {
            const double lo = 1.5 * uniform01(t.rng);
            s = MeasurableSet::interval(lo, lo + 0.05 + 0.45 * uniform01(t.rng));
        }
        const auto cert = nonneg_certificate(m, st.nu, s, t.cfg);
        const std::string notes = "space=" + st.name + " part=certificate verdict=" + to_string(cert.verdict);
        if (cert.verdict == NonnegVerdict::MayBeNegative) out.push_back(t.skip(notes));
        else out.push_back(t.report(Relation::LessEqual, 0.0, entropy(m, st.nu, s, t.cfg), kNonnegTol, notes));
    }
    return out;
}

Reports thm_general_inequality(Trial& t) {
    const auto& gs = group_settings()[t.index % group_settings().size()];
    const auto xi = random_information(gs, t.rng);
    const auto rho = random_information(gs, t.rng).with_label("rho");
    const auto a = random_group_set(gs, t.rng);
    const double s_xi = entropy(rho, xi, a, t.cfg);
    const double s_haar = entropy(rho, gs.haar, a, t.cfg);
    const double s_max = entropy(gs.haar, gs.haar, a, t.cfg);
    const double tol = haar_tol(gs, t);
    return {t.report(Relation::LessEqual, s_xi, s_haar, tol, scope(gs) + " part=reference"),
            t.report(Relation::LessEqual, s_haar, s_max, tol, scope(gs) + " part=haar-max")};
}

// S_{mu_H}(xi, H) with mu_H the restriction of mu_G to H.
double subgroup_entropy(const GroupSetting& gs, const Measure& xi, const MeasurableSet& h, const Integrator& cfg) {
    return entropy(xi.restricted(h), gs.haar.restricted(h), h, cfg);
}

Reports relative_symmetry(Trial& t, const GroupSetting& gs, const Measure& xi, const MeasurableSet& h,
                          const MeasurableSet& a, const std::string& kind) {
    const double lhs = subgroup_entropy(gs, xi, h, t.cfg);
    const double rhs = entropy(xi, gs.haar, a, t.cfg);
    const std::string notes = "group=" + gs.group.name() + " A=" + kind + " |H|=" +
                              std::to_string(h.atom_indices().size()) +
                              " |A|=" + std::to_string(a.atom_indices().size());
    if (a == h) return {t.report(Relation::Equal, lhs, rhs, t.tol_exact, notes + " case=equal")};
    const auto rest = a.minus(h);
    if (!(mass(xi, rest, t.cfg) > 0.0)) return {t.skip(notes + " case=xi(A\\H)=0")};
    const auto cert = nonneg_certificate(xi, gs.haar, rest, t.cfg, t.tol_exact);
    if (cert.verdict == NonnegVerdict::MayBeNegative) return {t.skip(notes + " case=uncertified")};
    return {t.report(Relation::Less, lhs, rhs, t.tol_exact, notes + " case=strict verdict=" + to_string(cert.verdict))};
}

Reports thm_relative_symmetry(Trial& t) {
    const auto& gs = group_settings()[t.index % kFiniteGroupSettings];
    const auto xi = random_information(gs, t.rng);
    const auto& h = random_subgroup(gs, t.rng);
    const auto& a = random_oversubgroup(gs, h, t.rng);
    return relative_symmetry(t, gs, xi, h.as_set(), a.as_set(), "subgroup");
}

Reports thm_relative_symmetry_superset(Trial& t) {
    const auto& gs = group_settings()[t.index % kFiniteGroupSettings];
    const auto xi = random_information(gs, t.rng);
    const auto& h = random_subgroup(gs, t.rng);
    std::vector<std::size_t> elems = h.elements;
    if (uniform01(t.rng) >= 0.25)
        for (std::size_t i = 0; i < gs.group.order(); ++i)
            if (!h.as_set().contains_atom(i) && uniform01(t.rng) < 0.5) elems.push_back(i);
    return relative_symmetry(t, gs, xi, h.as_set(), MeasurableSet::atoms(elems), "superset");
}

Reports monotonicity(Trial& t) {
    const auto& gs = group_settings()[t.index % kFiniteGroupSettings];
    const auto xi = random_information(gs, t.rng);
    const auto& h = random_subgroup(gs, t.rng);
    const double lhs = entropy(xi, gs.haar, h.as_set(), t.cfg);
    const double rhs = entropy(xi, gs.haar, gs.group.space().whole(), t.cfg);
    return {t.report(Relation::LessEqual, lhs, rhs, t.tol_exact,
                     "group=" + gs.group.name() + " |H|=" + std::to_string(h.elements.size()))};
}

Reports lemma_discrete_counting(Trial& t) {
    const auto& gs = group_settings()[t.index % kFiniteGroupSettings];
    const auto& h = random_subgroup(gs, t.rng);
    const auto& g = random_oversubgroup(gs, h, t.rng);
    const double lhs = entropy(gs.haar, gs.haar, h.as_set(), t.cfg);
    const double rhs = entropy(gs.haar, gs.haar, g.as_set(), t.cfg);
    const bool exact = lhs == std::log(static_cast<double>(h.elements.size())) &&
                       rhs == std::log(static_cast<double>(g.elements.size()));
    return {t.report(Relation::LessEqual, lhs, rhs, t.tol_exact,
                     "group=" + gs.group.name() + " |H|=" + std::to_string(h.elements.size()) +
                         " |G|=" + std::to_string(g.elements.size()) + (exact ? " exact=log|H|" : " exact=no"))};
}

Reports prop_nested_subgroups(Trial& t) {
    const auto& gs = group_settings()[t.index % kFiniteGroupSettings];
    const auto* h = &random_subgroup(gs, t.rng);
    const auto* g = &random_subgroup(gs, t.rng);
    if (h->elements.size() > g->elements.size()) std::swap(h, g);
    const auto mu_h = uniform_measure(gs.haar, h->as_set(), t.cfg);
    const auto mu_g = uniform_measure(gs.haar, g->as_set(), t.cfg);
    const double lhs = entropy(mu_h, gs.haar, h->as_set(), t.cfg);
    const double rhs = entropy(mu_g, gs.haar, g->as_set(), t.cfg);
    return {t.report(Relation::LessEqual, lhs, rhs, t.tol_exact,
                     "group=" + gs.group.name() + " |H|=" + std::to_string(h->elements.size()) +
                         " |G|=" + std::to_string(g->elements.size()))};
}

Reports prop_translation_invariance(Trial& t) {
    const auto& gs = group_settings()[t.index % group_settings().size()];
    const auto rho = random_information(gs, t.rng).with_label("rho");
    const auto a = random_group_set(gs, t.rng);
    const auto g = random_translation(gs, a, t.rng);
    if (!g) return {t.skip(scope(gs) + " no admissible translation")};
    const auto ga = translate_set(gs.group, *g, a);
    const double tol = haar_tol(gs, t);
    const double s_max = entropy(gs.haar, gs.haar, a, t.cfg);
    const std::string notes = scope(gs) + " g=" + gs.group.describe(*g);
    return {t.report(Relation::LessEqual, entropy(rho, gs.haar, a, t.cfg), s_max, tol, notes + " part=bound"),
            t.report(Relation::Equal, entropy(gs.haar, gs.haar, ga, t.cfg), s_max, tol, notes + " part=invariance")};
}

Reports cor_translation_invariance(Trial& t) {
    const auto& gs = group_settings()[t.index % group_settings().size()];
    const auto rho = random_information(gs, t.rng).with_label("rho");
    const auto a = random_group_set(gs, t.rng);
    const auto g = random_translation(gs, a, t.rng);
    if (!g) return {t.skip(scope(gs) + " no admissible translation")};
    const auto ga = translate_set(gs.group, *g, a);
    return {t.report(Relation::LessEqual, entropy(rho, gs.haar, ga, t.cfg), entropy(gs.haar, gs.haar, a, t.cfg),
                     haar_tol(gs, t), scope(gs) + " g=" + gs.group.describe(*g))};
}

Reports lemma_change_reference(Trial& t) {
    const auto st = t.index % 2 == 0 ? cyclic_setting(10) : interval_setting(0.0, 1.0);
    const auto nu = random_measure(st, 0.2, 2.0, t.rng, true, "nu");
    const auto mu = random_measure(st, 0.2, 2.0, t.rng, true, "mu");
    const auto rho = random_measure(st, 0.0, 2.0, t.rng, true, "rho");
    const auto s = t.index % 4 < 2 ? st.space.whole() : random_set(st, t.rng);
    const double lhs = change_reference(rho, mu, nu, s, t.cfg).nats;
    const double rhs = entropy(rho, nu, s, t.cfg);
    return {t.report(Relation::Equal, lhs, rhs, tol_for(st, t), "space=" + st.name)};
}

Reports entropic_gap_claim(Trial& t) {
    static const std::vector<GroupSetting> settings = [] {
        std::vector<GroupSetting> out;
        for (const char* d : {"Z8", "R+add:[0,1]"}) {
            auto g = parse_group(d);
            out.push_back({g, haar(g).measure(), g.window(), {}});
        }
        return out;
    }();
    const auto& gs = settings[t.index % 2];
    const auto xi = random_information(gs, t.rng);
    Measure rho = gs.group.is_finite()
                      ? Measure::relative_to(gs.haar, Density::table(gs.group.space(),
                                                                     gen::positive_weights(8, 2.0, t.rng)))
                      : Measure::relative_to(gs.haar, gen::piecewise_linear(0.0, 1.0, 0.0, 2.0, t.rng));
    rho = rho.with_label("rho");
    const auto a = t.index % 4 < 2 ? gs.group.space().whole() : random_group_set(gs, t.rng);
    const double gap = entropic_gap(rho, xi, haar(gs.group), a, t.cfg);
    const double diff = entropy(rho, gs.haar, a, t.cfg) - entropy(rho, xi, a, t.cfg);
    return {t.report(Relation::Equal, gap, diff, haar_tol(gs, t), scope(gs) + " part=identity"),
            t.report(Relation::LessEqual, 0.0, gap, kNonnegTol, scope(gs) + " part=nonnegative")};
}

struct Claim {
    ClaimDescriptor descriptor;
    Checker check;
};

const std::vector<Claim>& claims() {
    static const std::vector<Claim> list{
        {{"lemma-finite-entropy", "finite-measure entropy equals the probability form of the normalized measure"},
         lemma_finite_entropy},
        {{"prop-uniform-max", "entropy is at most log nu(s), attained by the uniform measure"}, prop_uniform_max},
        {{"prop-concavity", "entropy is concave on the simplex"}, prop_concavity},
        {{"weight-constant-invariance", "S(a, s) = log nu(s) for every constant weight a >= 0"},
         weight_constant_invariance},
        {{"weight-form-agreement", "weight-function entropy equals finite-measure entropy"}, weight_form_agreement},
        {{"prop-supnorm-bounds", "sup_g rho(gA) <= c inf_g nu(gA) and rho(A) <= xi(A) for sup-normalized measures"},
         prop_supnorm_bounds},
        {{"haar-supnorm-consistency", "sup-normalized Haar measures coincide"}, haar_supnorm_consistency},
        {{"haar-invariance", "Haar measures are translation invariant"}, haar_invariance},
        {{"lemma-nonnegativity", "entropy of an information measure is nonnegative when its mass is at least 1"},
         lemma_nonnegativity},
        {{"thm-general-inequality", "S_xi(rho, A) <= S_haar(rho, A) <= S_haar(haar, A)"}, thm_general_inequality},
        {{"thm-relative-symmetry", "S_{mu_H}(xi, H) <= S_{mu_G}(xi, A) for subgroups H <= A, equality iff A = H"},
         thm_relative_symmetry},
        {{"thm-relative-symmetry-superset", "as thm-relative-symmetry with A any superset of H"},
         thm_relative_symmetry_superset},
        {{"monotonicity", "S_{mu_G}(xi, H) <= S_{mu_G}(xi, G) for subgroups H"}, monotonicity},
        {{"lemma-discrete-counting", "S(nu, H) = log |H| <= log |G| = S(nu, G) under counting measure"},
         lemma_discrete_counting},
        {{"prop-nested-subgroups", "S_nu(mu_H, H) <= S_nu(mu_G, G) when nu(H) <= nu(G)"}, prop_nested_subgroups},
        {{"prop-translation-invariance", "S(rho, A) <= S(haar, A) = S(haar, gA)"}, prop_translation_invariance},
        {{"cor-translation-invariance", "S(rho, gA) <= S(haar, gA) = S(haar, A)"}, cor_translation_invariance},
        {{"lemma-change-reference", "S_nu(rho) = S_mu(rho) - (1/rho(s)) integral log(dmu/dnu) drho"},
         lemma_change_reference},
        {{"entropic-gap", "the gap integral equals S_haar(rho) - S_xi(rho) and is nonnegative"}, entropic_gap_claim},
    };
    return list;
}

const Claim& find_claim(const std::string& id) {
    for (const auto& c : claims())
        if (c.descriptor.id == id) return c;
    std::string known;
    for (const auto& c : claims()) known += (known.empty() ? "" : ", ") + c.descriptor.id;
    throw CatalogError("unknown claim '" + id + "' (known: " + known + ")");
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace

const std::vector<ClaimDescriptor>& claim_catalog() {
    static const std::vector<ClaimDescriptor> list = [] {
        std::vector<ClaimDescriptor> out;
        for (const auto& c : claims()) out.push_back(c.descriptor);
        return out;
    }();
    return list;
}

std::uint64_t trial_seed(std::uint64_t seed, const std::string& claim_id, std::uint64_t trial) {
    return mix_seed(mix_seed(seed ^ fnv1a(claim_id)) + trial);
}

std::vector<VerificationReport> verify(const std::string& claim_id, const VerifyOptions& opts) {
    const auto& claim = find_claim(claim_id);
    if (!(opts.tol > 0.0)) throw DomainError("tolerance must be positive");
    if (opts.trials == 0) {
        auto r = make_report(claim_id, Relation::LessEqual, 0.0, 0.0, opts.tol, opts.seed, 0, "trials=0");
        r.skipped = true;
        return {r};
    }
    group_settings();  // build shared state before fanning out
    Integrator cfg;
    cfg.exec = opts.exec;
    auto per_trial = kernels::map_indices(
        opts.trials,
        [&](std::size_t i) {
            Trial t{claim_id, i, std::mt19937_64(trial_seed(opts.seed, claim_id, i)), opts.tol,
                    std::min(opts.tol, kFiniteTol), cfg};
            Reports reps;
            try {
                reps = claim.check(t);
            } catch (const Error& e) {
                auto r = make_report(claim_id, Relation::LessEqual, std::nan(""), std::nan(""), opts.tol, 0, i,
                                     std::string("error: ") + e.what());
                r.passed = false;
                reps = {r};
            }
            for (auto& r : reps) {
                r.seed = opts.seed;
                r.trial = i;
            }
            return reps;
        },
        opts.exec);
    std::vector<VerificationReport> out;
    for (auto& reps : per_trial)
        for (auto& r : reps) out.push_back(std::move(r));
    return out;
}

std::vector<VerificationReport> run_examples(double tol) {
    std::vector<VerificationReport> out;
    std::uint64_t index = 0;
    auto push = [&](std::string id, Relation rel, double lhs, double rhs, double t, std::string notes) {
        out.push_back(make_report(std::move(id), rel, lhs, rhs, t, 0, index++, std::move(notes)));
    };
    auto ab = [](double a, double b) { return "a=" + fmt(a) + " b=" + fmt(b); };
    const double e = std::numbers::e;

    for (auto [a, b] : {std::pair{0.0, 1.0}, {1.0, e}, {2.0, 5.0}, {0.5, 8.0}}) {
        const auto g = Group::additive_reals(a - 3.0, b + 4.0);
        const auto nu = haar(g).measure();
        const auto s = MeasurableSet::interval(a, b);
        const double closed = std::log(b - a);
        push("example-1", Relation::Equal, entropy_finite(nu, nu, s).nats, closed, tol, ab(a, b));
        for (double shift : {-2.0, 0.5, 3.0}) {
            const auto gs = translate_set(g, g.real_element(shift), s);
            push("example-1-invariance", Relation::Equal, entropy_finite(nu, nu, gs).nats, closed, tol,
                 ab(a, b) + " g=+" + fmt(shift));
        }
    }
    for (auto [a, b] : {std::pair{1.0, e}, {1.0, e * e}, {2.0, 5.0}, {2.0, 8.0}, {0.5, 8.0}}) {
        const auto g = Group::multiplicative_reals(a / 20.0, b * 20.0);
        const auto mu = haar(g).measure();
        const auto s = MeasurableSet::interval(a, b);
        const double closed = std::log(std::log(b / a));
        push("example-2", Relation::Equal, entropy_finite(mu, mu, s).nats, closed, tol, ab(a, b));
        for (double factor : {0.5, 2.0, 10.0}) {
            const auto gs = translate_set(g, g.real_element(factor), s);
            push("example-2-invariance", Relation::Equal, entropy_finite(mu, mu, gs).nats, closed, tol,
                 ab(a, b) + " g=*" + fmt(factor));
        }
    }
    for (auto [a, b] : {std::pair{1.0, e}, {1.0, e * e}, {2.0, 5.0}, {2.0, 8.0}, {0.5, 8.0}, {0.5, 2.0}}) {
        const auto g = Group::multiplicative_reals(a / 20.0, b * 20.0);
        const auto mu = haar(g).measure();
        const auto nu = Measure::base(g.space());
        const auto s = MeasurableSet::interval(a, b);
        const double prob = entropy_prob(mu, nu, s).nats;
        push("example-3", Relation::Equal, prob, 0.5 * std::log(b / a) * std::log(a * b), tol, ab(a, b));
        push("example-3-finite-form", Relation::Equal, entropy_finite(mu, nu, s).nats,
             std::log(std::log(b / a)) + 0.5 * std::log(a * b), tol, ab(a, b));
        const auto scaled = translate_set(g, g.real_element(2.0), s);
        push("example-3-noninvariance", Relation::Less, 1e-3, std::abs(entropy_prob(mu, nu, scaled).nats - prob), 0.0,
             ab(a, b) + " g=*2");
        const auto shifted = MeasurableSet::interval(a + 2.0, b + 2.0);
        push("example-3-noninvariance", Relation::Less, 1e-3, std::abs(entropy_prob(mu, nu, shifted).nats - prob),
             0.0, ab(a, b) + " g=+2");
    }
    return out;
}

RunSummary summarize(std::vector<VerificationReport> reports) {
    RunSummary s;
    std::map<std::string, std::size_t> index;
    for (const auto& r : reports) {
        auto [it, fresh] = index.try_emplace(r.claim_id, s.claims.size());
        if (fresh) s.claims.push_back({r.claim_id, 0, 0, 0, std::numeric_limits<double>::infinity()});
        auto& c = s.claims[it->second];
        if (r.skipped) {
            ++c.skipped;
            ++s.skipped;
            continue;
        }
        c.worst_slack = std::isnan(r.slack) ? r.slack : std::min(c.worst_slack, r.slack);
        if (r.passed) {
            ++c.passed;
            ++s.passed;
        } else {
            ++c.failed;
            ++s.failed;
        }
    }
    for (auto& c : s.claims)
        if (c.passed + c.failed == 0) c.worst_slack = 0.0;
    s.reports = std::move(reports);
    return s;
}

RunSummary run_all(const VerifyOptions& opts) {
    std::vector<VerificationReport> all;
    for (const auto& c : claim_catalog()) {
        auto reps = verify(c.id, opts);
        all.insert(all.end(), std::make_move_iterator(reps.begin()), std::make_move_iterator(reps.end()));
    }
    auto ex = run_examples(opts.tol);
    all.insert(all.end(), std::make_move_iterator(ex.begin()), std::make_move_iterator(ex.end()));
    auto summary = summarize(std::move(all));
    if (opts.trials == 0) summary.warnings.push_back("trials=0: every catalog claim was skipped");
    return summary;
}

namespace {

nlohmann::ordered_json report_json(const VerificationReport& r) {
    nlohmann::ordered_json j;
    j["claim_id"] = r.claim_id;
    j["trial"] = r.trial;
    j["seed"] = r.seed;
    j["relation"] = to_string(r.relation);
    j["passed"] = r.passed;
    j["skipped"] = r.skipped;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["slack"] = r.slack;
    j["tolerance"] = r.tolerance;
    j["scope"] = r.scope_notes;
    return j;
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string to_json(const RunSummary& summary) {
    nlohmann::ordered_json doc;
    doc["schema"] = "haarent.verification";
    doc["version"] = kReportSchemaVersion;
    nlohmann::ordered_json totals;
    totals["passed"] = summary.passed;
    totals["failed"] = summary.failed;
    totals["skipped"] = summary.skipped;
    totals["ok"] = summary.ok();
    doc["summary"] = totals;
    auto claims_json = nlohmann::ordered_json::array();
    for (const auto& c : summary.claims) {
        nlohmann::ordered_json j;
        j["claim_id"] = c.id;
        j["passed"] = c.passed;
        j["failed"] = c.failed;
        j["skipped"] = c.skipped;
        j["worst_slack"] = c.worst_slack;
        claims_json.push_back(std::move(j));
    }
    doc["claims"] = std::move(claims_json);
    doc["warnings"] = summary.warnings;
    auto reports = nlohmann::ordered_json::array();
    for (const auto& r : summary.reports) reports.push_back(report_json(r));
    doc["reports"] = std::move(reports);
    return doc.dump(2) + "\n";
}

std::string to_csv(const std::vector<VerificationReport>& reports) {
    std::string out = "claim_id,trial,seed,relation,passed,skipped,lhs,rhs,slack,tolerance,scope\n";
    for (const auto& r : reports) {
        out += csv_field(r.claim_id) + "," + std::to_string(r.trial) + "," + std::to_string(r.seed) + "," +
               to_string(r.relation) + "," + (r.passed ? "true" : "false") + "," + (r.skipped ? "true" : "false") +
               "," + num(r.lhs) + "," + num(r.rhs) + "," + num(r.slack) + "," + num(r.tolerance) + "," +
               csv_field(r.scope_notes) + "\n";
    }
    return out;
}

std::string to_table(const RunSummary& summary) {
    std::ostringstream os;
    os << std::left << std::setw(34) << "claim" << std::right << std::setw(8) << "pass" << std::setw(8) << "fail"
       << std::setw(8) << "skip" << std::setw(16) << "worst slack" << "\n";
    for (const auto& c : summary.claims) {
        char slack[32];
        std::snprintf(slack, sizeof slack, "%.3e", c.worst_slack);
        os << std::left << std::setw(34) << c.id << std::right << std::setw(8) << c.passed << std::setw(8) << c.failed
           << std::setw(8) << c.skipped << std::setw(16) << slack << "\n";
    }
    os << "total: " << summary.passed << " passed, " << summary.failed << " failed, " << summary.skipped
       << " skipped\n";
    for (const auto& r : summary.reports) {
        if (r.passed || r.skipped) continue;
        os << "FAIL " << r.claim_id << " trial " << r.trial << ": lhs=" << num(r.lhs) << " rhs=" << num(r.rhs)
           << " slack=" << num(r.slack) << " tol=" << num(r.tolerance) << " " << r.scope_notes << "\n";
    }
    for (const auto& w : summary.warnings) os << "warning: " << w << "\n";
    return os.str();
}

}  // namespace haarent
