#include "haarent/measure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "haarent/error.hpp"

namespace haarent {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<double> merge_points(std::vector<double> a, const std::vector<double>& b) {
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    return a;
}

void require_same_space(const Measure& a, const Measure& b) {
    if (!(a.space() == b.space())) throw DomainError("measures live on different spaces");
}

}  // namespace

Density Density::constant_value(double c) {
    if (!(c >= 0.0) || !std::isfinite(c)) throw DomainError("constant density must be finite and >= 0");
    Density d;
    d.eval = [c](double) { return c; };
    d.sup = c;
    d.constant = c;
    return d;
}

Density Density::function(RealFn f, std::vector<double> breakpoints, std::optional<double> sup) {
    Density d;
    d.eval = std::move(f);
    d.breakpoints = std::move(breakpoints);
    d.sup = sup;
    return d;
}

Density Density::table(const Space& space, std::vector<double> values) {
    if (!space.is_finite()) throw DomainError("table densities need a finite space");
    if (values.size() != space.atom_count())
        throw DomainError("table density needs one value per atom");
    for (double v : values)
        if (!(v >= 0.0) || !std::isfinite(v)) throw DomainError("table density values must be finite and >= 0");
    std::vector<double> coords(space.coords().begin(), space.coords().end());
    Density d;
    d.sup = *std::max_element(values.begin(), values.end());
    d.eval = [coords = std::move(coords), values = std::move(values)](double x) {
        auto it = std::lower_bound(coords.begin(), coords.end(), x);
        if (it == coords.end() || *it != x) return 0.0;
        return values[static_cast<std::size_t>(it - coords.begin())];
    };
    return d;
}

Density Density::piecewise_constant(std::vector<double> edges, std::vector<double> values) {
    if (edges.size() != values.size() + 1 || values.empty())
        throw DomainError("piecewise_constant needs edges.size() == values.size() + 1");
    for (std::size_t i = 1; i < edges.size(); ++i)
        if (!(edges[i - 1] < edges[i])) throw DomainError("piecewise_constant edges must increase");
    for (double v : values)
        if (!(v >= 0.0) || !std::isfinite(v)) throw DomainError("density values must be finite and >= 0");
    Density d;
    d.breakpoints.assign(edges.begin() + 1, edges.end() - 1);
    d.sup = *std::max_element(values.begin(), values.end());
    d.eval = [edges = std::move(edges), values = std::move(values)](double x) {
        if (x < edges.front() || x > edges.back()) return 0.0;
        auto it = std::upper_bound(edges.begin(), edges.end(), x);
        auto piece = static_cast<std::size_t>(it - edges.begin());
        if (piece == 0) piece = 1;
        if (piece > values.size()) piece = values.size();
        return values[piece - 1];
    };
    return d;
}

Density Density::piecewise_linear(std::vector<double> knots, std::vector<double> values) {
    if (knots.size() != values.size() || knots.size() < 2)
        throw DomainError("piecewise_linear needs >= 2 knots with one value each");
    for (std::size_t i = 1; i < knots.size(); ++i)
        if (!(knots[i - 1] < knots[i])) throw DomainError("piecewise_linear knots must increase");
    for (double v : values)
        if (!(v >= 0.0) || !std::isfinite(v)) throw DomainError("density values must be finite and >= 0");
    Density d;
    d.breakpoints.assign(knots.begin() + 1, knots.end() - 1);
    d.sup = *std::max_element(values.begin(), values.end());
    d.eval = [knots = std::move(knots), values = std::move(values)](double x) {
        if (x < knots.front() || x > knots.back()) return 0.0;
        auto it = std::upper_bound(knots.begin(), knots.end(), x);
        auto hi = static_cast<std::size_t>(it - knots.begin());
        if (hi >= knots.size()) return values.back();
        const auto lo = hi - 1;
        const double t = (x - knots[lo]) / (knots[hi] - knots[lo]);
        return values[lo] + t * (values[hi] - values[lo]);
    };
    return d;
}

Density Density::scaled(double c) const {
    if (!(c >= 0.0) || !std::isfinite(c)) throw DomainError("scale factor must be finite and >= 0");
    Density d;
    d.eval = [inner = eval, c](double x) { return c * inner(x); };
    d.breakpoints = breakpoints;
    if (sup) d.sup = c * *sup;
    if (constant) d.constant = c * *constant;
    return d;
}

Measure::Measure(Space space, Density density, std::string label)
    : space_(std::make_shared<const Space>(std::move(space))),
      density_(std::move(density)),
      support_(space_->whole()),
      label_(std::move(label)) {
    if (!density_.eval) throw DomainError("density has no evaluator");
    for (double b : density_.breakpoints)
        if (!std::isfinite(b)) throw DomainError("density breakpoints must be finite");
    for (double x : sample_points(support_)) {
        double v = 0.0;
        try {
            v = density_.eval(x);
        } catch (const EvaluationError&) {
            continue;  // isolated singular points are allowed
        }
        if (v < 0.0 || std::isnan(v)) {
            std::ostringstream msg;
            msg << "density of '" << label_ << "' is negative at x = " << x;
            throw DomainError(msg.str());
        }
    }
}

Measure Measure::base(const Space& space) {
    return Measure(space, Density::constant_value(1.0), space.is_finite() ? "counting" : "lebesgue");
}

Measure Measure::relative_to(const Measure& reference, Density relative, std::string label) {
    Density d;
    d.eval = [ref = reference, rel = relative.eval](double x) {
        const double r = ref.density_at(x);
        return r == 0.0 ? 0.0 : r * rel(x);
    };
    d.breakpoints = merge_points(reference.breakpoints(), relative.breakpoints);
    const auto& rd = reference.density();
    if (rd.constant && relative.constant) d.constant = *rd.constant * *relative.constant;
    if (rd.constant && relative.sup) d.sup = *rd.constant * *relative.sup;
    else if (relative.constant && rd.sup) d.sup = *relative.constant * *rd.sup;
    Measure out(reference.space(), std::move(d), std::move(label));
    out.support_ = reference.support_;
    return out;
}

double Measure::density_at(double x) const {
    if (space_->is_finite()) {
        auto idx = space_->find_coord(x);
        if (!idx || !support_.contains_atom(*idx)) return 0.0;
    } else if (!support_.contains_point(x)) {
        return 0.0;
    }
    return density_.eval(x);
}

Measure Measure::scaled(double c) const {
    Measure out = *this;
    out.density_ = density_.scaled(c);
    return out;
}

Measure Measure::restricted(const MeasurableSet& s) const {
    if (!space_->contains(s)) throw DomainError("restriction set " + to_string(s) + " is outside the space");
    Measure out = *this;
    out.support_ = support_.intersect(s);
    if (!(out.support_ == support_)) out.density_.sup.reset();
    return out;
}

Measure Measure::with_label(std::string label) const {
    Measure out = *this;
    out.label_ = std::move(label);
    return out;
}

Measure Measure::with_support(MeasurableSet support) const {
    if (!space_->contains(support)) throw DomainError("support " + to_string(support) + " is outside the space");
    Measure out = *this;
    out.support_ = std::move(support);
    return out;
}

std::vector<double> Measure::breakpoints() const {
    std::vector<double> pts = density_.breakpoints;
    if (!support_.is_atoms())
        for (const auto& p : support_.pieces()) {
            pts.push_back(p.lo);
            pts.push_back(p.hi);
        }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

std::vector<double> Measure::sample_points(const MeasurableSet& s, std::size_t grid) const {
    const auto region = s.intersect(support_);
    std::vector<double> pts;
    if (region.is_atoms()) {
        for (auto i : region.atom_indices()) pts.push_back(space_->coord(i));
        return pts;
    }
    grid = std::max<std::size_t>(grid, 2);
    for (const auto& p : region.pieces()) {
        for (std::size_t k = 0; k < grid; ++k)
            pts.push_back(p.lo + (p.hi - p.lo) * static_cast<double>(k) / static_cast<double>(grid - 1));
        for (double b : density_.breakpoints)
            if (p.lo <= b && b <= p.hi) pts.push_back(b);
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

double mass(const Measure& m, const MeasurableSet& s, const Integrator& cfg) {
    if (!m.space().contains(s)) throw DomainError("set " + to_string(s) + " is outside the space");
    const auto region = s.intersect(m.support());
    const auto& d = m.density();
    if (region.is_atoms()) return sum_atoms(d.eval, region, m.space());
    if (d.constant) return *d.constant * region.size();
    const auto bps = m.breakpoints();
    return integrate(d.eval, region, cfg, bps);
}

double integrate_wrt(const RealFn& f, const Measure& m, const MeasurableSet& s, const Integrator& cfg,
                     std::span<const double> extra_breakpoints) {
    if (!m.space().contains(s)) throw DomainError("set " + to_string(s) + " is outside the space");
    const auto region = s.intersect(m.support());
    auto integrand = [&](double x) {
        const double w = m.density_at(x);
        return w == 0.0 ? 0.0 : f(x) * w;
    };
    if (region.is_atoms()) return sum_atoms(integrand, region, m.space());
    auto bps = m.breakpoints();
    bps = merge_points(std::move(bps), {extra_breakpoints.begin(), extra_breakpoints.end()});
    return integrate(integrand, region, cfg, bps);
}

double total_mass(const Measure& m, const Integrator& cfg) {
    return mass(m, m.space().whole(), cfg);
}

Density radon_nikodym(const Measure& m, const Measure& ref) {
    require_same_space(m, ref);
    for (double x : m.sample_points(m.space().whole())) {
        double num = 0.0;
        try {
            num = m.density_at(x);
        } catch (const EvaluationError&) {
            continue;
        }
        if (num > 0.0 && !(ref.density_at(x) > 0.0)) {
            std::ostringstream msg;
            msg << "'" << m.label() << "' is not absolutely continuous w.r.t. '" << ref.label()
                << "': reference density vanishes at x = " << x;
            throw AbsoluteContinuityError(msg.str(), x);
        }
    }
    Density q;
    q.eval = [m, ref](double x) {
        const double num = m.density_at(x);
        if (num == 0.0) return 0.0;
        const double den = ref.density_at(x);
        if (!(den > 0.0)) {
            std::ostringstream msg;
            msg << "absolute continuity violated at x = " << x;
            throw AbsoluteContinuityError(msg.str(), x);
        }
        return num / den;
    };
    q.breakpoints = merge_points(m.breakpoints(), ref.breakpoints());
    const auto& md = m.density();
    const auto& rd = ref.density();
    const bool ref_full = m.support().subset_of(ref.support());
    if (ref_full && rd.constant && *rd.constant > 0.0) {
        if (md.constant) q.constant = *md.constant / *rd.constant;
        if (md.sup) q.sup = *md.sup / *rd.constant;
    }
    return q;
}

WeightFunction weight_of(const Measure& m, const Measure& ref, double tol) {
    const Density q = radon_nikodym(m, ref);
    for (double x : ref.sample_points(ref.space().whole())) {
        double v = 0.0;
        try {
            v = q(x);
        } catch (const EvaluationError&) {
            continue;
        }
        if (v > 1.0 + tol) {
            std::ostringstream msg;
            msg << "'" << m.label() << "' is not an information measure w.r.t. '" << ref.label()
                << "': density " << v << " at x = " << x;
            throw NotInformationMeasureError(msg.str(), v);
        }
    }
    WeightFunction phi;
    phi.eval = [q = q.eval](double x) {
        const double v = q(x);
        return v == 0.0 ? kInf : -std::log(v);
    };
    phi.breakpoints = q.breakpoints;
    return phi;
}

double information_value(double phi) {
    if (phi == kInf) return 0.0;
    return std::exp(-phi);
}

Measure measure_of_weight(const WeightFunction& phi, const Measure& ref, std::string label) {
    Density rel;
    rel.eval = [f = phi.eval](double x) { return information_value(f(x)); };
    rel.breakpoints = phi.breakpoints;
    return Measure::relative_to(ref, std::move(rel), std::move(label));
}

}  // namespace haarent
