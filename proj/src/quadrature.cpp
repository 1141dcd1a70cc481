#include "haarent/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "haarent/error.hpp"

namespace haarent {

namespace {

struct PanelResult {
    double value = 0.0;
    double error = 0.0;
    std::size_t evaluations = 0;
    bool converged = true;
};

struct Panel {
    double a = 0.0;
    double b = 0.0;
};

// Panel ends sit on breakpoints, where f may jump or be singular. Use the
// one-sided value just inside the panel; if f fails there too, back off a
// little further.
double endpoint_value(const RealFn& f, double x, double toward) {
    try {
        const double v = f(std::nextafter(x, toward));
        if (std::isfinite(v)) return v;
    } catch (const EvaluationError&) {
    }
    const double nudge = 1e-12 * std::max(std::abs(toward - x), 1e-300);
    const double inner = x + (toward > x ? nudge : -nudge);
    const double v = f(inner);
    if (!std::isfinite(v))
        throw ConvergenceError("integrand is not finite near " + std::to_string(x), v, INFINITY);
    return v;
}

class Simpson {
public:
    Simpson(const RealFn& f, int max_depth) : f_(f), max_depth_(max_depth) {}

    PanelResult run(Panel p, double eps) {
        PanelResult r;
        const double fa = endpoint_value(f_, p.a, p.b);
        const double fb = endpoint_value(f_, p.b, p.a);
        const double m = 0.5 * (p.a + p.b);
        const double fm = f_(m);
        r.evaluations = 3;
        const double whole = (p.b - p.a) / 6.0 * (fa + 4.0 * fm + fb);
        refine(p.a, fa, m, fm, p.b, fb, whole, eps, 0, r);
        return r;
    }

private:
    void refine(double a, double fa, double m, double fm, double b, double fb, double whole,
                double eps, int depth, PanelResult& r) {
        const double lm = 0.5 * (a + m);
        const double rm = 0.5 * (m + b);
        const double flm = f_(lm);
        const double frm = f_(rm);
        r.evaluations += 2;
        const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
        const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
        const double delta = left + right - whole;
        const bool exhausted = depth + 1 >= max_depth_;
        const bool unsplittable = !(a < lm && lm < m && m < rm && rm < b);
        if (std::abs(delta) <= 15.0 * eps || exhausted || unsplittable) {
            r.value += left + right + delta / 15.0;
            r.error += std::abs(delta) / 15.0;
            if (std::abs(delta) > 15.0 * eps && exhausted) r.converged = false;
            return;
        }
        refine(a, fa, lm, flm, m, fm, left, 0.5 * eps, depth + 1, r);
        refine(m, fm, rm, frm, b, fb, right, 0.5 * eps, depth + 1, r);
    }

    const RealFn& f_;
    int max_depth_;
};

std::vector<Panel> make_panels(const MeasurableSet& s, std::span<const double> breakpoints) {
    std::vector<double> cuts(breakpoints.begin(), breakpoints.end());
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    std::vector<Panel> panels;
    for (const auto& seg : s.pieces()) {
        double start = seg.lo;
        for (double c : cuts) {
            if (c <= start || c >= seg.hi) continue;
            panels.push_back({start, c});
            start = c;
        }
        panels.push_back({start, seg.hi});
    }
    return panels;
}

QuadratureResult run_panels(const RealFn& f, const std::vector<Panel>& panels, double tol,
                            double total_length, const Integrator& cfg) {
    auto results = kernels::map_indices(
        panels.size(),
        [&](std::size_t i) {
            Simpson rule(f, cfg.max_depth);
            const double share = tol * (panels[i].b - panels[i].a) / total_length;
            return rule.run(panels[i], share);
        },
        cfg.exec);
    QuadratureResult out;
    for (const auto& r : results) {
        out.value += r.value;
        out.error += r.error;
        out.evaluations += r.evaluations;
        out.converged = out.converged && r.converged;
    }
    return out;
}

}  // namespace

void Integrator::validate() const {
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) throw DomainError("quadrature tolerances must be > 0");
    if (max_depth < 1) throw DomainError("quadrature max_depth must be >= 1");
}

QuadratureResult integrate_detailed(const RealFn& f, const MeasurableSet& s, const Integrator& cfg,
                                    std::span<const double> breakpoints) {
    cfg.validate();
    if (s.is_atoms()) throw DomainError("integrate: atom sets need a space; use integrate_over");
    const auto panels = make_panels(s, breakpoints);
    if (panels.empty()) return {};
    const double total_length = s.size();

    // Coarse three-point estimate of |I| to turn rel_tol into an absolute budget.
    auto coarse = kernels::map_indices(
        panels.size(),
        [&](std::size_t i) {
            const auto& p = panels[i];
            const double fa = endpoint_value(f, p.a, p.b);
            const double fb = endpoint_value(f, p.b, p.a);
            return (p.b - p.a) / 6.0 * (fa + 4.0 * f(0.5 * (p.a + p.b)) + fb);
        },
        cfg.exec);
    double estimate = 0.0;
    for (double c : coarse) estimate += c;

    double tol = std::max(cfg.rel_tol * std::abs(estimate), cfg.abs_tol);
    auto result = run_panels(f, panels, tol, total_length, cfg);
    const double wanted = std::max(cfg.rel_tol * std::abs(result.value), cfg.abs_tol);
    if (wanted < 0.5 * tol) {
        const auto evaluations = result.evaluations;
        result = run_panels(f, panels, wanted, total_length, cfg);
        result.evaluations += evaluations;
    }
    return result;
}

double integrate(const RealFn& f, const MeasurableSet& s, const Integrator& cfg,
                 std::span<const double> breakpoints) {
    const auto r = integrate_detailed(f, s, cfg, breakpoints);
    if (!r.converged)
        throw ConvergenceError("adaptive quadrature exhausted max_depth", r.value, r.error);
    return r.value;
}

double sum_atoms(const RealFn& f, const MeasurableSet& s, const Space& space) {
    double total = 0.0;
    for (auto i : s.atom_indices()) total += f(space.coord(i));
    return total;
}

double integrate_over(const RealFn& f, const MeasurableSet& s, const Space& space,
                      const Integrator& cfg, std::span<const double> breakpoints) {
    if (!space.contains(s)) throw DomainError("set " + to_string(s) + " is not contained in the space");
    if (s.is_atoms()) return sum_atoms(f, s, space);
    return integrate(f, s, cfg, breakpoints);
}

double xlogx(double t) {
    if (t < 0.0 || std::isnan(t)) throw DomainError("xlogx: argument must be >= 0");
    if (t == 0.0) return 0.0;
    return t * std::log(t);
}

}  // namespace haarent
