#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "haarent/quadrature.hpp"
#include "haarent/space.hpp"

namespace haarent {

// Black-box Radon-Nikodym density. `breakpoints` lists points where eval may
// be non-smooth; `sup` is an analytic supremum over the whole space when
// known; `constant` is set when eval is identically that value.
struct Density {
    RealFn eval;
    std::vector<double> breakpoints;
    std::optional<double> sup;
    std::optional<double> constant;

    double operator()(double x) const { return eval(x); }

    static Density constant_value(double c);
    static Density function(RealFn f, std::vector<double> breakpoints = {},
                            std::optional<double> sup = std::nullopt);
    // One value per atom of a finite space, looked up by coordinate.
    static Density table(const Space& space, std::vector<double> values);
    // Constant value on each [edges[i], edges[i+1]); edges must cover the space.
    static Density piecewise_constant(std::vector<double> edges, std::vector<double> values);
    // Linear interpolation through (knots[i], values[i]).
    static Density piecewise_linear(std::vector<double> knots, std::vector<double> values);

    Density scaled(double c) const;
};

// A measure given by its density over the space's base coordinate measure
// (counting on finite spaces, Lebesgue on intervals). Measures built
// relative to another measure are flattened onto the base at construction.
class Measure {
public:
    Measure(Space space, Density density, std::string label = {});

    static Measure base(const Space& space);
    // Measure with density `relative` w.r.t. `reference`.
    static Measure relative_to(const Measure& reference, Density relative, std::string label = {});

    const Space& space() const noexcept { return *space_; }
    const Density& density() const noexcept { return density_; }
    const MeasurableSet& support() const noexcept { return support_; }
    const std::string& label() const noexcept { return label_; }

    // Density w.r.t. base at x; zero outside the support.
    double density_at(double x) const;

    Measure scaled(double c) const;
    // Restriction to s (intersected with the current support).
    Measure restricted(const MeasurableSet& s) const;
    Measure with_label(std::string label) const;
    // Replace the support (used by pushforwards). The density must already
    // vanish outside `support`.
    Measure with_support(MeasurableSet support) const;

    // Density breakpoints plus the ends of the support pieces.
    std::vector<double> breakpoints() const;

    // Points where density checks are performed on interval spaces: atoms,
    // or a uniform grid plus breakpoints and support ends.
    std::vector<double> sample_points(const MeasurableSet& s, std::size_t grid = 257) const;

private:
    std::shared_ptr<const Space> space_;
    Density density_;
    MeasurableSet support_;
    std::string label_;
};

// phi = -log(dm/dref) with values in [0, +inf]; +inf where the density is 0.
struct WeightFunction {
    RealFn eval;
    std::vector<double> breakpoints;

    double operator()(double x) const { return eval(x); }
};

// m(s) = integral over s of dm/d(base).
double mass(const Measure& m, const MeasurableSet& s, const Integrator& cfg = {});
double total_mass(const Measure& m, const Integrator& cfg = {});

// Integral of f over s against m. f is not evaluated where m's density is 0.
double integrate_wrt(const RealFn& f, const Measure& m, const MeasurableSet& s,
                     const Integrator& cfg = {}, std::span<const double> extra_breakpoints = {});

// Pointwise quotient dm/dref. Throws AbsoluteContinuityError when the
// reference density vanishes where m's does not, both at construction (on
// sampled points) and lazily during evaluation.
Density radon_nikodym(const Measure& m, const Measure& ref);

// Throws NotInformationMeasureError if dm/dref exceeds 1 + tol at a sample.
WeightFunction weight_of(const Measure& m, const Measure& ref, double tol = 1e-9);

Measure measure_of_weight(const WeightFunction& phi, const Measure& ref, std::string label = {});

// exp(-phi) with exp(-inf) == 0 exactly.
double information_value(double phi);

}  // namespace haarent
