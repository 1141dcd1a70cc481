#pragma once

#include <cstddef>
#include <functional>
#include <span>

#include "haarent/kernels.hpp"
#include "haarent/space.hpp"

namespace haarent {

using RealFn = std::function<double(double)>;

// Adaptive Simpson settings. Accepts a panel once the Richardson difference
// is within its share of max(rel_tol * |I|, abs_tol).
struct Integrator {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    int max_depth = 50;
    Execution exec = Execution::Parallel;

    void validate() const;
};

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;          // sum of per-panel Richardson estimates
    std::size_t evaluations = 0;
    bool converged = true;
};

// Integrate f over an interval union. Each segment is split at the
// breakpoints falling strictly inside it; the resulting panels are refined
// independently and summed in order. Never throws on non-convergence.
QuadratureResult integrate_detailed(const RealFn& f, const MeasurableSet& s, const Integrator& cfg,
                                    std::span<const double> breakpoints = {});

// As above, but throws ConvergenceError (carrying estimate and bound) when a
// panel exhausts max_depth.
double integrate(const RealFn& f, const MeasurableSet& s, const Integrator& cfg = {},
                 std::span<const double> breakpoints = {});

// Exact sum of f over the atoms of s, in atom order.
double sum_atoms(const RealFn& f, const MeasurableSet& s, const Space& space);

// Dispatches on the kind of s: atom sets are summed, interval unions integrated.
double integrate_over(const RealFn& f, const MeasurableSet& s, const Space& space,
                      const Integrator& cfg = {}, std::span<const double> breakpoints = {});

// t log t with 0 log 0 = 0.
double xlogx(double t);

}  // namespace haarent
