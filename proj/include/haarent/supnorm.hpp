#pragma once

#include <utility>
#include <vector>

#include "haarent/groups.hpp"
#include "haarent/measure.hpp"
#include "haarent/report.hpp"

namespace haarent {

struct SupEstimate {
    double value = 0.0;
    double at = 0.0;  // coordinate where the value was attained
};

// Supremum of dm/dref over s. Exact over atoms; on intervals the maximum over
// a grid seeded at breakpoints, refined three times around the best point.
// An analytic sup replaces the grid value when it is known for all of s.
SupEstimate sup_density_detailed(const Measure& m, const Measure& ref, const MeasurableSet& s,
                                 Execution exec = Execution::Parallel);
double sup_density(const Measure& m, const Measure& ref, const MeasurableSet& s,
                   Execution exec = Execution::Parallel);

struct SupNormalizationReport {
    double c = 1.0;
    std::pair<double, double> scales{1.0, 1.0};
    std::pair<double, double> achieved_at{0.0, 0.0};
};

struct SupNormalized {
    Measure rho;
    Measure xi;
    SupNormalizationReport report;
};

// Rescales rho and xi so both densities w.r.t. ref have supremum `target`
// over s. Throws NormalizationError on a zero or infinite sup.
SupNormalized sup_normalize(const Measure& rho, const Measure& xi, const Measure& ref, const MeasurableSet& s,
                            double target = 1.0);

// drho/dref within [-tol, 1 + tol] on s.
bool is_information_measure(const Measure& rho, const Measure& ref, const MeasurableSet& s, double tol = 1e-6);

// max_g rho(gA) <= c * min_g nu(gA) + tol over the sampled g, with c the sup
// of drho/dnu over the carrier. Samples whose translate leaves the window are
// skipped and counted in the notes.
VerificationReport check_translate_bound(const Measure& rho, const Measure& nu, const Group& group,
                                         const MeasurableSet& a, const std::vector<GroupElement>& samples,
                                         double tol, const Integrator& cfg = {});

}  // namespace haarent
