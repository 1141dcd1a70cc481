#include "haarent/supnorm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "haarent/error.hpp"

namespace haarent {

namespace {

constexpr std::size_t kGrid = 1025;
constexpr std::size_t kLocal = 65;
constexpr int kRefinements = 3;

}  // namespace

SupEstimate sup_density_detailed(const Measure& m, const Measure& ref, const MeasurableSet& s, Execution exec) {
    const Density q = radon_nikodym(m, ref);
    const auto region = s.intersect(m.support());
    SupEstimate best{0.0, region.empty() ? 0.0 : std::numeric_limits<double>::quiet_NaN()};
    auto value = [&q](double x) {
        try {
            return q(x);
        } catch (const EvaluationError&) {
            return std::numeric_limits<double>::quiet_NaN();
        }
    };
    auto scan = [&](const std::vector<double>& xs) {
        std::vector<double> vs(xs.size());
        kernels::evaluate(value, xs, vs, exec);
        const auto e = kernels::extrema(vs);
        if (e.max > best.value || (std::isnan(best.at) && std::isfinite(e.max))) {
            best.value = e.max;
            best.at = xs[e.argmax];
        }
    };

    if (region.is_atoms()) {
        if (!region.empty()) scan(m.sample_points(region));
    } else if (!region.empty()) {
        auto xs = m.sample_points(region, kGrid);
        for (double b : ref.breakpoints())
            if (region.contains_point(b)) xs.push_back(b);
        std::sort(xs.begin(), xs.end());
        xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
        scan(xs);
        if (!std::isnan(best.at)) {
            const auto pieces = region.pieces();
            const auto piece = std::find_if(pieces.begin(), pieces.end(), [&](const Segment& p) {
                return p.lo <= best.at && best.at <= p.hi;
            });
            double h = region.size() / static_cast<double>(kGrid - 1);
            for (int round = 0; round < kRefinements && piece != pieces.end(); ++round) {
                const double lo = std::max(piece->lo, best.at - h);
                const double hi = std::min(piece->hi, best.at + h);
                std::vector<double> local(kLocal);
                for (std::size_t k = 0; k < kLocal; ++k)
                    local[k] = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(kLocal - 1);
                scan(local);
                h /= static_cast<double>(kLocal / 2);
            }
        }
    }
    if (std::isnan(best.at)) best.at = 0.0;

    if (!region.empty()) {
        if (q.constant) best.value = *q.constant;
        else if (q.sup && m.support().subset_of(s)) best.value = *q.sup;
    }
    return best;
}

double sup_density(const Measure& m, const Measure& ref, const MeasurableSet& s, Execution exec) {
    return sup_density_detailed(m, ref, s, exec).value;
}

SupNormalized sup_normalize(const Measure& rho, const Measure& xi, const Measure& ref, const MeasurableSet& s,
                            double target) {
    if (!(target > 0.0) || !std::isfinite(target)) throw DomainError("normalization target must be positive");
    const auto sr = sup_density_detailed(rho, ref, s);
    const auto sx = sup_density_detailed(xi, ref, s);
    for (const auto& [sup, m] : {std::pair{sr.value, &rho}, std::pair{sx.value, &xi}}) {
        if (!(sup > 0.0) || !std::isfinite(sup)) {
            std::ostringstream msg;
            msg << "cannot sup-normalize '" << m->label() << "': sup of its density is " << sup;
            throw NormalizationError(msg.str());
        }
    }
    SupNormalizationReport report;
    report.c = target;
    report.scales = {target / sr.value, target / sx.value};
    report.achieved_at = {sr.at, sx.at};
    return {rho.scaled(report.scales.first), xi.scaled(report.scales.second), report};
}

bool is_information_measure(const Measure& rho, const Measure& ref, const MeasurableSet& s, double tol) {
    const Density q = radon_nikodym(rho, ref);
    for (double x : rho.sample_points(s)) {
        double v = 0.0;
        try {
            v = q(x);
        } catch (const EvaluationError&) {
            continue;
        }
        if (v < -tol) return false;
    }
    return sup_density(rho, ref, s) <= 1.0 + tol;
}

VerificationReport check_translate_bound(const Measure& rho, const Measure& nu, const Group& group,
                                         const MeasurableSet& a, const std::vector<GroupElement>& samples,
                                         double tol, const Integrator& cfg) {
    const double c = sup_density(rho, nu, rho.space().whole());
    double max_rho = -std::numeric_limits<double>::infinity();
    double min_nu = std::numeric_limits<double>::infinity();
    std::size_t arg_rho = 0;
    std::size_t arg_nu = 0;
    std::size_t checked = 0;
    std::size_t skipped = 0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        MeasurableSet ga;
        try {
            ga = translate_set(group, samples[i], a);
        } catch (const WindowOverflowError&) {
            ++skipped;
            continue;
        }
        ++checked;
        const double r = mass(rho, ga, cfg);
        const double n = mass(nu, ga, cfg);
        if (r > max_rho) {
            max_rho = r;
            arg_rho = i;
        }
        if (n < min_nu) {
            min_nu = n;
            arg_nu = i;
        }
    }
    std::ostringstream notes;
    notes << "group=" << group.name() << " c=" << c << " checked=" << checked << " skipped=" << skipped;
    if (checked) {
        notes << " argmax_rho=" << group.describe(samples[arg_rho])
              << " argmin_nu=" << group.describe(samples[arg_nu]);
    }
    notes << (group.is_finite() && skipped == 0 && checked == group.order() ? " scope=exhaustive" : " scope=sampled");
    if (!checked) {
        auto r = make_report("prop-supnorm-bounds", Relation::LessEqual, 0.0, 0.0, tol, 0, 0, notes.str());
        r.skipped = true;
        return r;
    }
    return make_report("prop-supnorm-bounds", Relation::LessEqual, max_rho, c * min_nu, tol, 0, 0, notes.str());
}

}  // namespace haarent
