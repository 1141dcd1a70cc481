#include "haarent/entropy.hpp"

#include <cmath>
#include <sstream>

#include "haarent/error.hpp"

namespace haarent {

namespace {

// integral over s of q log q dnu
double integral_xlogx(const Density& q, const Measure& nu, const MeasurableSet& s, const Integrator& cfg) {
    return integrate_wrt([&](double x) { return xlogx(q(x)); }, nu, s, cfg, q.breakpoints);
}

double positive_mass(const Measure& m, const MeasurableSet& s, const Integrator& cfg, const char* what) {
    const double m_s = mass(m, s, cfg);
    if (!(m_s > 0.0) || !std::isfinite(m_s)) {
        std::ostringstream msg;
        msg << what << " '" << m.label() << "' has mass " << m_s << " on " << to_string(s);
        throw DegenerateMeasureError(msg.str());
    }
    return m_s;
}

// integral over s of log(num/den) drho, zero where rho vanishes.
double integral_log_ratio(const Measure& rho, const Density& ratio, const MeasurableSet& s,
                          const Integrator& cfg) {
    return integrate_wrt(
        [&](double x) {
            const double r = ratio(x);
            if (!(r > 0.0)) {
                std::ostringstream msg;
                msg << "measure '" << rho.label() << "' charges a point where the reference ratio is " << r
                    << " (x = " << x << ")";
                throw AbsoluteContinuityError(msg.str(), x);
            }
            return std::log(r);
        },
        rho, s, cfg, ratio.breakpoints);
}

}  // namespace

const char* to_string(EntropyForm form) {
    switch (form) {
        case EntropyForm::Probability: return "Probability";
        case EntropyForm::Finite: return "Finite";
        case EntropyForm::Weight: return "Weight";
    }
    return "?";
}

const char* to_string(NonnegVerdict verdict) {
    switch (verdict) {
        case NonnegVerdict::MassAtLeastOne: return "MassAtLeastOne";
        case NonnegVerdict::ConditionHolds: return "ConditionHolds";
        case NonnegVerdict::MayBeNegative: return "MayBeNegative";
    }
    return "?";
}

EntropyValue entropy_prob(const Measure& mu, const Measure& nu, const MeasurableSet& s, const Integrator& cfg) {
    const Density q = radon_nikodym(mu, nu);
    EntropyValue v;
    v.form = EntropyForm::Probability;
    v.mass = mass(mu, s, cfg);
    v.nats = -integral_xlogx(q, nu, s, cfg);
    if (std::abs(v.mass - 1.0) > 1e-6) {
        std::ostringstream msg;
        msg << "'" << mu.label() << "' has mass " << v.mass << " on " << to_string(s)
            << ", not 1; the probability form is not normalized";
        v.warning = msg.str();
    }
    return v;
}

EntropyValue entropy_finite(const Measure& eta, const Measure& nu, const MeasurableSet& s,
                            const Integrator& cfg) {
    const Density q = radon_nikodym(eta, nu);
    const double m = positive_mass(eta, s, cfg, "measure");
    EntropyValue v;
    v.form = EntropyForm::Finite;
    v.mass = m;
    v.nats = std::log(m) - integral_xlogx(q, nu, s, cfg) / m;
    return v;
}

EntropyValue entropy_weight(const WeightFunction& phi, const Measure& nu, const MeasurableSet& s,
                            const Integrator& cfg) {
    auto checked = [&](double x) {
        const double p = phi(x);
        if (!(p >= 0.0)) {
            std::ostringstream msg;
            msg << "weight function is negative (" << p << ") at x = " << x;
            throw DomainError(msg.str());
        }
        return p;
    };
    const double z = integrate_wrt([&](double x) { return information_value(checked(x)); }, nu, s, cfg,
                                   phi.breakpoints);
    if (!(z > 0.0)) throw DegenerateMeasureError("weight function has zero effective mass on " + to_string(s));
    const double t = integrate_wrt(
        [&](double x) {
            const double p = checked(x);
            return std::isinf(p) ? 0.0 : p * std::exp(-p);
        },
        nu, s, cfg, phi.breakpoints);
    EntropyValue v;
    v.form = EntropyForm::Weight;
    v.mass = z;
    v.nats = std::log(z) + t / z;
    return v;
}

Measure uniform_measure(const Measure& nu, const MeasurableSet& s, const Integrator& cfg) {
    const double m = positive_mass(nu, s, cfg, "reference");
    return nu.scaled(1.0 / m).restricted(s).with_label("uniform(" + nu.label() + ")");
}

EntropyValue change_reference(const Measure& rho, const Measure& mu, const Measure& nu, const MeasurableSet& s,
                              const Integrator& cfg) {
    const EntropyValue s_mu = entropy_finite(rho, mu, s, cfg);
    const Density r = radon_nikodym(mu, nu);
    radon_nikodym(rho, nu);  // absolute continuity w.r.t. nu
    const double correction = integral_log_ratio(rho, r, s, cfg) / s_mu.mass;
    EntropyValue v;
    v.form = EntropyForm::Finite;
    v.mass = s_mu.mass;
    v.nats = s_mu.nats - correction;
    return v;
}

double entropic_gap(const Measure& rho, const Measure& xi, const HaarMeasure& haar_ref, const MeasurableSet& s,
                    const Integrator& cfg, double tol) {
    return entropic_gap(rho, xi, haar_ref.measure(), s, cfg, tol);
}

double entropic_gap(const Measure& rho, const Measure& xi, const Measure& haar_ref, const MeasurableSet& s,
                    const Integrator& cfg, double tol) {
    weight_of(xi, haar_ref, tol);  // information-measure check
    const Density r = radon_nikodym(xi, haar_ref);
    const double m = positive_mass(rho, s, cfg, "measure");
    return -integral_log_ratio(rho, r, s, cfg) / m;
}

NonnegativityCertificate nonneg_certificate(const Measure& mu, const Measure& nu, const MeasurableSet& s,
                                            const Integrator& cfg, double tol) {
    weight_of(mu, nu, tol);
    const double m = mass(mu, s, cfg);
    NonnegativityCertificate c;
    if (m >= 1.0 - tol) {
        c.verdict = NonnegVerdict::MassAtLeastOne;
        c.lhs = m;
        c.rhs = 1.0;
        return c;
    }
    if (!(m > 0.0)) throw DegenerateMeasureError("measure '" + mu.label() + "' has zero mass on " + to_string(s));
    const Density q = radon_nikodym(mu, nu);
    c.lhs = -integral_xlogx(q, nu, s, cfg);
    c.rhs = -xlogx(m);
    c.verdict = c.lhs >= c.rhs ? NonnegVerdict::ConditionHolds : NonnegVerdict::MayBeNegative;
    return c;
}

}  // namespace haarent
