#pragma once

#include <string>

#include "haarent/groups.hpp"
#include "haarent/measure.hpp"

namespace haarent {

// Default slack for inequality checks; 100x the default quadrature rel_tol.
inline constexpr double kDefaultTolerance = 1e-8;

enum class EntropyForm { Probability, Finite, Weight };

const char* to_string(EntropyForm form);

// All values in nats.
struct EntropyValue {
    double nats = 0.0;
    EntropyForm form = EntropyForm::Finite;
    double mass = 0.0;
    std::string warning;  // diagnostics only; not part of the serialized value
};

// -integral over s of q log q dnu, q = dmu/dnu. Warns (in .warning) when
// mu(s) is not 1.
EntropyValue entropy_prob(const Measure& mu, const Measure& nu, const MeasurableSet& s,
                          const Integrator& cfg = {});

// log eta(s) - (1/eta(s)) integral over s of q log q dnu, q = deta/dnu.
EntropyValue entropy_finite(const Measure& eta, const Measure& nu, const MeasurableSet& s,
                            const Integrator& cfg = {});

// log Z + (integral of phi e^-phi dnu) / Z with Z = integral of e^-phi dnu.
EntropyValue entropy_weight(const WeightFunction& phi, const Measure& nu, const MeasurableSet& s,
                            const Integrator& cfg = {});

// nu / nu(s), restricted to s.
Measure uniform_measure(const Measure& nu, const MeasurableSet& s, const Integrator& cfg = {});

// S_mu(rho, s) - (1/rho(s)) integral over s of log(dmu/dnu) drho, which is
// S_nu(rho, s).
EntropyValue change_reference(const Measure& rho, const Measure& mu, const Measure& nu,
                              const MeasurableSet& s, const Integrator& cfg = {});

// -(1/rho(s)) integral over s of log(dxi/dhaar) drho. Throws
// NotInformationMeasureError when dxi/dhaar exceeds 1 + tol.
double entropic_gap(const Measure& rho, const Measure& xi, const HaarMeasure& haar_ref,
                    const MeasurableSet& s, const Integrator& cfg = {}, double tol = 1e-9);
double entropic_gap(const Measure& rho, const Measure& xi, const Measure& haar_ref,
                    const MeasurableSet& s, const Integrator& cfg = {}, double tol = 1e-9);

enum class NonnegVerdict { MassAtLeastOne, ConditionHolds, MayBeNegative };

const char* to_string(NonnegVerdict verdict);

// MassAtLeastOne: lhs = mu(s), rhs = 1. Otherwise lhs = -integral q log q dnu
// and rhs = -mu(s) log mu(s); the condition holds when lhs >= rhs.
struct NonnegativityCertificate {
    NonnegVerdict verdict = NonnegVerdict::MayBeNegative;
    double lhs = 0.0;
    double rhs = 0.0;
};

NonnegativityCertificate nonneg_certificate(const Measure& mu, const Measure& nu, const MeasurableSet& s,
                                            const Integrator& cfg = {}, double tol = kDefaultTolerance);

}  // namespace haarent
