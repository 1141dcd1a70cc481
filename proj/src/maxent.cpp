#include "haarent/maxent.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "haarent/error.hpp"
#include "haarent/quadrature.hpp"

namespace haarent {

namespace {

constexpr double kArmijo = 1e-4;
// Gradient proxy at p_i = 0, where the true derivative is +inf.
constexpr double kFloorRel = 1e-12;
constexpr int kMaxFailures = 10;

void require_weights(const std::vector<double>& nu) {
    if (nu.size() < 2) throw DomainError("maxent needs at least two atoms");
    for (double v : nu)
        if (!(v > 0.0) || !std::isfinite(v)) throw DomainError("reference weights must be positive and finite");
}

std::vector<double> random_simplex(std::size_t n, double mass, std::mt19937_64& rng) {
    std::vector<double> p(n);
    for (auto& v : p) v = -std::log1p(-uniform01(rng));
    double total = std::accumulate(p.begin(), p.end(), 0.0);
    if (!(total > 0.0)) {
        std::fill(p.begin(), p.end(), 1.0);
        total = static_cast<double>(n);
    }
    for (auto& v : p) v *= mass / total;
    return p;
}

}  // namespace

std::uint64_t mix_seed(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

double discrete_entropy(const std::vector<double>& p, const std::vector<double>& nu) {
    if (p.size() != nu.size()) throw DomainError("weight vectors differ in length");
    double s = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) s -= xlogx(p[i] / nu[i]) * nu[i];
    return s;
}

std::vector<double> project_simplex(const std::vector<double>& v, double mass) {
    if (!(mass > 0.0)) throw DomainError("simplex mass must be positive");
    std::vector<double> u(v);
    std::sort(u.begin(), u.end(), std::greater<>());
    double cumulative = 0.0;
    double theta = 0.0;
    for (std::size_t j = 0; j < u.size(); ++j) {
        cumulative += u[j];
        const double t = (cumulative - mass) / static_cast<double>(j + 1);
        if (u[j] - t > 0.0) theta = t;
    }
    std::vector<double> p(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) p[i] = std::max(v[i] - theta, 0.0);
    return p;
}

MaxentResult maximize_entropy(const std::vector<double>& nu, double mass, int iters, double step,
                              std::uint64_t seed, std::optional<std::vector<double>> start) {
    require_weights(nu);
    if (!(mass > 0.0) || !std::isfinite(mass)) throw DomainError("mass must be positive");
    if (iters < 1) throw DomainError("iters must be at least 1");
    if (!(step > 0.0) || !std::isfinite(step)) throw DomainError("step must be positive");
    const std::size_t n = nu.size();

    std::vector<double> p;
    if (start) {
        if (start->size() != n) throw DomainError("start point has the wrong dimension");
        p = project_simplex(*start, mass);
    } else {
        std::mt19937_64 rng(mix_seed(seed));
        p = random_simplex(n, mass, rng);
    }

    MaxentResult result;
    double s = discrete_entropy(p, nu);
    std::vector<double> grad(n), cand(n);
    int failures = 0;
    for (int it = 0; it < iters; ++it) {
        for (std::size_t i = 0; i < n; ++i) grad[i] = -std::log(std::max(p[i], kFloorRel * mass) / nu[i]) - 1.0;
        std::vector<double> v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = p[i] + step * grad[i];
        cand = project_simplex(v, mass);
        double moved = 0.0;
        double ascent = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            moved = std::max(moved, std::abs(cand[i] - p[i]));
            ascent += grad[i] * (cand[i] - p[i]);
        }
        // converged, or the projected gradient vanishes to rounding
        if (moved <= 1e-13 * mass || moved <= 1e-10 * step) break;
        const double sc = discrete_entropy(cand, nu);
        if (sc >= s + kArmijo * ascent - 1e-15 * static_cast<double>(n) * (1.0 + std::abs(s))) {
            p = cand;
            s = sc;
            failures = 0;
            ++result.iterations;
            result.trace.push_back(s);
        } else {
            step *= 0.5;
            if (++failures >= kMaxFailures) {
                std::ostringstream msg;
                msg << "entropy failed to increase for " << kMaxFailures << " consecutive steps (step now " << step
                    << ")";
                throw StepSizeError(msg.str());
            }
        }
    }
    result.point.weights = std::move(p);
    result.entropy = s;
    return result;
}

VerificationReport concavity_probe(const std::vector<double>& nu, int trials, std::uint64_t seed) {
    require_weights(nu);
    if (trials < 1) throw DomainError("trials must be at least 1");
    constexpr double tol = 1e-10;
    std::mt19937_64 rng(mix_seed(seed));
    double worst_slack = std::numeric_limits<double>::infinity();
    double worst_lhs = 0.0;
    double worst_rhs = 0.0;
    int violations = 0;
    for (int t = 0; t < trials; ++t) {
        const auto p = random_simplex(nu.size(), 1.0, rng);
        const auto q = random_simplex(nu.size(), 1.0, rng);
        double lambda = uniform01(rng);
        if (lambda == 0.0) lambda = 0.5;
        std::vector<double> mix(nu.size());
        for (std::size_t i = 0; i < mix.size(); ++i) mix[i] = lambda * p[i] + (1.0 - lambda) * q[i];
        const double lhs = lambda * discrete_entropy(p, nu) + (1.0 - lambda) * discrete_entropy(q, nu);
        const double rhs = discrete_entropy(mix, nu);
        if (rhs - lhs < -tol) ++violations;
        if (rhs - lhs < worst_slack) {
            worst_slack = rhs - lhs;
            worst_lhs = lhs;
            worst_rhs = rhs;
        }
    }
    std::ostringstream notes;
    notes << "pairs=" << trials << " violations=" << violations;
    return make_report("prop-concavity", Relation::LessEqual, worst_lhs, worst_rhs, tol, seed, 0, notes.str());
}

}  // namespace haarent
