#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "haarent/report.hpp"

namespace haarent {

// Portable uniform double in [0, 1) from the top 53 bits of a 64-bit draw.
inline double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

// SplitMix64 finalizer, used to derive independent seeds.
std::uint64_t mix_seed(std::uint64_t x);

struct SimplexPoint {
    std::vector<double> weights;  // nonnegative, summing to the prescribed mass
};

struct MaxentResult {
    SimplexPoint point;
    double entropy = 0.0;
    int iterations = 0;        // accepted steps
    std::vector<double> trace;  // entropy after each accepted step
};

// S(p) = -sum p_i log(p_i / nu_i) with 0 log 0 = 0.
double discrete_entropy(const std::vector<double>& p, const std::vector<double>& nu);

// Euclidean projection onto {p >= 0, sum p = mass}.
std::vector<double> project_simplex(const std::vector<double>& v, double mass);

// Projected gradient ascent from a seeded random start (or `start`). The step
// halves whenever a step would lower the entropy; ten consecutive halvings
// raise StepSizeError.
MaxentResult maximize_entropy(const std::vector<double>& nu, double mass, int iters, double step,
                              std::uint64_t seed, std::optional<std::vector<double>> start = std::nullopt);

// Random pairs p, q on the unit simplex and lambda in (0, 1):
// S(lambda p + (1 - lambda) q) >= lambda S(p) + (1 - lambda) S(q) - 1e-10.
// lhs/rhs hold the worst pair; the notes count violations.
VerificationReport concavity_probe(const std::vector<double>& nu, int trials, std::uint64_t seed);

}  // namespace haarent
