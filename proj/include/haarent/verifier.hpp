#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "haarent/entropy.hpp"
#include "haarent/report.hpp"

namespace haarent {

// Random instances used by the claim checkers.
namespace gen {

// Weights in (0, 1]; information measures w.r.t. counting by construction.
std::vector<double> unit_weights(std::size_t n, std::mt19937_64& rng);
// Weights in (0, hi].
std::vector<double> positive_weights(std::size_t n, double hi, std::mt19937_64& rng);
// Piecewise constant on [lo, hi] over a random partition, values in (vmin, vmax].
Density piecewise_constant(double lo, double hi, double vmin, double vmax, std::mt19937_64& rng,
                           std::size_t max_pieces = 6);
// Piecewise linear on [lo, hi] through random knots, values in (vmin, vmax].
Density piecewise_linear(double lo, double hi, double vmin, double vmax, std::mt19937_64& rng,
                         std::size_t max_knots = 6);
// Nonempty random subset of {0..n-1}.
MeasurableSet finite_subset(std::size_t n, std::mt19937_64& rng);
// One or two random closed intervals inside [lo, hi], total length > 0.
MeasurableSet interval_union(double lo, double hi, std::mt19937_64& rng);

}  // namespace gen

struct ClaimDescriptor {
    std::string id;
    std::string statement;
};

// Catalog order; ids are unique.
const std::vector<ClaimDescriptor>& claim_catalog();

struct VerifyOptions {
    std::size_t trials = 200;
    std::uint64_t seed = 0;
    double tol = kDefaultTolerance;
    Execution exec = Execution::Parallel;
};

// Seed for one trial; reports are reproducible from (claim id, seed, trial).
std::uint64_t trial_seed(std::uint64_t seed, const std::string& claim_id, std::uint64_t trial);

// Runs `trials` seeded instances of a claim. Throws CatalogError for an
// unknown id. trials == 0 yields one skipped report.
std::vector<VerificationReport> verify(const std::string& claim_id, const VerifyOptions& opts);

// The three worked examples, their translation behaviour, and the finite-form
// reading of the third.
std::vector<VerificationReport> run_examples(double tol = kDefaultTolerance);

struct ClaimSummary {
    std::string id;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t skipped = 0;
    double worst_slack = 0.0;  // over reports that were not skipped
};

struct RunSummary {
    std::vector<VerificationReport> reports;
    std::vector<ClaimSummary> claims;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t skipped = 0;
    std::vector<std::string> warnings;

    bool ok() const noexcept { return failed == 0; }
};

RunSummary summarize(std::vector<VerificationReport> reports);

// Every catalog claim followed by the examples.
RunSummary run_all(const VerifyOptions& opts);

// Serialization. JSON is one document; CSV has a header row.
inline constexpr int kReportSchemaVersion = 1;
std::string to_json(const RunSummary& summary);
std::string to_csv(const std::vector<VerificationReport>& reports);
std::string to_table(const RunSummary& summary);

}  // namespace haarent
