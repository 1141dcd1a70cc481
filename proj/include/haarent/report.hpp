#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace haarent {

// How lhs and rhs are compared. slack is rhs - lhs for inequalities and
// -|lhs - rhs| for equalities, so for LessEqual and Equal a report passes
// iff slack >= -tolerance; for Less it needs slack > tolerance.
enum class Relation { LessEqual, Equal, Less };

struct VerificationReport {
    std::string claim_id;
    Relation relation = Relation::LessEqual;
    bool passed = false;
    bool skipped = false;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    double tolerance = 0.0;
    std::uint64_t seed = 0;
    std::uint64_t trial = 0;
    std::string scope_notes;
};

double compute_slack(Relation relation, double lhs, double rhs);
bool slack_passes(Relation relation, double slack, double tolerance);

// Fills slack and passed from lhs, rhs, relation and tolerance.
VerificationReport make_report(std::string claim_id, Relation relation, double lhs, double rhs,
                               double tolerance, std::uint64_t seed = 0, std::uint64_t trial = 0,
                               std::string scope_notes = {});

const char* to_string(Relation relation);

}  // namespace haarent
