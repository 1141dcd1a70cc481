#include "haarent/report.hpp"

#include <cmath>

namespace haarent {

double compute_slack(Relation relation, double lhs, double rhs) {
    if (relation == Relation::Equal) return -std::abs(lhs - rhs);
    return rhs - lhs;
}

bool slack_passes(Relation relation, double slack, double tolerance) {
    if (std::isnan(slack)) return false;
    if (relation == Relation::Less) return slack > tolerance;
    return slack >= -tolerance;
}

VerificationReport make_report(std::string claim_id, Relation relation, double lhs, double rhs,
                               double tolerance, std::uint64_t seed, std::uint64_t trial,
                               std::string scope_notes) {
    VerificationReport r;
    r.claim_id = std::move(claim_id);
    r.relation = relation;
    r.lhs = lhs;
    r.rhs = rhs;
    r.tolerance = tolerance;
    r.seed = seed;
    r.trial = trial;
    r.scope_notes = std::move(scope_notes);
    r.slack = compute_slack(relation, lhs, rhs);
    r.passed = slack_passes(relation, r.slack, tolerance);
    return r;
}

const char* to_string(Relation relation) {
    switch (relation) {
        case Relation::LessEqual: return "<=";
        case Relation::Equal: return "==";
        case Relation::Less: return "<";
    }
    return "?";
}

}  // namespace haarent
