#include "doctest.h"

#include <set>
#include <sstream>

#include "json.hpp"

#include "haarent/error.hpp"
#include "haarent/maxent.hpp"
#include "haarent/verifier.hpp"

using namespace haarent;

TEST_CASE("catalog ids are unique and known") {
    std::set<std::string> ids;
    for (const auto& c : claim_catalog()) {
        CHECK_FALSE(c.statement.empty());
        CHECK(ids.insert(c.id).second);
    }
    CHECK(ids.count("thm-relative-symmetry") == 1);
    CHECK(ids.count("thm-relative-symmetry-superset") == 1);
    CHECK(ids.count("monotonicity") == 1);
    CHECK_THROWS_AS(verify("no-such-claim", {}), CatalogError);
}

TEST_CASE("generators respect their ranges") {
    std::mt19937_64 rng(1);
    for (int t = 0; t < 50; ++t) {
        for (double w : gen::unit_weights(10, rng)) {
            CHECK(w > 0.0);
            CHECK(w <= 1.0);
        }
        auto d = gen::piecewise_constant(0, 2, 0.25, 0.75, rng);
        auto l = gen::piecewise_linear(0, 2, 0.0, 1.0, rng);
        for (double x = 0; x <= 2; x += 0.01) {
            CHECK(d(x) > 0.25);
            CHECK(d(x) <= 0.75);
            CHECK(l(x) >= 0.0);
            CHECK(l(x) <= 1.0);
        }
        auto s = gen::interval_union(1, 3, rng);
        CHECK(s.size() > 0);
        CHECK(s.subset_of(MeasurableSet::interval(1, 3)));
        auto f = gen::finite_subset(6, rng);
        CHECK_FALSE(f.empty());
        CHECK(f.subset_of(MeasurableSet::atoms({0, 1, 2, 3, 4, 5})));
    }
}

TEST_CASE("trial seeds depend on claim, seed and trial") {
    CHECK(trial_seed(0, "a", 0) != trial_seed(0, "b", 0));
    CHECK(trial_seed(0, "a", 0) != trial_seed(1, "a", 0));
    CHECK(trial_seed(0, "a", 0) != trial_seed(0, "a", 1));
    CHECK(trial_seed(3, "a", 7) == trial_seed(3, "a", 7));
}

TEST_CASE("reports are reproducible") {
    VerifyOptions opts;
    opts.trials = 12;
    opts.seed = 5;
    for (const char* id : {"thm-general-inequality", "lemma-change-reference", "prop-supnorm-bounds"}) {
        CAPTURE(id);
        auto a = summarize(verify(id, opts));
        auto b = summarize(verify(id, opts));
        CHECK(to_json(a) == to_json(b));
        CHECK(to_csv(a.reports) == to_csv(b.reports));

        auto serial = opts;
        serial.exec = Execution::Serial;
        CHECK(to_json(summarize(verify(id, serial))) == to_json(a));

        // a shorter run is a prefix of a longer one
        auto shorter = opts;
        shorter.trials = 4;
        auto pre = verify(id, shorter);
        REQUIRE(pre.size() <= a.reports.size());
        for (std::size_t i = 0; i < pre.size(); ++i) CHECK(pre[i].lhs == a.reports[i].lhs);
    }
}

TEST_CASE("zero trials skip everything with a warning") {
    VerifyOptions opts;
    opts.trials = 0;
    auto s = run_all(opts);
    CHECK(s.ok());
    CHECK_FALSE(s.warnings.empty());
    std::size_t catalog_reports = 0;
    for (const auto& r : s.reports)
        if (r.claim_id.rfind("example", 0) != 0) {
            CHECK(r.skipped);
            ++catalog_reports;
        }
    CHECK(catalog_reports == claim_catalog().size());
}

TEST_CASE("a tolerance below the noise floor fails quadrature-limited claims") {
    auto ex = summarize(run_examples(1e-20));
    CHECK(ex.failed > 0);
    VerifyOptions opts;
    opts.trials = 20;
    opts.tol = 1e-20;
    CHECK(summarize(verify("lemma-change-reference", opts)).failed > 0);
}

TEST_CASE("examples reproduce their closed forms") {
    auto s = summarize(run_examples());
    CHECK(s.failed == 0);
    CHECK(s.passed >= 3);
}

TEST_CASE("short run of every claim passes") {
    VerifyOptions opts;
    opts.trials = 20;
    auto s = run_all(opts);
    for (const auto& c : s.claims) {
        CAPTURE(c.id);
        CHECK(c.failed == 0);
    }
}

TEST_CASE("serialization") {
    VerifyOptions opts;
    opts.trials = 3;
    auto s = summarize(verify("prop-uniform-max", opts));
    auto j = nlohmann::json::parse(to_json(s));
    CHECK(j["schema"] == "haarent.verification");
    CHECK(j["version"] == kReportSchemaVersion);
    CHECK(j["reports"].size() == s.reports.size());
    CHECK(j["summary"]["passed"] == s.passed);

    const auto csv = to_csv(s.reports);
    std::istringstream in(csv);
    std::string header;
    std::getline(in, header);
    CHECK(header == "claim_id,trial,seed,relation,passed,skipped,lhs,rhs,slack,tolerance,scope");
    std::size_t rows = 0;
    for (std::string line; std::getline(in, line);) ++rows;
    CHECK(rows == s.reports.size());

    const auto table = to_table(s);
    CHECK(table.find("prop-uniform-max") != std::string::npos);
}

TEST_CASE("report slack semantics") {
    auto le = make_report("c", Relation::LessEqual, 1.0, 1.0 - 1e-9, 1e-8);
    CHECK(le.passed);
    CHECK(le.slack == doctest::Approx(-1e-9));
    auto eq = make_report("c", Relation::Equal, 2.0, 1.0, 1e-8);
    CHECK_FALSE(eq.passed);
    CHECK(eq.slack == -1.0);
    auto lt = make_report("c", Relation::Less, 1.0, 1.0 + 1e-9, 1e-8);
    CHECK_FALSE(lt.passed);
}
