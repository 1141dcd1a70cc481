// haarent command-line front end.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error,
// 3 numeric failure.

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "haarent/dsl.hpp"
#include "haarent/entropy.hpp"
#include "haarent/error.hpp"
#include "haarent/maxent.hpp"
#include "haarent/spec_file.hpp"
#include "haarent/supnorm.hpp"
#include "haarent/verifier.hpp"

namespace {

using namespace haarent;
using ojson = nlohmann::ordered_json;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    double tol = kDefaultTolerance;
    std::string format = "table";
    std::string output;
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void emit(const Common& c, const std::string& text) {
    if (c.output.empty()) {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(c.output, std::ios::binary);
    if (!out) throw UsageError("cannot write '" + c.output + "'");
    out << text;
}

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("--tol", c.tol, "Tolerance for checks (default 1e-8, or $HAARENT_TOL)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv", "table"}));
    sub->add_option("--output", c.output, "Write results to this path instead of stdout");
}

MeasureSpec load_spec(const std::string& path) {
    try {
        return load_measure_spec(path);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what(), e.offset(), e.expected());
    }
}

// ---- entropy -----------------------------------------------------------

struct EntropyArgs {
    std::string measure;
    std::string reference;
    std::string set;
    std::string group;
    std::string subgroup;
    std::string form = "finite";
};

struct Context {
    Measure measure;
    Measure reference;
    std::optional<Group> group;
    MeasurableSet set;
};

Context build_context(const std::string& measure_path, const std::string& reference_path, const std::string& set,
                      const std::string& group_desc, const std::string& subgroup) {
    auto spec = load_spec(measure_path);
    std::optional<Group> group = spec.group;
    if (!group_desc.empty()) group = parse_group(group_desc);
    std::optional<Measure> reference;
    if (!reference_path.empty()) reference = load_spec(reference_path).measure;
    else if (group) reference = haar(*group).measure();
    else reference = Measure::base(spec.measure.space());
    if (!(spec.measure.space() == reference->space()))
        throw DomainError("measure and reference live on different spaces");
    if (!set.empty() && !subgroup.empty()) throw UsageError("--set and --subgroup are mutually exclusive");
    MeasurableSet s = spec.measure.space().whole();
    if (!set.empty()) s = dsl::parse_set(set, spec.measure.space());
    if (!subgroup.empty()) {
        if (!group || !group->is_finite()) throw UsageError("--subgroup needs a finite --group");
        s = dsl::parse_set(subgroup, group->space());
        const auto idx = s.atom_indices();
        group->induced({idx.begin(), idx.end()}, "H");  // rejects non-subgroups
    }
    return {spec.measure, *reference, group, s};
}

int run_entropy(const EntropyArgs& a, const Common& c) {
    const auto ctx = build_context(a.measure, a.reference, a.set, a.group, a.subgroup);
    EntropyValue v;
    if (a.form == "finite") v = entropy_finite(ctx.measure, ctx.reference, ctx.set);
    else if (a.form == "prob") v = entropy_prob(ctx.measure, ctx.reference, ctx.set);
    else v = entropy_weight(weight_of(ctx.measure, ctx.reference), ctx.reference, ctx.set);
    if (!v.warning.empty()) std::cerr << "warning: " << v.warning << "\n";
    std::string out;
    if (c.format == "json") {
        ojson j;
        j["nats"] = v.nats;
        j["form"] = to_string(v.form);
        j["mass"] = v.mass;
        out = j.dump(2) + "\n";
    } else if (c.format == "csv") {
        out = "nats,form,mass\n" + num(v.nats) + "," + to_string(v.form) + "," + num(v.mass) + "\n";
    } else {
        out = "nats  " + num(v.nats) + "\nform  " + to_string(v.form) + "\nmass  " + num(v.mass) + "\n";
    }
    emit(c, out);
    return 0;
}

// ---- supnorm -----------------------------------------------------------

struct SupnormArgs {
    std::string measure;
    std::string reference;
    std::string set;
    std::string group;
    std::size_t samples = 64;
};

int run_supnorm(const SupnormArgs& a, const Common& c) {
    const auto ctx = build_context(a.measure, a.reference, a.set, a.group, "");
    const auto sup = sup_density_detailed(ctx.measure, ctx.reference, ctx.set);
    const bool info = is_information_measure(ctx.measure, ctx.reference, ctx.set, 1e-6);
    std::optional<VerificationReport> bound;
    if (ctx.group) {
        const auto samples = sample_translations(*ctx.group, ctx.set, a.samples);
        bound = check_translate_bound(ctx.measure, ctx.reference, *ctx.group, ctx.set, samples, c.tol);
    }
    std::string out;
    if (c.format == "json") {
        ojson j;
        j["sup"] = sup.value;
        j["achieved_at"] = sup.at;
        j["scale_to_unit"] = sup.value > 0.0 ? 1.0 / sup.value : std::nan("");
        j["information_measure"] = info;
        if (bound) {
            ojson b;
            b["claim_id"] = bound->claim_id;
            b["passed"] = bound->passed;
            b["skipped"] = bound->skipped;
            b["lhs"] = bound->lhs;
            b["rhs"] = bound->rhs;
            b["slack"] = bound->slack;
            b["tolerance"] = bound->tolerance;
            b["scope"] = bound->scope_notes;
            j["translate_bound"] = b;
        }
        out = j.dump(2) + "\n";
    } else if (c.format == "csv") {
        out = "sup,achieved_at,information_measure,bound_passed,bound_lhs,bound_rhs\n" + num(sup.value) + "," +
              num(sup.at) + "," + (info ? "true" : "false") + ",";
        out += bound ? std::string(bound->passed ? "true" : "false") + "," + num(bound->lhs) + "," + num(bound->rhs)
                     : std::string(",,");
        out += "\n";
    } else {
        out = "sup                  " + num(sup.value) + "\nachieved at          " + num(sup.at) +
              "\ninformation measure  " + (info ? "yes" : "no") + "\n";
        if (bound)
            out += "translate bound      " + std::string(bound->passed ? "pass" : "FAIL") + " (max rho(gA) " +
                   num(bound->lhs) + " <= c min nu(gA) " + num(bound->rhs) + ") " + bound->scope_notes + "\n";
    }
    emit(c, out);
    return bound && !bound->passed && !bound->skipped ? kExitFailure : 0;
}

// ---- verify / examples -------------------------------------------------

struct VerifyArgs {
    bool all = false;
    bool list = false;
    std::vector<std::string> claims;
    std::uint64_t seed = 0;
    std::size_t trials = 200;
};

std::string render(const RunSummary& s, const Common& c) {
    if (c.format == "json") return to_json(s);
    if (c.format == "csv") return to_csv(s.reports);
    return to_table(s);
}

int run_verify(const VerifyArgs& a, const Common& c) {
    if (a.list) {
        std::string out;
        for (const auto& d : claim_catalog()) out += d.id + "  " + d.statement + "\n";
        emit(c, out);
        return 0;
    }
    if (a.all == !a.claims.empty()) throw UsageError("verify needs exactly one of --all or --claim");
    VerifyOptions opts;
    opts.seed = a.seed;
    opts.trials = a.trials;
    opts.tol = c.tol;
    RunSummary summary;
    if (a.all) {
        summary = run_all(opts);
    } else {
        std::vector<VerificationReport> reports;
        for (const auto& id : a.claims) {
            auto r = verify(id, opts);
            reports.insert(reports.end(), r.begin(), r.end());
        }
        summary = summarize(std::move(reports));
        if (a.trials == 0) summary.warnings.push_back("trials=0: every requested claim was skipped");
    }
    for (const auto& w : summary.warnings) std::cerr << "warning: " << w << "\n";
    emit(c, render(summary, c));
    return summary.ok() ? 0 : kExitFailure;
}

int run_examples_cmd(const Common& c) {
    const auto summary = summarize(run_examples(c.tol));
    emit(c, render(summary, c));
    return summary.ok() ? 0 : kExitFailure;
}

// ---- maxent ------------------------------------------------------------

struct MaxentArgs {
    std::size_t n = 3;
    double mass = 1.0;
    int iters = 5000;
    double step = 0.1;
    std::uint64_t seed = 0;
    std::string weights;
};

std::vector<double> parse_weights(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        char* end = nullptr;
        errno = 0;
        const double v = std::strtod(item.c_str(), &end);
        while (end && *end == ' ') ++end;
        if (item.empty() || errno || !end || *end != '\0') throw UsageError("bad --weights entry '" + item + "'");
        out.push_back(v);
    }
    return out;
}

int run_maxent(const MaxentArgs& a, const Common& c) {
    std::vector<double> nu = a.weights.empty() ? std::vector<double>(a.n, 1.0) : parse_weights(a.weights);
    const auto r = maximize_entropy(nu, a.mass, a.iters, a.step, a.seed);
    double total = 0.0;
    for (double v : nu) total += v;
    std::vector<double> target(nu.size());
    double deviation = 0.0;
    for (std::size_t i = 0; i < nu.size(); ++i) {
        target[i] = a.mass * nu[i] / total;
        deviation = std::max(deviation, std::abs(r.point.weights[i] - target[i]));
    }
    std::string out;
    if (c.format == "json") {
        ojson j;
        j["weights"] = r.point.weights;
        j["entropy"] = r.entropy;
        j["iterations"] = r.iterations;
        j["maximizer"] = target;
        j["max_deviation"] = deviation;
        out = j.dump(2) + "\n";
    } else if (c.format == "csv") {
        out = "index,weight,maximizer\n";
        for (std::size_t i = 0; i < nu.size(); ++i)
            out += std::to_string(i) + "," + num(r.point.weights[i]) + "," + num(target[i]) + "\n";
    } else {
        out = "entropy        " + num(r.entropy) + "\niterations     " + std::to_string(r.iterations) +
              "\nmax deviation  " + num(deviation) + "\n";
        for (std::size_t i = 0; i < nu.size(); ++i)
            out += "  p[" + std::to_string(i) + "] = " + num(r.point.weights[i]) + "  (maximizer " + num(target[i]) +
                   ")\n";
    }
    emit(c, out);
    return 0;
}

double default_tolerance() {
    const char* env = std::getenv("HAARENT_TOL");
    if (!env || !*env) return kDefaultTolerance;
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(env, &end);
    if (errno || *end != '\0' || !(v > 0.0) || !std::isfinite(v))
        throw UsageError(std::string("HAARENT_TOL must be a positive number, got '") + env + "'");
    return v;
}

}  // namespace

int main(int argc, char** argv) {
    Common common;
    try {
        common.tol = default_tolerance();
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    CLI::App app{"Relative entropies over measure spaces with Haar references, and numeric checks of their "
                 "inequalities"};
    app.require_subcommand(1);

    EntropyArgs ea;
    auto* entropy = app.add_subcommand("entropy", "Entropy of a measure relative to a reference");
    entropy->add_option("--measure", ea.measure, "Measure spec file (JSON)")->required()->check(CLI::ExistingFile);
    entropy->add_option("--reference", ea.reference, "Reference measure spec (default: Haar or base measure)")
        ->check(CLI::ExistingFile);
    entropy->add_option("--set", ea.set, "Set such as \"[0,1]U[2,3]\" or \"{a,b}\" (default: whole space)");
    entropy->add_option("--group", ea.group, "Group descriptor: Z6, D4, S4, R+add:[0,10], R*mul:[0.1,100], circle");
    entropy->add_option("--subgroup", ea.subgroup, "Subgroup of --group as an atom set, used as the set");
    entropy->add_option("--form", ea.form, "Entropy functional")->check(CLI::IsMember({"finite", "prob", "weight"}));
    add_common(entropy, common);

    SupnormArgs sa;
    auto* supnorm = app.add_subcommand("supnorm", "Density supremum, information-measure test, translate bound");
    supnorm->add_option("--measure", sa.measure, "Measure spec file (JSON)")->required()->check(CLI::ExistingFile);
    supnorm->add_option("--reference", sa.reference, "Reference measure spec")->check(CLI::ExistingFile);
    supnorm->add_option("--set", sa.set, "Set (default: whole space)");
    supnorm->add_option("--group", sa.group, "Group for the translate bound");
    supnorm->add_option("--samples", sa.samples, "Sampled translations for continuous groups");
    add_common(supnorm, common);

    VerifyArgs va;
    auto* verify_cmd = app.add_subcommand("verify", "Run seeded checks from the claim catalog");
    verify_cmd->add_flag("--all", va.all, "Run every claim and the worked examples");
    verify_cmd->add_option("--claim", va.claims, "Claim id (repeatable)");
    verify_cmd->add_flag("--list", va.list, "List claim ids and exit");
    verify_cmd->add_option("--seed", va.seed, "Base seed");
    verify_cmd->add_option("--trials", va.trials, "Trials per claim");
    add_common(verify_cmd, common);

    auto* examples = app.add_subcommand("examples", "Reproduce the worked examples");
    add_common(examples, common);

    MaxentArgs ma;
    auto* maxent = app.add_subcommand("maxent", "Projected-gradient entropy maximization on a simplex");
    maxent->add_option("--n", ma.n, "Number of atoms (with unit reference weights)")->check(CLI::Range(2, 100000));
    maxent->add_option("--mass", ma.mass, "Total mass")->check(CLI::PositiveNumber);
    maxent->add_option("--iters", ma.iters, "Iteration budget")->check(CLI::Range(1, 100000000));
    maxent->add_option("--step", ma.step, "Initial step size")->check(CLI::PositiveNumber);
    maxent->add_option("--seed", ma.seed, "Seed for the random start");
    maxent->add_option("--weights", ma.weights, "Reference weights, comma separated (overrides --n)");
    add_common(maxent, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (*entropy) return run_entropy(ea, common);
        if (*supnorm) return run_supnorm(sa, common);
        if (*verify_cmd) return run_verify(va, common);
        if (*examples) return run_examples_cmd(common);
        if (*maxent) return run_maxent(ma, common);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CatalogError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UnsupportedOperationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const WindowOverflowError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    }
    return kExitUsage;
}
