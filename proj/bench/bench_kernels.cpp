// Serial vs OpenMP timings for the data-parallel kernels. Each row also
// reports whether both variants produced identical results.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "haarent/groups.hpp"
#include "haarent/kernels.hpp"
#include "haarent/quadrature.hpp"
#include "haarent/supnorm.hpp"
#include "haarent/verifier.hpp"

using namespace haarent;

namespace {

template <class F>
double best_of(int reps, F&& f) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        f();
        best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    }
    return best;
}

void row(const char* name, double ts, double tp, bool same) {
    std::printf("%-28s %10.4f %10.4f %8.2fx  %s\n", name, ts, tp, ts / tp, same ? "identical" : "DIFFERENT");
}

}  // namespace

int main(int argc, char** argv) {
    const int reps = argc > 1 ? std::atoi(argv[1]) : 3;
    std::printf("openmp %s, threads %d, best of %d\n", kernels::openmp_enabled() ? "on" : "off",
                kernels::max_threads(), reps);
    std::printf("%-28s %10s %10s %9s\n", "kernel", "serial s", "parallel s", "speedup");

    {
        const std::size_t n = 2'000'000;
        std::vector<double> xs(n), a(n), b(n);
        for (std::size_t i = 0; i < n; ++i) xs[i] = -4.0 + 8.0 * static_cast<double>(i) / n;
        auto f = [](double x) { return std::exp(-x * x) * std::cos(5 * x) + std::log1p(x * x); };
        const double ts = best_of(reps, [&] { kernels::evaluate(f, xs, a, Execution::Serial); });
        const double tp = best_of(reps, [&] { kernels::evaluate(f, xs, b, Execution::Parallel); });
        row("evaluate 2e6 points", ts, tp, a == b);
    }
    {
        std::vector<Segment> pieces;
        for (int i = 0; i < 64; ++i) pieces.push_back({i * 1.0, i + 0.9});
        const auto set = MeasurableSet::segments(pieces);
        auto f = [](double x) { return std::sin(x * x / 8) * std::exp(-x / 40) + 1.0; };
        Integrator s, p;
        s.exec = Execution::Serial;
        s.rel_tol = p.rel_tol = 1e-12;
        double vs = 0, vp = 0;
        const double ts = best_of(reps, [&] { vs = integrate(f, set, s); });
        const double tp = best_of(reps, [&] { vp = integrate(f, set, p); });
        row("quadrature 64 panels", ts, tp, vs == vp);
    }
    {
        auto g = Group::symmetric(5);
        std::size_t cs = 0, cp = 0;
        const double ts = best_of(reps, [&] { cs = subgroups(g, Execution::Serial).size(); });
        const double tp = best_of(reps, [&] { cp = subgroups(g, Execution::Parallel).size(); });
        row("subgroups of S5", ts, tp, cs == cp);
    }
    {
        auto sp = Space::interval(0, 10);
        Measure m(sp, Density::function([](double x) { return 1.0 + std::sin(7 * x) * std::sin(x / 3); }));
        auto ref = Measure::base(sp);
        SupEstimate es, ep;
        const double ts = best_of(reps, [&] { es = sup_density_detailed(m, ref, sp.whole(), Execution::Serial); });
        const double tp = best_of(reps, [&] { ep = sup_density_detailed(m, ref, sp.whole(), Execution::Parallel); });
        row("sup density grid", ts, tp, es.value == ep.value && es.at == ep.at);
    }
    {
        VerifyOptions s, p;
        s.exec = Execution::Serial;
        s.trials = p.trials = 400;
        std::string js, jp;
        const double ts = best_of(reps, [&] { js = to_json(summarize(verify("thm-general-inequality", s))); });
        const double tp = best_of(reps, [&] { jp = to_json(summarize(verify("thm-general-inequality", p))); });
        row("verifier 400 trials", ts, tp, js == jp);
    }
    return 0;
}
