// Timing comparison of the OpenMP kernels against the serial reference
// implementations, with a bitwise-equality check on the results.

#include <chrono>
#include <cstdio>

#include "isac/boundary.hpp"
#include "isac/mc_sim.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace isac;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

template <class F>
double timed(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return seconds_since(t0);
}

}  // namespace

int main() {
    NetworkParams params;
#ifdef _OPENMP
    const int nthreads = omp_get_max_threads();
#else
    const int nthreads = 1;
#endif
    std::printf("threads available: %d\n\n", nthreads);
    std::printf("%-28s %10s %10s %8s %s\n", "kernel", "serial[s]", "parallel[s]", "speedup",
                "bitwise");

    {
        ResourceAllocation a{12, 1, 0, 1};
        McConfig mc;
        mc.trials = 20000;
        mc.seed = 7;
        McEstimate es, ep;
        const double ts = timed([&] { es = mc_comm_rate_serial(params, a, mc); });
        const double tp = timed([&] { ep = mc_comm_rate(params, a, mc); });
        std::printf("%-28s %10.3f %10.3f %8.2f %s\n", "mc_comm_rate (2e4 trials)", ts, tp,
                    ts / tp, es.mean == ep.mean ? "ok" : "MISMATCH");
    }
    {
        ResourceAllocation a{1, 1, 1, 4};
        McConfig mc;
        mc.trials = 20000;
        mc.seed = 7;
        McEstimate es, ep;
        const double ts = timed([&] { es = mc_radar_rate_serial(params, a, mc); });
        const double tp = timed([&] { ep = mc_radar_rate(params, a, mc); });
        std::printf("%-28s %10.3f %10.3f %8.2f %s\n", "mc_radar_rate (2e4 trials)", ts, tp,
                    ts / tp, es.mean == ep.mean ? "ok" : "MISMATCH");
    }
    {
        QuadratureSpec spec;
        spec.rel_tol = 1e-5;
        auto allocs = enumerate_feasible(params);
        RateTable t1(params, spec, FormulaVariant::rederived);
        RateTable tn(params, spec, FormulaVariant::rederived);
        const double ts = timed([&] { t1.prepare(allocs, 1); });
        const double tp = timed([&] { tn.prepare(allocs, 0); });
        bool same = true;
        for (const auto& a : allocs) {
            PerfPoint p1 = t1.perf(a), pn = tn.perf(a);
            same = same && p1.t_c == pn.t_c && p1.t_s == pn.t_s;
        }
        std::printf("%-28s %10.3f %10.3f %8.2f %s\n", "rate table sweep (m_t=20)", ts, tp,
                    ts / tp, same ? "ok" : "MISMATCH");
    }
    return 0;
}
