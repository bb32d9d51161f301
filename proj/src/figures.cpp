#include "isac/figures.hpp"

#include <stdexcept>

#include "isac/boundary.hpp"
#include "isac/csv.hpp"
#include "isac/mc_sim.hpp"

namespace isac {

namespace {

int best_j_at(const NetworkParams& p, int k, int l, int q) {
    const int rem = p.m_t - 1 - k * l;
    if (rem < 0) return -1;
    if (q == 1) return p.j_max;
    return std::min(p.j_max, rem / (q - 1));
}

std::string fig_tc_vs_k(const RunConfig& cfg, int threads) {
    const NetworkParams& p = cfg.network;
    std::vector<ResourceAllocation> allocs;
    for (int k = 1; k <= p.m_t - 1; ++k) allocs.push_back({k, 1, p.j_max, 1});
    RateTable table(p, cfg.quadrature, cfg.formula_variant);
    table.prepare(allocs, threads);

    CsvBuilder csv(cfg, "k,l,j,q,r_c,t_c,t_c_mc,t_c_mc_ci,t_s,t_sum");
    for (const auto& a : allocs) {
        PerfPoint perf = table.perf(a);
        McConfig mc = cfg.mc;
        mc.seed = cfg.mc.seed + 40000 + static_cast<std::uint64_t>(a.k);
        McEstimate est = mc_comm_rate(p, a, mc, threads);
        csv.row(a.k, a.l, a.j, a.q, perf.r_c, perf.t_c, p.lambda_b * a.k * est.mean,
                p.lambda_b * a.k * est.half_width, perf.t_s, perf.t_sum);
    }
    return csv.str();
}

std::string fig_optimal_l(const RunConfig& cfg, int threads) {
    const NetworkParams& p = cfg.network;
    std::vector<ResourceAllocation> allocs;
    for (int k = 1; k <= p.m_t - 1; ++k)
        for (int l = 1; k * l <= p.m_t - 1; ++l) allocs.push_back({k, l, 0, 1});
    RateTable table(p, cfg.quadrature, cfg.formula_variant);
    table.prepare(allocs, threads);

    std::size_t arg = 0;
    std::vector<double> tc(allocs.size());
    for (std::size_t i = 0; i < allocs.size(); ++i) {
        tc[i] = p.lambda_b * allocs[i].k * table.r_c(allocs[i].k, allocs[i].l, 0);
        if (tc[i] > tc[arg]) arg = i;
    }
    CsvBuilder csv(cfg, "k,l,t_c,is_argmax");
    for (std::size_t i = 0; i < allocs.size(); ++i)
        csv.row(allocs[i].k, allocs[i].l, tc[i], i == arg ? 1 : 0);
    return csv.str();
}

std::string fig_ts_vs_q(const RunConfig& cfg, int threads, bool with_mc) {
    CsvBuilder csv(cfg, with_mc ? "m_r,q,j,t_s,t_s_mc,t_s_mc_ci,ratio_to_q1"
                                : "m_r,q,j,r_s,t_s,t_sum");
    for (int m_r : {10, 20, 40}) {
        NetworkParams p = cfg.network;
        p.m_r = m_r;
        std::vector<ResourceAllocation> allocs;
        for (int q = 1; 1 + (q - 1) <= p.m_t - 1; ++q) {
            const int j = best_j_at(p, 1, 1, q);
            if (j < 1) break;
            allocs.push_back({1, 1, j, q});
        }
        RateTable table(p, cfg.quadrature, cfg.formula_variant);
        table.prepare(allocs, threads);
        double ts_q1 = 0.0;
        for (const auto& a : allocs) {
            PerfPoint perf = table.perf(a);
            if (a.q == 1) ts_q1 = perf.t_s;
            if (with_mc) {
                McConfig mc = cfg.mc;
                mc.seed = cfg.mc.seed + 70000 + static_cast<std::uint64_t>(100 * m_r + a.q);
                McEstimate est = mc_radar_rate(p, a, mc, threads);
                csv.row(m_r, a.q, a.j, perf.t_s, p.lambda_b * a.j * est.mean,
                        p.lambda_b * a.j * est.half_width,
                        ts_q1 > 0.0 ? perf.t_s / ts_q1 : 0.0);
            } else {
                csv.row(m_r, a.q, a.j, perf.r_s, perf.t_s, perf.t_sum);
            }
        }
    }
    return csv.str();
}

std::string fig_rate_region(const RunConfig& cfg, int threads) {
    CsvBuilder csv(cfg, "m_t,k,l,j,q,r_c,r_s,on_frontier");
    for (int m_t : {20, 30, 40}) {
        NetworkParams p = cfg.network;
        p.m_t = m_t;
        p.j_max = 5;
        auto allocs = enumerate_feasible(p);
        RateTable table(p, cfg.quadrature, cfg.formula_variant);
        table.prepare(allocs, threads);
        std::vector<PerfPoint> perfs(allocs.size());
        for (std::size_t i = 0; i < allocs.size(); ++i) perfs[i] = table.perf(allocs[i]);
        for (std::size_t i = 0; i < allocs.size(); ++i) {
            bool dominated = false;
            for (std::size_t o = 0; o < allocs.size() && !dominated; ++o)
                dominated = perfs[o].r_c >= perfs[i].r_c && perfs[o].r_s >= perfs[i].r_s &&
                            (perfs[o].r_c > perfs[i].r_c || perfs[o].r_s > perfs[i].r_s);
            csv.row(m_t, allocs[i].k, allocs[i].l, allocs[i].j, allocs[i].q, perfs[i].r_c,
                    perfs[i].r_s, dominated ? 0 : 1);
        }
    }
    return csv.str();
}

std::string fig_ase_region(const RunConfig& cfg, int threads) {
    CsvBuilder csv(cfg, "m_t,kind,k,l,j,q,t_c,t_s");
    for (int m_t : {20, 30, 40}) {
        NetworkParams p = cfg.network;
        p.m_t = m_t;
        Frontier f = boundary(p, BoundaryMethod::enumerate, cfg.quadrature,
                              cfg.formula_variant, threads);
        for (const auto& bp : f.points)
            csv.row(m_t, "frontier", bp.alloc.k, bp.alloc.l, bp.alloc.j, bp.alloc.q,
                    bp.perf.t_c, bp.perf.t_s);
        const auto& cc = f.corner_comm;
        const auto& cs = f.corner_sense;
        csv.row(m_t, "corner_comm", cc.alloc.k, cc.alloc.l, cc.alloc.j, cc.alloc.q,
                cc.perf.t_c, cc.perf.t_s);
        csv.row(m_t, "corner_sense", cs.alloc.k, cs.alloc.l, cs.alloc.j, cs.alloc.q,
                cs.perf.t_c, cs.perf.t_s);
        for (int i = 0; i <= 20; ++i) {
            PerfPoint ts = timeshare_bound(cc, cs, i / 20.0);
            csv.row(m_t, "timeshare", "", "", "", "", ts.t_c, ts.t_s);
        }
        auto [gain, level] = frontier_gain_vs_timeshare(f);
        csv.comment("m_t=" + std::to_string(m_t) + " frontier_vs_timeshare_gain=" +
                    std::to_string(gain) + " at_t_s=" + std::to_string(level));
    }
    return csv.str();
}

}  // namespace

std::string figure_csv(const RunConfig& cfg, const std::string& id, int threads) {
    if (id == "f4") return fig_tc_vs_k(cfg, threads);
    if (id == "f5") return fig_optimal_l(cfg, threads);
    if (id == "f6") return fig_ts_vs_q(cfg, threads, false);
    if (id == "f7") return fig_ts_vs_q(cfg, threads, true);
    if (id == "f9") return fig_rate_region(cfg, threads);
    if (id == "f11") return fig_ase_region(cfg, threads);
    throw std::invalid_argument("unknown figure id: " + id +
                                " (expected one of f4,f5,f6,f7,f9,f11)");
}

}  // namespace isac
