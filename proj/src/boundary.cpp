#include "isac/boundary.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace isac {

namespace {

bool strictly_dominates(const PerfPoint& a, const PerfPoint& b) {
    return a.t_c >= b.t_c && a.t_s >= b.t_s && (a.t_c > b.t_c || a.t_s > b.t_s);
}

bool lex_before(const ResourceAllocation& a, const ResourceAllocation& b) {
    return std::tie(a.k, a.l, a.j, a.q) < std::tie(b.k, b.l, b.j, b.q);
}

// max feasible target count at (k, l, q)
int best_j(const NetworkParams& p, int k, int l, int q) {
    const int rem = p.m_t - 1 - k * l;
    if (rem < 0) return -1;
    if (q == 1) return p.j_max;
    return std::min(p.j_max, rem / (q - 1));
}

}  // namespace

BoundaryMethod parse_boundary_method(const std::string& name) {
    if (name == "enumerate") return BoundaryMethod::enumerate;
    if (name == "paper_search") return BoundaryMethod::paper_search;
    if (name == "paper_search_strict") return BoundaryMethod::paper_search_strict;
    throw std::invalid_argument("unknown boundary method: " + name);
}

const char* to_string(BoundaryMethod m) {
    switch (m) {
        case BoundaryMethod::enumerate: return "enumerate";
        case BoundaryMethod::paper_search: return "paper_search";
        default: return "paper_search_strict";
    }
}

void RateTable::prepare(const std::vector<ResourceAllocation>& allocs, int threads) {
    std::set<std::tuple<int, int, int>> rc_keys;
    std::set<std::pair<int, int>> rs_keys;
    for (const auto& a : allocs) {
        if (a.k >= 1) rc_keys.insert({a.k, a.l, a.j * (a.q - 1)});
        if (a.k >= 1 && a.j >= 1) rs_keys.insert({a.k, a.q});
    }
    std::vector<std::tuple<int, int, int>> rc_list(rc_keys.begin(), rc_keys.end());
    std::vector<std::pair<int, int>> rs_list(rs_keys.begin(), rs_keys.end());
    std::vector<double> rc_vals(rc_list.size()), rs_vals(rs_list.size());

#ifdef _OPENMP
    const int nt = threads > 0 ? threads : omp_get_max_threads();
#else
    const int nt = 1;
    (void)threads;
#endif
    bool ok = true;
#pragma omp parallel for schedule(dynamic) num_threads(nt) reduction(&& : ok)
    for (std::size_t i = 0; i < rc_list.size(); ++i) {
        const auto [k, l, nu] = rc_list[i];
        CommIntegrandCtx ctx{params_.m_t - k * l - nu + 1, k, l, params_.alpha};
        QuadResult r = avg_comm_rate_core(ctx, spec_, variant_);
        rc_vals[i] = r.value;
        ok = ok && r.converged;
    }
#pragma omp parallel for schedule(dynamic) num_threads(nt) reduction(&& : ok)
    for (std::size_t i = 0; i < rs_list.size(); ++i) {
        const auto [k, q] = rs_list[i];
        ResourceAllocation a{k, 1, 1, q};
        QuadResult r = (q == 1) ? avg_radar_rate_q1(params_, a, spec_, variant_)
                                : avg_radar_rate_qge2(params_, k, q, spec_, variant_);
        rs_vals[i] = r.value;
        ok = ok && r.converged;
    }
    for (std::size_t i = 0; i < rc_list.size(); ++i) rc_[rc_list[i]] = rc_vals[i];
    for (std::size_t i = 0; i < rs_list.size(); ++i) rs_[rs_list[i]] = rs_vals[i];
    converged_ = converged_ && ok;
}

double RateTable::r_c(int k, int l, int nu) const {
    if (k == 0) return 0.0;
    return rc_.at({k, l, nu});
}

double RateTable::r_s(int k, int q) const {
    if (k == 0) return 0.0;
    return rs_.at({k, q});
}

PerfPoint RateTable::perf(const ResourceAllocation& a) const {
    const double rc = (a.k >= 1) ? r_c(a.k, a.l, a.j * (a.q - 1)) : 0.0;
    const double rs = (a.k >= 1 && a.j >= 1) ? r_s(a.k, a.q) : 0.0;
    return make_perf(params_, a, rc, rs);
}

namespace {

// lexicographic best: primary objective first, companion as tie-break
BoundaryPoint pick_best(const std::vector<BoundaryPoint>& cands, bool by_tc) {
    BoundaryPoint best;
    bool first = true;
    for (const auto& c : cands) {
        const double p = by_tc ? c.perf.t_c : c.perf.t_s;
        const double s = by_tc ? c.perf.t_s : c.perf.t_c;
        if (first) {
            best = c;
            first = false;
            continue;
        }
        const double bp = by_tc ? best.perf.t_c : best.perf.t_s;
        const double bs = by_tc ? best.perf.t_s : best.perf.t_c;
        if (p > bp || (p == bp && s > bs) ||
            (p == bp && s == bs && lex_before(c.alloc, best.alloc)))
            best = c;
    }
    return best;
}

std::vector<ResourceAllocation> comm_corner_candidates(const NetworkParams& p) {
    std::vector<ResourceAllocation> out;
    for (int k = 1; k <= p.m_t - 1; ++k)
        for (int l = 1; k * l <= p.m_t - 1; ++l)
            out.push_back({k, l, p.j_max, 1});  // q = 1; j free, maximal t_s companion
    return out;
}

std::vector<ResourceAllocation> sense_corner_candidates(const NetworkParams& p) {
    std::vector<ResourceAllocation> out;
    for (int k = 1; k <= p.m_t - 1; ++k)
        for (int q = 1; k + (q - 1) <= p.m_t - 1; ++q) {
            const int j = best_j(p, k, 1, q);
            if (j >= 1) out.push_back({k, 1, j, q});
        }
    return out;
}

std::vector<BoundaryPoint> evaluate(const RateTable& table,
                                    const std::vector<ResourceAllocation>& allocs) {
    std::vector<BoundaryPoint> out;
    out.reserve(allocs.size());
    for (const auto& a : allocs) out.push_back({a, table.perf(a), false});
    return out;
}

}  // namespace

BoundaryPoint corner_comm_max(const NetworkParams& params, const QuadratureSpec& spec,
                              FormulaVariant variant, int threads) {
    auto cands = comm_corner_candidates(params);
    RateTable table(params, spec, variant);
    table.prepare(cands, threads);
    return pick_best(evaluate(table, cands), true);
}

BoundaryPoint corner_sense_max(const NetworkParams& params, const QuadratureSpec& spec,
                               FormulaVariant variant, int threads) {
    auto cands = sense_corner_candidates(params);
    RateTable table(params, spec, variant);
    table.prepare(cands, threads);
    return pick_best(evaluate(table, cands), false);
}

namespace {

// best (t_c, t_s) pair at a fixed nulling budget nu = j*(q-1); the (k,l)
// communication search and the (j,q) sensing search are run separately, with
// the sensing side reusing the communication-optimal k (a single network
// shares its user load)
BoundaryPoint paper_point_at_nu(const NetworkParams& p, const RateTable& table, int nu) {
    BoundaryPoint comm_best;
    bool first = true;
    for (int k = 1; k <= p.m_t - 1 - nu; ++k)
        for (int l = 1; k * l <= p.m_t - 1 - nu; ++l) {
            ResourceAllocation a{k, l, 0, 1};
            const double tc = p.lambda_b * k * table.r_c(k, l, nu);
            if (first || tc > comm_best.perf.t_c) {
                comm_best.alloc = a;
                comm_best.perf.t_c = tc;
                comm_best.perf.r_c = table.r_c(k, l, nu);
                first = false;
            }
        }
    // sensing 2D search over {(j,q): j*(q-1) = nu}
    const int k_star = comm_best.alloc.k;
    BoundaryPoint out = comm_best;
    bool found = false;
    auto consider = [&](int j, int q) {
        const double rs = table.r_s(k_star, q);
        const double ts = p.lambda_b * j * rs;
        if (!found || ts > out.perf.t_s) {
            out.alloc.j = j;
            out.alloc.q = q;
            out.perf.r_s = rs;
            out.perf.t_s = ts;
            found = true;
        }
    };
    if (nu == 0) {
        consider(std::min(p.j_max, p.m_t - 1), 1);
    } else {
        for (int j = 1; j <= std::min(nu, p.j_max); ++j)
            if (nu % j == 0) consider(j, nu / j + 1);
    }
    out.perf.t_sum = out.perf.t_c + out.perf.t_s;
    return out;
}

std::vector<BoundaryPoint> pareto_filter(std::vector<BoundaryPoint> pts) {
    for (auto& a : pts) {
        a.on_frontier = true;
        for (const auto& b : pts)
            if (strictly_dominates(b.perf, a.perf)) {
                a.on_frontier = false;
                break;
            }
    }
    return pts;
}

}  // namespace

Frontier boundary(const NetworkParams& params, BoundaryMethod method,
                  const QuadratureSpec& spec, FormulaVariant variant, int threads) {
    Frontier f;
    f.method = to_string(method);
    RateTable table(params, spec, variant);

    if (method == BoundaryMethod::enumerate) {
        auto allocs = enumerate_feasible(params);
        table.prepare(allocs, threads);
        f.evaluated = pareto_filter(evaluate(table, allocs));
    } else {
        // evaluate nu grid (full sweep, or binary-search refinement in strict
        // mode, which assumes the t_s trend over nu is unimodal)
        std::vector<ResourceAllocation> need;
        const int nu_max = params.m_t - 2;
        for (int nu = 0; nu <= nu_max; ++nu)
            for (int k = 1; k <= params.m_t - 1 - nu; ++k)
                for (int l = 1; k * l <= params.m_t - 1 - nu; ++l) {
                    need.push_back({k, l, 0, 1});
                    if (nu == 0) {
                        need.push_back({k, l, std::min(params.j_max, params.m_t - 1), 1});
                    } else {
                        for (int j = 1; j <= std::min(nu, params.j_max); ++j)
                            if (nu % j == 0) need.push_back({k, l, j, nu / j + 1});
                    }
                }
        table.prepare(need, threads);

        std::vector<int> nus;
        if (method == BoundaryMethod::paper_search) {
            for (int nu = 0; nu <= nu_max; ++nu) nus.push_back(nu);
        } else {
            int lo = 0, hi = nu_max;
            nus.push_back(lo);
            nus.push_back(hi);
            while (hi - lo > 2) {
                const int m1 = lo + (hi - lo) / 3, m2 = hi - (hi - lo) / 3;
                nus.push_back(m1);
                nus.push_back(m2);
                if (paper_point_at_nu(params, table, m1).perf.t_s <
                    paper_point_at_nu(params, table, m2).perf.t_s)
                    lo = m1;
                else
                    hi = m2;
            }
            for (int nu = lo; nu <= hi; ++nu) nus.push_back(nu);
            std::sort(nus.begin(), nus.end());
            nus.erase(std::unique(nus.begin(), nus.end()), nus.end());
        }
        std::vector<BoundaryPoint> pts;
        for (int nu : nus) pts.push_back(paper_point_at_nu(params, table, nu));
        f.evaluated = pareto_filter(std::move(pts));
    }

    for (const auto& p : f.evaluated)
        if (p.on_frontier) f.points.push_back(p);
    std::sort(f.points.begin(), f.points.end(), [](const BoundaryPoint& a, const BoundaryPoint& b) {
        if (a.perf.t_c != b.perf.t_c) return a.perf.t_c < b.perf.t_c;
        if (a.perf.t_s != b.perf.t_s) return a.perf.t_s > b.perf.t_s;
        return lex_before(a.alloc, b.alloc);
    });
    // drop exact performance duplicates, keeping the lexicographically first alloc
    std::vector<BoundaryPoint> dedup;
    for (const auto& p : f.points) {
        if (!dedup.empty() && dedup.back().perf.t_c == p.perf.t_c &&
            dedup.back().perf.t_s == p.perf.t_s)
            continue;
        dedup.push_back(p);
    }
    f.points = std::move(dedup);

    f.corner_comm = corner_comm_max(params, spec, variant, threads);
    f.corner_sense = corner_sense_max(params, spec, variant, threads);
    f.converged = table.all_converged();
    return f;
}

PerfPoint timeshare_bound(const BoundaryPoint& corner_comm, const BoundaryPoint& corner_sense,
                          double t) {
    if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("timeshare_bound: t must be in [0,1]");
    PerfPoint out;
    const PerfPoint& a = corner_comm.perf;
    const PerfPoint& b = corner_sense.perf;
    out.r_c = (1.0 - t) * a.r_c + t * b.r_c;
    out.r_s = (1.0 - t) * a.r_s + t * b.r_s;
    out.t_c = (1.0 - t) * a.t_c + t * b.t_c;
    out.t_s = (1.0 - t) * a.t_s + t * b.t_s;
    out.t_sum = out.t_c + out.t_s;
    return out;
}

double frontier_tc_at(const Frontier& f, double ts_level) {
    double best = 0.0;
    for (const auto& p : f.points)
        if (p.perf.t_s >= ts_level) best = std::max(best, p.perf.t_c);
    return best;
}

std::pair<double, double> frontier_gain_vs_timeshare(const Frontier& f, int grid) {
    const PerfPoint& a = f.corner_comm.perf;
    const PerfPoint& b = f.corner_sense.perf;
    double gain = 0.0, at_level = a.t_s;
    for (int i = 0; i < grid; ++i) {
        const double t = static_cast<double>(i) / (grid - 1);
        const double level = (1.0 - t) * a.t_s + t * b.t_s;
        const double ts_tc = (1.0 - t) * a.t_c + t * b.t_c;
        if (ts_tc <= 0.0) continue;
        const double g = frontier_tc_at(f, level) / ts_tc - 1.0;
        if (g > gain) {
            gain = g;
            at_level = level;
        }
    }
    return {gain, at_level};
}

}  // namespace isac
