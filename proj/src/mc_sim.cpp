#include "isac/mc_sim.hpp"

#include <cmath>
#include <complex>
#include <random>

#include "isac/stats.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace isac {

namespace {

constexpr long long kChunk = 1024;

struct ChunkAcc {
    double sum = 0.0, sumsq = 0.0;
    long long n = 0, capped = 0, empty = 0;
    void add(double x) {
        sum += x;
        sumsq += x * x;
        ++n;
    }
};

double window_radius(const NetworkParams& p, const McConfig& mc) {
    return mc.window_radius_factor / std::sqrt(p.lambda_b);
}

McEstimate finalize(const std::vector<ChunkAcc>& accs, const McConfig& mc) {
    RunningMoments m;
    McEstimate est;
    for (const auto& a : accs) {  // fixed fold order keeps results thread-count independent
        m.sum += a.sum;
        m.sumsq += a.sumsq;
        m.n += a.n;
        est.capped_trials += a.capped;
        est.empty_realizations += a.empty;
    }
    est.mean = m.mean();
    est.half_width = normal_quantile(0.5 + mc.ci_level / 2.0) * m.std_error();
    est.trials = m.n;
    est.seed = mc.seed;
    return est;
}

// Runs per_trial over fixed chunks. per_trial(t, acc) must derive all of its
// randomness from the trial index t.
template <class PerTrial>
std::vector<ChunkAcc> run_chunks(long long trials, int threads, bool parallel,
                                 const PerTrial& per_trial) {
    const long long nchunks = (trials + kChunk - 1) / kChunk;
    std::vector<ChunkAcc> accs(static_cast<std::size_t>(nchunks));
    auto do_chunk = [&](long long c) {
        const long long lo = c * kChunk;
        const long long hi = std::min(trials, lo + kChunk);
        for (long long t = lo; t < hi; ++t) per_trial(t, accs[static_cast<std::size_t>(c)]);
    };
    if (parallel) {
#ifdef _OPENMP
        const int nt = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(nt)
        for (long long c = 0; c < nchunks; ++c) do_chunk(c);
        return accs;
#endif
    }
    (void)threads;
    for (long long c = 0; c < nchunks; ++c) do_chunk(c);
    return accs;
}

struct CommScratch {
    std::vector<double> dist2;
    std::vector<double> tmp;
};

// One gamma-gain communication trial; draws in fixed order: point count,
// squared distances, signal gain, per-BS interferer gains in index order.
double comm_trial(const NetworkParams& p, const ResourceAllocation& a, double w,
                  TrialRng& rng, CommScratch& s, ChunkAcc& acc, TrialRecord* rec) {
    const double mu = p.lambda_b * M_PI * w * w;
    std::poisson_distribution<long long> pois(mu);
    long long n = 0;
    while ((n = pois(rng)) == 0) ++acc.empty;
    s.dist2.resize(static_cast<std::size_t>(n));
    const double w2 = w * w;
    for (auto& d2 : s.dist2) d2 = w2 * rng.uniform();

    const int d = a.signal_dof(p);
    std::gamma_distribution<double> gsig(static_cast<double>(d), 1.0);
    std::gamma_distribution<double> gint(static_cast<double>(a.k), 1.0);
    const double g_signal = gsig(rng);

    std::size_t serving = 0;
    for (std::size_t i = 1; i < s.dist2.size(); ++i)
        if (s.dist2[i] < s.dist2[serving]) serving = i;

    // cluster threshold: the l-th smallest squared distance (rank 1 = serving)
    double thr = -1.0;
    if (n > a.l) {
        s.tmp = s.dist2;
        std::nth_element(s.tmp.begin(), s.tmp.begin() + (a.l - 1), s.tmp.end());
        thr = s.tmp[static_cast<std::size_t>(a.l - 1)];
    }

    const double half_alpha = 0.5 * p.alpha;
    double interf = 0.0;
    for (std::size_t i = 0; i < s.dist2.size(); ++i) {
        if (i == serving) continue;
        const double g = gint(rng);
        if (thr >= 0.0 && s.dist2[i] > thr) interf += g * std::pow(s.dist2[i], -half_alpha);
    }

    double sir;
    if (interf > 0.0) {
        sir = g_signal * std::pow(s.dist2[serving], -half_alpha) / interf;
        if (sir > kSirCap) {
            sir = kSirCap;
            ++acc.capped;
        }
    } else {
        sir = kSirCap;
        ++acc.capped;
    }
    const double rate = std::log1p(sir);
    if (rec) *rec = {std::sqrt(s.dist2[serving]), sir, rate};
    return rate;
}

struct SenseScratch {
    std::vector<Vec2> pts;
    std::vector<double> d2;
    std::vector<double> tmp;
};

// One gamma-gain sensing trial; draws: point count, positions (radius then
// angle per point), target-direction gain, per-BS gains in index order.
double radar_trial(const NetworkParams& p, const ResourceAllocation& a, double w,
                   TrialRng& rng, SenseScratch& s, ChunkAcc& acc, TrialRecord* rec) {
    const double mu = p.lambda_b * M_PI * w * w;
    std::poisson_distribution<long long> pois(mu);
    long long n = 0;
    while ((n = pois(rng)) == 0) ++acc.empty;
    s.pts.resize(static_cast<std::size_t>(n));
    for (auto& pt : s.pts) {
        const double r = w * std::sqrt(rng.uniform());
        const double th = 2.0 * M_PI * rng.uniform();
        pt = {r * std::cos(th), r * std::sin(th)};
    }

    std::gamma_distribution<double> gk(static_cast<double>(a.k), 1.0);
    const double h_target = gk(rng);

    std::size_t serving = 0;
    auto norm2 = [](const Vec2& v) { return v.x * v.x + v.y * v.y; };
    for (std::size_t i = 1; i < s.pts.size(); ++i)
        if (norm2(s.pts[i]) < norm2(s.pts[serving])) serving = i;
    const double r2_serv = norm2(s.pts[serving]);

    s.d2.resize(s.pts.size());
    for (std::size_t i = 0; i < s.pts.size(); ++i) {
        const double dx = s.pts[i].x - s.pts[serving].x;
        const double dy = s.pts[i].y - s.pts[serving].y;
        s.d2[i] = dx * dx + dy * dy;  // 0 for the serving BS itself
    }

    // exclusion threshold: the (q-1)-th nearest BS to the serving BS
    double thr = 0.0;
    if (a.q > 1 && n > a.q - 1) {
        s.tmp = s.d2;
        std::nth_element(s.tmp.begin(), s.tmp.begin() + (a.q - 1), s.tmp.end());
        thr = s.tmp[static_cast<std::size_t>(a.q - 1)];  // rank 0 is the serving distance 0
    } else if (a.q > 1) {
        thr = std::numeric_limits<double>::infinity();
    }

    const double half_alpha = 0.5 * p.alpha;
    double interf = 0.0;
    for (std::size_t i = 0; i < s.pts.size(); ++i) {
        if (i == serving) continue;
        const double h = gk(rng);
        if (s.d2[i] > thr) interf += h * std::pow(s.d2[i], -half_alpha);
    }

    const double prelog = p.xi * p.delta_t * p.m_r;
    double sir;
    if (interf > 0.0) {
        sir = prelog * h_target * std::pow(r2_serv, -p.beta) / interf;
        if (sir > kSirCap) {
            sir = kSirCap;
            ++acc.capped;
        }
    } else {
        sir = kSirCap;
        ++acc.capped;
    }
    const double rate = std::log1p(sir);
    if (rec) *rec = {std::sqrt(r2_serv), sir, rate};
    return rate;
}

template <class Trial>
McEstimate drive(const NetworkParams& p, const ResourceAllocation& a, const McConfig& mc,
                 int threads, bool parallel, std::vector<TrialRecord>* sink, Trial trial) {
    if (sink) sink->assign(static_cast<std::size_t>(mc.trials), TrialRecord{});
    const double w = window_radius(p, mc);
    auto accs = run_chunks(mc.trials, threads, parallel, [&](long long t, ChunkAcc& acc) {
        thread_local CommScratch cs;
        thread_local SenseScratch ss;
        TrialRng rng(mc.seed, static_cast<std::uint64_t>(t));
        TrialRecord* rec = sink ? &(*sink)[static_cast<std::size_t>(t)] : nullptr;
        acc.add(trial(p, a, w, rng, cs, ss, acc, rec));
    });
    return finalize(accs, mc);
}

McEstimate zero_estimate(const McConfig& mc) {
    McEstimate e;
    e.trials = mc.trials;
    e.seed = mc.seed;
    return e;
}

}  // namespace

PppRealization sample_ppp(double lambda_b, double w, int cluster_size, ClusterMode mode,
                          TrialRng& rng, long long* empty_count) {
    if (!(lambda_b > 0.0) || !(w > 0.0))
        throw std::invalid_argument("sample_ppp: need lambda_b > 0 and window_radius > 0");
    PppRealization out;
    std::poisson_distribution<long long> pois(lambda_b * M_PI * w * w);
    long long n = 0;
    while ((n = pois(rng)) == 0)
        if (empty_count) ++(*empty_count);
    out.points.resize(static_cast<std::size_t>(n));
    for (auto& pt : out.points) {
        const double r = w * std::sqrt(rng.uniform());
        const double th = 2.0 * M_PI * rng.uniform();
        pt = {r * std::cos(th), r * std::sin(th)};
    }
    auto norm2 = [](const Vec2& v) { return v.x * v.x + v.y * v.y; };
    out.serving_index = 0;
    for (int i = 1; i < n; ++i)
        if (norm2(out.points[i]) < norm2(out.points[out.serving_index])) out.serving_index = i;

    const Vec2 ref = (mode == ClusterMode::comm) ? Vec2{0.0, 0.0}
                                                 : out.points[out.serving_index];
    std::vector<std::pair<double, int>> by_dist;
    by_dist.reserve(static_cast<std::size_t>(n - 1));
    for (int i = 0; i < n; ++i) {
        if (i == out.serving_index) continue;
        const double dx = out.points[i].x - ref.x, dy = out.points[i].y - ref.y;
        by_dist.emplace_back(dx * dx + dy * dy, i);
    }
    std::sort(by_dist.begin(), by_dist.end());
    const int csize = std::min<int>(cluster_size - 1, static_cast<int>(by_dist.size()));
    for (int i = 0; i < static_cast<int>(by_dist.size()); ++i) {
        if (i < csize)
            out.cluster.push_back(by_dist[static_cast<std::size_t>(i)].second);
        else
            out.interferers.push_back(by_dist[static_cast<std::size_t>(i)].second);
    }
    return out;
}

McEstimate mc_comm_rate(const NetworkParams& p, const ResourceAllocation& a, const McConfig& mc,
                        int threads, std::vector<TrialRecord>* sink) {
    if (a.k == 0) return zero_estimate(mc);
    return drive(p, a, mc, threads, true, sink,
                 [](const NetworkParams& p2, const ResourceAllocation& a2, double w,
                    TrialRng& rng, CommScratch& cs, SenseScratch&, ChunkAcc& acc,
                    TrialRecord* rec) { return comm_trial(p2, a2, w, rng, cs, acc, rec); });
}

McEstimate mc_comm_rate_serial(const NetworkParams& p, const ResourceAllocation& a,
                               const McConfig& mc, std::vector<TrialRecord>* sink) {
    if (a.k == 0) return zero_estimate(mc);
    return drive(p, a, mc, 1, false, sink,
                 [](const NetworkParams& p2, const ResourceAllocation& a2, double w,
                    TrialRng& rng, CommScratch& cs, SenseScratch&, ChunkAcc& acc,
                    TrialRecord* rec) { return comm_trial(p2, a2, w, rng, cs, acc, rec); });
}

McEstimate mc_radar_rate(const NetworkParams& p, const ResourceAllocation& a, const McConfig& mc,
                         int threads, std::vector<TrialRecord>* sink) {
    if (a.k == 0 || a.j == 0) return zero_estimate(mc);
    return drive(p, a, mc, threads, true, sink,
                 [](const NetworkParams& p2, const ResourceAllocation& a2, double w,
                    TrialRng& rng, CommScratch&, SenseScratch& ss, ChunkAcc& acc,
                    TrialRecord* rec) { return radar_trial(p2, a2, w, rng, ss, acc, rec); });
}

McEstimate mc_radar_rate_serial(const NetworkParams& p, const ResourceAllocation& a,
                                const McConfig& mc, std::vector<TrialRecord>* sink) {
    if (a.k == 0 || a.j == 0) return zero_estimate(mc);
    return drive(p, a, mc, 1, false, sink,
                 [](const NetworkParams& p2, const ResourceAllocation& a2, double w,
                    TrialRng& rng, CommScratch&, SenseScratch& ss, ChunkAcc& acc,
                    TrialRecord* rec) { return radar_trial(p2, a2, w, rng, ss, acc, rec); });
}

namespace {

template <class Fn>
std::vector<double> sample_by_index(long long n, int threads, const Fn& fn) {
    std::vector<double> out(static_cast<std::size_t>(n));
    const long long nchunks = (n + kChunk - 1) / kChunk;
    auto do_chunk = [&](long long c) {
        const long long lo = c * kChunk, hi = std::min(n, lo + kChunk);
        for (long long i = lo; i < hi; ++i) out[static_cast<std::size_t>(i)] = fn(i);
    };
#ifdef _OPENMP
    const int nt = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(nt)
    for (long long c = 0; c < nchunks; ++c) do_chunk(c);
#else
    (void)threads;
    for (long long c = 0; c < nchunks; ++c) do_chunk(c);
#endif
    return out;
}

// squared distances to the origin only; enough for nearest/eta statistics
void sample_dist2(double lambda_b, double w, TrialRng& rng, std::vector<double>& d2) {
    std::poisson_distribution<long long> pois(lambda_b * M_PI * w * w);
    long long n = 0;
    while ((n = pois(rng)) == 0) {
    }
    d2.resize(static_cast<std::size_t>(n));
    const double w2 = w * w;
    for (auto& v : d2) v = w2 * rng.uniform();
}

}  // namespace

std::vector<double> mc_nearest_distance_samples(double lambda_b, long long n, std::uint64_t seed,
                                                double factor, int threads) {
    const double w = factor / std::sqrt(lambda_b);
    return sample_by_index(n, threads, [&](long long i) {
        thread_local std::vector<double> d2;
        TrialRng rng(seed, static_cast<std::uint64_t>(i));
        sample_dist2(lambda_b, w, rng, d2);
        return std::sqrt(*std::min_element(d2.begin(), d2.end()));
    });
}

std::vector<double> mc_eta_samples(double lambda_b, int l, long long n, std::uint64_t seed,
                                   double factor, int threads) {
    if (l < 2) throw std::invalid_argument("mc_eta_samples: need l >= 2");
    const double w = factor / std::sqrt(lambda_b);
    return sample_by_index(n, threads, [&](long long i) {
        thread_local std::vector<double> d2;
        TrialRng rng(seed, static_cast<std::uint64_t>(i));
        do {
            sample_dist2(lambda_b, w, rng, d2);
        } while (static_cast<int>(d2.size()) < l);
        std::nth_element(d2.begin(), d2.begin() + (l - 1), d2.end());
        const double rl2 = d2[static_cast<std::size_t>(l - 1)];
        const double r12 = *std::min_element(d2.begin(), d2.begin() + l);
        return std::sqrt(r12 / rl2);
    });
}

std::vector<double> mc_rq_over_2r_samples(double lambda_b, int q, long long n,
                                          std::uint64_t seed, double factor, int threads) {
    if (q < 2) throw std::invalid_argument("mc_rq_over_2r_samples: need q >= 2");
    const double w = factor / std::sqrt(lambda_b);
    return sample_by_index(n, threads, [&](long long i) {
        TrialRng rng(seed, static_cast<std::uint64_t>(i));
        while (true) {
            PppRealization r = sample_ppp(lambda_b, w, q, ClusterMode::sense, rng);
            if (static_cast<int>(r.cluster.size()) < q - 1) continue;
            const Vec2 s = r.points[static_cast<std::size_t>(r.serving_index)];
            const int last = r.cluster.back();
            const double dx = r.points[static_cast<std::size_t>(last)].x - s.x;
            const double dy = r.points[static_cast<std::size_t>(last)].y - s.y;
            const double rq = std::sqrt(dx * dx + dy * dy);
            const double R = std::sqrt(s.x * s.x + s.y * s.y);
            return rq / (2.0 * R);
        }
    });
}

ConditionalLaplaceEstimate mc_sense_interference_laplace(const NetworkParams& p, int k, int q,
                                                         double z, double R, double rel_window,
                                                         long long draws, std::uint64_t seed,
                                                         double ci_level, int threads) {
    McConfig mc;
    mc.trials = draws;
    mc.seed = seed;
    const double w = window_radius(p, mc);
    auto accs = run_chunks(draws, threads, true, [&](long long t, ChunkAcc& acc) {
        thread_local SenseScratch s;
        TrialRng rng(seed, static_cast<std::uint64_t>(t));
        std::poisson_distribution<long long> pois(p.lambda_b * M_PI * w * w);
        long long n = 0;
        while ((n = pois(rng)) == 0) {
        }
        s.pts.resize(static_cast<std::size_t>(n));
        for (auto& pt : s.pts) {
            const double r = w * std::sqrt(rng.uniform());
            const double th = 2.0 * M_PI * rng.uniform();
            pt = {r * std::cos(th), r * std::sin(th)};
        }
        auto norm2 = [](const Vec2& v) { return v.x * v.x + v.y * v.y; };
        std::size_t serving = 0;
        for (std::size_t i = 1; i < s.pts.size(); ++i)
            if (norm2(s.pts[i]) < norm2(s.pts[serving])) serving = i;
        const double r_serv = std::sqrt(norm2(s.pts[serving]));

        s.d2.resize(s.pts.size());
        for (std::size_t i = 0; i < s.pts.size(); ++i) {
            const double dx = s.pts[i].x - s.pts[serving].x;
            const double dy = s.pts[i].y - s.pts[serving].y;
            s.d2[i] = dx * dx + dy * dy;
        }
        double thr = 0.0;
        if (q > 1 && n > q - 1) {
            s.tmp = s.d2;
            std::nth_element(s.tmp.begin(), s.tmp.begin() + (q - 1), s.tmp.end());
            thr = s.tmp[static_cast<std::size_t>(q - 1)];
        } else if (q > 1) {
            thr = std::numeric_limits<double>::infinity();
        }
        std::gamma_distribution<double> gk(static_cast<double>(k), 1.0);
        double interf = 0.0;
        for (std::size_t i = 0; i < s.pts.size(); ++i) {
            if (i == serving) continue;
            const double h = gk(rng);
            if (s.d2[i] > thr) interf += h * std::pow(s.d2[i], -0.5 * p.alpha);
        }
        if (std::fabs(r_serv - R) <= rel_window * R)
            acc.add(std::exp(-z * interf * std::pow(r_serv * r_serv, p.beta)));
    });
    RunningMoments m;
    for (const auto& a : accs) {
        m.sum += a.sum;
        m.sumsq += a.sumsq;
        m.n += a.n;
    }
    ConditionalLaplaceEstimate est;
    est.mean = m.mean();
    est.half_width = normal_quantile(0.5 + ci_level / 2.0) * m.std_error();
    est.accepted = m.n;
    est.draws = draws;
    return est;
}

namespace {

using cvec = std::vector<std::complex<double>>;

cvec draw_cn(int n, double scale, TrialRng& rng) {
    std::normal_distribution<double> nd(0.0, std::sqrt(0.5) * scale);
    cvec v(static_cast<std::size_t>(n));
    for (auto& x : v) {
        const double re = nd(rng);
        const double im = nd(rng);
        x = {re, im};
    }
    return v;
}

cvec steering(double cos_theta, int n) {
    cvec v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        v[static_cast<std::size_t>(i)] = std::polar(1.0, M_PI * i * cos_theta);
    return v;
}

std::complex<double> inner(const cvec& a, const cvec& b) {  // <a,b> = sum conj(a_i) b_i
    std::complex<double> s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

double norm2c(const cvec& a) {
    double s = 0.0;
    for (const auto& x : a) s += std::norm(x);
    return s;
}

// modified Gram-Schmidt; false on (numerically) dependent columns
bool orthonormalize(std::vector<cvec>& cols) {
    for (std::size_t i = 0; i < cols.size(); ++i) {
        for (int pass = 0; pass < 2; ++pass)
            for (std::size_t j = 0; j < i; ++j) {
                const auto c = inner(cols[j], cols[i]);
                for (std::size_t t = 0; t < cols[i].size(); ++t) cols[i][t] -= c * cols[j][t];
            }
        const double nn = std::sqrt(norm2c(cols[i]));
        if (nn < 1e-9) return false;
        for (auto& x : cols[i]) x /= nn;
    }
    return true;
}

cvec project_out(const cvec& h, const std::vector<cvec>& basis) {
    cvec r = h;
    for (const auto& b : basis) {
        const auto c = inner(b, r);
        for (std::size_t t = 0; t < r.size(); ++t) r[t] -= c * b[t];
    }
    return r;
}

// v^H G^H with v an M_r steering vector and G i.i.d. complex Gaussian
cvec sensing_equivalent_channel(int m_t, int m_r, TrialRng& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const cvec v = steering(u(rng), m_r);
    cvec h(static_cast<std::size_t>(m_t), 0.0);
    std::normal_distribution<double> nd(0.0, std::sqrt(0.5));
    for (int r = 0; r < m_r; ++r) {
        const auto vr = std::conj(v[static_cast<std::size_t>(r)]);
        for (int t = 0; t < m_t; ++t) {
            const std::complex<double> g{nd(rng), nd(rng)};
            h[static_cast<std::size_t>(t)] += vr * g;
        }
    }
    return h;
}

}  // namespace

ChannelGainStats mc_channel_gains(const NetworkParams& p, const ResourceAllocation& a,
                                  long long n, std::uint64_t seed) {
    if (a.k < 1) throw std::invalid_argument("mc_channel_gains: need k >= 1");
    const int m_t = p.m_t;
    const int n_constraints = a.k * a.l - 1 + a.j * (a.q - 1);
    if (n_constraints >= m_t)
        throw std::invalid_argument("mc_channel_gains: constraint null space is empty");

    ChannelGainStats out;
    out.g_signal.reserve(static_cast<std::size_t>(n));
    std::uniform_real_distribution<double> u(-1.0, 1.0);

    for (long long i = 0; i < n; ++i) {
        TrialRng rng(seed, static_cast<std::uint64_t>(i));
        for (;;) {
            std::vector<cvec> own;
            for (int k = 0; k < a.k; ++k) own.push_back(draw_cn(m_t, 1.0, rng));
            std::vector<cvec> shared;  // cross-cluster users + sensing equivalents
            for (int c = 0; c < a.k * (a.l - 1); ++c) shared.push_back(draw_cn(m_t, 1.0, rng));
            for (int c = 0; c < a.j * (a.q - 1); ++c)
                shared.push_back(sensing_equivalent_channel(m_t, p.m_r, rng));

            std::vector<cvec> precoders;
            bool ok = true;
            for (int k = 0; k < a.k && ok; ++k) {
                std::vector<cvec> cons = shared;
                for (int o = 0; o < a.k; ++o)
                    if (o != k) cons.push_back(own[static_cast<std::size_t>(o)]);
                if (!orthonormalize(cons)) {
                    ok = false;
                    break;
                }
                cvec f = project_out(own[static_cast<std::size_t>(k)], cons);
                const double nn = std::sqrt(norm2c(f));
                if (nn < 1e-9) {
                    ok = false;
                    break;
                }
                for (auto& x : f) x /= nn;
                precoders.push_back(std::move(f));

                if (k == 0) {
                    double leak = 0.0;
                    for (const auto& c : cons)
                        leak = std::max(leak, std::norm(inner(c, precoders[0])));
                    out.max_nulled_leakage = std::max(out.max_nulled_leakage, leak);
                }
            }
            if (!ok) {
                ++out.rank_deficient_resamples;
                continue;
            }

            out.g_signal.push_back(std::norm(inner(own[0], precoders[0])));

            const cvec aim = steering(u(rng), m_t);
            double ht = 0.0;
            for (const auto& f : precoders) ht += std::norm(inner(aim, f));
            out.h_target.push_back(ht);

            const cvec victim = draw_cn(m_t, 1.0, rng);
            double gi = 0.0;
            for (const auto& f : precoders) gi += std::norm(inner(victim, f));
            out.g_interf.push_back(gi);

            const cvec sense_victim = sensing_equivalent_channel(m_t, p.m_r, rng);
            double gs = 0.0;
            for (const auto& f : precoders) gs += std::norm(inner(sense_victim, f));
            out.g_sense_interf.push_back(gs);
            break;
        }
    }

    const int d = a.signal_dof(p);
    out.ks_signal = ks_distance(out.g_signal, [&](double x) {
        return gamma_p(static_cast<double>(d), x);
    });
    out.ks_signal_pvalue = ks_pvalue(out.ks_signal, out.g_signal.size());
    auto mean_of = [](const std::vector<double>& v) {
        double s = 0.0;
        for (double x : v) s += x;
        return v.empty() ? 0.0 : s / static_cast<double>(v.size());
    };
    out.target_scale = mean_of(out.h_target) / a.k;
    out.interf_scale = mean_of(out.g_interf) / a.k;
    out.sense_scale = mean_of(out.g_sense_interf) / a.k;
    return out;
}

}  // namespace isac
