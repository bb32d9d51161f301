#pragma once

#include <cstdint>
#include <vector>

#include "isac/model.hpp"
#include "isac/rng.hpp"

namespace isac {

struct McConfig {
    long long trials = 100000;
    std::uint64_t seed = 1;
    double window_radius_factor = 20.0;  // window radius = factor / sqrt(lambda_b)
    double ci_level = 0.99;
};

// Trials with an empty interferer set (SIR unbounded) contribute log1p of this
// cap and are counted in capped_trials rather than dropped.
inline constexpr double kSirCap = 1e12;

struct McEstimate {
    double mean = 0.0;
    double half_width = 0.0;  // at the configured CI level
    long long trials = 0;
    std::uint64_t seed = 0;
    long long capped_trials = 0;
    long long empty_realizations = 0;  // windows with no BS, resampled
};

struct Vec2 {
    double x = 0.0, y = 0.0;
};

struct PppRealization {
    std::vector<Vec2> points;
    int serving_index = -1;          // nearest point to the origin
    std::vector<int> cluster;        // cooperating BSs, serving excluded
    std::vector<int> interferers;    // everything else
};

// comm: cluster = the l-1 next-nearest BSs to the origin after the serving one.
// sense: cluster = the q-1 BSs nearest to the serving BS.
enum class ClusterMode { comm, sense };

PppRealization sample_ppp(double lambda_b, double window_radius, int cluster_size,
                          ClusterMode mode, TrialRng& rng, long long* empty_count = nullptr);

struct TrialRecord {
    double serving_distance = 0.0;
    double sir = 0.0;
    double rate = 0.0;
};

// Gamma-gain SIR simulations. Per-trial RNG streams are derived from the trial
// index, and partial sums are reduced over fixed-size chunks in index order,
// so results are bit-identical for any thread count. The *_serial functions
// are the plain reference loops kept for testing and benchmarking.
McEstimate mc_comm_rate(const NetworkParams& params, const ResourceAllocation& alloc,
                        const McConfig& mc, int threads = 0,
                        std::vector<TrialRecord>* sink = nullptr);
McEstimate mc_comm_rate_serial(const NetworkParams& params, const ResourceAllocation& alloc,
                               const McConfig& mc, std::vector<TrialRecord>* sink = nullptr);
McEstimate mc_radar_rate(const NetworkParams& params, const ResourceAllocation& alloc,
                         const McConfig& mc, int threads = 0,
                         std::vector<TrialRecord>* sink = nullptr);
McEstimate mc_radar_rate_serial(const NetworkParams& params, const ResourceAllocation& alloc,
                                const McConfig& mc, std::vector<TrialRecord>* sink = nullptr);

// Distribution samplers for goodness-of-fit checks.
std::vector<double> mc_nearest_distance_samples(double lambda_b, long long n, std::uint64_t seed,
                                                double window_radius_factor = 8.0,
                                                int threads = 0);
std::vector<double> mc_eta_samples(double lambda_b, int l, long long n, std::uint64_t seed,
                                   double window_radius_factor = 8.0, int threads = 0);
std::vector<double> mc_rq_over_2r_samples(double lambda_b, int q, long long n,
                                          std::uint64_t seed,
                                          double window_radius_factor = 8.0, int threads = 0);

// Empirical conditional Laplace transform E[e^{-z I_S} | serving distance in
// R*(1 +/- rel_window)], estimated by rejection from full PPP draws.
struct ConditionalLaplaceEstimate {
    double mean = 0.0;
    double half_width = 0.0;
    long long accepted = 0;
    long long draws = 0;
};
ConditionalLaplaceEstimate mc_sense_interference_laplace(const NetworkParams& params, int k,
                                                         int q, double z, double R,
                                                         double rel_window, long long draws,
                                                         std::uint64_t seed,
                                                         double ci_level = 0.99,
                                                         int threads = 0);

// Channel-level zero-forcing oracle: explicit complex-Gaussian channels,
// unit-norm ZF precoders projecting the desired channel onto the null space of
// the co-scheduled / cross-cluster / sensing constraint channels.
struct ChannelGainStats {
    std::vector<double> g_signal;        // |h^H f|^2 of the served user
    std::vector<double> h_target;        // sum_k |a^H f_k|^2 toward a random direction
    std::vector<double> g_interf;        // sum_k |h_v^H f_k|^2 at an uninvolved user
    std::vector<double> g_sense_interf;  // sum_k |(v^H G^H) f_k|^2 at an uninvolved BS
    double ks_signal = 0.0;              // KS distance of g_signal vs Gamma(d,1)
    double ks_signal_pvalue = 0.0;
    double target_scale = 0.0;           // fitted theta of Gamma(k,theta) fits
    double interf_scale = 0.0;
    double sense_scale = 0.0;
    double max_nulled_leakage = 0.0;     // residual |c^H f|^2 / |c|^2 toward constraints
    long long rank_deficient_resamples = 0;
};
ChannelGainStats mc_channel_gains(const NetworkParams& params, const ResourceAllocation& alloc,
                                  long long n, std::uint64_t seed);

}  // namespace isac
