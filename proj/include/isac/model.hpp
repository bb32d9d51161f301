#pragma once

#include <optional>
#include <string>
#include <vector>

namespace isac {

// Physical and deployment constants. Internally everything is normalized to a
// 1 km unit length, so densities are per km^2 and distances come out in km.
struct NetworkParams {
    double lambda_b = 1.0;               // BS density (BS/km^2)
    std::optional<double> lambda_u;      // user density, validation only
    std::optional<double> lambda_s;      // target density, validation only
    int m_t = 20;                        // transmit antennas
    int m_r = 10;                        // receive antennas
    double alpha = 4.0;                  // communication & BS-to-BS pathloss exponent
    double beta = 2.0;                   // sensing one-way pathloss exponent
    double xi = 0.1;                     // radar cross-section
    double delta_t = 1.0;                // matched-filter gain
    double p_t = 1.0;                    // transmit power (W); cancels in every SIR
    int j_max = 10;                      // max distinguishable targets
};

// Integer decision tuple. Beams spent: k*l for communication nulling/serving,
// j*(q-1) for sensing nulling, plus one DoF of margin: k*l + j*(q-1) + 1 <= m_t.
struct ResourceAllocation {
    int k = 0;  // users per BS
    int l = 1;  // communication cluster size
    int j = 0;  // targets per BS
    int q = 1;  // sensing cluster size

    int nulling_dof() const { return k * l + j * (q - 1); }
    // residual DoF shaping the desired-signal gain; feasibility <=> signal_dof >= 2
    int signal_dof(const NetworkParams& p) const { return p.m_t - nulling_dof() + 1; }

    bool operator==(const ResourceAllocation&) const = default;
};

// Per-link rates (nats/use) and network ASEs (nats/use/km^2).
struct PerfPoint {
    double r_c = 0.0;
    double r_s = 0.0;
    double t_c = 0.0;
    double t_s = 0.0;
    double t_sum = 0.0;
};

inline PerfPoint make_perf(const NetworkParams& p, const ResourceAllocation& a,
                           double r_c, double r_s) {
    PerfPoint out;
    out.r_c = r_c;
    out.r_s = r_s;
    out.t_c = p.lambda_b * a.k * r_c;
    out.t_s = p.lambda_b * a.j * r_s;
    out.t_sum = out.t_c + out.t_s;
    return out;
}

// Two evaluation routes for the analytical rate expressions. `rederived`
// follows the derivation steps exactly (joint serving-distance/cluster-ratio
// law on the communication side, echo pathloss R^{-2*beta} with interference
// pathloss x^{-alpha} on the sensing side) and is the reference output;
// `as_written` reproduces the published closed forms verbatim. The Monte
// Carlo oracle arbitrates between them.
enum class FormulaVariant { rederived, as_written };

const char* to_string(FormulaVariant v);

struct Violation {
    std::string field;
    std::string message;
};

// Returns every violated invariant; empty means ok. Violations are data, not
// exceptions.
std::vector<Violation> validate(const NetworkParams& params, const ResourceAllocation& alloc);
std::vector<Violation> validate_params(const NetworkParams& params);

// All feasible tuples in lexicographic (k,l,j,q) order. Degenerate axes are
// canonicalized so the set is finite: l = 1 when k = 0, q = 1 when j = 0.
std::vector<ResourceAllocation> enumerate_feasible(const NetworkParams& params);

}  // namespace isac
