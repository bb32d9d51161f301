#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "isac/comm_rate.hpp"
#include "isac/model.hpp"
#include "isac/sense_rate.hpp"

namespace isac {

struct BoundaryPoint {
    ResourceAllocation alloc;
    PerfPoint perf;
    bool on_frontier = false;
};

struct Frontier {
    std::vector<BoundaryPoint> points;     // nondominated, sorted by increasing t_c
    std::vector<BoundaryPoint> evaluated;  // every candidate, with on_frontier flags
    BoundaryPoint corner_comm;             // max t_c (Q = 1 slice)
    BoundaryPoint corner_sense;            // max t_s (L = 1 slice)
    std::string method;
    bool converged = true;
};

enum class BoundaryMethod { enumerate, paper_search, paper_search_strict };

BoundaryMethod parse_boundary_method(const std::string& name);
const char* to_string(BoundaryMethod m);

// Memoized rate evaluations keyed by their true dependencies:
// r_c <- (k, l, nu), r_s <- (k, q). prepare() evaluates all keys needed by the
// given allocations in parallel; lookups afterwards are read-only.
class RateTable {
  public:
    RateTable(const NetworkParams& params, const QuadratureSpec& spec, FormulaVariant variant)
        : params_(params), spec_(spec), variant_(variant) {}

    void prepare(const std::vector<ResourceAllocation>& allocs, int threads = 0);
    double r_c(int k, int l, int nu) const;
    double r_s(int k, int q) const;
    PerfPoint perf(const ResourceAllocation& alloc) const;
    bool all_converged() const { return converged_; }

  private:
    NetworkParams params_;
    QuadratureSpec spec_;
    FormulaVariant variant_;
    std::map<std::tuple<int, int, int>, double> rc_;
    std::map<std::pair<int, int>, double> rs_;
    bool converged_ = true;
};

// Corner operating points of the performance region.
BoundaryPoint corner_comm_max(const NetworkParams& params, const QuadratureSpec& spec,
                              FormulaVariant variant = FormulaVariant::rederived,
                              int threads = 0);
BoundaryPoint corner_sense_max(const NetworkParams& params, const QuadratureSpec& spec,
                               FormulaVariant variant = FormulaVariant::rederived,
                               int threads = 0);

Frontier boundary(const NetworkParams& params, BoundaryMethod method,
                  const QuadratureSpec& spec,
                  FormulaVariant variant = FormulaVariant::rederived, int threads = 0);

// Convex combination of the two corner performance points; t = 0 gives the
// communication corner, t = 1 the sensing corner.
PerfPoint timeshare_bound(const BoundaryPoint& corner_comm, const BoundaryPoint& corner_sense,
                          double t);

// Largest relative communication-ASE gain of the frontier over the
// time-sharing segment at matched sensing ASE, scanned on a grid of t_s
// levels between the corners. Returns (gain, t_s level where it occurs).
std::pair<double, double> frontier_gain_vs_timeshare(const Frontier& f, int grid = 101);

// max t_c among frontier points with t_s >= level (staircase evaluation)
double frontier_tc_at(const Frontier& f, double ts_level);

}  // namespace isac
