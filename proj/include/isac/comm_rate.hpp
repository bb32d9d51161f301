#pragma once

#include "isac/model.hpp"
#include "isac/numerics.hpp"

namespace isac {

// Evaluation context for the communication rate integrals: d is the shape of
// the desired-signal gain (residual DoF after nulling), k/l/alpha come from
// the allocation and network.
struct CommIntegrandCtx {
    int d = 2;
    int k = 1;
    int l = 1;
    double alpha = 4.0;
};

// Interference exponent seen by the typical user, normalized by pi*lambda*r^2,
// as a function of the Laplace variable z and the cluster distance ratio
// eta = r/r_L in (0,1]:
//   H(z,k,alpha,eta) = k z^{2/alpha} B(z/(z+eta^{-alpha}), 1-2/alpha, k+2/alpha)
//                      + eta^{-2} ((1+z eta^alpha)^{-k} - 1)
double h_function(double z, int k, double alpha, double eta,
                  const QuadratureSpec& beta_spec = {1e-10, 1e-15, 400, 1.0});

// Density of the serving-to-furthest cluster distance ratio for cluster size
// l >= 2: f(x) = 2(l-1) x (1-x^2)^{l-2} on [0,1]. The l = 1 case has no ratio
// (the evaluators use eta == 1 there).
double eta_pdf(double x, int l);

// CDF of the same ratio, used by goodness-of-fit checks.
double eta_cdf(double x, int l);

// Mean user rate in nats/use. Depends on the BS density through nothing:
// the core takes only (d, k, l, alpha).
//
// For l >= 2 the conditional Laplace transform exp(-pi lambda r^2 H) is
// averaged over the serving/cluster geometry two ways. The printed closed form
// (`as_written`) integrates the serving distance against its marginal and the
// ratio eta independently, giving the eta-average of 1/(H+1). The reference
// route (`rederived`) keeps the exact joint law -- pi lambda r^2 = eta^2 * T
// with T ~ Gamma(l,1) independent of eta -- giving the eta-average of
// (1 + eta^2 H)^{-l}. The two coincide at l = 1; the Monte Carlo oracle sides
// with the joint-law route (the printed form overshoots by 1-2% at l = 2).
QuadResult avg_comm_rate_core(const CommIntegrandCtx& ctx, const QuadratureSpec& spec,
                              FormulaVariant variant = FormulaVariant::rederived);
QuadResult avg_comm_rate(const NetworkParams& params, const ResourceAllocation& alloc,
                         const QuadratureSpec& spec,
                         FormulaVariant variant = FormulaVariant::rederived);

// Communication ASE t_c = lambda_b * k * r_c (nats/use/km^2).
QuadResult comm_ase(const NetworkParams& params, const ResourceAllocation& alloc,
                    const QuadratureSpec& spec,
                    FormulaVariant variant = FormulaVariant::rederived);

}  // namespace isac
