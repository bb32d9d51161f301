#pragma once

#include "isac/model.hpp"
#include "isac/numerics.hpp"

namespace isac {

// Evaluation context for the sensing integrals.
struct SenseIntegrandCtx {
    int k = 1;
    int q = 1;
    double alpha = 4.0;
    double beta = 2.0;
    double xi = 0.1;
    double delta_t = 1.0;
    int m_r = 10;
    double lambda_b = 1.0;
};

// E[e^{-z xi dT m_r h}] for h ~ Gamma(k,1): (1 + xi dT m_r z)^{-k}. Exactly 1
// at z = 0, and identically 1 for k = 0 (nothing transmitted).
double signal_laplace(double z, int k, double xi, double delta_t, int m_r);

// Half-angle of the arc of the circle of radius x (about the serving BS) that
// falls inside the interference hole of radius R about the target:
// arccos(x/(2R)) for x <= 2R, else 0.
double hole_arc_angle(double x, double R);

// Conditional Laplace transform of the sensing interference for Q = 1 given
// serving distance R, hole-corrected. Value in (0,1]. The as_written variant
// raises DomainError when 1 - 2/beta <= 0 (e.g. beta = 2) because its printed
// incomplete-beta argument diverges there.
double laplace_sense_interf_q1(double z, double R, const NetworkParams& params, int k,
                               const QuadratureSpec& spec, FormulaVariant variant,
                               bool* converged = nullptr);

// Mean radar information rate (nats/use) for Q = 1 (no sensing cooperation),
// marginalized over the serving distance.
QuadResult avg_radar_rate_q1(const NetworkParams& params, const ResourceAllocation& alloc,
                             const QuadratureSpec& spec, FormulaVariant variant);

// Sensing ASE via the alpha = 2*beta closed form (single z integral). The BS
// density enters only through the leading lambda_b factor on this path.
QuadResult sense_ase_alpha2beta(const NetworkParams& params, const ResourceAllocation& alloc,
                                const QuadratureSpec& spec, FormulaVariant variant);

// Printed density of the cluster exclusion radius r_Q (distance from the
// serving BS to its (q-1)th closest cluster member):
//   f(r) = e^{-lambda pi r^2} 2 (lambda pi r^2)^q / (r Gamma(q))
double rq_pdf(double r, int q, double lambda_b);

// Printed CCDF of r_Q/(2R): P[r_Q/2R >= x] = 1 - (1 - 1/(4x^2))^{q-2} for
// x >= 1/2. Identically 0 at q = 2 as printed; the validation report shows
// the empirical distribution next to it.
double rq_over_2r_ccdf(double x, int q);

// Mean radar rate for Q >= 2 (hole neglected, (R, r_Q) independent with the
// printed marginals).
QuadResult avg_radar_rate_qge2(const NetworkParams& params, int k, int q,
                               const QuadratureSpec& spec, FormulaVariant variant);

// Sensing ASE t_s = lambda_b * j * r_s for Q >= 2.
QuadResult sense_ase_qge2(const NetworkParams& params, const ResourceAllocation& alloc,
                          const QuadratureSpec& spec, FormulaVariant variant);

// Dispatch on q: Proposition-style hole-corrected route for q = 1, the
// approximate route for q >= 2. j = 0 or k = 0 gives 0.
QuadResult avg_radar_rate(const NetworkParams& params, const ResourceAllocation& alloc,
                          const QuadratureSpec& spec, FormulaVariant variant);
QuadResult sense_ase(const NetworkParams& params, const ResourceAllocation& alloc,
                     const QuadratureSpec& spec, FormulaVariant variant);

// Log-domain pieces of the rederived conditional Laplace transform with
// exclusion radius r_excl: the residual-interference exponent from r_excl
// outward and the hole-strip correction on [r_excl, 2R]. Their ratio measures
// how much the hole still matters at a given cluster size.
struct HoleDiagnostic {
    double tail_exponent = 0.0;
    double hole_correction = 0.0;
};
HoleDiagnostic hole_terms(double z, double R, double r_excl, const NetworkParams& params,
                          int k, const QuadratureSpec& spec);

}  // namespace isac
