#pragma once

#include <cmath>

#include "isac/numerics.hpp"

namespace isac {

// (1+x)^{-k} - 1 without cancellation for small x.
inline double pow1p_m1(double x, double k) { return std::expm1(-k * std::log1p(x)); }

// 1 - (1+x)^{-k}, stable for small x.
inline double one_minus_pow1p(double x, double k) { return -std::expm1(-k * std::log1p(x)); }

// Closed form of the PPP generating-functional exponent over the plane outside
// an exclusion disk of radius r0, for gamma(k,1) marks and pathloss x^{-alpha}:
//   G(s, r0) = 2 ∫_{r0}^∞ (1 - (1 + s x^{-alpha})^{-k}) x dx
//            = k s^{2/alpha} B(s/(s+r0^alpha), 1-2/alpha, k+2/alpha)
//              + r0^2 ((1 + s r0^{-alpha})^{-k} - 1).
// Multiplying by pi*lambda gives -log of the Laplace transform of the
// interference field seen from the disk center.
inline double pgfl_tail_exponent(double s, double r0, int k, double alpha,
                                 const QuadratureSpec& beta_spec = {1e-10, 1e-15, 400, 1.0}) {
    if (!(alpha > 2.0)) throw DomainError("pgfl_tail_exponent: alpha must exceed 2");
    if (s < 0.0) throw DomainError("pgfl_tail_exponent: s must be >= 0");
    if (s == 0.0 || k == 0) return 0.0;
    const double b = 1.0 - 2.0 / alpha;
    const double c = k + 2.0 / alpha;
    if (r0 == 0.0) return k * std::pow(s, 2.0 / alpha) * incomplete_beta(1.0, b, c, beta_spec);
    const double r0a = std::pow(r0, alpha);
    const double head = k * std::pow(s, 2.0 / alpha) *
                        incomplete_beta(s / (s + r0a), b, c, beta_spec);
    return head + r0 * r0 * pow1p_m1(s / r0a, k);
}

}  // namespace isac
