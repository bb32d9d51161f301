#pragma once

#include <functional>

namespace isac::oracle {

// Brute-force reference integrators, deliberately different algorithms from
// the Gauss-Kronrod machinery they are used to check.

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol, int max_depth = 60);

// ∫_0^a t^{b-1}(1-t)^{c-1} dt on the defining integral: adaptive Simpson over
// [eps, a-eps] plus two-term endpoint series on the clipped tails.
double beta_defining_integral(double a, double b, double c, double tol = 1e-12);

// trapezoid rule on a log-spaced grid over [lo, hi]
double trapezoid_log_grid(const std::function<double(double)>& f, double lo, double hi,
                          long long n);

}  // namespace isac::oracle
