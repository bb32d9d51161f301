#include "isac/oracles.hpp"

#include <cmath>

namespace isac::oracle {

namespace {

double simpson(double a, double fa, double b, double fb, double fm) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double simpson_rec(const std::function<double(double)>& f, double a, double fa, double b,
                   double fb, double m, double fm, double whole, double tol, int depth) {
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = simpson(a, fa, m, fm, flm);
    const double right = simpson(m, fm, b, fb, frm);
    if (depth <= 0 || std::fabs(left + right - whole) <= 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return simpson_rec(f, a, fa, m, fm, lm, flm, left, tol * 0.5, depth - 1) +
           simpson_rec(f, m, fm, b, fb, rm, frm, right, tol * 0.5, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol, int max_depth) {
    if (a == b) return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = f(a), fb = f(b), fm = f(m);
    return simpson_rec(f, a, fa, b, fb, m, fm, simpson(a, fa, b, fb, fm), tol, max_depth);
}

double beta_defining_integral(double a, double b, double c, double tol) {
    if (a <= 0.0) return 0.0;
    const double eps = 1e-6;  // two-term endpoint series is O(eps^2) relative
    auto f = [&](double t) { return std::pow(t, b - 1.0) * std::pow(1.0 - t, c - 1.0); };
    // ∫_0^x t^{b-1}(1-t)^{c-1} dt ≈ x^b/b - (c-1) x^{b+1}/(b+1) near 0, mirrored near 1
    auto low_series = [&](double x) {
        return std::pow(x, b) / b - (c - 1.0) * std::pow(x, b + 1.0) / (b + 1.0);
    };
    auto high_series = [&](double x) {  // ∫_{1-x}^1
        return std::pow(x, c) / c - (b - 1.0) * std::pow(x, c + 1.0) / (c + 1.0);
    };
    if (a <= eps) return low_series(a);
    double total = low_series(eps);
    double hi = a;
    if (a > 1.0 - eps) {
        total += high_series(eps) - high_series(1.0 - a);
        hi = 1.0 - eps;
    }
    if (hi > eps) total += adaptive_simpson(f, eps, hi, tol);
    return total;
}

double trapezoid_log_grid(const std::function<double(double)>& f, double lo, double hi,
                          long long n) {
    const double llo = std::log(lo), lhi = std::log(hi);
    const double h = (lhi - llo) / static_cast<double>(n - 1);
    double sum = 0.0;
    double zp = lo, fp = f(lo);
    for (long long i = 1; i < n; ++i) {
        const double z = std::exp(llo + h * static_cast<double>(i));
        const double fz = f(z);
        sum += 0.5 * (fp + fz) * (z - zp);
        zp = z;
        fp = fz;
    }
    return sum;
}

}  // namespace isac::oracle
