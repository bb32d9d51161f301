#include "isac/numerics.hpp"

namespace isac {

double incomplete_beta(double a, double b, double c, const QuadratureSpec& spec) {
    if (!(b > 0.0) || !(c > 0.0))
        throw DomainError("incomplete_beta: b and c must be > 0 (integral diverges otherwise)");
    if (!(a >= 0.0 && a <= 1.0))
        throw DomainError("incomplete_beta: upper limit a must lie in [0,1]");
    if (a == 0.0) return 0.0;

    const double mid = std::min(a, 0.5);
    // ∫_0^mid t^{b-1}(1-t)^{c-1} dt with t = u^{1/b}:  (1/b) ∫_0^{mid^b} (1-u^{1/b})^{c-1} du
    auto lower_f = [&](double u) {
        return std::pow(1.0 - std::pow(u, 1.0 / b), c - 1.0);
    };
    double total = integrate_adaptive(lower_f, 0.0, std::pow(mid, b), spec).value / b;

    if (a > 0.5) {
        // ∫_mid^a t^{b-1}(1-t)^{c-1} dt with s = 1-t, v = s^c:
        //   (1/c) ∫_{(1-a)^c}^{(1/2)^c} (1 - v^{1/c})^{b-1} dv
        auto upper_f = [&](double v) {
            return std::pow(1.0 - std::pow(v, 1.0 / c), b - 1.0);
        };
        const double lo = std::pow(1.0 - a, c);
        const double hi = std::pow(0.5, c);
        total += integrate_adaptive(upper_f, lo, hi, spec).value / c;
    }
    return total;
}

QuadResult hamdi_rate(const std::function<double(double)>& laplace_signal,
                      const std::function<double(double)>& laplace_interf,
                      const QuadratureSpec& spec, double tail_decay) {
    // spot checks: complete monotonicity with value 1 at z = 0
    const double s0 = laplace_signal(1e-12), s1 = laplace_signal(1.0);
    const double i0 = laplace_interf(1e-12), i1 = laplace_interf(1.0);
    if (!(s0 > 0.0 && s0 <= 1.0 + 1e-9 && s0 >= 1.0 - 1e-3) || !(s1 >= 0.0 && s1 <= s0 + 1e-12))
        throw DomainError("hamdi_rate: laplace_signal is not a valid Laplace transform");
    if (!(i0 > 0.0 && i0 <= 1.0 + 1e-9 && i0 >= 1.0 - 1e-3) || !(i1 >= 0.0 && i1 <= i0 + 1e-12))
        throw DomainError("hamdi_rate: laplace_interf is not a valid Laplace transform");

    auto integrand = [&](double z) {
        return (1.0 - laplace_signal(z)) * laplace_interf(z) / z;
    };
    return integrate_semi_infinite(integrand, spec, tail_decay);
}

}  // namespace isac
