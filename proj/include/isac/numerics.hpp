#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace isac {

struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct QuadratureSpec {
    double rel_tol = 1e-6;
    double abs_tol = 1e-12;
    int max_refinements = 2000;  // interval-split budget per 1-D integral
    double split_point = 1.0;    // semi-infinite domains split here before compactification
};

struct QuadResult {
    double value = 0.0;
    double error = 0.0;      // absolute error estimate
    bool converged = true;   // false: split budget exhausted with error above tolerance

    QuadResult& operator+=(const QuadResult& o) {
        value += o.value;
        error += o.error;
        converged = converged && o.converged;
        return *this;
    }
};

namespace detail {

// 15-point Kronrod rule with embedded 7-point Gauss rule (QUADPACK dqk15 constants).
inline constexpr double gk_nodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
inline constexpr double gk_wk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
inline constexpr double gk_wg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Segment {
    double a, b, value, error;
    bool operator<(const Segment& o) const { return error < o.error; }
};

template <class F>
Segment gk15(F& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double fv[15];
    fv[7] = f(mid);
    for (int i = 0; i < 7; ++i) {
        const double dx = h * gk_nodes[i];
        fv[i] = f(mid - dx);
        fv[14 - i] = f(mid + dx);
    }
    double resk = gk_wk[7] * fv[7];
    double resg = gk_wg[3] * fv[7];
    for (int i = 0; i < 7; ++i) {
        resk += gk_wk[i] * (fv[i] + fv[14 - i]);
        if (i % 2 == 1) resg += gk_wg[i / 2] * (fv[i] + fv[14 - i]);
    }
    // scale-aware error estimate, as in QUADPACK
    const double mean = resk * 0.5;
    double resasc = gk_wk[7] * std::fabs(fv[7] - mean);
    for (int i = 0; i < 7; ++i)
        resasc += gk_wk[i] * (std::fabs(fv[i] - mean) + std::fabs(fv[14 - i] - mean));
    resasc *= std::fabs(h);
    double err = std::fabs(resk - resg) * std::fabs(h);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    return {a, b, resk * h, err};
}

}  // namespace detail

// Globally adaptive Gauss-Kronrod quadrature on [a,b] with bisection of the
// worst segment. Endpoints are never evaluated (all nodes are interior).
template <class F>
QuadResult integrate_adaptive(F&& f, double a, double b, const QuadratureSpec& spec) {
    QuadResult res;
    if (a == b) return res;
    std::vector<detail::Segment> heap;
    heap.push_back(detail::gk15(f, a, b));
    double total = heap[0].value, err = heap[0].error;
    int splits = 0;
    while (err > std::max(spec.abs_tol, spec.rel_tol * std::fabs(total))) {
        if (splits >= spec.max_refinements) {
            res.converged = false;
            break;
        }
        std::pop_heap(heap.begin(), heap.end());
        detail::Segment worst = heap.back();
        heap.pop_back();
        if (worst.b - worst.a <= std::fabs(worst.a) * 1e-15) {
            // segment too narrow to bisect in double precision
            res.converged = false;
            heap.push_back(worst);
            std::push_heap(heap.begin(), heap.end());
            break;
        }
        const double mid = 0.5 * (worst.a + worst.b);
        detail::Segment left = detail::gk15(f, worst.a, mid);
        detail::Segment right = detail::gk15(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        err += left.error + right.error - worst.error;
        heap.push_back(left);
        std::push_heap(heap.begin(), heap.end());
        heap.push_back(right);
        std::push_heap(heap.begin(), heap.end());
        ++splits;
    }
    // re-sum for accuracy (heap-order accumulation drifts after many updates)
    total = 0.0;
    err = 0.0;
    for (const auto& s : heap) {
        total += s.value;
        err += s.error;
    }
    res.value = total;
    res.error = err;
    return res;
}

// ∫_0^∞ f(z) dz, split at spec.split_point, tail compactified by
// u = (split/z)^p with p = tail_decay. p should match the algebraic tail
// f ~ z^{-1-p} when known (flattens the transformed integrand); p = 1 is the
// plain u = split/z change and is safe for any integrable tail.
template <class F>
QuadResult integrate_semi_infinite(F&& f, const QuadratureSpec& spec, double tail_decay = 1.0) {
    const double s = spec.split_point;
    if (!(s > 0.0)) throw DomainError("integrate_semi_infinite: split_point must be > 0");
    const double p = tail_decay;
    if (!(p > 0.0)) throw DomainError("integrate_semi_infinite: tail_decay must be > 0");
    QuadResult head = integrate_adaptive(f, 0.0, s, spec);
    auto tail_f = [&](double u) -> double {
        const double z = s * std::pow(u, -1.0 / p);
        if (!std::isfinite(z)) return 0.0;
        const double fz = f(z);
        if (fz == 0.0) return 0.0;
        return fz * (s / p) * std::pow(u, -1.0 / p - 1.0);
    };
    QuadResult tail = integrate_adaptive(tail_f, 0.0, 1.0, spec);
    head += tail;
    return head;
}

// Incomplete Beta in upper-limit-first argument order:
//   incomplete_beta(a,b,c) = ∫_0^a t^{b-1} (1-t)^{c-1} dt,  a ∈ [0,1], b,c > 0.
// The t=0 endpoint singularity (0<b<1) is removed by the substitution t = u^{1/b};
// the t=1 endpoint (a near 1, 0<c<1) by the mirrored substitution.
double incomplete_beta(double a, double b, double c,
                       const QuadratureSpec& spec = {1e-10, 1e-15, 400, 1.0});

// Rate of uncorrelated signal X and interference Y from their Laplace transforms:
//   E[log(1+X/Y)] = ∫_0^∞ (1/z)(1 - E[e^{-zX}]) E[e^{-zY}] dz
// The z→0 limit of the integrand is finite; quadrature nodes are interior so
// z = 0 itself is never sampled.
QuadResult hamdi_rate(const std::function<double(double)>& laplace_signal,
                      const std::function<double(double)>& laplace_interf,
                      const QuadratureSpec& spec, double tail_decay = 1.0);

}  // namespace isac
