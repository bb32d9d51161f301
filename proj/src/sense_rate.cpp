#include "isac/sense_rate.hpp"

#include "isac/pgfl.hpp"

namespace isac {

namespace {

QuadratureSpec tighten(const QuadratureSpec& s, double factor, int budget, double split) {
    return {s.rel_tol / factor, s.abs_tol / factor,
            std::min(s.max_refinements, budget), split};
}

double sense_tail_decay(const NetworkParams& p) {
    // z-integrands decay algebraically with an exponent set by the pathloss
    // ratio; undershooting the true decay keeps the compactified tail regular
    return std::min(1.0 / p.alpha, 1.0 / p.beta);
}

// strip correction: 2 ∫ arccos(x/2R) x (1 - (1+s x^{-alpha})^{-k}) dx over
// [lo, 2R], in units of the BS intensity
double hole_strip_integral(double s, double R, double lo, int k, double alpha,
                           const QuadratureSpec& spec, bool* converged) {
    const double hi = 2.0 * R;
    if (lo >= hi || k == 0 || s == 0.0) return 0.0;
    auto f = [&](double x) {
        return std::acos(x / hi) * x * one_minus_pow1p(s * std::pow(x, -alpha), k);
    };
    QuadResult r = integrate_adaptive(f, lo, hi, spec);
    if (converged) *converged = *converged && r.converged;
    return 2.0 * r.value;
}

}  // namespace

double signal_laplace(double z, int k, double xi, double delta_t, int m_r) {
    if (z < 0.0) throw DomainError("signal_laplace: z must be >= 0");
    if (k == 0) return 1.0;
    return std::exp(-k * std::log1p(xi * delta_t * m_r * z));
}

double hole_arc_angle(double x, double R) {
    if (x < 0.0 || !(R > 0.0)) throw DomainError("hole_arc_angle: need x >= 0, R > 0");
    if (x >= 2.0 * R) return 0.0;
    return std::acos(x / (2.0 * R));
}

double laplace_sense_interf_q1(double z, double R, const NetworkParams& params, int k,
                               const QuadratureSpec& spec, FormulaVariant variant,
                               bool* converged) {
    if (z < 0.0 || !(R > 0.0)) throw DomainError("laplace_sense_interf_q1: need z >= 0, R > 0");
    if (z == 0.0 || k == 0) return 1.0;
    const double lam = params.lambda_b;
    const double pi = M_PI;
    QuadratureSpec beta_spec{std::min(1e-9, spec.rel_tol * 0.1), 1e-15, 400, 1.0};

    if (variant == FormulaVariant::rederived) {
        const double s = z * std::pow(R, 2.0 * params.beta);
        const double plane = pi * lam * pgfl_tail_exponent(s, 0.0, k, params.alpha, beta_spec);
        const double hole =
            lam * hole_strip_integral(s, R, 0.0, k, params.alpha, spec, converged);
        return std::exp(-plane + hole);
    }

    // as_written: the printed closed form groups the exponents as beta-side
    const double b = 1.0 - 2.0 / params.beta;
    if (!(b > 0.0))
        throw DomainError("laplace_sense_interf_q1(as_written): printed incomplete-beta "
                          "argument 1-2/beta <= 0 diverges (e.g. beta = 2)");
    const double plane = pi * lam * k * std::pow(z, 2.0 / params.beta) *
                         std::pow(R, 4.0 * params.alpha / params.beta) *
                         incomplete_beta(1.0, b, k + 2.0 / params.beta, beta_spec);
    const double sfac = z * std::pow(R, 2.0 * params.alpha - params.beta);
    auto hole_f = [&](double t) {
        return std::acos(0.5 * t) * t *
               one_minus_pow1p(sfac * std::pow(t, -params.beta), k);
    };
    QuadResult hq = integrate_adaptive(hole_f, 0.0, 2.0, spec);
    if (converged) *converged = *converged && hq.converged;
    const double hole = lam * R * R * 2.0 * hq.value;
    return std::exp(-plane + hole);
}

QuadResult avg_radar_rate_q1(const NetworkParams& params, const ResourceAllocation& alloc,
                             const QuadratureSpec& spec, FormulaVariant variant) {
    if (alloc.q != 1) throw DomainError("avg_radar_rate_q1: requires q == 1");
    if (alloc.j == 0 || alloc.k == 0) return {};
    const int k = alloc.k;
    const double lam = params.lambda_b;
    const double c = params.xi * params.delta_t * params.m_r;
    QuadratureSpec inner = tighten(spec, 10.0, 400, 1.0);

    bool ok = true;
    auto interference_laplace = [&](double z) -> double {
        // serving-distance average with v = pi*lambda*R^2 ~ Exp(1)
        auto f = [&](double v) {
            const double R = std::sqrt(v / (M_PI * lam));
            return std::exp(-v) * laplace_sense_interf_q1(z, R, params, k, inner, variant, &ok);
        };
        QuadResult r = integrate_semi_infinite(f, inner, 1.0);
        ok = ok && r.converged;
        return r.value;
    };
    auto integrand = [&](double z) {
        return one_minus_pow1p(c * z, k) / z * interference_laplace(z);
    };
    QuadResult res = integrate_semi_infinite(integrand, spec, sense_tail_decay(params));
    res.converged = res.converged && ok;
    return res;
}

QuadResult sense_ase_alpha2beta(const NetworkParams& params, const ResourceAllocation& alloc,
                                const QuadratureSpec& spec, FormulaVariant variant) {
    if (params.alpha != 2.0 * params.beta)
        throw DomainError("sense_ase_alpha2beta: requires alpha == 2*beta exactly");
    if (alloc.j == 0 || alloc.k == 0) return {};
    const int k = alloc.k;
    const double c = params.xi * params.delta_t * params.m_r;
    const double a = params.alpha;
    QuadratureSpec inner = tighten(spec, 10.0, 400, 1.0);
    QuadratureSpec beta_spec{std::min(1e-9, spec.rel_tol * 0.1), 1e-15, 400, 1.0};

    // exponents of the normalized interference term: the rederived route keeps
    // the hole-corrected PGFL exponents, the printed display doubles them
    const double pow_z = (variant == FormulaVariant::rederived) ? 2.0 / a : 1.0 / a;
    const double pow_t = (variant == FormulaVariant::rederived) ? a : 2.0 * a;
    const double bbar = incomplete_beta(1.0, 1.0 - pow_z, k + pow_z, beta_spec);

    bool ok = true;
    auto big_i = [&](double z) {
        auto hf = [&](double t) {
            return std::acos(0.5 * t) * t * one_minus_pow1p(z * std::pow(t, -pow_t), k);
        };
        QuadResult hq = integrate_adaptive(hf, 0.0, 2.0, inner);
        ok = ok && hq.converged;
        return k * std::pow(z, pow_z) * bbar - (2.0 / M_PI) * hq.value + 1.0;
    };
    auto integrand = [&](double z) {
        return one_minus_pow1p(c * z, k) / (z * big_i(z));
    };
    QuadResult res = integrate_semi_infinite(integrand, spec, pow_z);
    res.converged = res.converged && ok;
    res.value *= params.lambda_b * alloc.j;
    res.error *= params.lambda_b * alloc.j;
    return res;
}

double rq_pdf(double r, int q, double lambda_b) {
    if (!(r > 0.0) || !(lambda_b > 0.0)) throw DomainError("rq_pdf: need r > 0, lambda_b > 0");
    if (q < 2) throw DomainError("rq_pdf: defined for cluster sizes q >= 2");
    const double w = lambda_b * M_PI * r * r;
    return std::exp(-w + q * std::log(w) - std::lgamma(static_cast<double>(q))) * 2.0 / r;
}

double rq_over_2r_ccdf(double x, int q) {
    if (q < 2) throw DomainError("rq_over_2r_ccdf: defined for q >= 2");
    if (!(x >= 0.5)) throw DomainError("rq_over_2r_ccdf: printed formula requires x >= 1/2");
    const double base = 1.0 - 1.0 / (4.0 * x * x);
    return std::clamp(1.0 - std::pow(base, q - 2), 0.0, 1.0);
}

QuadResult avg_radar_rate_qge2(const NetworkParams& params, int k, int q,
                               const QuadratureSpec& spec, FormulaVariant variant) {
    if (q < 2) throw DomainError("avg_radar_rate_qge2: requires q >= 2");
    if (k == 0) return {};
    const double lam = params.lambda_b;
    const double a = params.alpha, be = params.beta;
    const double c = params.xi * params.delta_t * params.m_r;
    if (variant == FormulaVariant::as_written && !(1.0 - 2.0 / be > 0.0))
        throw DomainError("avg_radar_rate_qge2(as_written): printed incomplete-beta "
                          "argument 1-2/beta <= 0 diverges (e.g. beta = 2)");

    QuadratureSpec mid = tighten(spec, 10.0, 200, static_cast<double>(q));
    QuadratureSpec inn = tighten(spec, 20.0, 200, 1.0);
    QuadratureSpec beta_spec{std::min(1e-9, spec.rel_tol * 0.1), 1e-15, 400, 1.0};
    const double lgq = std::lgamma(static_cast<double>(q));

    bool ok = true;
    auto cond_laplace = [&](double z, double R, double rq) -> double {
        if (variant == FormulaVariant::rederived) {
            const double s = z * std::pow(R, 2.0 * be);
            return std::exp(-M_PI * lam * pgfl_tail_exponent(s, rq, k, a, beta_spec));
        }
        const double x = z * std::pow(R, 2.0 * a) * std::pow(rq, -be);
        const double head = k * std::pow(z, 2.0 / be) * std::pow(R, 4.0 * a / be) *
                            incomplete_beta(x / (x + 1.0), 1.0 - 2.0 / be,
                                            k + 2.0 / be, beta_spec);
        return std::exp(-M_PI * lam * (rq * rq * pow1p_m1(x, k) + head));
    };
    auto interference_laplace = [&](double z) -> double {
        // exclusion radius first (w = lambda pi r_Q^2 ~ Gamma(q,1) as printed),
        // serving distance inside (v = lambda pi R^2 ~ Exp(1))
        auto fw = [&](double w) {
            const double rq = std::sqrt(w / (M_PI * lam));
            const double weight = std::exp(-w + (q - 1) * std::log(w) - lgq);
            if (weight == 0.0) return 0.0;
            auto fv = [&](double v) {
                const double R = std::sqrt(v / (M_PI * lam));
                return std::exp(-v) * cond_laplace(z, R, rq);
            };
            QuadResult rv = integrate_semi_infinite(fv, inn, 1.0);
            ok = ok && rv.converged;
            return weight * rv.value;
        };
        QuadResult rw = integrate_semi_infinite(fw, mid, 1.0);
        ok = ok && rw.converged;
        return rw.value;
    };
    auto integrand = [&](double z) {
        return one_minus_pow1p(c * z, k) / z * interference_laplace(z);
    };
    QuadResult res = integrate_semi_infinite(integrand, spec, sense_tail_decay(params));
    res.converged = res.converged && ok;
    return res;
}

QuadResult sense_ase_qge2(const NetworkParams& params, const ResourceAllocation& alloc,
                          const QuadratureSpec& spec, FormulaVariant variant) {
    if (alloc.j == 0) return {};
    QuadResult r = avg_radar_rate_qge2(params, alloc.k, alloc.q, spec, variant);
    r.value *= params.lambda_b * alloc.j;
    r.error *= params.lambda_b * alloc.j;
    return r;
}

QuadResult avg_radar_rate(const NetworkParams& params, const ResourceAllocation& alloc,
                          const QuadratureSpec& spec, FormulaVariant variant) {
    if (alloc.j == 0 || alloc.k == 0) return {};
    if (alloc.q == 1) return avg_radar_rate_q1(params, alloc, spec, variant);
    return avg_radar_rate_qge2(params, alloc.k, alloc.q, spec, variant);
}

QuadResult sense_ase(const NetworkParams& params, const ResourceAllocation& alloc,
                     const QuadratureSpec& spec, FormulaVariant variant) {
    QuadResult r = avg_radar_rate(params, alloc, spec, variant);
    r.value *= params.lambda_b * alloc.j;
    r.error *= params.lambda_b * alloc.j;
    return r;
}

HoleDiagnostic hole_terms(double z, double R, double r_excl, const NetworkParams& params,
                          int k, const QuadratureSpec& spec) {
    if (!(R > 0.0) || r_excl < 0.0) throw DomainError("hole_terms: need R > 0, r_excl >= 0");
    HoleDiagnostic d;
    const double s = z * std::pow(R, 2.0 * params.beta);
    QuadratureSpec beta_spec{std::min(1e-9, spec.rel_tol * 0.1), 1e-15, 400, 1.0};
    d.tail_exponent =
        M_PI * params.lambda_b * pgfl_tail_exponent(s, r_excl, k, params.alpha, beta_spec);
    bool ok = true;
    d.hole_correction =
        params.lambda_b * hole_strip_integral(s, R, r_excl, k, params.alpha, spec, &ok);
    return d;
}

}  // namespace isac
