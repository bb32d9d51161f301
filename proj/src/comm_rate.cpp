#include "isac/comm_rate.hpp"

#include "isac/pgfl.hpp"

namespace isac {

double h_function(double z, int k, double alpha, double eta, const QuadratureSpec& beta_spec) {
    if (!(eta > 0.0 && eta <= 1.0)) throw DomainError("h_function: eta must lie in (0,1]");
    if (z < 0.0) throw DomainError("h_function: z must be >= 0");
    if (z == 0.0) return 0.0;
    // equals the exclusion-disk PGFL exponent with serving distance 1 and
    // cluster edge at 1/eta
    return pgfl_tail_exponent(z, 1.0 / eta, k, alpha, beta_spec);
}

double eta_pdf(double x, int l) {
    if (l < 2) throw DomainError("eta_pdf: defined for cluster sizes l >= 2");
    if (!(x >= 0.0 && x <= 1.0)) throw DomainError("eta_pdf: ratio must lie in [0,1]");
    return 2.0 * (l - 1) * x * std::pow(1.0 - x * x, l - 2);
}

double eta_cdf(double x, int l) {
    if (l < 2) throw DomainError("eta_cdf: defined for cluster sizes l >= 2");
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    return 1.0 - std::pow(1.0 - x * x, l - 1);
}

QuadResult avg_comm_rate_core(const CommIntegrandCtx& ctx, const QuadratureSpec& spec,
                              FormulaVariant variant) {
    if (ctx.k == 0) return {};
    if (ctx.d < 2) throw DomainError("avg_comm_rate: residual DoF must be >= 2");

    // inner tolerances one decade tighter than the outer z integral
    QuadratureSpec inner = spec;
    inner.rel_tol *= 0.1;
    inner.abs_tol *= 0.1;
    inner.max_refinements = std::min(spec.max_refinements, 400);
    QuadratureSpec beta_spec{std::min(1e-9, inner.rel_tol * 0.1), 1e-15, 400, 1.0};

    const int l = ctx.l;
    bool inner_converged = true;
    auto interference_laplace = [&](double z) -> double {
        if (l == 1) return 1.0 / (1.0 + h_function(z, ctx.k, ctx.alpha, 1.0, beta_spec));
        auto f = [&](double x) {
            const double h = h_function(z, ctx.k, ctx.alpha, x, beta_spec);
            const double mix = (variant == FormulaVariant::rederived)
                                   ? std::exp(-l * std::log1p(x * x * h))
                                   : 1.0 / (1.0 + h);
            return eta_pdf(x, l) * mix;
        };
        QuadResult r = integrate_adaptive(f, 0.0, 1.0, inner);
        inner_converged = inner_converged && r.converged;
        return r.value;
    };

    const double d = ctx.d;
    auto integrand = [&](double z) {
        return one_minus_pow1p(z, d) / z * interference_laplace(z);
    };
    QuadResult res = integrate_semi_infinite(integrand, spec, 2.0 / ctx.alpha);
    res.converged = res.converged && inner_converged;
    return res;
}

QuadResult avg_comm_rate(const NetworkParams& params, const ResourceAllocation& alloc,
                         const QuadratureSpec& spec, FormulaVariant variant) {
    if (alloc.k == 0) return {};
    CommIntegrandCtx ctx{alloc.signal_dof(params), alloc.k, alloc.l, params.alpha};
    return avg_comm_rate_core(ctx, spec, variant);
}

QuadResult comm_ase(const NetworkParams& params, const ResourceAllocation& alloc,
                    const QuadratureSpec& spec, FormulaVariant variant) {
    QuadResult r = avg_comm_rate(params, alloc, spec, variant);
    r.value *= params.lambda_b * alloc.k;
    r.error *= params.lambda_b * alloc.k;
    return r;
}

}  // namespace isac
