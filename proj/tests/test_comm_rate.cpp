#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "isac/comm_rate.hpp"
#include "isac/mc_sim.hpp"
#include "isac/oracles.hpp"
#include "isac/pgfl.hpp"

using namespace isac;

TEST_CASE("h_function trivial values") {
    CHECK(h_function(0.0, 3, 4.0, 0.7) == 0.0);
    // eta = 1 collapses to K z^{2/a} B(z/(z+1),...) + (1+z)^{-K} - 1
    const double z = 1.7;
    const int k = 2;
    const double alpha = 4.0;
    const double manual = k * std::pow(z, 0.5) * incomplete_beta(z / (z + 1.0), 0.5, k + 0.5) +
                          std::pow(1.0 + z, -k) - 1.0;
    CHECK(h_function(z, k, alpha, 1.0) == doctest::Approx(manual).epsilon(1e-10));
    CHECK_THROWS_AS(h_function(1.0, 1, 4.0, 0.0), DomainError);
    CHECK_THROWS_AS(h_function(1.0, 1, 4.0, 1.5), DomainError);
}

TEST_CASE("h_function equals the exclusion-disk PGFL integral") {
    // 2*int_{1/eta}^inf (1-(1+z x^-a)^-K) x dx by brute force, decade by
    // decade on [lo, X], plus the two-term series tail beyond X
    auto direct = [](double z, int k, double alpha, double eta) {
        const double lo = 1.0 / eta;
        auto g = [&](double x) {
            return (1.0 - std::pow(1.0 + z * std::pow(x, -alpha), -k)) * x;
        };
        double head = 0.0, hi = lo;
        for (int dec = 0; dec < 4; ++dec) {
            head += oracle::adaptive_simpson(g, hi, 10.0 * hi, 1e-13);
            hi *= 10.0;
        }
        const double tail = k * z * std::pow(hi, 2.0 - alpha) / (alpha - 2.0) -
                            0.5 * k * (k + 1) * z * z * std::pow(hi, 2.0 - 2.0 * alpha) /
                                (2.0 * alpha - 2.0);
        return 2.0 * (head + tail);
    };
    CHECK(h_function(1.0, 1, 4.0, 0.5) ==
          doctest::Approx(direct(1.0, 1, 4.0, 0.5)).epsilon(1e-7));
    CHECK(h_function(0.3, 3, 3.5, 0.9) ==
          doctest::Approx(direct(0.3, 3, 3.5, 0.9)).epsilon(1e-7));
    CHECK(h_function(5.0, 2, 4.0, 1.0) ==
          doctest::Approx(direct(5.0, 2, 4.0, 1.0)).epsilon(1e-7));
}

TEST_CASE("eta_pdf closed forms and normalization") {
    CHECK(eta_pdf(0.3, 2) == doctest::Approx(0.6));
    CHECK(eta_pdf(0.5, 3) == doctest::Approx(1.5));  // 4*0.5*0.75
    QuadratureSpec spec{1e-10, 1e-14, 400, 1.0};
    auto norm = integrate_adaptive([](double x) { return eta_pdf(x, 5); }, 0.0, 1.0, spec);
    CHECK(norm.value == doctest::Approx(1.0).epsilon(1e-8));
    CHECK_THROWS_AS(eta_pdf(0.5, 1), DomainError);
    CHECK_THROWS_AS(eta_pdf(-0.1, 3), DomainError);
}

TEST_CASE("avg_comm_rate is zero without users and grows with residual DoF") {
    NetworkParams p;
    QuadratureSpec spec;
    CHECK(avg_comm_rate(p, {0, 1, 0, 1}, spec).value == 0.0);

    double prev = 0.0;
    for (int d : {2, 8, 20}) {
        CommIntegrandCtx ctx{d, 4, 1, 4.0};
        const double r = avg_comm_rate_core(ctx, spec).value;
        CHECK(r > prev);
        prev = r;
    }
}

TEST_CASE("avg_comm_rate strictly decreases in the nulling budget") {
    QuadratureSpec spec;
    double prev = 1e9;
    for (int nu = 0; nu <= 6; ++nu) {
        CommIntegrandCtx ctx{20 - 4 - nu + 1, 4, 1, 4.0};
        const double r = avg_comm_rate_core(ctx, spec).value;
        CHECK(r < prev);
        prev = r;
    }
}

TEST_CASE("comm_ase scales exactly linearly in the BS density") {
    NetworkParams p1;
    NetworkParams p2 = p1;
    p2.lambda_b = 2.0 * p1.lambda_b;
    QuadratureSpec spec;
    ResourceAllocation a{6, 2, 0, 1};
    const QuadResult t1 = comm_ase(p1, a, spec);
    const QuadResult t2 = comm_ase(p2, a, spec);
    CHECK(t2.value == doctest::Approx(2.0 * t1.value).epsilon(1e-14));
    CHECK(comm_ase(p1, {0, 1, 0, 1}, spec).value == 0.0);
}

TEST_CASE("inner eta average stays between the pointwise extremes") {
    QuadratureSpec spec{1e-9, 1e-13, 400, 1.0};
    const int k = 3, l = 4;
    const double alpha = 4.0;
    for (double z : {0.2, 1.0, 6.0}) {
        double lo = 1e300, hi = -1e300;
        for (int i = 1; i <= 200; ++i) {
            const double x = i / 200.0;
            const double v = std::exp(-l * std::log1p(x * x * h_function(z, k, alpha, x)));
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        auto f = [&](double x) {
            return eta_pdf(x, l) * std::exp(-l * std::log1p(x * x * h_function(z, k, alpha, x)));
        };
        const double avg = integrate_adaptive(f, 0.0, 1.0, spec).value;
        CHECK(avg >= lo - 1e-12);
        CHECK(avg <= hi + 1e-12);
    }
}

TEST_CASE("L=2 rate matches the joint-geometry conditional-Laplace oracle") {
    // MC-sample the joint (r, r_L) geometry, evaluate the conditional Laplace
    // transform exp(-pi lambda r^2 H(z, r/r_L)) per sample, average, and feed
    // it through the rate integral. h_function itself is validated against
    // brute force above.
    const int k = 8, l = 2;
    const double alpha = 4.0, lambda = 1.0;
    const int d = 20 - k * l + 1;
    const long long n = 20000;

    std::vector<double> t1(n), eta2(n);  // pi*lambda*r^2 and (r/r_L)^2
    for (long long i = 0; i < n; ++i) {
        TrialRng rng(424242, static_cast<std::uint64_t>(i));
        std::vector<double> d2;
        std::poisson_distribution<long long> pois(lambda * M_PI * 64.0);
        long long m = 0;
        while ((m = pois(rng)) < l) {
        }
        d2.resize(static_cast<std::size_t>(m));
        for (auto& v : d2) v = 64.0 * rng.uniform();
        std::nth_element(d2.begin(), d2.begin() + (l - 1), d2.end());
        const double rl2 = d2[l - 1];
        const double r2 = *std::min_element(d2.begin(), d2.begin() + l);
        t1[static_cast<std::size_t>(i)] = M_PI * lambda * r2;
        eta2[static_cast<std::size_t>(i)] = r2 / rl2;
    }

    // per-sample conditional rate, then the geometry average
    QuadratureSpec spec{1e-7, 1e-12, 2000, 1.0};
    QuadratureSpec per_sample{1e-8, 1e-12, 200, 1.0};
    double oracle_rate = 0.0;
    for (long long i = 0; i < n; ++i) {
        const std::size_t u = static_cast<std::size_t>(i);
        auto integrand = [&](double z) {
            return one_minus_pow1p(z, static_cast<double>(d)) / z *
                   std::exp(-t1[u] * h_function(z, k, alpha, std::sqrt(eta2[u])));
        };
        oracle_rate += integrate_semi_infinite(integrand, per_sample, 2.0 / alpha).value;
    }
    oracle_rate /= static_cast<double>(n);

    CommIntegrandCtx ctx{d, k, l, alpha};
    const double rederived = avg_comm_rate_core(ctx, spec, FormulaVariant::rederived).value;
    const double as_written = avg_comm_rate_core(ctx, spec, FormulaVariant::as_written).value;

    // geometry-sampling noise is ~0.3% here; the joint-law route sits inside
    // it while the printed form overshoots by ~1%
    CHECK(rederived == doctest::Approx(oracle_rate).epsilon(0.01));
    CHECK(std::fabs(as_written - oracle_rate) > std::fabs(rederived - oracle_rate));
    CHECK(as_written > rederived);
}

TEST_CASE("variants coincide at L=1") {
    QuadratureSpec spec;
    CommIntegrandCtx ctx{9, 12, 1, 4.0};
    const double a = avg_comm_rate_core(ctx, spec, FormulaVariant::rederived).value;
    const double b = avg_comm_rate_core(ctx, spec, FormulaVariant::as_written).value;
    CHECK(a == b);
}

TEST_CASE("analytic L=1 rate brackets a light MC run") {
    NetworkParams p;
    ResourceAllocation a{12, 1, 0, 1};
    QuadratureSpec spec;
    const double an = avg_comm_rate(p, a, spec).value;
    McConfig mc;
    mc.trials = 20000;
    mc.seed = 31;
    McEstimate est = mc_comm_rate(p, a, mc);
    CHECK(std::fabs(an - est.mean) <= 2.0 * est.half_width);
}
