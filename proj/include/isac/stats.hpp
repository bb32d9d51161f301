#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace isac {

// Inverse standard normal CDF (Acklam's rational approximation, ~1e-9 abs).
double normal_quantile(double p);

// Regularized lower incomplete gamma P(a,x) via series / continued fraction.
double gamma_p(double a, double x);

// One-sample Kolmogorov-Smirnov distance of `samples` against `cdf`.
// Sorts a copy of the samples.
double ks_distance(std::vector<double> samples, const std::function<double(double)>& cdf);

// Asymptotic two-sided KS p-value for distance d at sample size n.
double ks_pvalue(double d, std::size_t n);

struct RunningMoments {
    double sum = 0.0, sumsq = 0.0;
    long long n = 0;

    void add(double x) {
        sum += x;
        sumsq += x * x;
        ++n;
    }
    void merge(const RunningMoments& o) {
        sum += o.sum;
        sumsq += o.sumsq;
        n += o.n;
    }
    double mean() const { return n ? sum / n : 0.0; }
    double variance() const {
        if (n < 2) return 0.0;
        const double m = mean();
        return std::max(0.0, (sumsq - n * m * m) / (n - 1));
    }
    double std_error() const { return n ? std::sqrt(variance() / n) : 0.0; }
};

}  // namespace isac
