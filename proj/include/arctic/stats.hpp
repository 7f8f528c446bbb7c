#pragma once

// Small statistics helpers: regularized incomplete gamma for chi-square
// p-values, medians and quantiles.

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace arctic {

namespace detail {

// Regularized lower incomplete gamma P(a,x) by series expansion (x < a+1).
inline double gamma_p_series(double a, double x) {
    double term = 1.0 / a, sum = term, ap = a;
    for (int i = 0; i < 500; ++i) {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::fabs(term) < std::fabs(sum) * 1e-16) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Regularized upper incomplete gamma Q(a,x) by continued fraction (x >= a+1).
inline double gamma_q_cf(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a, c = 1.0 / tiny, d = 1.0 / b, h = d;
    for (int i = 1; i < 500; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < 1e-16) break;
    }
    return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

}  // namespace detail

inline double gamma_q(double a, double x) {
    if (a <= 0.0 || x < 0.0) throw std::invalid_argument("gamma_q: bad arguments");
    if (x == 0.0) return 1.0;
    if (x < a + 1.0) return 1.0 - detail::gamma_p_series(a, x);
    return detail::gamma_q_cf(a, x);
}

// Upper-tail p-value of a chi-square statistic with df degrees of freedom.
inline double chi_square_pvalue(double chi2, int df) {
    if (df < 1) throw std::invalid_argument("chi_square_pvalue: df must be positive");
    return gamma_q(0.5 * df, 0.5 * chi2);
}

// Chi-square statistic for observed counts against uniform expectation.
inline double chi_square_uniform(const std::vector<long>& observed) {
    long total = 0;
    for (long c : observed) total += c;
    const double expected = static_cast<double>(total) / observed.size();
    double chi2 = 0.0;
    for (long c : observed) {
        const double d = c - expected;
        chi2 += d * d / expected;
    }
    return chi2;
}

inline double quantile(std::vector<double> v, double q) {
    if (v.empty()) throw std::invalid_argument("quantile: empty sample");
    std::sort(v.begin(), v.end());
    const double pos = q * (v.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(pos);
    if (lo + 1 >= v.size()) return v.back();
    const double frac = pos - lo;
    return v[lo] * (1.0 - frac) + v[lo + 1] * frac;
}

inline double median(std::vector<double> v) { return quantile(std::move(v), 0.5); }

}  // namespace arctic
