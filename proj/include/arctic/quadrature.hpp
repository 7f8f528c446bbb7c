#pragma once

// Adaptive composite Gauss-Legendre quadrature with helpers for integrands
// carrying logarithmic singularities (subtract-and-integrate-exactly) and
// Cauchy principal values (symmetric-pair cancellation around the pole).

#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

namespace arctic {

struct QuadratureSpec {
    double abs_tol = 1e-9;
    double rel_tol = 1e-12;
    int max_depth = 52;
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
};

namespace detail {

// 15-point Gauss-Legendre nodes/weights on [-1, 1].
inline constexpr std::array<double, 15> kGlNodes = {
    -0.98799251802048542849, -0.93727339240070590431, -0.84820658341042721620,
    -0.72441773136017004742, -0.57097217260853884754, -0.39415134707756336990,
    -0.20119409399743452230, 0.0,
    0.20119409399743452230,  0.39415134707756336990,  0.57097217260853884754,
    0.72441773136017004742,  0.84820658341042721620,  0.93727339240070590431,
    0.98799251802048542849};

inline constexpr std::array<double, 15> kGlWeights = {
    0.03075324199611726835, 0.07036604748810812471, 0.10715922046717193501,
    0.13957067792615431445, 0.16626920581699393355, 0.18616100001556221103,
    0.19843148532711157646, 0.20257824192556127288, 0.19843148532711157646,
    0.18616100001556221103, 0.16626920581699393355, 0.13957067792615431445,
    0.10715922046717193501, 0.07036604748810812471, 0.03075324199611726835};

inline double gl15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double s = 0.0;
    for (int i = 0; i < 15; ++i) s += kGlWeights[i] * f(c + h * kGlNodes[i]);
    return s * h;
}

inline void adapt(const std::function<double(double)>& f, double a, double b,
                  double whole, double tol, int depth, const QuadratureSpec& spec,
                  QuadratureResult& out) {
    const double m = 0.5 * (a + b);
    const double left = gl15(f, a, m), right = gl15(f, m, b);
    const double err = std::fabs(left + right - whole);
    if (depth >= spec.max_depth ||
        err <= std::max(tol, spec.rel_tol * std::fabs(left + right))) {
        out.value += left + right;
        out.error_estimate += err;
        return;
    }
    adapt(f, a, m, left, 0.5 * tol, depth + 1, spec, out);
    adapt(f, m, b, right, 0.5 * tol, depth + 1, spec, out);
}

}  // namespace detail

inline QuadratureResult integrate_full(const std::function<double(double)>& f, double a,
                                       double b, const QuadratureSpec& spec = {}) {
    QuadratureResult out;
    if (a == b) return out;
    detail::adapt(f, a, b, detail::gl15(f, a, b), spec.abs_tol, 0, spec, out);
    return out;
}

inline double integrate(const std::function<double(double)>& f, double a, double b,
                        const QuadratureSpec& spec = {}) {
    const QuadratureResult r = integrate_full(f, a, b, spec);
    if (!(std::isfinite(r.value)))
        throw std::runtime_error("quadrature: integral did not evaluate to a finite value");
    return r.value;
}

// Primitive of log|z|: G(z) = z log|z| - z (odd, G(0) = 0).
inline double log_primitive(double z) {
    if (z == 0.0) return 0.0;
    return z * std::log(std::fabs(z)) - z;
}

// int_a^b log|t - c| dt, exact.
inline double log_integral(double a, double b, double c) {
    return log_primitive(b - c) - log_primitive(a - c);
}

// int_a^b f(t) log|t - t0| dt with t0 inside [a, b]: the singular mass is
// integrated exactly against f(t0), the remainder is smooth at t0.
inline double integrate_log_singular(const std::function<double(double)>& f, double a,
                                     double b, double t0,
                                     const QuadratureSpec& spec = {}) {
    if (t0 < a - 1e-12 || t0 > b + 1e-12)
        throw std::invalid_argument("integrate_log_singular: t0 outside [a,b]");
    const double f0 = f(t0);
    auto regular = [&](double t) {
        const double d = t - t0;
        if (std::fabs(d) < 1e-300) return 0.0;
        return (f(t) - f0) * std::log(std::fabs(d));
    };
    double value = f0 * log_integral(a, b, t0);
    // split at the singular point so each piece has it at an endpoint
    if (t0 > a) value += integrate(regular, a, t0, spec);
    if (t0 < b) value += integrate(regular, t0, b, spec);
    return value;
}

// Principal value int_a^b f(t) / (s - t) dt for s strictly inside (a, b).
// The symmetric window around s is folded into
// int_0^d (f(s-tau) - f(s+tau)) / tau dtau, which is regular.
inline double integrate_pv(const std::function<double(double)>& f, double a, double b,
                           double s, const QuadratureSpec& spec = {}) {
    if (!(a < s && s < b))
        throw std::invalid_argument("integrate_pv: pole must lie strictly inside");
    const double d = std::min(s - a, b - s);
    auto folded = [&](double tau) { return (f(s - tau) - f(s + tau)) / tau; };
    double value = integrate(folded, 0.0, d, spec);
    if (s - a < b - s)
        value += integrate([&](double t) { return f(t) / (s - t); }, s + d, b, spec);
    else if (b - s < s - a)
        value += integrate([&](double t) { return f(t) / (s - t); }, a, s - d, spec);
    return value;
}

}  // namespace arctic
