#pragma once

// Variational-certificate machinery: the slack function W(s,y), its closed
// partial in y, the finite-interval Hilbert-transform residual at the
// minimizer, and the airfoil-equation inversion.

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "arctic/quadrature.hpp"
#include "arctic/shape.hpp"

namespace arctic {

// W(s,y) = int_0^1 g*'(t,y) (log|t-1/2| - log|s-t|) dt. Vanishes on the
// band ((1-beta)/2, (1+beta)/2) and is nonnegative outside, which is the
// optimality certificate for g*. The flat parts (g*' = -1) integrate in
// closed form; the band uses log-aware quadrature.
inline double W(double s, double y, const QuadratureSpec& spec = {}) {
    if (y <= 0.0 || y > 0.5)
        throw std::invalid_argument("W: y must lie in (0, 1/2]");
    if (s <= 0.0 || s >= 1.0) throw std::invalid_argument("W: s must lie in (0,1)");
    const double beta = beta_of(y);
    const double a = 0.5 * (1.0 - beta), b = 0.5 * (1.0 + beta);
    auto gp = [y](double t) { return g_star_prime(t, y); };

    double flat = 0.0;
    if (a > 0.0)
        flat -= log_integral(0.0, a, 0.5) - log_integral(0.0, a, s);
    if (b < 1.0)
        flat -= log_integral(b, 1.0, 0.5) - log_integral(b, 1.0, s);

    const double band_center = integrate_log_singular(gp, a, b, 0.5, spec);
    double band_pole;
    if (s >= a && s <= b)
        band_pole = integrate_log_singular(gp, a, b, s, spec);
    else
        band_pole = integrate([&](double t) { return gp(t) * std::log(std::fabs(t - s)); },
                              a, b, spec);
    return flat + band_center - band_pole;
}

// Closed form of dW/dy for s > (1+beta)/2:
// -2 log( (s-1/2 + sqrt((s-1/2)^2 - (beta/2)^2)) / (beta/2) ).
inline double dW_dy_closed(double s, double y) {
    const double beta = beta_of(y);
    const double d = s - 0.5, half = 0.5 * beta;
    if (d < half)
        throw std::domain_error("dW_dy_closed: requires s > (1+beta)/2");
    return -2.0 * std::log((d + std::sqrt(d * d - half * half)) / half);
}

// Residual of the band equation at the minimizer:
//   -PV int_a^b g*'(t)/(s-t) dt  -  [ -log s + log(1-s) + log(s-a) - log(b-s) ].
inline double hilbert_residual(double s, double y, const QuadratureSpec& spec = {}) {
    if (y <= 0.0 || y >= 0.5)
        throw std::invalid_argument("hilbert_residual: y must lie in (0, 1/2)");
    const double beta = beta_of(y);
    const double a = 0.5 * (1.0 - beta), b = 0.5 * (1.0 + beta);
    if (!(s > a && s < b))
        throw std::invalid_argument("hilbert_residual: s must lie inside the band");
    auto gp = [y](double t) { return g_star_prime(t, y); };
    const double lhs = -integrate_pv(gp, a, b, s, spec);
    const double rhs = -std::log(s) + std::log(1.0 - s) + std::log(s - a) -
                       std::log(b - s);
    return lhs - rhs;
}

// General solution of the airfoil equation (1/pi) int_-1^1 h(u)/(u-v) du = p(v):
// h(v) = (1/pi)(1-v^2)^{-1/2} PV int sqrt(1-u^2) p(u) / (v-u) du + c (1-v^2)^{-1/2}.
inline std::vector<double> airfoil_invert(const std::function<double(double)>& p,
                                          const std::vector<double>& grid, double c,
                                          const QuadratureSpec& spec = {}) {
    const double pi = std::acos(-1.0);
    std::vector<double> out;
    out.reserve(grid.size());
    auto weighted = [&](double u) { return std::sqrt(1.0 - u * u) * p(u); };
    for (const double v : grid) {
        if (v <= -1.0 || v >= 1.0)
            throw std::invalid_argument("airfoil_invert: grid point outside (-1,1)");
        const double pv = integrate_pv(weighted, -1.0, 1.0, v, spec);
        out.push_back((pv / pi + c) / std::sqrt(1.0 - v * v));
    }
    return out;
}

// Forward finite-interval Hilbert transform (1/pi) PV int h(u)/(u-v) du.
inline double forward_hilbert(const std::function<double(double)>& h, double v,
                              const QuadratureSpec& spec = {}) {
    const double pi = std::acos(-1.0);
    return -integrate_pv(h, -1.0, 1.0, v, spec) / pi;
}

// The band derivative in airfoil coordinates: h(v) = g*'((1 + beta v)/2).
inline double airfoil_h_closed(double v, double y) {
    const double beta = beta_of(y);
    const double pi = std::acos(-1.0);
    return -(2.0 / pi) *
           std::atan(std::sqrt((1.0 - beta * beta) / (beta * beta * (1.0 - v * v))));
}

// Right-hand side induced by the band equation after the change of variable.
inline double airfoil_p_closed(double v, double y) {
    const double beta = beta_of(y);
    const double pi = std::acos(-1.0);
    return (std::log((1.0 - beta * v) / (1.0 + beta * v)) +
            std::log((1.0 + v) / (1.0 - v))) /
           pi;
}

// The constant selecting the bounded solution for that right-hand side.
inline double airfoil_bounded_c(double y) {
    const double beta = beta_of(y);
    const double pi = std::acos(-1.0);
    return -(2.0 / pi) * (beta - 1.0 + std::sqrt(1.0 - beta * beta)) / beta;
}

}  // namespace arctic
