#pragma once

// Closed-form limit objects: the arctangent block Z, the minimizing profile
// f*_y and its transform g*_y, the height surfaces G and R, and the arctic
// curves phi+- with the tableau boundary values.
//
// For y < 1/2 the profile is flat outside the band
// ((1-beta)/2, (1+beta)/2), beta = 2 sqrt(y(1-y)); y > 1/2 is handled only
// through the reflection identities f*_y = x - f*_{1-y}, g*_y = -g*_{1-y}.

#include <cmath>
#include <stdexcept>
#include <vector>

#include "arctic/profile.hpp"

namespace arctic {

inline double beta_of(double y) {
    if (y < 0.0 || y > 1.0) throw std::invalid_argument("beta: y must be in [0,1]");
    return 2.0 * std::sqrt(y * (1.0 - y));
}

// Z(x,y): odd in x-1/2, continuous up to the circle
// (x-1/2)^2 + (y-1/2)^2 = 1/4, where it takes the values sign(x-1/2) * y
// (one-sided limits; radicands below 1e-14 are clamped to the boundary).
inline double Z(double x, double y) {
    const double dx = x - 0.5, dy = 0.5 - y;
    double rad = 0.25 - dx * dx - dy * dy;
    if (rad < -1e-12)
        throw std::domain_error("Z: point outside the inscribed disc");
    if (rad < 1e-14) rad = 0.0;
    const double root = std::sqrt(rad);
    const double pi = std::acos(-1.0);
    // atan2 realizes the one-sided limits when the radicand vanishes
    const double t1 = dx * std::atan2(root, dy);
    const double t2 = 0.5 * std::atan2(2.0 * dx * dy, root);
    const double t3 = -dy * std::atan2(dx, root);
    return (2.0 / pi) * (t1 + t2 + t3);
}

// The limit shape F(x,y) = f*_y(x).
inline double f_star(double x, double y) {
    if (x < 0.0 || x > 1.0 || y < 0.0 || y > 1.0)
        throw std::domain_error("f_star: arguments must lie in the unit square");
    if (y == 0.5) return 0.5 * x;
    if (y > 0.5) return x - f_star(x, 1.0 - y);
    const double beta = beta_of(y);
    if (x <= 0.5 * (1.0 - beta)) return 0.0;
    if (x >= 0.5 * (1.0 + beta)) return y;
    return 0.5 * y + 0.5 * Z(x, y);
}

inline double g_star(double x, double y) { return 2.0 * f_star(x, y) - x; }

// d/ds g*_y(s); the closed form inside the band, -1 outside (for y < 1/2).
// Defined off the two circle points s = (1 -+ beta)/2.
inline double g_star_prime(double s, double y) {
    if (s < 0.0 || s > 1.0) throw std::domain_error("g_star_prime: s outside [0,1]");
    if (y > 0.5) return -g_star_prime(s, 1.0 - y);
    const double beta = beta_of(y);
    if (s <= 0.5 * (1.0 - beta) || s >= 0.5 * (1.0 + beta)) return -1.0;
    const double ds = s - 0.5, dy = 0.5 - y;
    double rad = 0.25 - dy * dy - ds * ds;
    if (rad < 0.0) rad = 0.0;
    const double pi = std::acos(-1.0);
    return (2.0 / pi) * std::atan2(std::sqrt(rad), dy) - 1.0;
}

// Symmetrized-height limit G(x,y) = x + y - 2 F(x,y) = y - g*_y(x).
inline double G(double x, double y) { return x + y - 2.0 * f_star(x, y); }

// Height-function limit on the diamond |u| + |v| <= 1, normalized so that
// R(-1, 0) = 0.
inline double R(double u, double v) {
    const double s = std::fabs(u) + std::fabs(v);
    if (s > 1.0 + 1e-12) throw std::domain_error("R: point outside the diamond");
    if (s > 1.0) {  // clamp points on the rim
        u /= s;
        v /= s;
    }
    return 2.0 * G(0.5 * (u - v + 1.0), 0.5 * (u + v + 1.0));
}

// Arctic curves of the jump process: phi+-(x) = 1/2 +- sqrt(x(1-x)).
inline std::pair<double, double> phi_pm(double x) {
    if (x < 0.0 || x > 1.0) throw std::domain_error("phi_pm: x must be in [0,1]");
    const double r = std::sqrt(x * (1.0 - x));
    return {0.5 - r, 0.5 + r};
}

// Boundary values of the tableau limit surface: (L(0,t), L(1,t)).
inline std::pair<double, double> L_boundary(double t) {
    if (t < 0.0 || t > 1.0) throw std::domain_error("L_boundary: t must be in [0,1]");
    const double low = 0.5 * (1.0 - std::sqrt(1.0 - t * t));
    const double high = 0.5 * (1.0 + std::sqrt(t * (2.0 - t)));
    return {low, high};
}

// Piecewise-linear sampling of f*_y with mesh refinement at the band edges
// (the profile has square-root behavior there).
inline Profile discretize_f_star(double y, int uniform_points = 1024) {
    std::vector<double> xs;
    xs.reserve(uniform_points + 64);
    for (int i = 0; i <= uniform_points; ++i)
        xs.push_back(static_cast<double>(i) / uniform_points);
    const double yy = y <= 0.5 ? y : 1.0 - y;
    if (yy > 0.0 && yy < 0.5) {
        const double beta = beta_of(yy);
        for (const double edge : {0.5 * (1.0 - beta), 0.5 * (1.0 + beta)}) {
            for (int k = 1; k <= 14; ++k) {
                const double off = beta * std::pow(0.5, k + 2);
                for (const double p : {edge - off, edge + off})
                    if (p > 0.0 && p < 1.0) xs.push_back(p);
            }
            if (edge > 0.0 && edge < 1.0) xs.push_back(edge);
        }
        std::sort(xs.begin(), xs.end());
        xs.erase(std::unique(xs.begin(), xs.end(),
                             [](double a, double b) { return b - a < 1e-13; }),
                 xs.end());
        xs.front() = 0.0;
        xs.back() = 1.0;
    }
    std::vector<double> ys;
    ys.reserve(xs.size());
    for (const double x : xs) ys.push_back(f_star(x, y));
    return make_profile(std::move(xs), std::move(ys));
}

}  // namespace arctic
