#pragma once

// The large-deviation rate functional and its relatives, evaluated exactly
// (up to roundoff) on piecewise-linear profiles via the closed-form cell
// primitive of the log kernel:
//   H(z) = z^2 log|z| / 2 - 3 z^2 / 4  (the double antiderivative), so
//   int_p^q int_r^u log|s-t| dt ds = H(q-r) - H(p-r) - H(q-u) + H(p-u).

#include <cmath>
#include <stdexcept>
#include <vector>

#include "arctic/profile.hpp"

namespace arctic {

// theta(y) = y^2 log(y)/2 + (1-y)^2 log(1-y)/2 + (log 2 + 3/2) y (1-y).
// Vanishes at 0 and 1 (a deterministic row has rate zero), is symmetric
// about 1/2 and takes the value 3/8 there.
inline double theta(double y) {
    if (y < 0.0 || y > 1.0) throw std::invalid_argument("theta: y must be in [0,1]");
    auto xlx = [](double v) { return v > 0.0 ? v * v * std::log(v) : 0.0; };
    return 0.5 * xlx(y) + 0.5 * xlx(1.0 - y) + (std::log(2.0) + 1.5) * y * (1.0 - y);
}

namespace detail {

inline double log_kernel_H(double z) {
    if (z == 0.0) return 0.0;
    return 0.5 * z * z * std::log(std::fabs(z)) - 0.75 * z * z;
}

inline double cell_integral(double p, double q, double r, double u) {
    return log_kernel_H(q - r) - log_kernel_H(p - r) - log_kernel_H(q - u) +
           log_kernel_H(p - u);
}

// -int int a'(s) b'(t) log|s-t| over the merged breakpoint grid.
inline double bilinear_log(const Profile& a, const Profile& b) {
    std::vector<double> grid;
    grid.reserve(a.xs.size() + b.xs.size());
    std::merge(a.xs.begin(), a.xs.end(), b.xs.begin(), b.xs.end(),
               std::back_inserter(grid));
    grid.erase(std::unique(grid.begin(), grid.end(),
                           [](double s, double t) { return std::fabs(s - t) < 1e-15; }),
               grid.end());
    const std::size_t m = grid.size() - 1;
    std::vector<double> sa(m), sb(m);
    for (std::size_t i = 0; i < m; ++i) {
        const double h = grid[i + 1] - grid[i];
        sa[i] = (a(grid[i + 1]) - a(grid[i])) / h;
        sb[i] = (b(grid[i + 1]) - b(grid[i])) / h;
    }
    double total = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        if (sa[i] == 0.0) continue;
        for (std::size_t j = 0; j < m; ++j) {
            if (sb[j] == 0.0) continue;
            total += sa[i] * sb[j] * cell_integral(grid[i], grid[i + 1], grid[j], grid[j + 1]);
        }
    }
    return -total;
}

}  // namespace detail

// <g, h> = -int int g'(s) h'(t) log|s-t| ds dt; symmetric, positive
// semidefinite on Lipschitz profiles.
inline double inner_product(const Profile& g, const Profile& h) {
    return detail::bilinear_log(g, h);
}

inline double functional_J(const Profile& g) { return detail::bilinear_log(g, g); }

// I(f) = -int int log|s-t| f'(s) (f'(t) - 1) ds dt on admissible profiles.
inline double rate_I(const Profile& f) {
    require_admissible(f);
    const Profile id = make_profile({0.0, 1.0}, {0.0, 1.0});
    // f'(t) - 1 is the derivative of f - x
    return detail::bilinear_log(f, f) - detail::bilinear_log(f, id);
}

}  // namespace arctic
