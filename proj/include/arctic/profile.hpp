#pragma once

// Piecewise-linear profiles on [0,1]. An admissible profile f is monotone
// nondecreasing, 1-Lipschitz and has f(0) = 0; its endpoint value y = f(1)
// selects the class. The transform g = 2f - x maps those onto 1-Lipschitz
// profiles with g(0) = 0, g(1) = 2y - 1.

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace arctic {

struct Profile {
    std::vector<double> xs;  // strictly increasing breakpoints, xs.front()=0, xs.back()=1
    std::vector<double> ys;

    double operator()(double x) const {
        if (x <= xs.front()) return ys.front();
        if (x >= xs.back()) return ys.back();
        const auto it = std::upper_bound(xs.begin(), xs.end(), x);
        const std::size_t i = static_cast<std::size_t>(it - xs.begin());
        const double t = (x - xs[i - 1]) / (xs[i] - xs[i - 1]);
        return ys[i - 1] + t * (ys[i] - ys[i - 1]);
    }

    double endpoint() const { return ys.back(); }
};

inline Profile make_profile(std::vector<double> xs, std::vector<double> ys) {
    if (xs.size() != ys.size() || xs.size() < 2)
        throw std::invalid_argument("profile: need matching breakpoint/value lists");
    if (std::abs(xs.front()) > 1e-12 || std::abs(xs.back() - 1.0) > 1e-12)
        throw std::invalid_argument("profile: breakpoints must span [0,1]");
    for (std::size_t i = 0; i + 1 < xs.size(); ++i)
        if (!(xs[i] < xs[i + 1]))
            throw std::invalid_argument("profile: breakpoints must increase");
    xs.front() = 0.0;
    xs.back() = 1.0;
    return Profile{std::move(xs), std::move(ys)};
}

inline bool is_admissible(const Profile& f, double tol = 1e-9) {
    if (std::abs(f.ys.front()) > tol) return false;
    for (std::size_t i = 0; i + 1 < f.xs.size(); ++i) {
        const double slope = (f.ys[i + 1] - f.ys[i]) / (f.xs[i + 1] - f.xs[i]);
        if (slope < -tol || slope > 1.0 + tol) return false;
    }
    return true;
}

inline void require_admissible(const Profile& f, double tol = 1e-9) {
    if (!is_admissible(f, tol))
        throw std::invalid_argument("profile: not admissible (monotone 1-Lipschitz, f(0)=0)");
}

// Linear interpolation of an admissible step sequence: u_0 = 0, u_n = k,
// increments in {0,1}; the profile takes value u_j/n at j/n.
inline Profile embed_sequence(const std::vector<int>& u) {
    const int n = static_cast<int>(u.size()) - 1;
    if (n < 1) throw std::invalid_argument("embed_sequence: need at least two entries");
    if (u.front() != 0) throw std::invalid_argument("embed_sequence: must start at 0");
    for (int i = 0; i < n; ++i) {
        const int step = u[i + 1] - u[i];
        if (step != 0 && step != 1)
            throw std::invalid_argument("embed_sequence: increments must be 0 or 1");
    }
    std::vector<double> xs(n + 1), ys(n + 1);
    for (int i = 0; i <= n; ++i) {
        xs[i] = static_cast<double>(i) / n;
        ys[i] = static_cast<double>(u[i]) / n;
    }
    return make_profile(std::move(xs), std::move(ys));
}

inline Profile g_of_f(const Profile& f) {
    Profile g = f;
    for (std::size_t i = 0; i < g.xs.size(); ++i) g.ys[i] = 2.0 * f.ys[i] - f.xs[i];
    return g;
}

inline Profile f_of_g(const Profile& g) {
    Profile f = g;
    for (std::size_t i = 0; i < f.xs.size(); ++i) f.ys[i] = 0.5 * (g.ys[i] + g.xs[i]);
    return f;
}

// Projects values on a fixed grid onto the 1-Lipschitz cone with pinned
// endpoints (forward and backward passes until stable). Used to push
// perturbations back into the admissible class.
inline Profile lipschitz_project(std::vector<double> xs, std::vector<double> ys,
                                 double left, double right) {
    const std::size_t m = xs.size();
    ys.front() = left;
    ys.back() = right;
    for (int pass = 0; pass < 64; ++pass) {
        bool moved = false;
        for (std::size_t i = 1; i < m; ++i) {
            const double step = xs[i] - xs[i - 1];
            const double lo = ys[i - 1] - step, hi = ys[i - 1] + step;
            const double clamped = std::clamp(ys[i], lo, hi);
            if (clamped != ys[i]) {
                ys[i] = clamped;
                moved = true;
            }
        }
        ys.back() = right;
        for (std::size_t i = m - 1; i-- > 0;) {
            const double step = xs[i + 1] - xs[i];
            const double lo = ys[i + 1] - step, hi = ys[i + 1] + step;
            const double clamped = std::clamp(ys[i], lo, hi);
            if (clamped != ys[i]) {
                ys[i] = clamped;
                moved = true;
            }
        }
        ys.front() = left;
        if (!moved) break;
    }
    return make_profile(std::move(xs), std::move(ys));
}

}  // namespace arctic
