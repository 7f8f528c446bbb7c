#pragma once

// Exact laws of the ascent set of height-matrix row k: under domino measure
// (a ratio of Vandermonde products times a power of two) and under the
// uniform measure (a ratio of monotone-triangle counts).

#include <stdexcept>
#include <vector>

#include "arctic/exact.hpp"
#include "arctic/monotone.hpp"

namespace arctic {

inline std::vector<int> complement_in_range(int n, const std::vector<int>& xs) {
    std::vector<bool> present(n + 1, false);
    for (int x : xs) {
        if (x < 1 || x > n) throw std::invalid_argument("ascents must lie in 1..n");
        present[x] = true;
    }
    std::vector<int> ys;
    for (int v = 1; v <= n; ++v)
        if (!present[v]) ys.push_back(v);
    return ys;
}

// Probability that the ascent set of height-matrix row k equals xs, under
// domino measure. k = 0 (empty xs) is the sure event with probability 1;
// the formula extends to it naturally.
inline Rat row_law_probability(int n, int k, const std::vector<int>& xs) {
    if (k != static_cast<int>(xs.size()))
        throw std::invalid_argument("row_law: k must equal |xs|");
    if (k < 0 || k > n) throw std::invalid_argument("row_law: k out of range");
    for (int j = 0; j + 1 < k; ++j)
        if (xs[j] >= xs[j + 1])
            throw std::invalid_argument("row_law: ascents must increase");
    const std::vector<int> ys = complement_in_range(n, xs);
    Rat p = pow2q(choose2(k + 1) + choose2(n - k + 1) - choose2(n + 1));
    p *= Rat(vandermonde(xs) * vandermonde(ys),
             vandermonde_staircase(k) * vandermonde_staircase(n - k));
    p.canonicalize();
    return p;
}

// Same law under the uniform measure: alpha_k(xs) * alpha_{n-k}(ys) / |A_n|.
inline Rat uniform_row_law(int n, int k, const std::vector<int>& xs, int max_order = 5) {
    if (k != static_cast<int>(xs.size()))
        throw std::invalid_argument("uniform_row_law: k must equal |xs|");
    if (n > max_order)
        throw std::invalid_argument("uniform_row_law: order exceeds bound");
    const std::vector<int> ys = complement_in_range(n, xs);
    const Int num = (k > 0 ? alpha_bruteforce(xs, n) : Int(1)) *
                    (k < n ? alpha_bruteforce(ys, n) : Int(1));
    Rat r(num, count_asms(n, max_order));
    r.canonicalize();
    return r;
}

}  // namespace arctic
