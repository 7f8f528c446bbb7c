#pragma once

// Operator route to alpha_k: expand prod_{i<j} (Id + E_i D_j) applied to
// Delta(x_1..x_k)/Delta(1..k) over exact-rational multivariate polynomials
// and evaluate at the bottom row. E_j shifts x_j by one, D_i = E_i - Id.
// All shift operators commute, so the product order is immaterial.

#include <map>
#include <stdexcept>
#include <vector>

#include "arctic/exact.hpp"

namespace arctic {

// Sparse polynomial in k variables: exponent vector -> coefficient.
using Poly = std::map<std::vector<int>, Rat>;

inline void poly_add_term(Poly& p, const std::vector<int>& mono, const Rat& c) {
    auto it = p.find(mono);
    if (it == p.end()) {
        if (c != 0) p.emplace(mono, c);
        return;
    }
    it->second += c;
    if (it->second == 0) p.erase(it);
}

inline Poly poly_mul(const Poly& a, const Poly& b, int k) {
    Poly r;
    std::vector<int> mono(k, 0);
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            for (int v = 0; v < k; ++v) mono[v] = ma[v] + mb[v];
            poly_add_term(r, mono, ca * cb);
        }
    return r;
}

// Substitute x_j + 1 for x_j (binomial expansion per term).
inline Poly poly_shift(const Poly& p, int j, int k) {
    Poly r;
    std::vector<int> mono(k, 0);
    for (const auto& [m, c] : p) {
        const int e = m[j];
        mono = m;
        Int binom = 1;
        for (int t = e; t >= 0; --t) {
            mono[j] = t;
            poly_add_term(r, mono, c * Rat(binom));
            binom = binom * t / (e - t + 1);
        }
    }
    return r;
}

inline Poly poly_sub(const Poly& a, const Poly& b) {
    Poly r = a;
    for (const auto& [m, c] : b) poly_add_term(r, m, -c);
    return r;
}

inline Poly poly_addp(const Poly& a, const Poly& b) {
    Poly r = a;
    for (const auto& [m, c] : b) poly_add_term(r, m, c);
    return r;
}

inline Rat poly_eval(const Poly& p, const std::vector<int>& xs) {
    Rat total = 0;
    for (const auto& [m, c] : p) {
        Rat term = c;
        for (std::size_t v = 0; v < xs.size(); ++v) {
            Int pw = 1;
            for (int e = 0; e < m[v]; ++e) pw *= xs[v];
            term *= Rat(pw);
        }
        total += term;
    }
    total.canonicalize();
    return total;
}

// The polynomial prod_{i<j} (Id + E_i D_j) [ Delta(x)/Delta(1..k) ].
inline Poly alpha_operator_polynomial(int k) {
    if (k < 1 || k > 4)
        throw std::invalid_argument("alpha operator formula: k must be in 1..4");
    // Delta(x) = prod_{i<j} (x_j - x_i)
    Poly p;
    p[std::vector<int>(k, 0)] = Rat(1, vandermonde_staircase(k));
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            Poly diff;
            std::vector<int> mj(k, 0), mi(k, 0);
            mj[j] = 1;
            mi[i] = 1;
            diff[mj] = 1;
            diff[mi] = -1;
            p = poly_mul(p, diff, k);
        }
    // apply (Id + E_i D_j) = Id + E_i E_j - E_i for each pair i < j
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            Poly shifted_i = poly_shift(p, i, k);
            Poly shifted_ij = poly_shift(shifted_i, j, k);
            p = poly_addp(p, poly_sub(shifted_ij, shifted_i));
        }
    return p;
}

inline Int alpha_operator_formula(const std::vector<int>& xs) {
    const int k = static_cast<int>(xs.size());
    Poly p = alpha_operator_polynomial(k);
    Rat v = poly_eval(p, xs);
    if (v.get_den() != 1)
        throw std::runtime_error("alpha operator formula: non-integral value");
    return v.get_num();
}

}  // namespace arctic
