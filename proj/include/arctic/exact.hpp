#pragma once

// Exact integer/rational arithmetic for the combinatorial layers. All counts,
// weights and probabilities in those layers are exact; GMP does the heavy
// lifting behind small helpers.

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace arctic {

using Int = mpz_class;
using Rat = mpq_class;

inline Int pow2(long e) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
    return r;
}

// 2^e for possibly negative e.
inline Rat pow2q(long e) {
    if (e >= 0) return Rat(pow2(e));
    Rat r(Int(1), pow2(-e));
    r.canonicalize();
    return r;
}

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// m choose 2, as a plain long (used for exponents of 2).
inline long choose2(long m) { return m * (m - 1) / 2; }

// Vandermonde product prod_{i<j} (x_j - x_i).
inline Int vandermonde(std::span<const int> xs) {
    Int r = 1;
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j) r *= Int(xs[j] - xs[i]);
    return r;
}

// Vandermonde of (1, 2, ..., m) = prod_{d=1}^{m-1} d!.
inline Int vandermonde_staircase(int m) {
    Int r = 1;
    for (int d = 1; d < m; ++d) r *= factorial(static_cast<unsigned long>(d));
    return r;
}

inline std::string to_string(const Int& v) { return v.get_str(); }
inline std::string to_string(const Rat& v) { return v.get_str(); }

}  // namespace arctic
