#pragma once

// Alternating sign matrices, their height (corner-sum) matrices and the
// symmetrized variant h* = i + j - 2h. Entry storage is 0-based; the
// column labels used by ascents and monotone triangles are 1-based.

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "arctic/exact.hpp"

namespace arctic {

using Grid = std::vector<std::vector<int>>;

struct Asm {
    int n = 0;
    Grid m;  // n x n over {-1,0,1}

    int at(int i, int j) const { return m[i][j]; }
    bool operator==(const Asm&) const = default;
};

struct HeightMatrix {
    int n = 0;
    Grid h;  // (n+1) x (n+1), indices 0..n

    int at(int i, int j) const { return h[i][j]; }
    bool operator==(const HeightMatrix&) const = default;
};

struct SymHeightMatrix {
    int n = 0;
    Grid h;  // h*_{i,j} = i + j - 2 h_{i,j}

    int at(int i, int j) const { return h[i][j]; }
    bool operator==(const SymHeightMatrix&) const = default;
};

// Checks row/column sums and the alternating-sign condition; reports the
// first violated constraint with its (1-based) index.
inline Asm validate_asm(const Grid& entries) {
    const int n = static_cast<int>(entries.size());
    if (n == 0) throw std::invalid_argument("asm: empty matrix");
    for (int i = 0; i < n; ++i)
        if (static_cast<int>(entries[i].size()) != n)
            throw std::invalid_argument("asm: row " + std::to_string(i + 1) +
                                        " has wrong length");

    auto check_line = [n](const std::string& what, int idx,
                          const std::function<int(int)>& get) {
        int sum = 0, last_sign = -1;  // expect +1 first
        for (int t = 0; t < n; ++t) {
            const int v = get(t);
            if (v < -1 || v > 1)
                throw std::invalid_argument("asm: entry out of {-1,0,1} in " + what +
                                            " " + std::to_string(idx));
            if (v != 0) {
                if (v == last_sign)
                    throw std::invalid_argument("asm: " + what + " " +
                                                std::to_string(idx) +
                                                " has two consecutive " +
                                                (v == 1 ? "+1" : "-1") + " entries");
                last_sign = v;
            }
            sum += v;
        }
        if (sum != 1)
            throw std::invalid_argument("asm: " + what + " " + std::to_string(idx) +
                                        " sums to " + std::to_string(sum));
        // sum == 1 with alternation starting at +1 forces the last nonzero to be +1
    };

    for (int i = 0; i < n; ++i)
        check_line("row", i + 1, [&](int t) { return entries[i][t]; });
    for (int j = 0; j < n; ++j)
        check_line("column", j + 1, [&](int t) { return entries[t][j]; });
    return Asm{n, entries};
}

inline int n_plus(const Asm& a) {
    int c = 0;
    for (const auto& row : a.m)
        for (int v : row) c += (v == 1);
    return c;
}

// Corner sums h_{i,j} = sum_{p<=i, q<=j} m_{p,q} (indices 1-based in the sum).
inline HeightMatrix height_matrix(const Asm& a) {
    const int n = a.n;
    Grid h(n + 1, std::vector<int>(n + 1, 0));
    for (int i = 1; i <= n; ++i) {
        int rowsum = 0;
        for (int j = 1; j <= n; ++j) {
            rowsum += a.m[i - 1][j - 1];
            h[i][j] = h[i - 1][j] + rowsum;
        }
    }
    return HeightMatrix{n, h};
}

// Checks the boundary conditions and the unit-step (Lipschitz) condition.
inline HeightMatrix validate_height(const Grid& h) {
    const int n = static_cast<int>(h.size()) - 1;
    if (n < 1) throw std::invalid_argument("height: matrix too small");
    for (const auto& row : h)
        if (static_cast<int>(row.size()) != n + 1)
            throw std::invalid_argument("height: not square");
    for (int k = 0; k <= n; ++k) {
        if (h[0][k] != 0 || h[k][0] != 0)
            throw std::invalid_argument("height: first row/column must be zero");
        if (h[n][k] != k || h[k][n] != k)
            throw std::invalid_argument("height: last row/column must be 0..n");
    }
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j < n; ++j) {
            const int dr = h[i][j + 1] - h[i][j];
            const int dc = h[j + 1][i] - h[j][i];
            if (dr < 0 || dr > 1 || dc < 0 || dc > 1)
                throw std::invalid_argument("height: steps must be 0 or 1");
        }
    return HeightMatrix{n, h};
}

// Second differences recover the matrix; inverse of height_matrix.
inline Asm asm_from_height(const HeightMatrix& hm) {
    validate_height(hm.h);
    const int n = hm.n;
    Grid m(n, std::vector<int>(n, 0));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            m[i - 1][j - 1] =
                hm.h[i][j] - hm.h[i - 1][j] - hm.h[i][j - 1] + hm.h[i - 1][j - 1];
    return validate_asm(m);
}

inline SymHeightMatrix sym_height(const HeightMatrix& hm) {
    const int n = hm.n;
    Grid s(n + 1, std::vector<int>(n + 1, 0));
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) s[i][j] = i + j - 2 * hm.h[i][j];
    return SymHeightMatrix{n, s};
}

inline HeightMatrix height_from_sym(const SymHeightMatrix& sm) {
    const int n = sm.n;
    Grid h(n + 1, std::vector<int>(n + 1, 0));
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
            const int twice = i + j - sm.h[i][j];
            if (twice % 2 != 0)
                throw std::invalid_argument("sym height: parity violation at (" +
                                            std::to_string(i) + "," +
                                            std::to_string(j) + ")");
            h[i][j] = twice / 2;
        }
    return validate_height(h);
}

// Domino-measure weight 2^{N+(M) - binom(n+1,2)}; sums to 1 over all ASMs
// of order n.
inline Rat domino_weight(const Asm& a) {
    return pow2q(n_plus(a) - choose2(a.n + 1));
}

// Ascent positions of row k of the height matrix: the k columns x (1-based)
// with h_{k,x} - h_{k,x-1} = 1. The row is recoverable from them.
inline std::vector<int> row_ascents(const HeightMatrix& hm, int k) {
    if (k < 1 || k > hm.n) throw std::invalid_argument("row_ascents: k out of range");
    std::vector<int> xs;
    for (int x = 1; x <= hm.n; ++x)
        if (hm.h[k][x] - hm.h[k][x - 1] == 1) xs.push_back(x);
    return xs;
}

inline std::vector<int> height_row_from_ascents(int n, const std::vector<int>& xs) {
    std::vector<int> row(n + 1, 0);
    std::size_t t = 0;
    for (int x = 1; x <= n; ++x) {
        row[x] = row[x - 1];
        if (t < xs.size() && xs[t] == x) {
            ++row[x];
            ++t;
        }
    }
    if (t != xs.size())
        throw std::invalid_argument("height_row_from_ascents: bad ascent list");
    return row;
}

}  // namespace arctic
