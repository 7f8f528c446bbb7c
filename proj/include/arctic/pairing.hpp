#pragma once

// The bijection between tilings of the order-n diamond and compatible pairs
// (A, B) of ASMs of orders n and n+1. The normalized height function is the
// superposition of the two symmetrized height matrices, one per vertex
// parity class:
//   h*(A)_{i,j} = eta(-n   + i + j, j - i) / 2        (0 <= i,j <= n)
//   h*(B)_{i,j} = (eta(-n-1 + i + j, j - i) + 1) / 2  (0 <= i,j <= n+1)
// and (A, B) ranges exactly over the pairs satisfying the four height-matrix
// compatibility inequalities.

#include <stdexcept>
#include <utility>

#include "arctic/asm_matrix.hpp"
#include "arctic/aztec.hpp"

namespace arctic {

inline std::pair<Asm, Asm> compatible_pair(const HeightFunction& eta) {
    const int n = eta.n;
    auto extract = [&](int order, int shift, int add) {
        Grid s(order + 1, std::vector<int>(order + 1, 0));
        for (int i = 0; i <= order; ++i)
            for (int j = 0; j <= order; ++j) {
                const int v = eta.at(shift + i + j, j - i) + add;
                if (v % 2 != 0)
                    throw std::runtime_error("compatible_pair: parity violation");
                s[i][j] = v / 2;
            }
        return SymHeightMatrix{order, s};
    };
    const SymHeightMatrix sa = extract(n, -n, 0);
    const SymHeightMatrix sb = extract(n + 1, -n - 1, 1);
    return {asm_from_height(height_from_sym(sa)), asm_from_height(height_from_sym(sb))};
}

// The four height-matrix inequality families characterizing compatibility.
inline bool is_compatible(const Asm& a, const Asm& b) {
    if (b.n != a.n + 1)
        throw std::invalid_argument("is_compatible: orders must be consecutive");
    const HeightMatrix ha = height_matrix(a);
    const HeightMatrix hb = height_matrix(b);
    for (int i = 0; i <= a.n; ++i)
        for (int j = 0; j <= a.n; ++j) {
            if (!(hb.h[i][j] <= ha.h[i][j])) return false;
            if (!(hb.h[i + 1][j + 1] - 1 <= ha.h[i][j])) return false;
            if (!(ha.h[i][j] <= hb.h[i + 1][j])) return false;
            if (!(ha.h[i][j] <= hb.h[i][j + 1])) return false;
        }
    return true;
}

// Full inverse of height_function followed by compatible_pair.
inline DominoTiling tiling_from_pair(const Asm& a, const Asm& b) {
    if (!is_compatible(a, b))
        throw std::invalid_argument("tiling_from_pair: pair is not compatible");
    const int n = a.n;
    const SymHeightMatrix sa = sym_height(height_matrix(a));
    const SymHeightMatrix sb = sym_height(height_matrix(b));
    HeightFunction eta(n);
    for (int x = -n - 1; x <= n + 1; ++x)
        for (int y = -n - 1; y <= n + 1; ++y) {
            if (!vertex_in_diamond(n, x, y)) continue;
            if (((x + y + n) % 2 + 2) % 2 == 0) {
                const int i = (x - y + n) / 2, j = (x + y + n) / 2;
                eta.set(x, y, 2 * sa.h[i][j]);
            } else {
                const int i = (x - y + n + 1) / 2, j = (x + y + n + 1) / 2;
                eta.set(x, y, 2 * sb.h[i][j] - 1);
            }
        }
    return tiling_from_height(eta);
}

}  // namespace arctic
