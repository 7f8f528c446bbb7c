#pragma once

// Polar-region detection. Each of the four regions is grown from the domino
// covering the extreme cell at its corner, over dominoes of the same class
// (type and parity) that share a boundary segment of positive length. In the
// frozen corners of a typical sample this reproduces the brickwork regions;
// the corner domino itself is polar by construction. Corner cells queried:
// north (-1, n-1), south (-1, -n), east (n-1, -1), west (-n, -1).

#include <array>
#include <vector>

#include "arctic/aztec.hpp"
#include "arctic/shuffle.hpp"

namespace arctic {

enum class PolarRegion : unsigned char { None = 0, North, South, East, West };

struct FrozenMask {
    int n = 0;
    std::vector<PolarRegion> region;  // parallel to tiling.dominoes

    bool polar(std::size_t d) const { return region[d] != PolarRegion::None; }
};

// Dominoes share a boundary segment iff their cell sets contain touching
// cells; for same-class dominoes this is the brickwork adjacency.
inline std::vector<std::vector<int>> domino_adjacency(const DominoTiling& t) {
    const CellMap<int> owner = tiling_cover(t);
    std::vector<std::vector<int>> adj(t.dominoes.size());
    auto link = [&](int a, int b) {
        if (a < 0 || b < 0 || a == b) return;
        adj[a].push_back(b);
    };
    for (std::size_t d = 0; d < t.dominoes.size(); ++d) {
        const Domino& dom = t.dominoes[d];
        for (const Cell c : {Cell{dom.x, dom.y}, dom.second_cell()}) {
            for (const auto& [dx, dy] :
                 std::array<std::pair<int, int>, 4>{{{1, 0}, {-1, 0}, {0, 1}, {0, -1}}}) {
                const int nx = c.x + dx, ny = c.y + dy;
                if (cell_in_diamond(t.n, nx, ny))
                    link(static_cast<int>(d), owner.at(nx, ny));
            }
        }
    }
    return adj;
}

inline FrozenMask frozen_mask(const DominoTiling& t) {
    const int n = t.n;
    const CellMap<int> owner = tiling_cover(t);
    const auto adj = domino_adjacency(t);
    FrozenMask mask{n, std::vector<PolarRegion>(t.dominoes.size(), PolarRegion::None)};

    const std::array<std::pair<Cell, PolarRegion>, 4> corners{{
        {{-1, n - 1}, PolarRegion::North},
        {{-1, -n}, PolarRegion::South},
        {{n - 1, -1}, PolarRegion::East},
        {{-n, -1}, PolarRegion::West},
    }};
    for (const auto& [corner, tag] : corners) {
        const int seed = owner.at(corner.x, corner.y);
        if (seed < 0 || mask.region[seed] != PolarRegion::None) continue;
        const DominoClass cls = domino_class(n, t.dominoes[seed]);
        std::vector<int> stack{seed};
        mask.region[seed] = tag;
        while (!stack.empty()) {
            const int d = stack.back();
            stack.pop_back();
            for (int e : adj[d]) {
                if (mask.region[e] != PolarRegion::None) continue;
                if (domino_class(n, t.dominoes[e]) != cls) continue;
                mask.region[e] = tag;
                stack.push_back(e);
            }
        }
    }
    return mask;
}

}  // namespace arctic
