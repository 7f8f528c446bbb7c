#pragma once

// Domino shuffling: grows a uniform tiling of the order-n diamond into a
// uniform tiling of order n+1 via destruction, sliding and coin-flip
// creation.
//
// Each domino carries a direction given by its type and parity: horizontal
// dominoes go north when their left cell is black and south otherwise;
// vertical dominoes go east when their bottom cell is black and west
// otherwise. Directions are stable under sliding (the parity of the left/
// bottom cell is preserved when the order increments). A 2x2 block whose
// lower-left cell is black holds dominoes pointing at each other; those
// pairs annihilate in the destruction phase.

#include <stdexcept>
#include <vector>

#include "arctic/aztec.hpp"
#include "arctic/rng.hpp"

namespace arctic {

enum class DominoClass { North, South, East, West };

inline DominoClass domino_class(int n, const Domino& d) {
    const bool black = cell_black(n, d.x, d.y);
    if (d.horizontal) return black ? DominoClass::North : DominoClass::South;
    return black ? DominoClass::East : DominoClass::West;
}

inline std::pair<int, int> domino_step(DominoClass c) {
    switch (c) {
        case DominoClass::North: return {0, 1};
        case DominoClass::South: return {0, -1};
        case DominoClass::East: return {1, 0};
        default: return {-1, 0};
    }
}

// One destruction/slide/creation pass. Uniform input on order n gives
// uniform output on order n+1.
inline DominoTiling shuffle_step(const DominoTiling& t, Rng& rng) {
    const int n = t.n;
    const int m = n + 1;

    // destruction: drop both dominoes of any black-anchored 2x2 block they
    // tile together
    CellMap<int> owner(n > 0 ? n : 1, -1);
    for (std::size_t d = 0; d < t.dominoes.size(); ++d) {
        const Domino& dom = t.dominoes[d];
        owner.at(dom.x, dom.y) = static_cast<int>(d);
        const Cell c2 = dom.second_cell();
        owner.at(c2.x, c2.y) = static_cast<int>(d);
    }
    std::vector<bool> keep(t.dominoes.size(), true);
    for (const Domino& dom : t.dominoes) {
        if (!cell_black(n, dom.x, dom.y)) continue;
        if (dom.horizontal) {
            // partner directly above: a south-going horizontal domino
            if (cell_in_diamond(n, dom.x, dom.y + 1)) {
                const int up = owner.at(dom.x, dom.y + 1);
                if (up >= 0 && t.dominoes[up] == Domino{dom.x, dom.y + 1, true}) {
                    keep[owner.at(dom.x, dom.y)] = false;
                    keep[up] = false;
                }
            }
        } else {
            // partner directly to the right: a west-going vertical domino
            if (cell_in_diamond(n, dom.x + 1, dom.y)) {
                const int right = owner.at(dom.x + 1, dom.y);
                if (right >= 0 && t.dominoes[right] == Domino{dom.x + 1, dom.y, false}) {
                    keep[owner.at(dom.x, dom.y)] = false;
                    keep[right] = false;
                }
            }
        }
    }

    // sliding into the order-(n+1) diamond
    CellMap<char> covered(m, 0);
    std::vector<Domino> result;
    result.reserve(static_cast<std::size_t>(m * (m + 1)));
    for (std::size_t d = 0; d < t.dominoes.size(); ++d) {
        if (!keep[d]) continue;
        const Domino& dom = t.dominoes[d];
        const auto [dx, dy] = domino_step(domino_class(n, dom));
        const Domino slid{dom.x + dx, dom.y + dy, dom.horizontal};
        const Cell c2 = slid.second_cell();
        if (!cell_in_diamond(m, slid.x, slid.y) || !cell_in_diamond(m, c2.x, c2.y))
            throw std::runtime_error("shuffle: slid domino left the diamond");
        if (covered.at(slid.x, slid.y) || covered.at(c2.x, c2.y))
            throw std::runtime_error("shuffle: slid dominoes collide");
        covered.at(slid.x, slid.y) = 1;
        covered.at(c2.x, c2.y) = 1;
        result.push_back(slid);
    }

    // creation: the uncovered region splits uniquely into 2x2 blocks; scan
    // row-major, each lex-least uncovered cell anchors its block
    for (int y = -m; y < m; ++y)
        for (int x = -m; x < m; ++x) {
            if (!cell_in_diamond(m, x, y) || covered.at(x, y)) continue;
            for (const Cell c : {Cell{x + 1, y}, Cell{x, y + 1}, Cell{x + 1, y + 1}}) {
                if (!cell_in_diamond(m, c.x, c.y) || covered.at(c.x, c.y))
                    throw std::runtime_error("shuffle: creation region is not 2x2 blocks");
            }
            covered.at(x, y) = covered.at(x + 1, y) = 1;
            covered.at(x, y + 1) = covered.at(x + 1, y + 1) = 1;
            if (rng.coin()) {
                result.push_back({x, y, true});
                result.push_back({x, y + 1, true});
            } else {
                result.push_back({x, y, false});
                result.push_back({x + 1, y, false});
            }
        }
    return DominoTiling{m, result};
}

// n shuffle steps from the empty order-0 tiling; deterministic in the seed.
inline DominoTiling sample_tiling(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("sample_tiling: order must be positive");
    Rng rng(seed);
    DominoTiling t{0, {}};
    for (int k = 0; k < n; ++k) t = shuffle_step(t, rng);
    return t;
}

}  // namespace arctic
