#pragma once

// Aztec diamond geometry, domino tilings and normalized height functions.
//
// Coordinate conventions, used everywhere in this library:
//   * Cells are unit squares [x,x+1] x [y,y+1] indexed by their lower-left
//     corner (x,y). The order-n diamond consists of the cells with
//     |2x+1| + |2y+1| <= 2n; there are 2n(n+1) of them.
//   * Vertices are the integer points with |x|+|y| <= n+1.
//   * The checkerboard coloring marks cell (x,y) black when x+y+n is even.
//   * Lattice edges between vertices are directed so that a traveler
//     crossing the edge sees a black cell on her left: a horizontal edge
//     (x,y)-(x+1,y) points right iff cell (x,y) is black, a vertical edge
//     (x,y)-(x,y+1) points up iff cell (x-1,y) is black.
//   * Along a directed edge u -> v, a height function satisfies
//     eta(u) - eta(v) = -3 if the edge crosses a domino and +1 otherwise;
//     normalization fixes eta(-n, 0) = 0.

#include <array>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace arctic {

struct Cell {
    int x = 0, y = 0;
    auto operator<=>(const Cell&) const = default;
};

inline bool cell_in_diamond(int n, int x, int y) {
    return std::abs(2 * x + 1) + std::abs(2 * y + 1) <= 2 * n;
}

inline bool vertex_in_diamond(int n, int x, int y) {
    return std::abs(x) + std::abs(y) <= n + 1;
}

inline bool cell_black(int n, int x, int y) {
    return ((x + y + n) % 2 + 2) % 2 == 0;
}

// Cells in row-major order (y ascending, then x ascending).
inline std::vector<Cell> diamond_cells(int n) {
    std::vector<Cell> cells;
    cells.reserve(static_cast<std::size_t>(2 * n * (n + 1)));
    for (int y = -n; y < n; ++y)
        for (int x = -n; x < n; ++x)
            if (cell_in_diamond(n, x, y)) cells.push_back({x, y});
    return cells;
}

struct Domino {
    int x = 0, y = 0;        // lower-left (anchor) cell
    bool horizontal = true;  // covers (x+1,y) when horizontal, (x,y+1) otherwise

    Cell second_cell() const { return horizontal ? Cell{x + 1, y} : Cell{x, y + 1}; }
    auto operator<=>(const Domino&) const = default;
};

struct DominoTiling {
    int n = 0;
    std::vector<Domino> dominoes;
    bool operator==(const DominoTiling&) const = default;
};

// Dense per-cell table covering the bounding box of the order-n diamond.
template <typename T>
class CellMap {
  public:
    CellMap(int n, T init) : n_(n), side_(2 * n + 2), data_(side_ * side_, init) {}
    T& at(int x, int y) { return data_[idx(x, y)]; }
    const T& at(int x, int y) const { return data_[idx(x, y)]; }

  private:
    std::size_t idx(int x, int y) const {
        return static_cast<std::size_t>(x + n_ + 1) * side_ +
               static_cast<std::size_t>(y + n_ + 1);
    }
    int n_;
    std::size_t side_;
    std::vector<T> data_;
};

// Exact-cover check; returns a map cell -> index of the covering domino.
inline CellMap<int> tiling_cover(const DominoTiling& t) {
    CellMap<int> owner(t.n, -1);
    if (static_cast<int>(t.dominoes.size()) != t.n * (t.n + 1))
        throw std::invalid_argument("tiling: expected " + std::to_string(t.n * (t.n + 1)) +
                                    " dominoes, got " + std::to_string(t.dominoes.size()));
    for (std::size_t d = 0; d < t.dominoes.size(); ++d) {
        const Domino& dom = t.dominoes[d];
        const Cell c2 = dom.second_cell();
        for (const Cell c : {Cell{dom.x, dom.y}, c2}) {
            if (!cell_in_diamond(t.n, c.x, c.y))
                throw std::invalid_argument("tiling: domino leaves the diamond at (" +
                                            std::to_string(c.x) + "," +
                                            std::to_string(c.y) + ")");
            if (owner.at(c.x, c.y) != -1)
                throw std::invalid_argument("tiling: overlapping dominoes at (" +
                                            std::to_string(c.x) + "," +
                                            std::to_string(c.y) + ")");
            owner.at(c.x, c.y) = static_cast<int>(d);
        }
    }
    return owner;  // count matches, so every cell is covered
}

inline DominoTiling validate_tiling(const DominoTiling& t) {
    tiling_cover(t);
    return t;
}

// Streams all tilings by backtracking over cells in row-major order,
// horizontal placement tried before vertical. Deterministic.
inline void for_each_tiling(int n, const std::function<void(const DominoTiling&)>& fn,
                            int max_order = 5) {
    if (n < 1) throw std::invalid_argument("enumerate tilings: order must be positive");
    if (n > max_order)
        throw std::invalid_argument("enumerate tilings: order exceeds bound " +
                                    std::to_string(max_order));
    const std::vector<Cell> cells = diamond_cells(n);
    CellMap<char> covered(n, 0);
    std::vector<Domino> placed;
    placed.reserve(cells.size() / 2);

    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        while (i < cells.size() && covered.at(cells[i].x, cells[i].y)) ++i;
        if (i == cells.size()) {
            fn(DominoTiling{n, placed});
            return;
        }
        const Cell c = cells[i];
        covered.at(c.x, c.y) = 1;
        if (cell_in_diamond(n, c.x + 1, c.y) && !covered.at(c.x + 1, c.y)) {
            covered.at(c.x + 1, c.y) = 1;
            placed.push_back({c.x, c.y, true});
            rec(i + 1);
            placed.pop_back();
            covered.at(c.x + 1, c.y) = 0;
        }
        if (cell_in_diamond(n, c.x, c.y + 1) && !covered.at(c.x, c.y + 1)) {
            covered.at(c.x, c.y + 1) = 1;
            placed.push_back({c.x, c.y, false});
            rec(i + 1);
            placed.pop_back();
            covered.at(c.x, c.y + 1) = 0;
        }
        covered.at(c.x, c.y) = 0;
    };
    rec(0);
}

inline std::vector<DominoTiling> enumerate_tilings(int n, int max_order = 5) {
    std::vector<DominoTiling> out;
    for_each_tiling(n, [&](const DominoTiling& t) { out.push_back(t); }, max_order);
    return out;
}

// Directed graph on the diamond vertices.
struct AztecGraph {
    int n = 0;
    std::vector<std::pair<int, int>> vertices;       // sorted (x, y)
    std::vector<std::vector<int>> out;               // out-neighbor indices
    std::vector<std::vector<int>> in;                // in-neighbor indices

    int index(int x, int y) const {
        auto it = std::lower_bound(vertices.begin(), vertices.end(), std::pair{x, y});
        if (it == vertices.end() || *it != std::pair{x, y})
            throw std::invalid_argument("graph: vertex out of range");
        return static_cast<int>(it - vertices.begin());
    }
};

// True when the lattice edge from u in direction (dx,dy) is directed that
// way (black cell on the traveler's left).
inline bool edge_points_away(int n, int x, int y, int dx, int dy) {
    if (dx == 1) return cell_black(n, x, y);           // left of east = (x, y)
    if (dx == -1) return cell_black(n, x - 1, y - 1);  // left of west = (x-1, y-1)
    if (dy == 1) return cell_black(n, x - 1, y);       // left of north = (x-1, y)
    return cell_black(n, x, y - 1);                    // left of south = (x, y-1)
}

inline AztecGraph build_graph(int n) {
    if (n < 1) throw std::invalid_argument("graph: order must be positive");
    AztecGraph g;
    g.n = n;
    for (int x = -n - 1; x <= n + 1; ++x)
        for (int y = -n - 1; y <= n + 1; ++y)
            if (vertex_in_diamond(n, x, y)) g.vertices.push_back({x, y});
    g.out.resize(g.vertices.size());
    g.in.resize(g.vertices.size());
    const std::array<std::pair<int, int>, 4> dirs{{{1, 0}, {-1, 0}, {0, 1}, {0, -1}}};
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        const auto [x, y] = g.vertices[i];
        for (const auto& [dx, dy] : dirs) {
            if (!vertex_in_diamond(n, x + dx, y + dy)) continue;
            if (edge_points_away(n, x, y, dx, dy)) {
                const int j = g.index(x + dx, y + dy);
                g.out[i].push_back(j);
                g.in[j].push_back(static_cast<int>(i));
            }
        }
    }
    return g;
}

struct HeightFunction {
    int n = 0;
    std::vector<int> values;  // dense over the vertex bounding box
    static constexpr int kUnset = INT32_MIN;

    explicit HeightFunction(int order = 0)
        : n(order),
          values(static_cast<std::size_t>(2 * order + 3) * (2 * order + 3), kUnset) {}

    int side() const { return 2 * n + 3; }
    std::size_t idx(int x, int y) const {
        return static_cast<std::size_t>(x + n + 1) * side() +
               static_cast<std::size_t>(y + n + 1);
    }
    int at(int x, int y) const {
        if (!vertex_in_diamond(n, x, y))
            throw std::invalid_argument("height function: vertex (" + std::to_string(x) +
                                        "," + std::to_string(y) + ") out of range");
        return values[idx(x, y)];
    }
    void set(int x, int y, int v) { values[idx(x, y)] = v; }
    bool operator==(const HeightFunction&) const = default;
};

// The unique normalized height function of a tiling; consistency is checked
// on every edge during construction.
inline HeightFunction height_function(const DominoTiling& t) {
    const int n = t.n;
    const CellMap<int> owner = tiling_cover(t);
    auto cell_owner = [&](int x, int y) {
        return cell_in_diamond(n, x, y) ? owner.at(x, y) : -1;
    };
    HeightFunction eta(n);
    eta.set(-n, 0, 0);
    std::vector<std::pair<int, int>> stack{{-n, 0}};
    const std::array<std::pair<int, int>, 4> dirs{{{1, 0}, {-1, 0}, {0, 1}, {0, -1}}};
    while (!stack.empty()) {
        const auto [x, y] = stack.back();
        stack.pop_back();
        const int hv = eta.at(x, y);
        for (const auto& [dx, dy] : dirs) {
            const int nx = x + dx, ny = y + dy;
            if (!vertex_in_diamond(n, nx, ny)) continue;
            // the two cells flanking the edge
            int ca, cb;
            if (dy == 0) {
                const int ex = std::min(x, nx);
                ca = cell_owner(ex, y);
                cb = cell_owner(ex, y - 1);
            } else {
                const int ey = std::min(y, ny);
                ca = cell_owner(x - 1, ey);
                cb = cell_owner(x, ey);
            }
            const bool crossed = ca != -1 && ca == cb;
            const bool away = edge_points_away(n, x, y, dx, dy);
            // eta(u) - eta(v) is -3 when crossed and +1 otherwise
            const int nv = away ? (crossed ? hv + 3 : hv - 1)
                                : (crossed ? hv - 3 : hv + 1);
            const int cur = eta.values[eta.idx(nx, ny)];
            if (cur == HeightFunction::kUnset) {
                eta.set(nx, ny, nv);
                stack.push_back({nx, ny});
            } else if (cur != nv) {
                throw std::runtime_error("height function: inconsistent edges at (" +
                                         std::to_string(nx) + "," + std::to_string(ny) +
                                         ")");
            }
        }
    }
    return eta;
}

// Inverse of height_function: recovers the tiling from a normalized height
// function, rejecting maps that violate the edge conditions.
inline DominoTiling tiling_from_height(const HeightFunction& eta) {
    const int n = eta.n;
    if (eta.at(-n, 0) != 0)
        throw std::invalid_argument("height function: not normalized at (-n,0)");
    std::vector<Domino> dominoes;
    CellMap<char> covered(n, 0);
    auto cell_in = [&](int x, int y) { return cell_in_diamond(n, x, y); };

    for (int x = -n - 1; x <= n + 1; ++x)
        for (int y = -n - 1; y <= n + 1; ++y) {
            if (!vertex_in_diamond(n, x, y)) continue;
            for (const auto& [dx, dy] :
                 std::array<std::pair<int, int>, 2>{{{1, 0}, {0, 1}}}) {
                const int nx = x + dx, ny = y + dy;
                if (!vertex_in_diamond(n, nx, ny)) continue;
                const bool away = edge_points_away(n, x, y, dx, dy);
                const int diff = away ? eta.at(x, y) - eta.at(nx, ny)
                                      : eta.at(nx, ny) - eta.at(x, y);
                const bool boundary_edge =
                    dy == 0 ? !(cell_in(x, y) && cell_in(x, y - 1))
                            : !(cell_in(x - 1, y) && cell_in(x, y));
                if (diff == 1) continue;  // not crossed
                if (diff != -3 || boundary_edge)
                    throw std::invalid_argument(
                        "height function: edge condition violated at (" +
                        std::to_string(x) + "," + std::to_string(y) + ")+(" +
                        std::to_string(dx) + "," + std::to_string(dy) + ")");
                // crossed edge: the flanking cells form one domino
                Domino d;
                if (dy == 0) d = Domino{x, y - 1, false};   // vertical domino
                else d = Domino{x - 1, y, true};            // horizontal domino
                dominoes.push_back(d);
                for (const Cell c : {Cell{d.x, d.y}, d.second_cell()}) {
                    if (covered.at(c.x, c.y))
                        throw std::invalid_argument("height function: inconsistent cover");
                    covered.at(c.x, c.y) = 1;
                }
            }
        }
    DominoTiling t{n, dominoes};
    tiling_cover(t);  // throws if any cell is missed
    return t;
}

}  // namespace arctic
