#pragma once

// Square standard Young tableaux and the equivalent particle jump process.
//
// Convention: rows are indexed bottom-up (row 1 is the bottom row), entries
// increase to the right and upward. Row k of the tableau lists the jump
// times of particle n+1-k, where particle p starts at position p, jumps one
// step right when the next site is free, stays inside [1, 2n], and ends at
// position n+p after n jumps.

#include <functional>
#include <stdexcept>
#include <vector>

#include "arctic/exact.hpp"
#include "arctic/rng.hpp"

namespace arctic {

struct SquareTableau {
    int n = 0;
    std::vector<std::vector<int>> t;  // t[i][j]: row i+1 (bottom-up), column j+1

    bool operator==(const SquareTableau&) const = default;
};

struct JumpSequence {
    int n = 0;
    std::vector<int> moves;  // moves[m]: particle jumping at time m+1 (1-based ids)

    bool operator==(const JumpSequence&) const = default;
};

inline SquareTableau validate_tableau(const std::vector<std::vector<int>>& t) {
    const int n = static_cast<int>(t.size());
    if (n == 0) throw std::invalid_argument("tableau: empty");
    std::vector<bool> seen(static_cast<std::size_t>(n) * n + 1, false);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(t[i].size()) != n)
            throw std::invalid_argument("tableau: not square");
        for (int j = 0; j < n; ++j) {
            const int v = t[i][j];
            if (v < 1 || v > n * n || seen[v])
                throw std::invalid_argument("tableau: entries must be a permutation of 1..n^2");
            seen[v] = true;
            if (j > 0 && t[i][j - 1] >= v)
                throw std::invalid_argument("tableau: row " + std::to_string(i + 1) +
                                            " not increasing");
            if (i > 0 && t[i - 1][j] >= v)
                throw std::invalid_argument("tableau: column " + std::to_string(j + 1) +
                                            " not increasing");
        }
    }
    return SquareTableau{n, t};
}

// Hook-length count of square tableaux: (n^2)! / prod (i + j - 1).
inline Int count_tableaux(int n) {
    if (n < 1) throw std::invalid_argument("count_tableaux: order must be positive");
    Int denom = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) denom *= Int(i + j - 1);
    return factorial(static_cast<unsigned long>(n) * n) / denom;
}

inline JumpSequence tableau_to_jumps(const SquareTableau& tab) {
    const int n = tab.n;
    std::vector<int> moves(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) moves[tab.t[i][j] - 1] = n - i;  // particle n+1-(i+1)
    return JumpSequence{n, moves};
}

// Replays the move list; throws if any jump violates exclusion or the box.
inline SquareTableau jumps_to_tableau(const JumpSequence& js) {
    const int n = js.n;
    if (static_cast<int>(js.moves.size()) != n * n)
        throw std::invalid_argument("jumps: move list must have n^2 entries");
    std::vector<int> pos(n + 1);
    std::vector<int> jumps_done(n + 1, 0);
    std::vector<bool> occupied(2 * n + 2, false);
    for (int p = 1; p <= n; ++p) {
        pos[p] = p;
        occupied[p] = true;
    }
    std::vector<std::vector<int>> t(n, std::vector<int>(n, 0));
    for (int m = 1; m <= n * n; ++m) {
        const int p = js.moves[m - 1];
        if (p < 1 || p > n)
            throw std::invalid_argument("jumps: bad particle id at time " +
                                        std::to_string(m));
        const int from = pos[p];
        if (from + 1 > 2 * n)
            throw std::invalid_argument("jumps: particle " + std::to_string(p) +
                                        " would leave the box at time " +
                                        std::to_string(m));
        if (occupied[from + 1])
            throw std::invalid_argument("jumps: exclusion violated at time " +
                                        std::to_string(m));
        occupied[from] = false;
        occupied[from + 1] = true;
        pos[p] = from + 1;
        if (jumps_done[p] >= n)
            throw std::invalid_argument("jumps: particle " + std::to_string(p) +
                                        " jumps more than n times");
        t[n - p][jumps_done[p]++] = m;  // row n+1-p, next free column
    }
    for (int p = 1; p <= n; ++p)
        if (pos[p] != n + p)
            throw std::invalid_argument("jumps: particle " + std::to_string(p) +
                                        " did not reach its final position");
    return validate_tableau(t);
}

// First and last times any particle jumped from or to each position
// k = 1..2n (tau[0] unused).
struct TauTimes {
    std::vector<int> first;  // tau-
    std::vector<int> last;   // tau+
};

inline TauTimes tau_all(const JumpSequence& js) {
    const int n = js.n;
    TauTimes tau{std::vector<int>(2 * n + 1, 0), std::vector<int>(2 * n + 1, 0)};
    std::vector<int> pos(n + 1);
    for (int p = 1; p <= n; ++p) pos[p] = p;
    for (int m = 1; m <= n * n; ++m) {
        const int p = js.moves[m - 1];
        const int from = pos[p], to = from + 1;
        for (const int k : {from, to}) {
            if (tau.first[k] == 0) tau.first[k] = m;
            tau.last[k] = m;
        }
        pos[p] = to;
    }
    return tau;
}

inline std::pair<int, int> tau_pm(const JumpSequence& js, int k) {
    if (k < 1 || k > 2 * js.n) throw std::invalid_argument("tau_pm: position out of range");
    const TauTimes tau = tau_all(js);
    return {tau.first[k], tau.last[k]};
}

// Streams all square tableaux of order n by placing 1..n^2 at the growth
// corners in order (every placement keeps a Young-diagram prefix).
inline void for_each_tableau(int n, const std::function<void(const SquareTableau&)>& fn,
                             int max_order = 3) {
    if (n < 1) throw std::invalid_argument("enumerate tableaux: order must be positive");
    if (n > max_order)
        throw std::invalid_argument("enumerate tableaux: order exceeds bound " +
                                    std::to_string(max_order));
    std::vector<std::vector<int>> t(n, std::vector<int>(n, 0));
    std::vector<int> filled(n, 0);  // filled cells per row, bottom-up
    std::function<void(int)> rec = [&](int v) {
        if (v > n * n) {
            fn(SquareTableau{n, t});
            return;
        }
        for (int i = 0; i < n; ++i) {
            if (filled[i] == n) continue;
            if (i > 0 && filled[i - 1] <= filled[i]) continue;  // needs support below
            t[i][filled[i]++] = v;
            rec(v + 1);
            t[i][--filled[i]] = 0;
        }
    };
    rec(1);
}

// Uniform sampling by the hook-walk construction: place n^2, n^2-1, ...
// at corners found by random hook walks on the shrinking diagram.
inline SquareTableau sample_tableau(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("sample_tableau: order must be positive");
    Rng rng(seed ^ 0x5947u);
    std::vector<int> len(n, n);  // row lengths, weakly decreasing upward
    std::vector<std::vector<int>> t(n, std::vector<int>(n, 0));
    int cells = n * n;
    for (int v = n * n; v >= 1; --v) {
        // uniform cell of the current diagram
        std::uint64_t pick = rng.below(static_cast<std::uint64_t>(cells));
        int i = 0;
        while (pick >= static_cast<std::uint64_t>(len[i])) {
            pick -= static_cast<std::uint64_t>(len[i]);
            ++i;
        }
        int j = static_cast<int>(pick);
        // hook walk to a corner: arm to the right, leg upward
        for (;;) {
            int leg = 0;
            while (i + leg + 1 < n && len[i + leg + 1] > j) ++leg;
            const int arm = len[i] - 1 - j;
            if (arm == 0 && leg == 0) break;
            std::uint64_t step = rng.below(static_cast<std::uint64_t>(arm + leg));
            if (step < static_cast<std::uint64_t>(arm))
                j += 1 + static_cast<int>(step);
            else
                i += 1 + static_cast<int>(step - static_cast<std::uint64_t>(arm));
        }
        t[i][j] = v;
        --len[i];
        --cells;
    }
    return validate_tableau(t);
}

}  // namespace arctic
