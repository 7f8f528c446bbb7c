#pragma once

// Monotone triangles: strictly increasing rows with weak interlacing
// between consecutive rows. A complete triangle of order n has bottom row
// (1,...,n); those are in bijection with ASMs of order n, row k of the
// triangle being the ascent set of row k of the height matrix.

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <vector>

#include "arctic/asm_matrix.hpp"
#include "arctic/exact.hpp"

namespace arctic {

struct MonotoneTriangle {
    std::vector<std::vector<int>> rows;  // rows[i] has i+1 entries

    int order() const { return static_cast<int>(rows.size()); }
    bool operator==(const MonotoneTriangle&) const = default;
};

inline MonotoneTriangle validate_triangle(const std::vector<std::vector<int>>& rows) {
    const int k = static_cast<int>(rows.size());
    if (k == 0) throw std::invalid_argument("triangle: empty");
    for (int i = 0; i < k; ++i) {
        if (static_cast<int>(rows[i].size()) != i + 1)
            throw std::invalid_argument("triangle: row " + std::to_string(i + 1) +
                                        " has wrong length");
        for (int j = 0; j + 1 <= i; ++j)
            if (rows[i][j] >= rows[i][j + 1])
                throw std::invalid_argument("triangle: row " + std::to_string(i + 1) +
                                            " not strictly increasing");
    }
    for (int i = 1; i < k; ++i)
        for (int j = 0; j < i; ++j)
            if (!(rows[i][j] <= rows[i - 1][j] && rows[i - 1][j] <= rows[i][j + 1]))
                throw std::invalid_argument("triangle: interlacing violated between rows " +
                                            std::to_string(i) + " and " +
                                            std::to_string(i + 1));
    return MonotoneTriangle{rows};
}

inline bool is_complete(const MonotoneTriangle& t) {
    const auto& last = t.rows.back();
    for (int j = 0; j < t.order(); ++j)
        if (last[j] != j + 1) return false;
    return true;
}

inline MonotoneTriangle to_monotone_triangle(const Asm& a) {
    const HeightMatrix hm = height_matrix(a);
    std::vector<std::vector<int>> rows(a.n);
    for (int k = 1; k <= a.n; ++k) rows[k - 1] = row_ascents(hm, k);
    return MonotoneTriangle{rows};
}

inline Asm from_monotone_triangle(const MonotoneTriangle& t) {
    validate_triangle(t.rows);
    if (!is_complete(t))
        throw std::invalid_argument("triangle: not complete (bottom row must be 1..n)");
    const int n = t.order();
    Grid h(n + 1, std::vector<int>(n + 1, 0));
    for (int k = 1; k <= n; ++k) {
        auto row = height_row_from_ascents(n, t.rows[k - 1]);
        for (int j = 0; j <= n; ++j) h[k][j] = row[j];
    }
    return asm_from_height(validate_height(h));
}

// Row n-k of the dual lists the complement of row k in {1..n}; the dual is
// the triangle of the vertically reflected ASM, and an involution.
inline MonotoneTriangle dual_triangle(const MonotoneTriangle& t) {
    validate_triangle(t.rows);
    if (!is_complete(t))
        throw std::invalid_argument("dual_triangle: triangle must be complete");
    const int n = t.order();
    std::vector<std::vector<int>> rows(n);
    rows[n - 1] = t.rows[n - 1];
    for (int k = 1; k < n; ++k) {
        std::vector<bool> present(n + 1, false);
        for (int v : t.rows[k - 1]) present[v] = true;
        std::vector<int>& out = rows[n - k - 1];
        for (int v = 1; v <= n; ++v)
            if (!present[v]) out.push_back(v);
    }
    return MonotoneTriangle{rows};
}

// Number of entries not appearing in the row above (top entry counts).
// Equals N+ of the corresponding ASM when the triangle is complete.
inline int n_plus_triangle(const MonotoneTriangle& t) {
    int c = 0;
    for (int i = 0; i < t.order(); ++i) {
        for (int v : t.rows[i]) {
            bool above = i > 0 && std::binary_search(t.rows[i - 1].begin(),
                                                     t.rows[i - 1].end(), v);
            c += !above;
        }
    }
    return c;
}

// Calls fn for every strictly increasing row z of length |xs|-1 interlacing
// xs (x_j <= z_j <= x_{j+1}), in lexicographic order.
inline void for_each_interlacing(const std::vector<int>& xs,
                                 const std::function<void(const std::vector<int>&)>& fn) {
    const int k = static_cast<int>(xs.size());
    if (k <= 1) return;
    std::vector<int> z(k - 1);
    std::function<void(int)> rec = [&](int j) {
        if (j == k - 1) {
            fn(z);
            return;
        }
        int lo = xs[j];
        if (j > 0) lo = std::max(lo, z[j - 1] + 1);
        for (int v = lo; v <= xs[j + 1]; ++v) {
            z[j] = v;
            rec(j + 1);
        }
    };
    rec(0);
}

// Sum of 2^{N+(T)} over all monotone triangles with the given bottom row,
// by explicit recursion over interlacing rows.
inline Int two_enumeration_bruteforce(const std::vector<int>& xs, int max_order = 7) {
    const int k = static_cast<int>(xs.size());
    if (k < 1) throw std::invalid_argument("two_enumeration: empty bottom row");
    if (k > max_order)
        throw std::invalid_argument("two_enumeration: order exceeds bound " +
                                    std::to_string(max_order));
    for (int j = 0; j + 1 < k; ++j)
        if (xs[j] >= xs[j + 1])
            throw std::invalid_argument("two_enumeration: bottom row must increase");
    if (k == 1) return Int(2);
    Int total = 0;
    for_each_interlacing(xs, [&](const std::vector<int>& z) {
        int fresh = 0;  // entries of xs not present in the row above
        for (int v : xs)
            fresh += !std::binary_search(z.begin(), z.end(), v);
        total += pow2(fresh) * two_enumeration_bruteforce(z, max_order);
    });
    return total;
}

// Closed form 2^{binom(k+1,2)} prod_{i<j} (x_j-x_i)/(j-i); always integral.
inline Int two_enumeration_closed(const std::vector<int>& xs) {
    const int k = static_cast<int>(xs.size());
    if (k < 1) throw std::invalid_argument("two_enumeration: empty bottom row");
    Rat r(pow2(choose2(k + 1)));
    r *= Rat(vandermonde(xs), vandermonde_staircase(k));
    r.canonicalize();
    if (r.get_den() != 1)
        throw std::runtime_error("two_enumeration_closed: non-integral value");
    return r.get_num();
}

// Number of monotone triangles with the given bottom row.
inline Int alpha_bruteforce(const std::vector<int>& xs, int max_order = 5) {
    const int k = static_cast<int>(xs.size());
    if (k < 1) throw std::invalid_argument("alpha: empty bottom row");
    if (k > max_order)
        throw std::invalid_argument("alpha: order exceeds bound " +
                                    std::to_string(max_order));
    for (int j = 0; j + 1 < k; ++j)
        if (xs[j] >= xs[j + 1])
            throw std::invalid_argument("alpha: bottom row must increase");
    if (k == 1) return Int(1);
    Int total = 0;
    for_each_interlacing(xs,
                         [&](const std::vector<int>& z) { total += alpha_bruteforce(z, max_order); });
    return total;
}

// Streams every complete monotone triangle of order n in lexicographic
// order on the concatenated rows (top row first). Via the bijection this
// fixes the enumeration order of ASMs. Rows are built from the top down;
// entry j (0-based) of row k must lie in [j+1, n-k+j+1] to be completable
// to the fixed bottom row (1..n).
inline void for_each_complete_triangle(
    int n, const std::function<void(const MonotoneTriangle&)>& fn, int max_order = 6) {
    if (n < 1) throw std::invalid_argument("enumerate: order must be positive");
    if (n > max_order)
        throw std::invalid_argument("enumerate: order exceeds bound " +
                                    std::to_string(max_order));
    std::vector<std::vector<int>> rows(n);
    for (int j = 0; j < n; ++j) rows[n - 1].push_back(j + 1);

    std::function<void(int)> build = [&](int k) {
        if (k == n) {
            fn(validate_triangle(rows));
            return;
        }
        std::vector<int>& row = rows[k - 1];
        row.assign(k, 0);
        std::function<void(int)> pick = [&](int j) {
            if (j == k) {
                build(k + 1);
                return;
            }
            int lo = j + 1;
            int hi = n - k + j + 1;
            if (j > 0) lo = std::max(lo, row[j - 1] + 1);
            if (k > 1) {  // interlace with the row above
                if (j < k - 1) hi = std::min(hi, rows[k - 2][j]);
                if (j > 0) lo = std::max(lo, rows[k - 2][j - 1]);
            }
            for (int v = lo; v <= hi; ++v) {
                row[j] = v;
                pick(j + 1);
            }
        };
        pick(0);
    };
    build(1);
}

inline void for_each_asm(int n, const std::function<void(const Asm&)>& fn,
                         int max_order = 6) {
    for_each_complete_triangle(
        n, [&](const MonotoneTriangle& t) { fn(from_monotone_triangle(t)); }, max_order);
}

inline std::vector<Asm> enumerate_asms(int n, int max_order = 6) {
    std::vector<Asm> out;
    for_each_asm(n, [&](const Asm& a) { out.push_back(a); }, max_order);
    return out;
}

inline Int count_asms(int n, int max_order = 6) {
    Int c = 0;
    for_each_complete_triangle(n, [&](const MonotoneTriangle&) { ++c; }, max_order);
    return c;
}

}  // namespace arctic
