// Acceptance suite: one line per criterion, every tolerance pinned in code.
// Exit status 0 only if all criteria pass.

#include <chrono>
#include <cstdio>
#include <map>
#include <vector>

#include "arctic/experiments.hpp"
#include "arctic/operator_formula.hpp"
#include "arctic/singular.hpp"

using namespace arctic;

namespace {

int failures = 0;

struct Criterion {
    int id;
    const char* label;
    double seconds_budget;
    std::chrono::steady_clock::time_point start;
    bool ok = true;
    std::string detail;

    Criterion(int id_, const char* label_, double budget)
        : id(id_), label(label_), seconds_budget(budget),
          start(std::chrono::steady_clock::now()) {}

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }

    void finish() {
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        if (secs > seconds_budget && ok) {
            ok = false;
            detail = "runtime " + std::to_string(secs) + "s over budget";
        }
        std::printf("[%s] criterion %2d: %-58s (%.2fs)\n", ok ? "PASS" : "FAIL", id,
                    label, secs);
        if (!ok) {
            std::printf("       %s\n", detail.c_str());
            ++failures;
        }
        std::fflush(stdout);
    }
};

}  // namespace

int main() {
    {
        Criterion c(1, "tiling counts 2^{n(n+1)/2} for n=1..5", 60.0);
        const long expected[] = {2, 8, 64, 1024, 32768};
        for (int n = 1; n <= 5; ++n) {
            long count = 0;
            for_each_tiling(n, [&](const DominoTiling&) { ++count; });
            c.require(count == expected[n - 1],
                      "n=" + std::to_string(n) + " gave " + std::to_string(count));
        }
        c.finish();
    }
    {
        Criterion c(2, "two-enumeration sums to the tiling count for n<=5", 30.0);
        for (int n = 1; n <= 5; ++n) {
            Int total = 0;
            for_each_asm(n, [&](const Asm& a) { total += pow2(n_plus(a)); });
            c.require(total == pow2(choose2(n + 1)), "n=" + std::to_string(n));
        }
        c.finish();
    }
    {
        Criterion c(3, "exact row law equals the enumerated law for n<=4", 30.0);
        for (int n = 1; n <= 4; ++n) {
            for (int k = 1; k <= n; ++k) {
                std::map<std::vector<int>, Rat> law;
                for_each_asm(n, [&](const Asm& m) {
                    law[row_ascents(height_matrix(m), k)] += domino_weight(m);
                });
                Rat total = 0;
                for (auto& [xs, p] : law) {
                    p.canonicalize();
                    c.require(p == row_law_probability(n, k, xs),
                              "n=" + std::to_string(n) + " k=" + std::to_string(k));
                    total += p;
                }
                c.require(total == Rat(1), "law does not sum to 1");
            }
        }
        c.finish();
    }
    {
        Criterion c(4, "tiling <-> compatible pair bijection, 2^{N+} counts, n<=3", 30.0);
        for (int n = 1; n <= 3; ++n) {
            std::map<std::pair<Grid, Grid>, int> seen;
            long tilings = 0;
            for (const auto& t : enumerate_tilings(n)) {
                ++tilings;
                const auto [a, b] = compatible_pair(height_function(t));
                c.require(is_compatible(a, b), "extracted pair incompatible");
                ++seen[{a.m, b.m}];
                auto lhs = tiling_from_pair(a, b).dominoes;
                auto rhs = t.dominoes;
                std::sort(lhs.begin(), lhs.end());
                std::sort(rhs.begin(), rhs.end());
                c.require(lhs == rhs, "pair round trip mismatch");
            }
            c.require(static_cast<long>(seen.size()) == tilings, "map not injective");
            long compatible_pairs = 0;
            const auto bs = enumerate_asms(n + 1);
            for (const Asm& a : enumerate_asms(n)) {
                Int count = 0;
                for (const Asm& b : bs)
                    if (is_compatible(a, b)) ++count;
                c.require(count == pow2(n_plus(a)), "2^{N+} count off");
                compatible_pairs += count.get_si();
            }
            c.require(compatible_pairs == tilings, "pair count != tiling count");
        }
        c.finish();
    }
    {
        Criterion c(5, "exact rate anchor at n=2: estimate equals 1/2", 1.0);
        const Profile f = embed_sequence({0, 0, 1});
        const double estimate = std::exp(-4.0 * (rate_I(f) + theta(0.5)));
        Rat exact = 0;
        for_each_asm(2, [&](const Asm& a) {
            const HeightMatrix h = height_matrix(a);
            if (h.h[1] == std::vector<int>{0, 0, 1}) exact += domino_weight(a);
        });
        c.require(exact == Rat(1, 2), "enumerated probability is not 1/2");
        c.require(std::fabs(estimate - 0.5) < 1e-10,
                  "estimate off by " + std::to_string(std::fabs(estimate - 0.5)));
        c.finish();
    }
    {
        Criterion c(6, "|I(f*_y) + theta(y)| < 2e-3 for y = 0.05..0.95", 60.0);
        for (int i = 1; i <= 19; ++i) {
            const double y = 0.05 * i;
            const double gap = std::fabs(rate_I(discretize_f_star(y, 1500)) + theta(y));
            c.require(gap < 2e-3, "y=" + std::to_string(y) + " gap=" + std::to_string(gap));
        }
        c.finish();
    }
    {
        Criterion c(7, "slackness: W ~ 0 inside, W >= 0 outside, dW/dy closed", 120.0);
        for (double y : {0.1, 0.2, 0.3, 0.4}) {
            const double beta = beta_of(y);
            const double a = 0.5 * (1.0 - beta), b = 0.5 * (1.0 + beta);
            for (int i = 1; i <= 9; ++i) {
                const double s = a + (b - a) * i / 10.0;
                c.require(std::fabs(W(s, y)) < 1e-4,
                          "inside: y=" + std::to_string(y) + " s=" + std::to_string(s));
            }
            for (double frac : {0.2, 0.5, 0.8}) {
                if (a > 0.0)
                    c.require(W(a * frac, y) > -1e-4, "outside left y=" + std::to_string(y));
                if (b < 1.0)
                    c.require(W(b + (1.0 - b) * frac, y) > -1e-4,
                              "outside right y=" + std::to_string(y));
            }
        }
        const std::pair<double, double> fd_cases[] = {
            {0.75, 0.05}, {0.8, 0.05}, {0.9, 0.05}, {0.85, 0.1}, {0.9, 0.1}, {0.92, 0.15}};
        for (const auto& [s, y] : fd_cases) {
            const double h = 1e-4;
            const double fd = (W(s, y + h) - W(s, y - h)) / (2.0 * h);
            c.require(std::fabs(dW_dy_closed(s, y) - fd) < 1e-3,
                      "dW/dy mismatch at s=" + std::to_string(s));
        }
        c.finish();
    }
    {
        Criterion c(8, "airfoil: forward transform of h reproduces p within 1e-3", 60.0);
        for (double y : {0.2, 0.3}) {
            double sup = 0.0;
            for (double v = -0.95; v <= 0.9501; v += 0.05) {
                const double fwd =
                    forward_hilbert([&](double u) { return airfoil_h_closed(u, y); }, v);
                sup = std::max(sup, std::fabs(fwd - airfoil_p_closed(v, y)));
            }
            c.require(sup < 1e-3, "y=" + std::to_string(y) + " sup=" + std::to_string(sup));
        }
        c.finish();
    }
    {
        Criterion c(9, "operator formula == brute force (k<=3 on 1..6, k=4 on 1..5)", 120.0);
        std::vector<int> xs;
        std::function<void(int, int, int)> rec = [&](int next, int kmax, int vmax) {
            if (!xs.empty() && static_cast<int>(xs.size()) <= kmax &&
                (static_cast<int>(xs.size()) < 4 || vmax <= 5))
                c.require(alpha_operator_formula(xs) == alpha_bruteforce(xs, 5),
                          "mismatch");
            if (static_cast<int>(xs.size()) == kmax) return;
            for (int t = next; t <= vmax; ++t) {
                xs.push_back(t);
                rec(t + 1, kmax, vmax);
                xs.pop_back();
            }
        };
        rec(1, 3, 6);
        xs.clear();
        rec(1, 4, 5);
        c.finish();
    }
    {
        Criterion c(10, "shuffling uniformity: chi-square p > 1e-3 (n=2,3)", 120.0);
        auto uniformity = [&](int n, int samples, std::uint64_t seed) {
            std::map<std::vector<Domino>, long> counts;
            for (const auto& t : enumerate_tilings(n)) {
                auto key = t.dominoes;
                std::sort(key.begin(), key.end());
                counts[key] = 0;
            }
            const Rng master(seed);
            for (int i = 0; i < samples; ++i) {
                Rng derived = master.derive(static_cast<std::uint64_t>(i));
                auto key = sample_tiling(n, derived.next()).dominoes;
                std::sort(key.begin(), key.end());
                auto it = counts.find(key);
                if (it == counts.end()) return -1.0;  // invalid tiling sampled
                ++it->second;
            }
            std::vector<long> observed;
            for (const auto& [k, v] : counts) observed.push_back(v);
            return chi_square_pvalue(chi_square_uniform(observed),
                                     static_cast<int>(observed.size()) - 1);
        };
        const double p2 = uniformity(2, 100000, 11);
        const double p3 = uniformity(3, 1000000, 12);
        c.require(p2 > 1e-3, "n=2 p=" + std::to_string(p2));
        c.require(p3 > 1e-3, "n=3 p=" + std::to_string(p3));
        c.finish();
    }
    {
        Criterion c(11, "convergence trends: heights, arctic radius, tableaux", 900.0);
        const ExperimentReport tiling =
            tiling_shape_convergence({32, 64, 128}, 100, 2026);
        c.require(tiling.passed(), "tiling-shape medians not decreasing");
        const ExperimentReport radius = arctic_radius(128, 100, 2027);
        c.require(radius.passed(), "arctic radius estimate off target");
        const ExperimentReport syt = syt_arctic_convergence({10, 20, 40}, 100, 2028);
        c.require(syt.passed(), "tableau arctic deviations not decreasing");
        c.finish();
    }
    {
        Criterion c(12, "bijection suites exact on exhaustive small domains", 60.0);
        for (int n = 1; n <= 4; ++n) {
            for_each_asm(n, [&](const Asm& m) {
                c.require(asm_from_height(height_matrix(m)) == m, "asm/height");
                const MonotoneTriangle t = to_monotone_triangle(m);
                c.require(from_monotone_triangle(t) == m, "asm/triangle");
                c.require(dual_triangle(dual_triangle(t)) == t, "dual involution");
            });
        }
        for (int n = 1; n <= 3; ++n) {
            for (const auto& t : enumerate_tilings(n)) {
                auto rhs = t.dominoes;
                std::sort(rhs.begin(), rhs.end());
                auto h = tiling_from_height(height_function(t)).dominoes;
                std::sort(h.begin(), h.end());
                c.require(h == rhs, "tiling/height");
                const auto [a, b] = compatible_pair(height_function(t));
                auto p = tiling_from_pair(a, b).dominoes;
                std::sort(p.begin(), p.end());
                c.require(p == rhs, "tiling/pair");
            }
            for_each_tableau(n, [&](const SquareTableau& t) {
                c.require(jumps_to_tableau(tableau_to_jumps(t)) == t, "tableau/jumps");
            });
        }
        c.finish();
    }

    if (failures == 0) {
        std::printf("all criteria passed\n");
        return 0;
    }
    std::printf("%d criteria failed\n", failures);
    return 1;
}
