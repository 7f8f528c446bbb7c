#pragma once

// Desk-scale experiment drivers. Every report is a pure function of
// (parameters, master seed): per-sample seeds are derived through the
// counter-based rng, samples may run in parallel, and aggregation happens
// in sample order. Re-running emits byte-identical CSV.

#include <atomic>
#include <cmath>
#include <cstdio>
#include <functional>
#include <future>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "arctic/exact.hpp"
#include "arctic/frozen.hpp"
#include "arctic/pairing.hpp"
#include "arctic/profile.hpp"
#include "arctic/rate.hpp"
#include "arctic/row_law.hpp"
#include "arctic/shape.hpp"
#include "arctic/shuffle.hpp"
#include "arctic/stats.hpp"
#include "arctic/tableau.hpp"

namespace arctic {

struct ExperimentReport {
    std::string id;
    std::vector<std::pair<std::string, std::string>> params;   // includes thresholds
    std::vector<std::string> columns;                          // per-sample header
    std::vector<std::vector<double>> samples;                  // one row per sample
    std::vector<std::pair<std::string, double>> summary;
    std::vector<std::pair<std::string, bool>> checks;

    bool passed() const {
        for (const auto& [name, ok] : checks)
            if (!ok) return false;
        return true;
    }

    std::string to_csv() const {
        std::string out = "# experiment=" + id + "\n";
        for (const auto& [k, v] : params) out += "# " + k + "=" + v + "\n";
        for (std::size_t c = 0; c < columns.size(); ++c)
            out += (c ? "," : "") + columns[c];
        out += "\n";
        char buf[64];
        for (const auto& row : samples) {
            for (std::size_t c = 0; c < row.size(); ++c) {
                std::snprintf(buf, sizeof(buf), "%.10g", row[c]);
                out += (c ? "," : "") + std::string(buf);
            }
            out += "\n";
        }
        for (const auto& [k, v] : summary) {
            std::snprintf(buf, sizeof(buf), "%.10g", v);
            out += "# summary " + k + "=" + std::string(buf) + "\n";
        }
        for (const auto& [k, ok] : checks)
            out += "# check " + k + "=" + (ok ? std::string("pass") : std::string("fail")) +
                   "\n";
        return out;
    }

    std::string to_json_text() const {
        std::ostringstream os;
        os << "{\"experiment\":\"" << id << "\",\"params\":{";
        for (std::size_t i = 0; i < params.size(); ++i)
            os << (i ? "," : "") << "\"" << params[i].first << "\":\""
               << params[i].second << "\"";
        os << "},\"summary\":{";
        char buf[64];
        for (std::size_t i = 0; i < summary.size(); ++i) {
            std::snprintf(buf, sizeof(buf), "%.10g", summary[i].second);
            os << (i ? "," : "") << "\"" << summary[i].first << "\":" << buf;
        }
        os << "},\"checks\":{";
        for (std::size_t i = 0; i < checks.size(); ++i)
            os << (i ? "," : "") << "\"" << checks[i].first << "\":"
               << (checks[i].second ? "true" : "false");
        os << "}}";
        return os.str();
    }
};

// Runs fn(sample_index, derived_seed) over a worker pool; results land in
// sample order regardless of scheduling.
template <typename T>
inline std::vector<T> parallel_samples(int count, std::uint64_t master_seed,
                                       const std::function<T(int, std::uint64_t)>& fn) {
    const Rng master(master_seed);
    std::vector<T> out(static_cast<std::size_t>(count));
    const unsigned workers =
        std::max(1u, std::min(std::thread::hardware_concurrency(), 8u));
    std::vector<std::future<void>> futs;
    std::atomic<int> next{0};
    for (unsigned w = 0; w < workers; ++w)
        futs.push_back(std::async(std::launch::async, [&]() {
            for (;;) {
                const int i = next.fetch_add(1);
                if (i >= count) return;
                Rng derived = master.derive(static_cast<std::uint64_t>(i));
                out[static_cast<std::size_t>(i)] = fn(i, derived.next());
            }
        }));
    for (auto& f : futs) f.get();
    return out;
}

struct LdpRow {
    std::vector<int> u;       // the height-matrix row
    Rat exact;                // enumerated probability
    double estimate;          // exp(-n^2 (I + theta))
    double normalized_error;  // |log(exact)/n^2 + I + theta|
};

struct LdpTable {
    int n = 0, k = 0;
    std::vector<LdpRow> rows;
    double max_normalized_error = 0.0;
};

// Exact row probabilities by enumeration next to the rate-functional
// estimate, for every admissible row.
inline LdpTable ldp_row_check(int n, int k, int max_order = 6) {
    if (k < 0 || k > n) throw std::invalid_argument("ldp_row_check: k out of range");
    LdpTable table;
    table.n = n;
    table.k = k;
    std::map<std::vector<int>, Rat> exact;
    for_each_asm(n, [&](const Asm& a) {
        const HeightMatrix h = height_matrix(a);
        std::vector<int> u(h.h[k].begin(), h.h[k].end());
        exact[u] += domino_weight(a);
    }, max_order);
    for (auto& [u, p] : exact) {
        p.canonicalize();
        LdpRow row;
        row.u = u;
        row.exact = p;
        const double rate = rate_I(embed_sequence(u)) + theta(static_cast<double>(k) / n);
        row.estimate = std::exp(-static_cast<double>(n) * n * rate);
        row.normalized_error =
            std::fabs(std::log(p.get_d()) / (static_cast<double>(n) * n) + rate);
        table.max_normalized_error =
            std::max(table.max_normalized_error, row.normalized_error);
        table.rows.push_back(std::move(row));
    }
    return table;
}

inline std::string ldp_table_csv(const LdpTable& t) {
    std::string out = "# experiment=ldp-row\n# n=" + std::to_string(t.n) +
                      "\n# k=" + std::to_string(t.k) + "\n";
    out += "u,exact,estimate,normalized_error\n";
    char buf[64];
    for (const LdpRow& r : t.rows) {
        std::string u;
        for (std::size_t i = 0; i < r.u.size(); ++i)
            u += (i ? " " : "") + std::to_string(r.u[i]);
        out += "\"" + u + "\"," + r.exact.get_str();
        std::snprintf(buf, sizeof(buf), ",%.12g,%.12g\n", r.estimate,
                      r.normalized_error);
        out += buf;
    }
    std::snprintf(buf, sizeof(buf), "%.12g", t.max_normalized_error);
    out += "# summary max_normalized_error=" + std::string(buf) + "\n";
    return out;
}

// Sup-norm distance between the sampled height matrix (A-marginal of a
// uniform tiling) and the limit surface.
inline double asm_shape_distance(int n, std::uint64_t seed) {
    const DominoTiling t = sample_tiling(n, seed);
    const auto [a, b] = compatible_pair(height_function(t));
    const HeightMatrix h = height_matrix(a);
    double worst = 0.0;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
            const double limit = f_star(static_cast<double>(j) / n,
                                        static_cast<double>(i) / n);
            worst = std::max(worst,
                             std::fabs(static_cast<double>(h.h[i][j]) / n - limit));
        }
    return worst;
}

// Same statistic through the symmetrized matrix against G.
inline double sym_shape_distance(int n, std::uint64_t seed) {
    const DominoTiling t = sample_tiling(n, seed);
    const auto [a, b] = compatible_pair(height_function(t));
    const SymHeightMatrix s = sym_height(height_matrix(a));
    double worst = 0.0;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
            const double limit = G(static_cast<double>(j) / n,
                                   static_cast<double>(i) / n);
            worst = std::max(worst,
                             std::fabs(static_cast<double>(s.h[i][j]) / n - limit));
        }
    return worst;
}

// Sup-norm distance between the tiling height function and R. Vertices on
// the outer rim scale to |u|+|v| = (n+1)/n; they are clamped radially onto
// the limiting diamond (an O(1/n) perturbation).
inline double tiling_shape_distance(int n, std::uint64_t seed) {
    const DominoTiling t = sample_tiling(n, seed);
    const HeightFunction eta = height_function(t);
    double worst = 0.0;
    for (int x = -n - 1; x <= n + 1; ++x)
        for (int y = -n - 1; y <= n + 1; ++y) {
            if (!vertex_in_diamond(n, x, y)) continue;
            double u = static_cast<double>(x) / n, v = static_cast<double>(y) / n;
            const double norm = std::fabs(u) + std::fabs(v);
            if (norm > 1.0) {
                u /= norm;
                v /= norm;
            }
            worst = std::max(worst, std::fabs(eta.at(x, y) / static_cast<double>(n) -
                                              R(u, v)));
        }
    return worst;
}

inline ExperimentReport shape_convergence_report(
    const std::string& id, const std::vector<int>& orders, int samples,
    std::uint64_t seed, const std::function<double(int, std::uint64_t)>& distance) {
    ExperimentReport rep;
    rep.id = id;
    {
        std::string ns;
        for (std::size_t i = 0; i < orders.size(); ++i)
            ns += (i ? " " : "") + std::to_string(orders[i]);
        rep.params = {{"orders", ns},
                      {"samples", std::to_string(samples)},
                      {"seed", std::to_string(seed)},
                      {"criterion", "median strictly decreasing in n"}};
    }
    rep.columns = {"n", "sample", "sup_distance"};
    std::vector<double> medians;
    for (const int n : orders) {
        const auto vals = parallel_samples<double>(
            samples, seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(n)),
            [&](int, std::uint64_t s) { return distance(n, s); });
        std::vector<double> copy = vals;
        for (int i = 0; i < samples; ++i)
            rep.samples.push_back({static_cast<double>(n), static_cast<double>(i),
                                   vals[static_cast<std::size_t>(i)]});
        const double med = median(copy);
        medians.push_back(med);
        rep.summary.push_back({"median_n" + std::to_string(n), med});
    }
    bool decreasing = true;
    for (std::size_t i = 0; i + 1 < medians.size(); ++i)
        decreasing = decreasing && medians[i + 1] < medians[i];
    rep.checks.push_back({"median_decreasing", decreasing});
    return rep;
}

inline ExperimentReport asm_shape_convergence(const std::vector<int>& orders,
                                              int samples, std::uint64_t seed) {
    return shape_convergence_report("asm-shape", orders, samples, seed,
                                    asm_shape_distance);
}

inline ExperimentReport tiling_shape_convergence(const std::vector<int>& orders,
                                                 int samples, std::uint64_t seed) {
    return shape_convergence_report("tiling-shape", orders, samples, seed,
                                    tiling_shape_distance);
}

// Inner/outer radius estimates of the temperate region from the frozen
// mask. r_in is maximal with "every cell of scaled radius > r_in + eps is
// polar", r_out is minimal with "every polar cell lies outside r_out - eps";
// the eps shifts cancel in the bracket midpoint, which is the radius
// estimate that concentrates near 1/sqrt(2).
struct RadiusEstimate {
    double r_in = 0.0;
    double r_out = 0.0;
    double estimate = 0.0;  // midpoint of [r_in, r_out]
};

inline RadiusEstimate arctic_radius_sample(int n, std::uint64_t seed, double eps) {
    const DominoTiling t = sample_tiling(n, seed);
    const FrozenMask mask = frozen_mask(t);
    double max_temperate = 0.0;   // max scaled radius over temperate cells
    double min_polar = 10.0;      // min scaled radius over polar cells
    for (std::size_t d = 0; d < t.dominoes.size(); ++d) {
        const Domino& dom = t.dominoes[d];
        for (const Cell c : {Cell{dom.x, dom.y}, dom.second_cell()}) {
            const double r = std::hypot(c.x + 0.5, c.y + 0.5) / n;
            if (mask.polar(d))
                min_polar = std::min(min_polar, r);
            else
                max_temperate = std::max(max_temperate, r);
        }
    }
    const double r_in = max_temperate - eps;
    const double r_out = std::min(min_polar + eps, 1.0);
    return {r_in, r_out, 0.5 * (r_in + r_out)};
}

inline ExperimentReport arctic_radius(int n, int samples, std::uint64_t seed,
                                      double eps = -1.0) {
    if (eps < 0.0) eps = 2.0 / std::sqrt(static_cast<double>(n));
    ExperimentReport rep;
    rep.id = "arctic-radius";
    char eps_text[32];
    std::snprintf(eps_text, sizeof(eps_text), "%.6g", eps);
    rep.params = {{"n", std::to_string(n)},
                  {"samples", std::to_string(samples)},
                  {"seed", std::to_string(seed)},
                  {"eps", eps_text},
                  {"criterion", "median radius estimate within 0.05 of 1/sqrt(2)"}};
    rep.columns = {"sample", "r_in", "r_out", "estimate"};
    const auto vals = parallel_samples<RadiusEstimate>(
        samples, seed, [&](int, std::uint64_t s) {
            return arctic_radius_sample(n, s, eps);
        });
    std::vector<double> rin, rout, est;
    for (int i = 0; i < samples; ++i) {
        rep.samples.push_back({static_cast<double>(i), vals[i].r_in, vals[i].r_out,
                               vals[i].estimate});
        rin.push_back(vals[i].r_in);
        rout.push_back(vals[i].r_out);
        est.push_back(vals[i].estimate);
    }
    const double target = 1.0 / std::sqrt(2.0);
    const double med_in = median(rin), med_out = median(rout);
    const double med_est = median(est);
    rep.summary = {{"median_r_in", med_in},
                   {"median_r_out", med_out},
                   {"median_estimate", med_est},
                   {"target", target}};
    rep.checks.push_back({"estimate_near_target", std::fabs(med_est - target) < 0.05});
    rep.checks.push_back({"bracket_ordered", med_in <= med_out});
    return rep;
}

// Max deviations of the scaled first/last event times from the two arctic
// curves, per sampled tableau.
struct ArcticDeviation {
    double dev_minus = 0.0;  // max_k |tau-/n^2 - phi-(k/2n)|
    double dev_plus = 0.0;   // max_k |tau+/n^2 - phi+(k/2n)|
};

inline ArcticDeviation syt_arctic_deviation(int n, std::uint64_t seed) {
    const SquareTableau tab = sample_tableau(n, seed);
    const TauTimes tau = tau_all(tableau_to_jumps(tab));
    ArcticDeviation dev;
    const double n2 = static_cast<double>(n) * n;
    for (int k = 1; k <= 2 * n; ++k) {
        const auto [lo, hi] = phi_pm(static_cast<double>(k) / (2 * n));
        dev.dev_minus = std::max(dev.dev_minus, std::fabs(tau.first[k] / n2 - lo));
        dev.dev_plus = std::max(dev.dev_plus, std::fabs(tau.last[k] / n2 - hi));
    }
    return dev;
}

inline double syt_arctic_distance(int n, std::uint64_t seed) {
    const ArcticDeviation dev = syt_arctic_deviation(n, seed);
    return std::max(dev.dev_minus, dev.dev_plus);
}

// Empirical distribution of the two deviation maxima at a single order.
inline ExperimentReport arctic_check(int n, int samples, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("arctic_check: order must be at least 2");
    ExperimentReport rep;
    rep.id = "syt-arctic-check";
    rep.params = {{"n", std::to_string(n)},
                  {"samples", std::to_string(samples)},
                  {"seed", std::to_string(seed)},
                  {"criterion", "deviation quantiles reported; medians below 1"}};
    rep.columns = {"sample", "dev_minus", "dev_plus"};
    const auto vals = parallel_samples<ArcticDeviation>(
        samples, seed,
        [&](int, std::uint64_t s) { return syt_arctic_deviation(n, s); });
    std::vector<double> dm, dp;
    for (int i = 0; i < samples; ++i) {
        rep.samples.push_back({static_cast<double>(i), vals[i].dev_minus,
                               vals[i].dev_plus});
        dm.push_back(vals[i].dev_minus);
        dp.push_back(vals[i].dev_plus);
    }
    rep.summary = {{"median_dev_minus", median(dm)},
                   {"median_dev_plus", median(dp)},
                   {"q90_dev_minus", quantile(dm, 0.9)},
                   {"q90_dev_plus", quantile(dp, 0.9)}};
    rep.checks.push_back({"deviations_bounded",
                          quantile(dm, 0.9) < 1.0 && quantile(dp, 0.9) < 1.0});
    return rep;
}

inline ExperimentReport syt_arctic_convergence(const std::vector<int>& orders,
                                               int samples, std::uint64_t seed) {
    return shape_convergence_report("syt-arctic", orders, samples, seed,
                                    syt_arctic_distance);
}

}  // namespace arctic
