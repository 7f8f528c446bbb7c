// Command-line front end: enumeration, sampling, verification suites,
// shape-field export, LDP tables, experiments and SVG rendering.
// Exit codes: 0 success / verification pass, 1 runtime or verification
// failure, 2 usage error.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "arctic/experiments.hpp"
#include "arctic/json_io.hpp"
#include "arctic/operator_formula.hpp"
#include "arctic/singular.hpp"
#include "arctic/svg.hpp"

namespace {

using namespace arctic;

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << text;
}

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// ---- verification suites ------------------------------------------------

struct Verdict {
    std::string suite;
    bool pass = true;
    long cases = 0;
    double max_error = 0.0;
    Json first_failure;

    explicit Verdict(std::string name) : suite(std::move(name)) {}

    int finish() const {
        Json j{{"suite", suite}, {"pass", pass}, {"cases", cases}};
        if (max_error > 0.0) j["max_error"] = max_error;
        if (!pass) j["first_failure"] = first_failure;
        std::cout << j.dump(2) << "\n";
        return pass ? 0 : 1;
    }

    void fail(Json detail) {
        if (pass) first_failure = std::move(detail);
        pass = false;
    }
};

int verify_two_enum(int k_max, int value_max) {
    Verdict v{"two-enum"};
    std::vector<int> xs;
    std::function<void(int)> rec = [&](int next) {
        if (!xs.empty() && static_cast<int>(xs.size()) <= k_max) {
            ++v.cases;
            const Int closed = two_enumeration_closed(xs);
            const Int brute = two_enumeration_bruteforce(xs, k_max);
            if (closed != brute)
                v.fail(Json{{"xs", xs},
                            {"closed", closed.get_str()},
                            {"bruteforce", brute.get_str()}});
        }
        if (static_cast<int>(xs.size()) == k_max) return;
        for (int t = next; t <= value_max; ++t) {
            xs.push_back(t);
            rec(t + 1);
            xs.pop_back();
        }
    };
    rec(1);
    return v.finish();
}

int verify_row_law(int n_max) {
    Verdict v{"row-law"};
    for (int n = 1; n <= n_max; ++n) {
        for (int k = 1; k <= n; ++k) {
            std::map<std::vector<int>, Rat> law;
            for_each_asm(n, [&](const Asm& m) {
                law[row_ascents(height_matrix(m), k)] += domino_weight(m);
            });
            std::vector<int> xs;
            std::function<void(int)> rec = [&](int next) {
                if (static_cast<int>(xs.size()) == k) {
                    ++v.cases;
                    Rat got = law[xs];
                    got.canonicalize();
                    const Rat want = row_law_probability(n, k, xs);
                    if (got != want)
                        v.fail(Json{{"n", n},
                                    {"k", k},
                                    {"xs", xs},
                                    {"enumerated", got.get_str()},
                                    {"formula", want.get_str()}});
                    return;
                }
                for (int t = next; t <= n; ++t) {
                    xs.push_back(t);
                    rec(t + 1);
                    xs.pop_back();
                }
            };
            rec(1);
        }
    }
    return v.finish();
}

int verify_compatible(int n_max) {
    Verdict v{"compatible"};
    for (int n = 1; n <= n_max; ++n) {
        const auto bs = enumerate_asms(n + 1);
        for (const Asm& a : enumerate_asms(n)) {
            ++v.cases;
            Int count = 0;
            for (const Asm& b : bs)
                if (is_compatible(a, b)) ++count;
            if (count != pow2(n_plus(a)))
                v.fail(Json{{"n", n},
                            {"asm", a.m},
                            {"count", count.get_str()},
                            {"expected", pow2(n_plus(a)).get_str()}});
        }
        for (const auto& t : enumerate_tilings(std::min(n, 3))) {
            ++v.cases;
            const auto [a, b] = compatible_pair(height_function(t));
            if (!is_compatible(a, b)) {
                v.fail(Json{{"n", t.n}, {"reason", "extracted pair not compatible"}});
                continue;
            }
            auto lhs = tiling_from_pair(a, b).dominoes;
            auto rhs = t.dominoes;
            std::sort(lhs.begin(), lhs.end());
            std::sort(rhs.begin(), rhs.end());
            if (lhs != rhs)
                v.fail(Json{{"n", t.n}, {"reason", "pair round trip mismatch"}});
        }
    }
    return v.finish();
}

int verify_bijections(int n_max) {
    Verdict v{"bijections"};
    for (int n = 1; n <= n_max; ++n) {
        for_each_asm(n, [&](const Asm& m) {
            ++v.cases;
            bool ok = asm_from_height(height_matrix(m)) == m;
            ok = ok && from_monotone_triangle(to_monotone_triangle(m)) == m;
            ok = ok && dual_triangle(dual_triangle(to_monotone_triangle(m))) ==
                           to_monotone_triangle(m);
            ok = ok && height_from_sym(sym_height(height_matrix(m))) == height_matrix(m);
            if (!ok) v.fail(Json{{"n", n}, {"asm", m.m}});
        });
    }
    for (int n = 1; n <= std::min(n_max, 3); ++n) {
        for (const auto& t : enumerate_tilings(n)) {
            ++v.cases;
            auto lhs = tiling_from_height(height_function(t)).dominoes;
            auto rhs = t.dominoes;
            std::sort(lhs.begin(), lhs.end());
            std::sort(rhs.begin(), rhs.end());
            if (lhs != rhs) v.fail(Json{{"n", n}, {"reason", "tiling/height"}});
        }
    }
    for (int n = 1; n <= std::min(n_max, 3); ++n) {
        for_each_tableau(n, [&](const SquareTableau& t) {
            ++v.cases;
            if (!(jumps_to_tableau(tableau_to_jumps(t)) == t))
                v.fail(Json{{"n", n}, {"reason", "tableau/jumps"}});
        });
    }
    return v.finish();
}

int verify_airfoil(double y, double tol) {
    Verdict v{"airfoil"};
    for (double x = -0.95; x <= 0.9501; x += 0.05) {
        ++v.cases;
        const double fwd = forward_hilbert([&](double u) { return airfoil_h_closed(u, y); }, x);
        const double err = std::fabs(fwd - airfoil_p_closed(x, y));
        v.max_error = std::max(v.max_error, err);
        if (err > tol)
            v.fail(Json{{"v", x}, {"error", err}, {"tol", tol}});
    }
    std::vector<double> grid;
    for (int i = -9; i <= 9; ++i) grid.push_back(i / 10.0);
    const auto h = airfoil_invert([&](double u) { return airfoil_p_closed(u, y); }, grid,
                                  airfoil_bounded_c(y));
    for (std::size_t i = 0; i < grid.size(); ++i) {
        ++v.cases;
        const double err = std::fabs(h[i] - airfoil_h_closed(grid[i], y));
        v.max_error = std::max(v.max_error, err);
        if (err > 2 * tol)
            v.fail(Json{{"v", grid[i]}, {"inversion_error", err}});
    }
    return v.finish();
}

int verify_rate(std::optional<double> y_opt, double tol, int mesh) {
    Verdict v{"rate"};
    std::vector<double> ys;
    if (y_opt)
        ys.push_back(*y_opt);
    else
        for (double y = 0.05; y < 0.951; y += 0.05) ys.push_back(y);
    for (const double y : ys) {
        ++v.cases;
        const double gap = std::fabs(rate_I(discretize_f_star(y, mesh)) + theta(y));
        v.max_error = std::max(v.max_error, gap);
        if (gap > tol) v.fail(Json{{"y", y}, {"gap", gap}, {"tol", tol}});
    }
    return v.finish();
}

int verify_operator_formula(int k_max, int value_max) {
    Verdict v{"operator-formula"};
    std::vector<int> xs;
    std::function<void(int)> rec = [&](int next) {
        if (!xs.empty() && static_cast<int>(xs.size()) <= k_max) {
            ++v.cases;
            const Int op = alpha_operator_formula(xs);
            const Int brute = alpha_bruteforce(xs, std::max(k_max, 5));
            if (op != brute)
                v.fail(Json{{"xs", xs},
                            {"operator", op.get_str()},
                            {"bruteforce", brute.get_str()}});
        }
        if (static_cast<int>(xs.size()) == k_max) return;
        for (int t = next; t <= value_max; ++t) {
            xs.push_back(t);
            rec(t + 1);
            xs.pop_back();
        }
    };
    rec(1);
    return v.finish();
}

// ---- subcommand payloads -------------------------------------------------

int run_enumerate(const std::string& kind, int n, bool count_only,
                  const std::string& out) {
    std::string text;
    long count = 0;
    if (kind == "tilings") {
        for_each_tiling(n, [&](const DominoTiling& t) {
            ++count;
            if (!count_only) text += to_json(t).dump() + "\n";
        });
    } else if (kind == "asms") {
        for_each_asm(n, [&](const Asm& a) {
            ++count;
            if (!count_only) text += to_json(a).dump() + "\n";
        });
    } else {
        for_each_tableau(n, [&](const SquareTableau& t) {
            ++count;
            if (!count_only) text += to_json(t).dump() + "\n";
        });
    }
    if (count_only) text = std::to_string(count) + "\n";
    write_text(out, text);
    return 0;
}

int run_shape(int grid, const std::string& field, const std::string& out) {
    char buf[128];
    std::string text;
    if (field == "fg") {
        text = "x,y,F,G\n";
        for (int i = 0; i <= grid; ++i)
            for (int j = 0; j <= grid; ++j) {
                const double x = static_cast<double>(i) / grid;
                const double y = static_cast<double>(j) / grid;
                std::snprintf(buf, sizeof(buf), "%.10g,%.10g,%.10g,%.10g\n", x, y,
                              f_star(x, y), G(x, y));
                text += buf;
            }
    } else {
        text = "u,v,R\n";
        for (int i = 0; i <= grid; ++i)
            for (int j = 0; j <= grid; ++j) {
                const double u = 2.0 * i / grid - 1.0;
                const double v = 2.0 * j / grid - 1.0;
                if (std::fabs(u) + std::fabs(v) > 1.0 + 1e-12) continue;
                std::snprintf(buf, sizeof(buf), "%.10g,%.10g,%.10g\n", u, v, R(u, v));
                text += buf;
            }
    }
    write_text(out, text);
    return 0;
}

int run_render(const std::string& in, const RenderOptions& opt, const std::string& out) {
    const std::string raw = read_text(in);
    std::string svg;
    if (!raw.empty() && raw[0] == '{') {
        const Json j = Json::parse(raw);
        if (j.contains("dominoes"))
            svg = render_tiling_svg(tiling_from_json(j), opt);
        else if (j.contains("moves"))
            svg = render_jumps_svg(jumps_from_json(j));
        else if (j.contains("rows"))
            svg = render_jumps_svg(tableau_to_jumps(tableau_from_json(j)));
        else
            throw std::runtime_error("render: unrecognized json input in " + in);
    } else {
        // CSV field: header then x,y,value rows
        std::istringstream ss(raw);
        std::string line;
        if (!std::getline(ss, line))
            throw std::runtime_error("render: empty input in " + in);
        std::vector<std::array<double, 3>> rows;
        while (std::getline(ss, line)) {
            if (line.empty() || line[0] == '#') continue;
            std::array<double, 3> r{};
            if (std::sscanf(line.c_str(), "%lf,%lf,%lf", &r[0], &r[1], &r[2]) == 3)
                rows.push_back(r);
        }
        svg = render_field_svg(rows, opt.overlay_circle);
    }
    write_text(out, svg);
    return 0;
}

int run_ldp(int n, std::optional<int> k, const std::string& out) {
    std::string text;
    double worst = 0.0;
    for (int kk = k ? *k : 0; kk <= (k ? *k : n); ++kk) {
        const LdpTable t = ldp_row_check(n, kk);
        text += ldp_table_csv(t);
        worst = std::max(worst, t.max_normalized_error);
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", worst);
    text += "# overall max_normalized_error=" + std::string(buf) + "\n";
    write_text(out, text);
    return 0;
}

int run_experiment(const std::string& kind, const std::vector<int>& orders, int samples,
                   std::uint64_t seed, double eps, const std::string& out_dir) {
    ExperimentReport rep;
    if (kind == "asm-shape")
        rep = asm_shape_convergence(orders, samples, seed);
    else if (kind == "tiling-shape")
        rep = tiling_shape_convergence(orders, samples, seed);
    else if (kind == "syt-arctic")
        rep = syt_arctic_convergence(orders, samples, seed);
    else
        rep = arctic_radius(orders.at(0), samples, seed, eps);
    if (out_dir.empty() || out_dir == "-") {
        std::cout << rep.to_csv();
        std::cout << rep.to_json_text() << "\n";
    } else {
        std::filesystem::create_directories(out_dir);
        write_text(out_dir + "/" + rep.id + ".csv", rep.to_csv());
        write_text(out_dir + "/" + rep.id + ".json", rep.to_json_text() + "\n");
        std::cout << rep.to_json_text() << "\n";
    }
    return rep.passed() ? 0 : 1;
}

std::string spacetime_csv(const JumpSequence& js) {
    std::string text = "time,position,particle\n";
    std::vector<int> pos(js.n + 1);
    for (int p = 1; p <= js.n; ++p) pos[p] = p;
    for (int m = 1; m <= js.n * js.n; ++m) {
        const int p = js.moves[m - 1];
        ++pos[p];
        text += std::to_string(m) + "," + std::to_string(pos[p]) + "," +
                std::to_string(p) + "\n";
    }
    return text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"aztec diamond tilings, alternating sign matrices and their limit shapes"};
    app.require_subcommand(1);

    // enumerate
    auto* cmd_enum = app.add_subcommand("enumerate", "stream tilings/asms/tableaux as json lines");
    int en_n = 3;
    bool en_count = false;
    std::string en_kind = "tilings", en_out = "-";
    cmd_enum->add_option("--n", en_n, "order")->default_val(3);
    cmd_enum->add_option("--kind", en_kind, "tilings|asms|tableaux")
        ->check(CLI::IsMember({"tilings", "asms", "tableaux"}))
        ->default_val("tilings");
    cmd_enum->add_flag("--count-only", en_count, "print only the count");
    cmd_enum->add_option("--out", en_out, "output path (default stdout)");

    // sample
    auto* cmd_sample = app.add_subcommand("sample", "sample a uniform tiling by shuffling");
    int sa_n = 50;
    std::uint64_t sa_seed = 1;
    std::string sa_out = "-";
    bool sa_height = false;
    cmd_sample->add_option("--n", sa_n, "order")->default_val(50);
    cmd_sample->add_option("--seed", sa_seed, "rng seed")->default_val(1);
    cmd_sample->add_flag("--height", sa_height, "emit the height function instead");
    cmd_sample->add_option("--out", sa_out, "output path (default stdout)");

    // render
    auto* cmd_render = app.add_subcommand("render", "render tiling/jump/field input to svg");
    std::string re_in, re_out = "-", re_color = "type-parity";
    bool re_circle = false;
    cmd_render->add_option("--in", re_in, "input file (json or csv)")->required();
    cmd_render->add_option("--color-by", re_color, "type-parity|orientation|frozen")
        ->check(CLI::IsMember({"type-parity", "orientation", "frozen"}))
        ->default_val("type-parity");
    cmd_render->add_flag("--overlay-circle", re_circle, "draw the inscribed circle");
    cmd_render->add_option("--out", re_out, "output path (default stdout)");

    // shape
    auto* cmd_shape = app.add_subcommand("shape", "export limit-shape fields as csv");
    int sh_grid = 200;
    std::string sh_field = "r", sh_out = "-";
    cmd_shape->add_option("--grid", sh_grid, "grid resolution")->default_val(200);
    cmd_shape->add_option("--field", sh_field, "r (u,v,R) or fg (x,y,F,G)")
        ->check(CLI::IsMember({"r", "fg"}))
        ->default_val("r");
    cmd_shape->add_option("--out", sh_out, "output path (default stdout)");

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
    std::string ve_suite;
    int ve_n = 4, ve_k = 4, ve_max = 6, ve_mesh = 1500;
    double ve_y = 0.3, ve_tol = -1.0;
    bool ve_have_y = false;
    cmd_verify->add_option("suite", ve_suite,
                           "two-enum|row-law|compatible|bijections|airfoil|rate|operator-formula")
        ->required()
        ->check(CLI::IsMember({"two-enum", "row-law", "compatible", "bijections",
                               "airfoil", "rate", "operator-formula"}));
    cmd_verify->add_option("--n", ve_n, "max order (row-law 4, compatible 3, bijections 4)");
    cmd_verify->add_option("--k", ve_k, "max bottom-row length (two-enum 4, operator-formula 3)");
    cmd_verify->add_option("--max", ve_max, "largest bottom-row value (default 6)");
    cmd_verify->add_option("--y", ve_y, "profile parameter for airfoil/rate (default 0.3)")
        ->each([&](const std::string&) { ve_have_y = true; });
    cmd_verify->add_option("--tol", ve_tol, "tolerance (airfoil 1e-3, rate 2e-3)");
    cmd_verify->add_option("--mesh", ve_mesh, "rate-suite discretization mesh")->default_val(1500);

    // ldp
    auto* cmd_ldp = app.add_subcommand("ldp", "exact vs rate-functional row probabilities");
    int ld_n = 4;
    int ld_k = -1;
    std::string ld_out = "-";
    cmd_ldp->add_option("--n", ld_n, "order (<= 6)")->default_val(4);
    cmd_ldp->add_option("--k", ld_k, "row index (default: all rows)");
    cmd_ldp->add_option("--out", ld_out, "output path (default stdout)");

    // experiment
    auto* cmd_exp = app.add_subcommand("experiment", "monte-carlo convergence experiments");
    std::string ex_kind, ex_out;
    std::vector<int> ex_orders;
    int ex_samples = 100;
    std::uint64_t ex_seed = 1;
    double ex_eps = -1.0;
    cmd_exp->add_option("kind", ex_kind, "asm-shape|tiling-shape|arctic-radius|syt-arctic")
        ->required()
        ->check(CLI::IsMember({"asm-shape", "tiling-shape", "arctic-radius", "syt-arctic"}));
    cmd_exp->add_option("--n", ex_orders, "orders (one or more)")->required();
    cmd_exp->add_option("--samples", ex_samples, "samples per order")->default_val(100);
    cmd_exp->add_option("--seed", ex_seed, "master seed")->default_val(1);
    cmd_exp->add_option("--eps", ex_eps, "arctic-radius smoothing (default 2/sqrt(n))");
    cmd_exp->add_option("--out", ex_out, "output directory (default stdout)");

    // syt
    auto* cmd_syt = app.add_subcommand("syt", "square-tableau sampling and arctic check");
    std::string sy_mode, sy_out = "-", sy_spacetime;
    std::vector<int> sy_orders;
    int sy_samples = 50;
    std::uint64_t sy_seed = 1;
    cmd_syt->add_option("mode", sy_mode, "sample|arctic")
        ->required()
        ->check(CLI::IsMember({"sample", "arctic"}));
    cmd_syt->add_option("--n", sy_orders, "order(s)")->required();
    cmd_syt->add_option("--samples", sy_samples, "samples per order (arctic)")->default_val(50);
    cmd_syt->add_option("--seed", sy_seed, "rng seed")->default_val(1);
    cmd_syt->add_option("--spacetime", sy_spacetime, "also write time,position,particle csv");
    cmd_syt->add_option("--out", sy_out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
            e.get_name() == "CallForVersion")
            return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (cmd_enum->parsed()) return run_enumerate(en_kind, en_n, en_count, en_out);
        if (cmd_sample->parsed()) {
            const DominoTiling t = sample_tiling(sa_n, sa_seed);
            write_text(sa_out, (sa_height ? to_json(height_function(t)) : to_json(t)).dump() + "\n");
            return 0;
        }
        if (cmd_render->parsed()) {
            RenderOptions opt;
            opt.color_by = re_color;
            opt.overlay_circle = re_circle;
            return run_render(re_in, opt, re_out);
        }
        if (cmd_shape->parsed()) return run_shape(sh_grid, sh_field, sh_out);
        if (cmd_verify->parsed()) {
            if (ve_suite == "two-enum") return verify_two_enum(std::min(ve_k, 7), ve_max);
            if (ve_suite == "row-law") return verify_row_law(std::min(ve_n, 5));
            if (ve_suite == "compatible") return verify_compatible(std::min(ve_n, 3));
            if (ve_suite == "bijections") return verify_bijections(std::min(ve_n, 5));
            if (ve_suite == "airfoil")
                return verify_airfoil(ve_y, ve_tol > 0 ? ve_tol : 1e-3);
            if (ve_suite == "rate")
                return verify_rate(ve_have_y ? std::optional<double>(ve_y) : std::nullopt,
                                   ve_tol > 0 ? ve_tol : 2e-3, ve_mesh);
            return verify_operator_formula(std::min(ve_k, 4), ve_max);
        }
        if (cmd_ldp->parsed())
            return run_ldp(ld_n, ld_k >= 0 ? std::optional<int>(ld_k) : std::nullopt, ld_out);
        if (cmd_exp->parsed())
            return run_experiment(ex_kind, ex_orders, ex_samples, ex_seed, ex_eps, ex_out);
        if (cmd_syt->parsed()) {
            if (sy_mode == "sample") {
                const SquareTableau t = sample_tableau(sy_orders.at(0), sy_seed);
                if (!sy_spacetime.empty())
                    write_text(sy_spacetime, spacetime_csv(tableau_to_jumps(t)));
                write_text(sy_out, to_json(t).dump() + "\n");
                return 0;
            }
            // one order: per-sample deviation distribution; several: trend
            const ExperimentReport rep =
                sy_orders.size() == 1
                    ? arctic_check(sy_orders[0], sy_samples, sy_seed)
                    : syt_arctic_convergence(sy_orders, sy_samples, sy_seed);
            write_text(sy_out, rep.to_csv());
            std::cout << rep.to_json_text() << "\n";
            return rep.passed() ? 0 : 1;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
