#pragma once

// Deterministic SVG output: fixed palettes, stable element order, fixed
// decimal formatting. Byte-identical for identical inputs and options.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "arctic/frozen.hpp"
#include "arctic/shuffle.hpp"
#include "arctic/tableau.hpp"

namespace arctic {

namespace detail {

inline std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    // avoid the negative-zero artifact
    if (std::string(buf) == "-0.000") return "0.000";
    return buf;
}

}  // namespace detail

struct RenderOptions {
    std::string color_by = "type-parity";  // or "orientation", "frozen"
    bool overlay_circle = false;
    double cell_px = 12.0;
};

// Dominoes colored by the four type/parity classes (or orientation, or
// polar/temperate), optional inscribed-circle overlay.
inline std::string render_tiling_svg(const DominoTiling& t,
                                     const RenderOptions& opt = {}) {
    validate_tiling(t);
    const double u = opt.cell_px;
    const double size = (2 * t.n + 2) * u;
    const double off = (t.n + 1) * u;  // lattice origin in svg coordinates
    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + detail::fmt(size) +
           "\" height=\"" + detail::fmt(size) + "\" viewBox=\"0 0 " + detail::fmt(size) +
           " " + detail::fmt(size) + "\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";

    std::vector<Domino> sorted = t.dominoes;
    std::sort(sorted.begin(), sorted.end());
    FrozenMask mask;
    if (opt.color_by == "frozen") mask = frozen_mask(t);
    const CellMap<int> owner =
        opt.color_by == "frozen" ? tiling_cover(t) : CellMap<int>(t.n, -1);

    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const Domino& d = sorted[i];
        std::string fill = "#cccccc";
        if (opt.color_by == "type-parity") {
            switch (domino_class(t.n, d)) {
                case DominoClass::North: fill = "#d9534f"; break;
                case DominoClass::South: fill = "#f0c419"; break;
                case DominoClass::East: fill = "#3b7dd8"; break;
                case DominoClass::West: fill = "#4cae4c"; break;
            }
        } else if (opt.color_by == "orientation") {
            fill = d.horizontal ? "#d9534f" : "#3b7dd8";
        } else if (opt.color_by == "frozen") {
            const int id = owner.at(d.x, d.y);
            fill = mask.polar(static_cast<std::size_t>(id)) ? "#3b7dd8" : "#f5f5f5";
        }
        const double w = d.horizontal ? 2 * u : u;
        const double h = d.horizontal ? u : 2 * u;
        const double px = off + d.x * u;
        const double py = off - (d.y + (d.horizontal ? 1 : 2)) * u;
        out += "<rect x=\"" + detail::fmt(px) + "\" y=\"" + detail::fmt(py) +
               "\" width=\"" + detail::fmt(w) + "\" height=\"" + detail::fmt(h) +
               "\" fill=\"" + fill + "\" stroke=\"#222222\" stroke-width=\"0.8\"/>\n";
    }
    if (opt.overlay_circle) {
        out += "<circle cx=\"" + detail::fmt(off) + "\" cy=\"" + detail::fmt(off) +
               "\" r=\"" + detail::fmt(t.n * u / std::sqrt(2.0)) +
               "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1.5\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

// Space-time diagram of a jump process: position horizontal, time running
// downward, one polyline per particle.
inline std::string render_jumps_svg(const JumpSequence& js, double px_per_pos = 14.0) {
    jumps_to_tableau(js);  // validate
    const int n = js.n;
    const double w = (2 * n + 1) * px_per_pos;
    const double h = 560.0;
    const double dt = h / (n * n + 1);
    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + detail::fmt(w) +
           "\" height=\"" + detail::fmt(h + 2 * px_per_pos) + "\" viewBox=\"0 0 " +
           detail::fmt(w) + " " + detail::fmt(h + 2 * px_per_pos) + "\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
    const char* palette[6] = {"#d9534f", "#3b7dd8", "#4cae4c",
                              "#f0c419", "#7b5ea7", "#3aa6a6"};
    std::vector<int> pos(n + 1);
    for (int p = 1; p <= n; ++p) pos[p] = p;
    std::vector<std::string> paths(n + 1);
    for (int p = 1; p <= n; ++p)
        paths[p] = "M" + detail::fmt(pos[p] * px_per_pos) + " " + detail::fmt(px_per_pos);
    for (int m = 1; m <= n * n; ++m) {
        const int p = js.moves[m - 1];
        const double y = px_per_pos + m * dt;
        paths[p] += " L" + detail::fmt(pos[p] * px_per_pos) + " " + detail::fmt(y);
        ++pos[p];
        paths[p] += " L" + detail::fmt(pos[p] * px_per_pos) + " " + detail::fmt(y);
    }
    for (int p = 1; p <= n; ++p) {
        paths[p] += " L" + detail::fmt(pos[p] * px_per_pos) + " " +
                    detail::fmt(px_per_pos + h);
        out += "<path d=\"" + paths[p] + "\" fill=\"none\" stroke=\"" +
               palette[(p - 1) % 6] + "\" stroke-width=\"1.2\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

// Grayscale heatmap of a scalar field sampled on a regular grid; rows of
// (x, y, value). Optional unit-circle overlay in scaled coordinates.
inline std::string render_field_svg(const std::vector<std::array<double, 3>>& rows,
                                    bool overlay_circle = false, double px = 4.0) {
    double lo = 0.0, hi = 1.0;
    if (!rows.empty()) {
        lo = hi = rows[0][2];
        for (const auto& r : rows) {
            lo = std::min(lo, r[2]);
            hi = std::max(hi, r[2]);
        }
        if (hi <= lo) hi = lo + 1.0;
    }
    double xlo = 0, xhi = 0, ylo = 0, yhi = 0;
    for (const auto& r : rows) {
        xlo = std::min(xlo, r[0]);
        xhi = std::max(xhi, r[0]);
        ylo = std::min(ylo, r[1]);
        yhi = std::max(yhi, r[1]);
    }
    const double scale = 100.0;
    const double w = (xhi - xlo) * scale + 2 * px, h = (yhi - ylo) * scale + 2 * px;
    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + detail::fmt(w) +
           "\" height=\"" + detail::fmt(h) + "\" viewBox=\"0 0 " + detail::fmt(w) + " " +
           detail::fmt(h) + "\">\n";
    for (const auto& r : rows) {
        const int level = static_cast<int>(255.0 * (r[2] - lo) / (hi - lo));
        char color[8];
        std::snprintf(color, sizeof(color), "#%02x%02x%02x", level, level, level);
        out += "<rect x=\"" + detail::fmt((r[0] - xlo) * scale) + "\" y=\"" +
               detail::fmt((yhi - r[1]) * scale) + "\" width=\"" + detail::fmt(px) +
               "\" height=\"" + detail::fmt(px) + "\" fill=\"" + color + "\"/>\n";
    }
    if (overlay_circle) {
        out += "<circle cx=\"" + detail::fmt(-xlo * scale) + "\" cy=\"" +
               detail::fmt(yhi * scale) + "\" r=\"" + detail::fmt(scale / std::sqrt(2.0)) +
               "\" fill=\"none\" stroke=\"#d9534f\" stroke-width=\"1.5\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace arctic
