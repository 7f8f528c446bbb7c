#pragma once

// JSON wire formats:
//   Asm              {"n": int, "rows": [[-1|0|1, ...], ...]}
//   HeightMatrix     {"n": int, "h": [[int, ...], ...]}
//   MonotoneTriangle {"rows": [[int, ...], ...]}
//   DominoTiling     {"n": int, "dominoes": [{"x": int, "y": int, "o": "h"|"v"}, ...]}
//   HeightFunction   {"n": int, "values": [[x, y, eta], ...]}
//   SquareTableau    {"n": int, "rows": [[int, ...], ...]}  (row 1 = bottom row)
//   JumpSequence     {"n": int, "moves": [int, ...]}

#include <json.hpp>

#include "arctic/asm_matrix.hpp"
#include "arctic/aztec.hpp"
#include "arctic/monotone.hpp"
#include "arctic/tableau.hpp"

namespace arctic {

using Json = nlohmann::json;

inline Json to_json(const Asm& a) { return Json{{"n", a.n}, {"rows", a.m}}; }

inline Asm asm_from_json(const Json& j) {
    const Grid rows = j.at("rows").get<Grid>();
    const Asm a = validate_asm(rows);
    if (j.contains("n") && j.at("n").get<int>() != a.n)
        throw std::invalid_argument("asm json: order field does not match rows");
    return a;
}

inline Json to_json(const HeightMatrix& h) { return Json{{"n", h.n}, {"h", h.h}}; }

inline HeightMatrix height_from_json(const Json& j) {
    return validate_height(j.at("h").get<Grid>());
}

inline Json to_json(const MonotoneTriangle& t) { return Json{{"rows", t.rows}}; }

inline MonotoneTriangle triangle_from_json(const Json& j) {
    return validate_triangle(j.at("rows").get<std::vector<std::vector<int>>>());
}

inline Json to_json(const DominoTiling& t) {
    Json dominoes = Json::array();
    for (const Domino& d : t.dominoes)
        dominoes.push_back(
            Json{{"x", d.x}, {"y", d.y}, {"o", d.horizontal ? "h" : "v"}});
    return Json{{"n", t.n}, {"dominoes", dominoes}};
}

inline DominoTiling tiling_from_json(const Json& j) {
    DominoTiling t;
    t.n = j.at("n").get<int>();
    for (const Json& d : j.at("dominoes")) {
        const std::string o = d.at("o").get<std::string>();
        if (o != "h" && o != "v")
            throw std::invalid_argument("tiling json: orientation must be 'h' or 'v'");
        t.dominoes.push_back({d.at("x").get<int>(), d.at("y").get<int>(), o == "h"});
    }
    return validate_tiling(t);
}

inline Json to_json(const HeightFunction& h) {
    Json values = Json::array();
    for (int x = -h.n - 1; x <= h.n + 1; ++x)
        for (int y = -h.n - 1; y <= h.n + 1; ++y)
            if (vertex_in_diamond(h.n, x, y))
                values.push_back(Json::array({x, y, h.at(x, y)}));
    return Json{{"n", h.n}, {"values", values}};
}

inline HeightFunction height_function_from_json(const Json& j) {
    HeightFunction h(j.at("n").get<int>());
    for (const Json& v : j.at("values")) {
        if (!vertex_in_diamond(h.n, v.at(0).get<int>(), v.at(1).get<int>()))
            throw std::invalid_argument("height json: vertex out of range");
        h.set(v.at(0).get<int>(), v.at(1).get<int>(), v.at(2).get<int>());
    }
    for (int x = -h.n - 1; x <= h.n + 1; ++x)
        for (int y = -h.n - 1; y <= h.n + 1; ++y)
            if (vertex_in_diamond(h.n, x, y) &&
                h.values[h.idx(x, y)] == HeightFunction::kUnset)
                throw std::invalid_argument("height json: missing vertex value");
    return h;
}

inline Json to_json(const SquareTableau& t) { return Json{{"n", t.n}, {"rows", t.t}}; }

inline SquareTableau tableau_from_json(const Json& j) {
    return validate_tableau(j.at("rows").get<std::vector<std::vector<int>>>());
}

inline Json to_json(const JumpSequence& js) {
    return Json{{"n", js.n}, {"moves", js.moves}};
}

inline JumpSequence jumps_from_json(const Json& j) {
    JumpSequence js{j.at("n").get<int>(), j.at("moves").get<std::vector<int>>()};
    jumps_to_tableau(js);  // validates by replay
    return js;
}

}  // namespace arctic
