#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "arctic/frozen.hpp"

using namespace arctic;

TEST_CASE("order-1 all-horizontal: both dominoes polar via north and south") {
    const DominoTiling t{1, {{-1, -1, true}, {-1, 0, true}}};
    const FrozenMask m = frozen_mask(t);
    CHECK(m.polar(0));
    CHECK(m.polar(1));
    CHECK(m.region[0] == PolarRegion::South);
    CHECK(m.region[1] == PolarRegion::North);
}

TEST_CASE("order-1 all-vertical: both dominoes polar") {
    // at order 1 the left domino covers both the north and the west corner
    // cell; the north seed claims it first
    const DominoTiling t{1, {{-1, -1, false}, {0, -1, false}}};
    const FrozenMask m = frozen_mask(t);
    CHECK(m.polar(0));
    CHECK(m.polar(1));
    CHECK(m.region[0] != m.region[1]);
}

TEST_CASE("corner-most dominoes are always polar") {
    for (int s = 0; s < 25; ++s) {
        const DominoTiling t = sample_tiling(24, 500 + s);
        const FrozenMask m = frozen_mask(t);
        const CellMap<int> owner = tiling_cover(t);
        CHECK(m.polar(owner.at(-1, 23)));
        CHECK(m.polar(owner.at(-1, -24)));
        CHECK(m.polar(owner.at(23, -1)));
        CHECK(m.polar(owner.at(-24, -1)));
    }
}

TEST_CASE("all dominoes in a region share the class of its seed") {
    const DominoTiling t = sample_tiling(32, 99);
    const FrozenMask m = frozen_mask(t);
    const CellMap<int> owner = tiling_cover(t);
    const int north_seed = owner.at(-1, t.n - 1);
    const int west_seed = owner.at(-t.n, -1);
    for (std::size_t d = 0; d < t.dominoes.size(); ++d) {
        if (m.region[d] == PolarRegion::North)
            CHECK(domino_class(t.n, t.dominoes[d]) ==
                  domino_class(t.n, t.dominoes[north_seed]));
        if (m.region[d] == PolarRegion::West)
            CHECK(domino_class(t.n, t.dominoes[d]) ==
                  domino_class(t.n, t.dominoes[west_seed]));
    }
}

TEST_CASE("polar fraction approaches the complement of the inscribed disc") {
    // at order 64, the scaled polar area should be near 1 - pi/4 = 0.2146
    double frac = 0;
    const int samples = 8;
    for (int s = 0; s < samples; ++s) {
        const DominoTiling t = sample_tiling(64, 4200 + s);
        const FrozenMask m = frozen_mask(t);
        int polar_cells = 0;
        for (std::size_t d = 0; d < t.dominoes.size(); ++d)
            if (m.polar(d)) polar_cells += 2;
        frac += static_cast<double>(polar_cells) / (2.0 * t.n * (t.n + 1));
    }
    frac /= samples;
    CHECK(frac > 0.13);
    CHECK(frac < 0.35);
}
