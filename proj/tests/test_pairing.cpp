#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "arctic/monotone.hpp"
#include "arctic/pairing.hpp"

using namespace arctic;

static std::vector<Domino> key_of(const DominoTiling& t) {
    auto k = t.dominoes;
    std::sort(k.begin(), k.end());
    return k;
}

TEST_CASE("order-1 pairs: A is forced, B distinguishes the tilings") {
    const DominoTiling horiz{1, {{-1, -1, true}, {-1, 0, true}}};
    const DominoTiling vert{1, {{-1, -1, false}, {0, -1, false}}};
    const auto [ah, bh] = compatible_pair(height_function(horiz));
    const auto [av, bv] = compatible_pair(height_function(vert));
    CHECK(ah.m == Grid{{1}});
    CHECK(av.m == Grid{{1}});
    CHECK(bh.m == Grid{{1, 0}, {0, 1}});
    CHECK(bv.m == Grid{{0, 1}, {1, 0}});
}

TEST_CASE("extracted pairs are always compatible; map is injective") {
    for (int n = 1; n <= 3; ++n) {
        std::set<std::pair<Grid, Grid>> seen;
        for (const auto& t : enumerate_tilings(n)) {
            const auto [a, b] = compatible_pair(height_function(t));
            CHECK(a.n == n);
            CHECK(b.n == n + 1);
            CHECK(is_compatible(a, b));
            CHECK(seen.insert({a.m, b.m}).second);
        }
    }
}

TEST_CASE("compatibility counts: 2^{N+(A)} partners for every A") {
    for (int n = 1; n <= 3; ++n) {
        const auto bs = enumerate_asms(n + 1);
        for (const Asm& a : enumerate_asms(n)) {
            Int count = 0;
            for (const Asm& b : bs)
                if (is_compatible(a, b)) ++count;
            CHECK(count == pow2(n_plus(a)));
        }
    }
}

TEST_CASE("A-marginal of the uniform tiling ensemble is the domino measure") {
    for (int n = 1; n <= 3; ++n) {
        std::map<Grid, Int> counts;
        Int total = 0;
        for (const auto& t : enumerate_tilings(n)) {
            ++counts[compatible_pair(height_function(t)).first.m];
            ++total;
        }
        for_each_asm(n, [&](const Asm& a) {
            auto it = counts.find(a.m);
            REQUIRE(it != counts.end());
            Rat marginal(it->second, total);
            marginal.canonicalize();
            CHECK(marginal == domino_weight(a));
        });
    }
}

TEST_CASE("tiling_from_pair inverts the extraction") {
    for (int n = 1; n <= 3; ++n) {
        for (const auto& t : enumerate_tilings(n)) {
            const auto [a, b] = compatible_pair(height_function(t));
            CHECK(key_of(tiling_from_pair(a, b)) == key_of(t));
        }
    }
}

TEST_CASE("tiling_from_pair covers all compatible pairs") {
    // surjectivity: every compatible pair comes from some tiling
    const auto bs = enumerate_asms(3);
    for (const Asm& a : enumerate_asms(2)) {
        for (const Asm& b : bs) {
            if (!is_compatible(a, b)) continue;
            const DominoTiling t = tiling_from_pair(a, b);
            const auto [a2, b2] = compatible_pair(height_function(t));
            CHECK(a2.m == a.m);
            CHECK(b2.m == b.m);
        }
    }
}

TEST_CASE("incompatible pairs are rejected") {
    const Asm a = validate_asm({{0, 1}, {1, 0}});
    const Asm b = validate_asm({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(!is_compatible(a, b));
    CHECK_THROWS_AS(tiling_from_pair(a, b), std::invalid_argument);
    CHECK_THROWS_AS(is_compatible(a, a), std::invalid_argument);
}

TEST_CASE("two-enumeration counts tilings through the correspondence") {
    for (int n = 1; n <= 3; ++n) {
        Int total = 0;
        for_each_asm(n, [&](const Asm& a) { total += pow2(n_plus(a)); });
        CHECK(total == Int(static_cast<long>(enumerate_tilings(n).size())));
    }
}
