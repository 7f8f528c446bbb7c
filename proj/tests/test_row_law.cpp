#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "arctic/row_law.hpp"

using namespace arctic;

TEST_CASE("order-2 row law by hand") {
    CHECK(row_law_probability(2, 1, {1}) == Rat(1, 2));
    CHECK(row_law_probability(2, 1, {2}) == Rat(1, 2));
}

TEST_CASE("k = n is the sure event") {
    for (int n = 1; n <= 5; ++n) {
        std::vector<int> all;
        for (int v = 1; v <= n; ++v) all.push_back(v);
        CHECK(row_law_probability(n, n, all) == Rat(1));
    }
}

TEST_CASE("k = 0 extension gives the sure event") {
    for (int n = 1; n <= 5; ++n) CHECK(row_law_probability(n, 0, {}) == Rat(1));
}

// Exact-law oracle: enumerate all ASMs, group domino weights by the ascent
// set of height-matrix row k.
static std::map<std::vector<int>, Rat> enumerated_row_law(int n, int k) {
    std::map<std::vector<int>, Rat> law;
    for_each_asm(n, [&](const Asm& m) {
        law[row_ascents(height_matrix(m), k)] += domino_weight(m);
    });
    return law;
}

TEST_CASE("row law equals the enumerated distribution for n <= 4") {
    for (int n = 1; n <= 4; ++n) {
        for (int k = 1; k <= n; ++k) {
            auto law = enumerated_row_law(n, k);
            Rat total = 0;
            // every increasing subset of size k must carry the formula weight
            std::vector<int> xs;
            std::function<void(int)> rec = [&](int next) {
                if (static_cast<int>(xs.size()) == k) {
                    const Rat p = row_law_probability(n, k, xs);
                    CHECK(p > 0);
                    auto it = law.find(xs);
                    REQUIRE(it != law.end());
                    CHECK(it->second == p);
                    total += p;
                    return;
                }
                for (int v = next; v <= n; ++v) {
                    xs.push_back(v);
                    rec(v + 1);
                    xs.pop_back();
                }
            };
            rec(1);
            CHECK(total == Rat(1));
            const Int binom = factorial(n) / (factorial(k) * factorial(n - k));
            CHECK(Int(static_cast<long>(law.size())) == binom);
        }
    }
}

TEST_CASE("uniform row law small cases") {
    CHECK(uniform_row_law(2, 1, {1}) == Rat(1, 2));
    CHECK(uniform_row_law(2, 1, {2}) == Rat(1, 2));
    std::vector<int> all = {1, 2, 3};
    CHECK(uniform_row_law(3, 3, all) == Rat(1));
}

TEST_CASE("uniform row law matches enumeration and sums to one") {
    for (int n = 2; n <= 4; ++n) {
        for (int k = 1; k <= n; ++k) {
            // oracle: group uniform counts by ascent set
            std::map<std::vector<int>, Int> counts;
            Int total_asms = 0;
            for_each_asm(n, [&](const Asm& m) {
                ++counts[row_ascents(height_matrix(m), k)];
                ++total_asms;
            });
            Rat total = 0;
            for (const auto& [xs, c] : counts) {
                Rat expected(c, total_asms);
                expected.canonicalize();
                CHECK(uniform_row_law(n, k, xs) == expected);
                total += expected;
            }
            CHECK(total == Rat(1));
        }
    }
}
