#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arctic/monotone.hpp"
#include "arctic/operator_formula.hpp"

using namespace arctic;

TEST_CASE("k = 1 is the constant polynomial 1") {
    const Poly p = alpha_operator_polynomial(1);
    REQUIRE(p.size() == 1);
    CHECK(p.begin()->second == Rat(1));
    CHECK(alpha_operator_formula({9}) == Int(1));
    CHECK(alpha_operator_formula({-4}) == Int(1));
}

TEST_CASE("k = 2 basics") {
    CHECK(alpha_operator_formula({1, 3}) == Int(3));
    CHECK(alpha_operator_formula({1, 2}) == Int(2));
    CHECK(alpha_operator_formula({2, 7}) == alpha_bruteforce({2, 7}));
}

TEST_CASE("matches brute force exhaustively for k <= 3 over 1..6") {
    for (int mask = 1; mask < 64; ++mask) {
        std::vector<int> xs;
        for (int v = 1; v <= 6; ++v)
            if (mask & (1 << (v - 1))) xs.push_back(v);
        if (xs.size() > 3) continue;
        CHECK(alpha_operator_formula(xs) == alpha_bruteforce(xs));
    }
}

TEST_CASE("matches brute force for k = 4 over 1..5") {
    for (int mask = 1; mask < 32; ++mask) {
        std::vector<int> xs;
        for (int v = 1; v <= 5; ++v)
            if (mask & (1 << (v - 1))) xs.push_back(v);
        if (xs.size() != 4) continue;
        CHECK(alpha_operator_formula(xs) == alpha_bruteforce(xs));
    }
    CHECK(alpha_operator_formula({1, 2, 3, 4}) == Int(42));
}

TEST_CASE("rejects oversize k") {
    CHECK_THROWS_AS(alpha_operator_formula({1, 2, 3, 4, 5}), std::invalid_argument);
}

TEST_CASE("shift operator distributes over powers") {
    // (x+1)^3 expansion through poly_shift
    Poly p;
    p[{3}] = 1;
    const Poly q = poly_shift(p, 0, 1);
    CHECK(poly_eval(q, {2}) == Rat(27));
    CHECK(poly_eval(q, {0}) == Rat(1));
}
