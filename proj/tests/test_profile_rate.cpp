#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "arctic/profile.hpp"
#include "arctic/rate.hpp"
#include "arctic/rng.hpp"

using namespace arctic;
using doctest::Approx;

TEST_CASE("theta endpoints, center and symmetry") {
    CHECK(theta(0.0) == Approx(0.0).epsilon(1e-15));
    CHECK(theta(1.0) == Approx(0.0).epsilon(1e-15));
    CHECK(theta(0.5) == Approx(0.375).epsilon(1e-15));
    for (double y : {0.05, 0.2, 0.37, 0.44})
        CHECK(theta(y) == Approx(theta(1.0 - y)).epsilon(1e-14));
    CHECK_THROWS_AS(theta(1.5), std::invalid_argument);
}

TEST_CASE("embed_sequence") {
    const Profile f = embed_sequence({0, 0, 1, 2, 2, 2, 3});
    CHECK(f.xs.size() == 7);
    CHECK(f(0.0) == Approx(0.0));
    CHECK(f(1.0 / 6) == Approx(0.0));
    CHECK(f(3.0 / 6) == Approx(2.0 / 6));
    CHECK(f(1.0) == Approx(0.5));
    CHECK(is_admissible(f));

    const Profile id = embed_sequence({0, 1, 2, 3});
    for (double x : {0.0, 0.3, 1.0}) CHECK(id(x) == Approx(x));

    const Profile half = embed_sequence({0, 0, 1});
    CHECK(half.xs == std::vector<double>{0.0, 0.5, 1.0});
    CHECK(half.ys == std::vector<double>{0.0, 0.0, 0.5});

    CHECK_THROWS_AS(embed_sequence({0, 2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(embed_sequence({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(embed_sequence({0, 1, 0}), std::invalid_argument);
}

TEST_CASE("rate_I closed-form anchors") {
    const Profile diag = make_profile({0, 1}, {0, 1});
    CHECK(rate_I(diag) == Approx(0.0).epsilon(1e-14));

    const Profile half = make_profile({0, 1}, {0, 0.5});
    CHECK(rate_I(half) == Approx(-0.375).epsilon(1e-14));

    const Profile step = embed_sequence({0, 0, 1});
    CHECK(rate_I(step) == Approx(std::log(2.0) / 4 - 0.375).epsilon(1e-14));
}

TEST_CASE("rate_I rejects inadmissible profiles") {
    CHECK_THROWS_AS(rate_I(make_profile({0, 1}, {0.2, 0.5})), std::invalid_argument);
    CHECK_THROWS_AS(rate_I(make_profile({0, 0.5, 1}, {0, 0.4, 0.2})),
                    std::invalid_argument);
    CHECK_THROWS_AS(rate_I(make_profile({0, 0.5, 1}, {0, 0.6, 0.9})),
                    std::invalid_argument);
}

TEST_CASE("functional_J basics") {
    const Profile zero = make_profile({0, 1}, {0, 0});
    CHECK(functional_J(zero) == Approx(0.0));
    const Profile diag = make_profile({0, 1}, {0, 1});
    CHECK(functional_J(diag) == Approx(1.5).epsilon(1e-14));
    CHECK(inner_product(diag, zero) == Approx(0.0));
}

static Profile random_admissible(Rng& rng, int n) {
    std::vector<int> u(n + 1, 0);
    for (int i = 1; i <= n; ++i) u[i] = u[i - 1] + (rng.coin() ? 1 : 0);
    return embed_sequence(u);
}

TEST_CASE("I and J are linked by the coordinate change") {
    Rng rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        const Profile f = random_admissible(rng, 12);
        const double lhs = rate_I(f);
        const double rhs = 0.25 * functional_J(g_of_f(f)) - 0.375;
        CHECK(lhs == Approx(rhs).epsilon(1e-11));
    }
}

TEST_CASE("J is nonnegative on random Lipschitz profiles") {
    Rng rng(77);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 10;
        std::vector<double> xs(n + 1), ys(n + 1);
        for (int i = 0; i <= n; ++i) xs[i] = static_cast<double>(i) / n;
        ys[0] = 0.0;
        for (int i = 1; i <= n; ++i)
            ys[i] = ys[i - 1] + (2.0 * rng.uniform01() - 1.0) / n;
        const Profile g = make_profile(xs, ys);
        CHECK(functional_J(g) >= -1e-12);
    }
}

TEST_CASE("bilinear form is symmetric") {
    Rng rng(5150);
    const Profile a = random_admissible(rng, 9);
    const Profile b = random_admissible(rng, 14);
    CHECK(inner_product(a, b) == Approx(inner_product(b, a)).epsilon(1e-12));
}

TEST_CASE("exact large-deviation anchor at n = 2") {
    const Profile f = embed_sequence({0, 0, 1});
    const double exponent = 4.0 * (rate_I(f) + theta(0.5));
    CHECK(std::exp(-exponent) == Approx(0.5).epsilon(1e-12));
}

TEST_CASE("lipschitz projection returns admissible g-profiles") {
    Rng rng(31);
    const int n = 50;
    std::vector<double> xs(n + 1), ys(n + 1);
    for (int i = 0; i <= n; ++i) {
        xs[i] = static_cast<double>(i) / n;
        ys[i] = std::sin(6.0 * xs[i]) * rng.uniform01();
    }
    const Profile g = lipschitz_project(xs, ys, 0.0, -0.4);
    CHECK(g.ys.front() == Approx(0.0));
    CHECK(g.ys.back() == Approx(-0.4));
    for (int i = 0; i < n; ++i)
        CHECK(std::fabs(g.ys[i + 1] - g.ys[i]) <= (xs[i + 1] - xs[i]) + 1e-12);
}
