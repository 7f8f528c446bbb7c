#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "arctic/quadrature.hpp"

using namespace arctic;
using doctest::Approx;

TEST_CASE("smooth integrals") {
    CHECK(integrate([](double x) { return x * x; }, 0, 1) == Approx(1.0 / 3).epsilon(1e-13));
    CHECK(integrate([](double x) { return std::sin(x); }, 0, 3.0) ==
          Approx(1.0 - std::cos(3.0)).epsilon(1e-12));
    CHECK(integrate([](double) { return 1.0; }, 2, 2) == Approx(0.0));
}

TEST_CASE("error estimate is reported") {
    const auto r = integrate_full([](double x) { return std::exp(x); }, 0, 1);
    CHECK(r.value == Approx(std::exp(1.0) - 1.0).epsilon(1e-13));
    CHECK(r.error_estimate < 1e-9);
}

TEST_CASE("log primitive and exact log integrals") {
    CHECK(log_primitive(0.0) == 0.0);
    CHECK(log_integral(0, 1, 0.5) == Approx(-std::log(2.0) - 1.0).epsilon(1e-14));
    // midpoint-Riemann oracle; midpoints never hit the singular point
    double riemann = 0.0;
    const int slices = 2'000'000;
    for (int i = 0; i < slices; ++i) {
        const double t = (i + 0.5) / slices;
        riemann += std::log(std::fabs(t - 0.3));
    }
    riemann /= slices;
    CHECK(log_integral(0, 1, 0.3) == Approx(riemann).epsilon(1e-5));
}

TEST_CASE("log-singular quadrature with interior singularity") {
    // f(t) = t against log|t-c|: primitive ((t^2-c^2)/2) log|t-c| - t^2/4 - ct/2
    const double c = 0.3;
    auto oracle = [c](double t) {
        const double lg = t == c ? 0.0 : std::log(std::fabs(t - c));
        return 0.5 * (t * t - c * c) * lg - 0.25 * t * t - 0.5 * c * t;
    };
    const double expected = oracle(1.0) - oracle(0.0);
    const double got = integrate_log_singular([](double t) { return t; }, 0, 1, c);
    CHECK(got == Approx(expected).epsilon(1e-10));
    // singularity at an endpoint
    const double got_end = integrate_log_singular([](double t) { return t; }, c, 1, c);
    const double expected_end = oracle(1.0) - oracle(c);
    CHECK(got_end == Approx(expected_end).epsilon(1e-10));
    CHECK(integrate_log_singular([](double) { return 1.0; }, 0, 1, 0.5) ==
          Approx(log_integral(0, 1, 0.5)).epsilon(1e-12));
}

TEST_CASE("principal value with polynomial numerators") {
    for (double s : {-0.4, 0.0, 0.3, 0.72}) {
        const double expect_const = std::log((1.0 + s) / (1.0 - s));
        CHECK(integrate_pv([](double) { return 1.0; }, -1, 1, s) ==
              Approx(expect_const).epsilon(1e-11));
        const double expect_sq = -2.0 * s + s * s * std::log((1.0 + s) / (1.0 - s));
        CHECK(integrate_pv([](double t) { return t * t; }, -1, 1, s) ==
              Approx(expect_sq).epsilon(1e-10));
    }
    CHECK_THROWS_AS(integrate_pv([](double) { return 1.0; }, -1, 1, 1.5),
                    std::invalid_argument);
}

TEST_CASE("principal value of an odd-symmetric pole vanishes") {
    CHECK(integrate_pv([](double) { return 2.0; }, -1, 1, 0.0) == Approx(0.0));
}
