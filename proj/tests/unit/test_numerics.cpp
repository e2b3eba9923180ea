#include "swipt/errors.hpp"
#include "swipt/quadrature.hpp"
#include "swipt/random.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <set>

using namespace swipt;

TEST_SUITE("numerics") {

TEST_CASE("Gauss-Kronrod on smooth and singular integrands") {
    CHECK(quad::integrate([](double x) { return std::sin(x); }, 0.0, std::numbers::pi).value ==
          doctest::Approx(2.0).epsilon(1e-12));
    // Integrable endpoint singularity.
    CHECK(quad::integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0).value ==
          doctest::Approx(2.0).epsilon(1e-9));
    CHECK(quad::integrate_to_infinity([](double x) { return std::exp(-x); }, 0.0).value ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(quad::integrate_to_infinity([](double x) { return 1.0 / (1.0 + x * x); }, 0.0).value ==
          doctest::Approx(std::numbers::pi / 2.0).epsilon(1e-10));
}

TEST_CASE("non-convergence reports the achieved error") {
    quad::Options opts;
    opts.max_intervals = 3;
    opts.abs_tol = 1e-15;
    opts.rel_tol = 1e-15;
    try {
        quad::integrate([](double x) { return std::sin(1.0 / x); }, 1e-4, 1.0, opts);
        FAIL("expected QuadratureError");
    } catch (const QuadratureError& e) {
        CHECK(e.error_estimate() > 0.0);
        CHECK(std::isfinite(e.value()));
    }
}

TEST_CASE("Philox4x32-10 known-answer vectors") {
    // Random123 kat_vectors: philox4x32 10 rounds.
    auto z = philox4x32_10({0, 0, 0, 0}, {0, 0});
    CHECK(z[0] == 0x6627e8d5u);
    CHECK(z[1] == 0xe169c58du);
    CHECK(z[2] == 0xbc57ac4cu);
    CHECK(z[3] == 0x9b00dbd8u);
    auto f = philox4x32_10({0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu}, {0xffffffffu, 0xffffffffu});
    CHECK(f[0] == 0x408f276du);
    CHECK(f[1] == 0x41c83b0eu);
    CHECK(f[2] == 0xa20bc7c6u);
    CHECK(f[3] == 0x6d5451fdu);
    auto p = philox4x32_10({0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u}, {0xa4093822u, 0x299f31d0u});
    CHECK(p[0] == 0xd16cfe09u);
    CHECK(p[1] == 0x94fdccebu);
    CHECK(p[2] == 0x5001e420u);
    CHECK(p[3] == 0x24126ea1u);
}

TEST_CASE("streams are deterministic, distinct and strictly inside (0, 1)") {
    PhiloxStream a(7, 0);
    PhiloxStream b(7, 0);
    PhiloxStream c(7, 1);
    PhiloxStream d(8, 0);
    std::set<double> seen;
    double sum = 0.0;
    const int n = 200000;
    for (int i = 0; i < n; ++i) {
        const double x = a.uniform();
        CHECK(x == b.uniform());
        REQUIRE(x > 0.0);
        REQUIRE(x < 1.0);
        sum += x;
        if (i < 1000) seen.insert(x);
    }
    CHECK(seen.size() == 1000);
    CHECK(c.uniform() != PhiloxStream(7, 0).uniform());
    CHECK(d.uniform() != PhiloxStream(7, 0).uniform());
    // Mean of n uniforms: stderr = 1/sqrt(12 n).
    CHECK(std::abs(sum / n - 0.5) < 4.0 / std::sqrt(12.0 * n));
}

} // TEST_SUITE
