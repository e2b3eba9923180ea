#include "swipt/errors.hpp"
#include "swipt/fading.hpp"
#include "swipt/quadrature.hpp"
#include "swipt/random.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace swipt;

TEST_SUITE("fading") {

TEST_CASE("pdf examples") {
    CHECK(power_pdf({1.0, 1.0}, 0.7) == doctest::Approx(std::exp(-0.7)).epsilon(1e-14));
    // Direct density with Boost's gamma function as an independent normaliser.
    const double want = std::pow(2.0, 2.0) / boost::math::tgamma(2.0) * 1.0 * std::exp(-2.0);
    CHECK(power_pdf({2.0, 1.0}, 1.0) == doctest::Approx(want).epsilon(1e-14));
    CHECK(power_pdf({2.0, 1.0}, 1.0) == doctest::Approx(4.0 * std::exp(-2.0)).epsilon(1e-14));
    CHECK(power_pdf({2.0, 1.0}, 0.0) == 0.0);
    CHECK(power_pdf({1.0, 2.0}, 0.0) == doctest::Approx(0.5));
    CHECK_THROWS_AS(power_pdf({0.5, 1.0}, 0.0), DomainError);
    CHECK(std::isfinite(power_pdf({0.5, 1.0}, 0.1)));
    CHECK_THROWS_AS(power_pdf({1.0, 1.0}, -0.1), DomainError);

    for (double m : {0.5, 1.0, 2.0, 3.5}) {
        for (double mean : {0.5, 1.0, 3.0}) {
            const NakagamiPower d{m, mean};
            const double total = quad::integrate_to_infinity([&](double g) { return g > 0 ? power_pdf(d, g) : 0.0; },
                                                             0.0, {1e-12, 1e-10, 4000})
                                     .value;
            INFO("m = " << m << ", mean = " << mean);
            CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
        }
    }
}

TEST_CASE("cdf examples and series agreement") {
    CHECK(power_cdf({1.0, 1.0}, std::numbers::ln2) == doctest::Approx(0.5).epsilon(1e-15));
    // Hand-rolled series 1 - e^{-2}(1 + 2).
    CHECK(power_cdf({2.0, 1.0}, 1.0) == doctest::Approx(1.0 - 3.0 * std::exp(-2.0)).epsilon(1e-14));
    for (double m : {0.5, 1.0, 4.0}) CHECK(power_cdf({m, 1.0}, 0.0) == 0.0);

    for (int m = 1; m <= 4; ++m) {
        for (double mean : {1.0, 2.5}) {
            const NakagamiPower d{static_cast<double>(m), mean};
            for (double g = 1e-3; g <= 1e2; g *= 1.2) {
                INFO("m = " << m << ", g = " << g);
                CHECK(std::abs(power_cdf(d, g) - power_cdf_integer_series(d, g)) <= 1e-12);
                CHECK(std::abs(power_cdf(d, g) + power_ccdf(d, g) - 1.0) <= 1e-14);
            }
        }
    }
    CHECK_THROWS_AS(power_cdf_integer_series({1.5, 1.0}, 1.0), UnsupportedClosedForm);
}

TEST_CASE("cdf nondecreasing and tends to one") {
    for (double m : {0.5, 1.0, 2.0, 5.0}) {
        const NakagamiPower d{m, 1.0};
        double prev = 0.0;
        for (double g = 1e-4; g < 200.0; g *= 1.1) {
            const double v = power_cdf(d, g);
            CHECK(v >= prev);
            prev = v;
        }
        CHECK(prev == doctest::Approx(1.0).epsilon(1e-15));
    }
}

TEST_CASE("quantile examples and round trip") {
    CHECK(power_quantile({1.0, 1.0}, 0.5) == doctest::Approx(std::numbers::ln2).epsilon(1e-15));
    for (double m : {0.5, 1.0, 3.0}) CHECK(power_quantile({m, 1.0}, 0.0) == 0.0);
    const double v = power_quantile({3.0, 2.0}, 0.9);
    CHECK(std::abs(power_cdf({3.0, 2.0}, v) - 0.9) <= 1e-12);

    for (double m : {0.5, 0.75, 1.0, 1.5, 2.0, 3.0, 4.0, 7.0}) {
        for (double mean : {1.0, 0.3, 4.0}) {
            const NakagamiPower d{m, mean};
            for (double p : {1e-9, 0.001, 0.01, 0.1, 0.5, 0.9, 0.99, 0.999, 1.0 - 1e-9}) {
                INFO("m = " << m << ", mean = " << mean << ", p = " << p);
                CHECK(std::abs(power_cdf(d, power_quantile(d, p)) - p) <= 1e-10);
            }
        }
    }
    CHECK_THROWS_AS(power_quantile({1.0, 1.0}, 1.0), DomainError);
    CHECK_THROWS_AS(power_quantile({1.0, 1.0}, -0.1), DomainError);
}

TEST_CASE("inverse-transform sample mean") {
    for (double m : {1.0, 2.0, 3.0}) {
        const NakagamiPower d{m, 1.7};
        PhiloxStream rng(55, static_cast<std::uint64_t>(m));
        const int n = 1000000;
        double sum = 0.0;
        for (int i = 0; i < n; ++i) sum += power_quantile(d, rng.uniform());
        // Gamma variance is mean^2 / m.
        const double se = d.mean_power / std::sqrt(m * n);
        INFO("m = " << m);
        CHECK(std::abs(sum / n - d.mean_power) < 4.0 * se);
    }
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(validate(NakagamiPower{0.4, 1.0}), DomainError);
    CHECK_THROWS_AS(validate(NakagamiPower{1.0, 0.0}), DomainError);
    CHECK(is_integer_shape(3.0));
    CHECK_FALSE(is_integer_shape(2.5));
}

} // TEST_SUITE
