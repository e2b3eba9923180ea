#include "swipt/errors.hpp"
#include "swipt/fading.hpp"
#include "swipt/product_dist.hpp"
#include "swipt/quadrature.hpp"

#include <boost/math/special_functions/bessel.hpp>
#include <doctest.h>

#include <cmath>
#include <vector>

using namespace swipt;

namespace {

EndToEndSnrModel model(int m, double theta, double scale) {
    const double md = m;
    return {scale, {md, 1.0}, {md, 1.0}, CopulaModel::fgm(theta)};
}

const std::vector<double> kThetas = {-1.0, -0.5, 0.0, 0.5, 1.0};

std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> g(n);
    for (int i = 0; i < n; ++i) g[i] = lo * std::pow(hi / lo, i / (n - 1.0));
    return g;
}

// E[g_sr g_rd] for Gamma(m, 1/m) margins under FGM: the density factorises, so
// the mixed term is theta * (E[g (1 - 2F(g))])^2.
double product_moment_by_quadrature(int m, double theta) {
    const NakagamiPower d{static_cast<double>(m), 1.0};
    const double e = quad::integrate_to_infinity(
                         [&](double g) { return g > 0 ? g * (1.0 - 2.0 * power_cdf(d, g)) * power_pdf(d, g) : 0.0; },
                         0.0, {1e-13, 1e-12, 4000})
                         .value;
    return 1.0 + theta * e * e;
}

} // namespace

TEST_SUITE("product_dist") {

TEST_CASE("general product cdf examples") {
    CHECK(product_cdf_general(model(1, 0.0, 1.0), 0.0) == 0.0);
    const double indep = 1.0 - 2.0 * boost::math::cyl_bessel_k(1.0, 2.0);
    CHECK(indep == doctest::Approx(0.7202).epsilon(1e-4));
    CHECK(std::abs(product_cdf_general(model(1, 0.0, 1.0), 1.0) - indep) < 1e-8);
    CHECK(std::abs(product_cdf_general(model(1, 1.0, 1.0), 1.0) - snr_cdf_closed(model(1, 1.0, 1.0), 1.0)) < 1e-6);
    // Non-integer and unequal shapes are served by the general path.
    const EndToEndSnrModel mixed{2.0, {1.5, 1.0}, {2.0, 1.0}, CopulaModel::fgm(0.5)};
    const double v = product_cdf_general(mixed, 1.0);
    CHECK(v > 0.0);
    CHECK(v < 1.0);
}

TEST_CASE("closed-form cdf examples") {
    for (int m = 1; m <= 3; ++m) {
        for (double th : kThetas) {
            const double s = 7.0;
            CHECK(std::abs(snr_cdf_closed(model(m, th, s), 1e4 * s) - 1.0) <= 1e-6);
            CHECK(snr_cdf_closed(model(m, th, s), 0.0) == 0.0);
        }
    }
    const double indep = 1.0 - 2.0 * boost::math::cyl_bessel_k(1.0, 2.0);
    CHECK(std::abs(snr_cdf_closed(model(1, 0.0, 1.0), 1.0) - indep) < 1e-12);

    const EndToEndSnrModel mm = model(2, -1.0, 5.0);
    const double closed = snr_cdf_closed(mm, 2.0);
    CHECK(std::abs(closed - product_cdf_general(mm, 2.0)) <= 1e-6);
    // Reference from an arbitrary-precision evaluation of the defining integral.
    CHECK(std::abs(closed - 0.3172246869935) < 1e-12);
}

TEST_CASE("closed-form pdf examples") {
    CHECK(snr_pdf_closed(model(1, 0.0, 1.0), 1.0) ==
          doctest::Approx(2.0 * boost::math::cyl_bessel_k(0.0, 2.0)).epsilon(1e-12));
    CHECK(snr_pdf_closed(model(1, 0.0, 1.0), 1.0) == doctest::Approx(0.2278).epsilon(1e-3));

    const EndToEndSnrModel fd = model(2, 0.5, 3.0);
    const double h = 1e-4;
    const double diff = (snr_cdf_closed(fd, 1.5 + h) - snr_cdf_closed(fd, 1.5 - h)) / (2.0 * h);
    CHECK(std::abs(diff - snr_pdf_closed(fd, 1.5)) < 1e-5);

    for (int m = 1; m <= 3; ++m) {
        for (double th : {-1.0, 0.0, 1.0}) {
            const EndToEndSnrModel mm = model(m, th, 4.0);
            // Split at the scale so the t/(1-t) map sees a smooth tail.
            const quad::Options opts{1e-11, 1e-10, 4000};
            const double total =
                quad::integrate([&](double y) { return y > 0 ? snr_pdf_closed(mm, y) : 0.0; }, 0.0, 4.0, opts).value +
                quad::integrate_to_infinity([&](double y) { return snr_pdf_closed(mm, y); }, 4.0, opts).value;
            INFO("m = " << m << ", theta = " << th);
            CHECK(std::abs(total - 1.0) <= 1e-7);
        }
    }
}

TEST_CASE("closed form agrees with the copula integral over [1e-3, 1e2] x scale") {
    for (double scale : {1.0, 6.5625, 65.625}) {
        const std::vector<double> grid = log_grid(1e-3 * scale, 1e2 * scale, 40);
        for (int m = 1; m <= 3; ++m) {
            for (double th : kThetas) {
                const EndToEndSnrModel mm = model(m, th, scale);
                double sup = 0.0;
                for (double y : grid) sup = std::max(sup, std::abs(snr_cdf_closed(mm, y) - product_cdf_general(mm, y)));
                INFO("scale = " << scale << ", m = " << m << ", theta = " << th);
                CHECK(sup <= 1e-6);
            }
        }
    }
}

TEST_CASE("cdf monotone in y, pdf nonnegative, lower tail ordered in theta") {
    const std::vector<double> grid = log_grid(1e-3, 1e3, 80);
    for (int m = 1; m <= 3; ++m) {
        for (double th : kThetas) {
            const EndToEndSnrModel mm = model(m, th, 10.0);
            double prev = 0.0;
            for (double y : grid) {
                const double c = snr_cdf_closed(mm, y);
                CHECK(c >= prev - 1e-15);
                CHECK(snr_pdf_closed(mm, y) >= 0.0);
                CHECK(std::abs(c + snr_ccdf_closed(mm, y) - 1.0) < 1e-12);
                prev = c;
            }
        }
        // Deep in the lower tail positive dependence raises the cdf, and it does so for every theta pair.
        for (double y : grid) {
            if (snr_cdf_closed(model(m, 0.0, 10.0), y) > 0.4) break;
            for (std::size_t i = 1; i < kThetas.size(); ++i) {
                INFO("m = " << m << ", y = " << y);
                CHECK(snr_cdf_closed(model(m, kThetas[i], 10.0), y) > snr_cdf_closed(model(m, kThetas[i - 1], 10.0), y));
            }
        }
    }
}

TEST_CASE("theta ordering of the cdf reverses once, just below the median") {
    // The cdf is affine in theta, so the ordering is set by the sign of F(y; 1) - F(y; 0).
    // That difference turns negative where the independent cdf is still between 0.4 and 0.5,
    // so the ordering does not hold over the whole region below the median.
    for (double scale : {1.0, 10.0, 100.0}) {
        for (int m = 1; m <= 4; ++m) {
            const ClosedFormCoefficients cf = closed_form_coefficients(m, scale);
            auto diff = [&](double y) { return snr_cdf_closed(cf, 1.0, y) - snr_cdf_closed(cf, 0.0, y); };
            double lo = 1e-4 * scale;
            double hi = scale;
            REQUIRE(diff(lo) > 0.0);
            REQUIRE(diff(hi) < 0.0);
            for (int i = 0; i < 100; ++i) {
                const double mid = std::sqrt(lo * hi);
                (diff(mid) > 0.0 ? lo : hi) = mid;
            }
            const double f0 = snr_cdf_closed(cf, 0.0, lo);
            INFO("scale = " << scale << ", m = " << m << ", crossing F0 = " << f0);
            CHECK(f0 > 0.4);
            CHECK(f0 < 0.5);
            // The crossing sits at a fixed quantile: y scales with the SNR scale.
            if (scale != 1.0) {
                const ClosedFormCoefficients unit = closed_form_coefficients(m, 1.0);
                CHECK(snr_cdf_closed(unit, 1.0, lo / scale * 0.999) > snr_cdf_closed(unit, 0.0, lo / scale * 0.999));
                CHECK(snr_cdf_closed(unit, 1.0, lo / scale * 1.001) < snr_cdf_closed(unit, 0.0, lo / scale * 1.001));
            }
        }
    }
}

TEST_CASE("deep tail keeps relative precision") {
    // m = 1, theta = 0: survival is x K_1(x) with x = 2 sqrt(y / scale).
    for (double x : {50.0, 300.0, 700.0}) {
        const double y = x * x / 4.0;
        const double want = x * boost::math::cyl_bessel_k(1.0, x);
        INFO("x = " << x);
        CHECK(snr_ccdf_closed(model(1, 0.0, 1.0), y) == doctest::Approx(want).epsilon(1e-9));
    }
}

TEST_CASE("coefficients are positive with extent m") {
    for (int m = 1; m <= 4; ++m) {
        const ClosedFormCoefficients cf = closed_form_coefficients(m, 12.0);
        CHECK(cf.a.size() == static_cast<std::size_t>(m));
        CHECK(cf.q.size() == static_cast<std::size_t>(m));
        CHECK(cf.w.size() == static_cast<std::size_t>(m));
        CHECK(cf.B > 0.0);
        CHECK(cf.zeta == doctest::Approx(2.0 * m / std::sqrt(12.0)));
        CHECK(cf.D > 0.0);
        for (int k = 0; k < m; ++k) {
            CHECK(cf.a[k] > 0.0);
            CHECK(cf.q[k] > 0.0);
            CHECK(cf.w[k] > 0.0);
            REQUIRE(cf.b[k].size() == static_cast<std::size_t>(m));
            for (int n = 0; n < m; ++n) {
                CHECK(cf.b[k][n] > 0.0);
                CHECK(cf.c[k][n] > 0.0);
                CHECK(cf.t[k][n] > 0.0);
                CHECK(cf.z[k][n] > 0.0);
                for (int l = 0; l < m; ++l) CHECK(cf.d[k][n][l] > 0.0);
            }
        }
    }
}

TEST_CASE("closed-form restrictions") {
    const EndToEndSnrModel half{1.0, {1.5, 1.0}, {1.5, 1.0}, CopulaModel::fgm(0.5)};
    CHECK_THROWS_WITH_AS(snr_cdf_closed(half, 1.0), doctest::Contains("product_cdf_general"), UnsupportedClosedForm);
    const EndToEndSnrModel unequal{1.0, {1.0, 1.0}, {2.0, 1.0}, CopulaModel::fgm(0.5)};
    CHECK_THROWS_AS(snr_pdf_closed(unequal, 1.0), UnsupportedClosedForm);
    CHECK_THROWS_AS(snr_cdf_closed(model(1, 0.0, 1.0), -1.0), DomainError);
    CHECK_THROWS_AS(snr_pdf_closed(model(1, 0.0, 1.0), 0.0), DomainError);
}

TEST_CASE("mean SNR factor") {
    for (int m = 1; m <= 6; ++m) CHECK(mean_snr_factor(m, 0.0) == 1.0);
    CHECK(mean_snr_factor(1, 1.0) == doctest::Approx(1.25).epsilon(1e-14));
    CHECK(mean_snr_factor(1, -1.0) == doctest::Approx(0.75).epsilon(1e-14));
    for (int m = 1; m <= 6; ++m) {
        for (double th : {-1.0, -0.3, 0.6, 1.0}) {
            INFO("m = " << m << ", theta = " << th);
            CHECK(mean_snr_factor(m, th) == doctest::Approx(product_moment_by_quadrature(m, th)).epsilon(1e-10));
        }
    }
    CHECK_THROWS_AS(mean_snr_factor(0, 0.5), DomainError);
    CHECK_THROWS_AS(mean_snr_factor(1, 1.5), DomainError);
}

} // TEST_SUITE
