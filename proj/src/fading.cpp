#include "swipt/fading.hpp"

#include "swipt/errors.hpp"
#include "swipt/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace swipt {

namespace {

void check_power_arg(double g, const char* what) {
    if (!(g >= 0.0)) throw DomainError(std::string(what) + ": g must be >= 0");
}

// Acklam's rational approximation to the standard normal quantile. Only used
// to seed the Gamma quantile iteration.
double normal_quantile_guess(double p) {
    static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                   -2.759285104469687e+02, 1.383577518672690e+02,
                                   -3.066479806614716e+01, 2.506628277459239e+00};
    static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                   -1.556989798598866e+02, 6.680131188771972e+01,
                                   -1.328068155288572e+01};
    static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                   -2.400758277161838e+00, -2.549732539343734e+00,
                                   4.374664141464968e+00,  2.938163982698783e+00};
    static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                   2.445134137142996e+00, 3.754408661907416e+00};
    constexpr double plow = 0.02425;
    if (p < plow) {
        const double q = std::sqrt(-2.0 * std::log(p));
        return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    if (p > 1.0 - plow) return -normal_quantile_guess(1.0 - p);
    const double q = p - 0.5;
    const double r = q * q;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

// Standard Gamma(m, 1) lower/upper tails and density at x > 0.
struct GammaTails {
    double lower;
    double upper;
    double density;
};

GammaTails standard_gamma_tails(double m, double x, bool integer_shape, double ln_gamma_m) {
    const double log_density = (m - 1.0) * std::log(x) - x - ln_gamma_m;
    GammaTails out{0.0, 0.0, std::exp(log_density)};
    if (integer_shape && x > m) {
        const int n = static_cast<int>(m);
        double term = 1.0;
        double sum = 1.0;
        for (int k = 1; k < n; ++k) {
            term *= x / k;
            sum += term;
        }
        out.upper = std::exp(-x) * sum;
        out.lower = 1.0 - out.upper;
    } else if (x <= m + 1.0) {
        // Lower-tail series: P = x^m e^{-x} / Γ(m+1) · Σ x^k / ((m+1)...(m+k)).
        double term = 1.0;
        double sum = 1.0;
        for (int k = 1; k < 1000; ++k) {
            term *= x / (m + k);
            sum += term;
            if (term < 1e-17 * sum) break;
        }
        out.lower = out.density * x / m * sum;
        out.upper = 1.0 - out.lower;
    } else {
        out.upper = specfun::gamma_q(m, x);
        out.lower = 1.0 - out.upper;
    }
    return out;
}

} // namespace

bool is_integer_shape(double m) { return m >= 1.0 && m == std::floor(m) && m < 1e6; }

void validate(const NakagamiPower& d) {
    if (!(d.m >= 0.5)) throw DomainError("NakagamiPower: m must be >= 0.5");
    if (!(d.mean_power > 0.0) || std::isinf(d.mean_power)) {
        throw DomainError("NakagamiPower: mean power must be positive and finite");
    }
}

double power_pdf(const NakagamiPower& d, double g) {
    validate(d);
    check_power_arg(g, "power_pdf");
    const double rate = d.m / d.mean_power;
    if (g == 0.0) {
        if (d.m < 1.0) throw DomainError("power_pdf: density is unbounded at g = 0 for m < 1");
        return d.m == 1.0 ? rate : 0.0;
    }
    if (std::isinf(g)) return 0.0;
    return std::exp(d.m * std::log(rate) - specfun::ln_gamma(d.m) + (d.m - 1.0) * std::log(g) -
                    rate * g);
}

double power_cdf(const NakagamiPower& d, double g) {
    validate(d);
    check_power_arg(g, "power_cdf");
    return specfun::gamma_p(d.m, d.m * g / d.mean_power);
}

double power_ccdf(const NakagamiPower& d, double g) {
    validate(d);
    check_power_arg(g, "power_ccdf");
    return specfun::gamma_q(d.m, d.m * g / d.mean_power);
}

double power_cdf_integer_series(const NakagamiPower& d, double g) {
    validate(d);
    check_power_arg(g, "power_cdf_integer_series");
    if (!is_integer_shape(d.m)) {
        throw UnsupportedClosedForm("power_cdf_integer_series: m must be a positive integer");
    }
    const double x = d.m * g / d.mean_power;
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < static_cast<int>(d.m); ++k) {
        term *= x / k;
        sum += term;
    }
    return 1.0 - std::exp(-x) * sum;
}

double power_quantile(const NakagamiPower& d, double p) {
    validate(d);
    if (std::isnan(p) || p < 0.0 || p > 1.0) {
        throw DomainError("power_quantile: p must lie in [0, 1)");
    }
    if (p == 1.0) throw DomainError("power_quantile: p = 1 maps to an unbounded power");
    if (p == 0.0) return 0.0;
    const double scale = d.mean_power / d.m;
    if (d.m == 1.0) return -std::log1p(-p) * scale;

    const double m = d.m;
    const bool integer_shape = is_integer_shape(m);
    const double ln_gamma_m = specfun::ln_gamma(m);
    const bool use_upper = p > 0.5;
    const double q = 1.0 - p;

    // Wilson–Hilferty start, with the small-x power law when it undershoots.
    const double z = normal_quantile_guess(p);
    const double s = 1.0 / (9.0 * m);
    double x = m * std::pow(std::max(1.0 - s + z * std::sqrt(s), 0.0), 3.0);
    const double small_x = std::exp((std::log(p) + specfun::ln_gamma(m + 1.0)) / m);
    if (!(x > 0.0) || (p < 0.05 && small_x < x)) x = small_x;

    double lo = 0.0;
    double hi = std::numeric_limits<double>::infinity();
    for (int iter = 0; iter < 200; ++iter) {
        const GammaTails tails = standard_gamma_tails(m, x, integer_shape, ln_gamma_m);
        // Residual increasing in x, evaluated in whichever tail is small.
        const double r = use_upper ? q - tails.upper : tails.lower - p;
        if (r == 0.0) break;
        (r > 0.0 ? hi : lo) = x;
        double next = x;
        if (tails.density > 0.0) {
            const double delta = r / tails.density;
            const double curvature = 0.5 * delta * ((m - 1.0) / x - 1.0);
            const double denom = 1.0 - curvature;
            next = x - (std::abs(curvature) < 0.5 && denom > 0.0 ? delta / denom : delta);
        }
        if (!(next > lo && next < hi)) {
            next = std::isinf(hi) ? std::max(2.0 * x, x + 1.0) : 0.5 * (lo + hi);
        }
        const double step = std::abs(next - x);
        x = next;
        if (step <= 4.0 * std::numeric_limits<double>::epsilon() * x) break;
        if (!std::isinf(hi) && hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * hi) break;
    }
    return x * scale;
}

} // namespace swipt
