#include "swipt/specfun.hpp"

#include "swipt/errors.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace swipt::specfun {

namespace {

constexpr double kLn2 = std::numbers::ln2;
constexpr double kMaxLog = 709.782712893384;  // ln(DBL_MAX)

double log_cosh(double u) {
    u = std::abs(u);
    return u + std::log1p(std::exp(-2.0 * u)) - kLn2;
}

struct KernelShape {
    double peak_t;
    double peak_log;
    double width;
};

// Exponent of the scaled integrand e^{-x(cosh t - 1)} cosh(vt).
double kernel_log(double v, double x, double t) {
    const double sh = std::sinh(0.5 * t);
    return -2.0 * x * sh * sh + log_cosh(v * t);
}

KernelShape locate_peak(double v, double x) {
    double peak = 0.0;
    if (v * v > x) {
        // f'(t) = -x sinh t + v tanh(vt) has a single positive root below asinh(v/x).
        double lo = 0.0;
        double hi = std::asinh(v / x);
        for (int i = 0; i < 200 && hi - lo > 1e-14 * (1.0 + hi); ++i) {
            const double mid = 0.5 * (lo + hi);
            const double slope = -x * std::sinh(mid) + v * std::tanh(v * mid);
            (slope > 0.0 ? lo : hi) = mid;
        }
        peak = 0.5 * (lo + hi);
    }
    const double sech = 1.0 / std::cosh(std::min(v * peak, 350.0));
    const double curvature = x * std::cosh(peak) - v * v * sech * sech;
    const double width = curvature > 1e-8 ? 1.0 / std::sqrt(curvature) : 1e4;
    return {peak, kernel_log(v, x, peak), width};
}

// ln ∫₀^∞ e^{-x(cosh t - 1)} cosh(vt) dt, i.e. ln(e^x K_v(x)).
double log_scaled_integral(double v, double x) {
    v = std::abs(v);
    const KernelShape shape = locate_peak(v, x);
    constexpr double kCutoff = 45.0;  // e^-45 ≈ 3e-20 relative to the peak

    auto term = [&](double t) { return std::exp(kernel_log(v, x, t) - shape.peak_log); };

    double h = std::min(1.0, shape.width);
    // Coarse sum over the full support.
    double sum = 0.5 * term(0.0);
    long count = 0;
    for (long k = 1;; ++k) {
        const double t = k * h;
        const double e = kernel_log(v, x, t) - shape.peak_log;
        if (t > shape.peak_t && e < -kCutoff) {
            count = k;
            break;
        }
        sum += std::exp(e);
    }
    double estimate = h * sum;

    // The rule converges geometrically, so once successive halvings agree to
    // 1e-14 the remaining error is far smaller; round-off in long sums keeps
    // a tighter target from ever being met.
    for (int level = 0; level < 16; ++level) {
        double mid = 0.0;
        for (long k = 0; k < count; ++k) mid += term((k + 0.5) * h);
        const double refined = 0.5 * estimate + 0.5 * h * mid;
        h *= 0.5;
        count *= 2;
        const double change = std::abs(refined - estimate);
        estimate = refined;
        if (change <= 1e-14 * refined) break;
    }
    return shape.peak_log + std::log(estimate);
}

void check_bessel_args(double v, double x, const char* name) {
    if (std::isnan(v) || std::isnan(x)) throw DomainError(std::string(name) + ": NaN argument");
    if (!(x > 0.0)) throw DomainError(std::string(name) + ": x must be > 0");
}

// K_0 and K_1 by their power series; accurate for 0 < x ≤ 2.
void k01_series(double x, double& k0, double& k1) {
    constexpr double kEulerGamma = std::numbers::egamma;
    const double y = 0.25 * x * x;
    const double log_half = std::log(0.5 * x);

    double i0 = 0.0;
    double i1 = 0.0;
    double s0 = 0.0;
    double s1 = 0.0;
    double term0 = 1.0;  // y^k / (k!)^2
    double term1 = 1.0;  // y^k / (k! (k+1)!)
    double harmonic = 0.0;
    for (int k = 0; k < 200; ++k) {
        if (k > 0) {
            term0 *= y / (static_cast<double>(k) * k);
            term1 *= y / (static_cast<double>(k) * (k + 1));
            harmonic += 1.0 / k;
        }
        i0 += term0;
        i1 += term1;
        s0 += term0 * harmonic;
        // ψ(k+1) + ψ(k+2) = 2(H_k - γ) + 1/(k+1)
        s1 += term1 * (2.0 * (harmonic - kEulerGamma) + 1.0 / (k + 1));
        if (term0 < 1e-18 * i0 && term1 < 1e-18 * i1) break;
    }
    i1 *= 0.5 * x;
    k0 = -(log_half + kEulerGamma) * i0 + s0;
    k1 = 1.0 / x + log_half * i1 - 0.25 * x * s1;
}

// Steed's continued fraction (Temme's CF2) for K_0, K_1; x > 2.
void k01_steed(double x, double& k0, double& k1) {
    constexpr double kEps = 1e-17;
    double b = 2.0 * (1.0 + x);
    double d = 1.0 / b;
    double h = d;
    double delh = d;
    double q1 = 0.0;
    double q2 = 1.0;
    const double a1 = 0.25;
    double q = a1;
    double c = a1;
    double a = -a1;
    double s = 1.0 + q * delh;
    for (int i = 1; i < 100000; ++i) {
        a -= 2 * i;
        c = -a * c / (i + 1.0);
        const double qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        const double dels = q * delh;
        s += dels;
        if (std::abs(dels / s) < kEps) break;
    }
    h *= a1;
    k0 = std::sqrt(std::numbers::pi / (2.0 * x)) * std::exp(-x) / s;
    k1 = k0 * (x + 0.5 - h) / x;
}

} // namespace

double log_bessel_k(double v, double x) {
    check_bessel_args(v, x, "log_bessel_k");
    return log_scaled_integral(v, x) - x;
}

double bessel_k(double v, double x) {
    const double lk = log_bessel_k(v, x);
    if (lk > kMaxLog) return std::numeric_limits<double>::infinity();
    return std::exp(lk);
}

double bessel_k_scaled(double v, double x) {
    check_bessel_args(v, x, "bessel_k_scaled");
    const double lk = log_scaled_integral(v, x);
    if (lk > kMaxLog) return std::numeric_limits<double>::infinity();
    return std::exp(lk);
}

std::vector<double> bessel_k_scaled_sequence(double x, int n_max) {
    check_bessel_args(0.0, x, "bessel_k_scaled_sequence");
    if (n_max < 0) throw DomainError("bessel_k_scaled_sequence: n_max must be >= 0");
    std::vector<double> out(static_cast<std::size_t>(n_max) + 1);
    out[0] = bessel_k_scaled(0.0, x);
    if (n_max >= 1) out[1] = bessel_k_scaled(1.0, x);
    for (int n = 1; n < n_max; ++n) {
        out[n + 1] = out[n - 1] + (2.0 * n / x) * out[n];
    }
    return out;
}

double bessel_k_integer_recurrence(int n, double x) {
    check_bessel_args(n, x, "bessel_k_integer_recurrence");
    n = std::abs(n);
    double k0 = 0.0;
    double k1 = 0.0;
    if (x <= 2.0) {
        k01_series(x, k0, k1);
    } else {
        k01_steed(x, k0, k1);
    }
    if (n == 0) return k0;
    for (int j = 1; j < n; ++j) {
        const double next = k0 + (2.0 * j / x) * k1;
        k0 = k1;
        k1 = next;
    }
    return k1;
}

} // namespace swipt::specfun
