#include "swipt/product_dist.hpp"

#include "swipt/errors.hpp"
#include "swipt/quadrature.hpp"
#include "swipt/specfun.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace swipt {

namespace {

constexpr double kClampSlack = 1e-9;

double ln_factorial(int n) { return specfun::ln_gamma(n + 1.0); }

// ln(e^x K_|v|(x)) lookup for integer orders at one argument.
class ScaledBesselTable {
public:
    ScaledBesselTable(double x, int n_max) : x_(x), values_(specfun::bessel_k_scaled_sequence(x, n_max)) {}

    // ln(y^p K_v(x)) = p ln y - x + ln(e^x K_v(x))
    double log_term(int order, double power, double log_y) const {
        return power * log_y - x_ + std::log(values_.at(static_cast<std::size_t>(std::abs(order))));
    }

private:
    double x_;
    std::vector<double> values_;
};

double clamp_probability(double p, const char* what) {
    if (p < -kClampSlack || p > 1.0 + kClampSlack || std::isnan(p)) {
        std::ostringstream os;
        os << what << ": numerical excursion outside [0, 1] (" << p << ")";
        throw std::runtime_error(os.str());
    }
    return std::min(1.0, std::max(0.0, p));
}

void check_theta(double theta) {
    if (!(theta >= -1.0 && theta <= 1.0)) throw DomainError("theta must lie in [-1, 1]");
}

double model_theta(const EndToEndSnrModel& model) {
    return model.copula.family == CopulaFamily::FGM ? model.copula.theta : 0.0;
}

} // namespace

ClosedFormCoefficients closed_form_coefficients(int m, double snr_scale) {
    if (m < 1) throw UnsupportedClosedForm("closed form requires integer m >= 1");
    if (!(snr_scale > 0.0) || std::isinf(snr_scale)) {
        throw DomainError("snr scale must be positive and finite");
    }
    ClosedFormCoefficients cf;
    cf.m = m;
    cf.snr_scale = snr_scale;
    const double md = m;
    const double lm = std::log(md);
    const double lg = std::log(snr_scale);
    const double ln2 = std::numbers::ln2;
    const std::size_t M = static_cast<std::size_t>(m);

    cf.B = std::exp(ln2 + 2.0 * md * lm - md * lg - 2.0 * specfun::ln_gamma(md));
    cf.zeta = 2.0 * md / std::sqrt(snr_scale);
    // m^j / γ̂^{j/2} in log form
    auto lp = [&](int j) { return j * lm - 0.5 * j * lg; };

    cf.a.resize(M);
    cf.q.resize(M);
    cf.w.resize(M);
    cf.b.assign(M, std::vector<double>(M));
    cf.c.assign(M, std::vector<double>(M));
    cf.t.assign(M, std::vector<double>(M));
    cf.z.assign(M, std::vector<double>(M));
    cf.d.assign(M, std::vector<std::vector<double>>(M, std::vector<double>(M)));
    for (int n = 0; n < m; ++n) {
        cf.a[n] = std::exp(lp(n) - ln_factorial(n));
        cf.q[n] = std::exp((2.0 - 0.5 * n) * ln2 + lp(n) - ln_factorial(n));
        cf.w[n] = std::exp((2.0 - md - n) * ln2 - ln_factorial(n));
    }
    for (int k = 0; k < m; ++k) {
        for (int n = 0; n < m; ++n) {
            const double lkn = lp(k + n) - ln_factorial(k) - ln_factorial(n);
            cf.b[k][n] = std::exp(0.5 * (n - k - md + 2.0) * ln2 + lkn);
            // c is indexed [n][l]; the loop variables play (n, l) = (k, n) here.
            cf.c[k][n] = std::exp(0.5 * (-n + md - k) * ln2 + lkn);
            cf.t[k][n] = std::exp(2.0 * ln2 + lkn);
            cf.z[k][n] = std::exp((2.0 - 2.0 * md - k - n) * ln2 - ln_factorial(k) - ln_factorial(n));
            for (int l = 0; l < m; ++l) {
                cf.d[k][n][l] = std::exp(ln2 + lp(k + n + l) - ln_factorial(k) - ln_factorial(n) -
                                         ln_factorial(l));
            }
        }
    }
    cf.D = 1.0 / (2.0 * std::numbers::pi * std::exp(2.0 * specfun::ln_gamma(md)) * ln2);
    return cf;
}

int closed_form_order(const EndToEndSnrModel& model) {
    validate(model.copula);
    validate(model.marginal_sr);
    validate(model.marginal_rd);
    if (model.marginal_sr.m != model.marginal_rd.m) {
        throw UnsupportedClosedForm(
            "closed form needs the same m on both hops; use product_cdf_general");
    }
    if (!is_integer_shape(model.marginal_sr.m)) {
        throw UnsupportedClosedForm("closed form needs integer m >= 1; use product_cdf_general");
    }
    if (model.marginal_sr.mean_power != 1.0 || model.marginal_rd.mean_power != 1.0) {
        throw UnsupportedClosedForm(
            "closed form assumes unit mean powers; fold the means into the snr scale");
    }
    return static_cast<int>(model.marginal_sr.m);
}

double product_cdf_general(const EndToEndSnrModel& model, double y) {
    validate(model.copula);
    validate(model.marginal_sr);
    validate(model.marginal_rd);
    if (!(model.snr_scale > 0.0)) throw DomainError("product_cdf_general: snr scale must be > 0");
    if (!(y >= 0.0)) throw DomainError("product_cdf_general: y must be >= 0");
    if (y == 0.0) return 0.0;
    if (std::isinf(y)) return 1.0;
    const double x = y / model.snr_scale;

    auto integrand = [&](double u) {
        if (u <= 0.0) return 1.0;
        if (u >= 1.0) return 0.0;
        const double g_sr = power_quantile(model.marginal_sr, u);
        if (g_sr == 0.0) return 1.0;
        const double v = power_cdf(model.marginal_rd, x / g_sr);
        return conditional_cdf(model.copula, v, u);
    };
    quad::Options opts;
    opts.abs_tol = 1e-10;
    opts.rel_tol = 1e-10;
    const quad::Result r = quad::integrate(integrand, 0.0, 1.0, opts);
    return clamp_probability(r.value, "product_cdf_general");
}

double snr_ccdf_closed(const ClosedFormCoefficients& cf, double theta, double y) {
    check_theta(theta);
    if (!(y >= 0.0)) throw DomainError("snr_ccdf_closed: y must be >= 0");
    if (y == 0.0) return 1.0;
    if (std::isinf(y)) return 0.0;
    const int m = cf.m;
    const double md = m;
    const double log_y = std::log(y);
    const double root_y = std::sqrt(y);
    const double x1 = cf.zeta * root_y;
    const double x2 = cf.zeta * std::sqrt(2.0 * y);
    const double x3 = 2.0 * cf.zeta * root_y;
    const ScaledBesselTable k1(x1, m);
    const ScaledBesselTable k2(x2, 2 * m);
    const ScaledBesselTable k3(x3, 2 * m);
    const double log_pref = 0.5 * std::log(2.0 * cf.B);

    double s1 = 0.0;
    for (int n = 0; n < m; ++n) {
        s1 += std::exp(log_pref + std::log(cf.a[n]) + k1.log_term(n - m, 0.5 * (md + n), log_y));
    }
    double s2 = 0.0;
    double s3 = 0.0;
    double s4 = 0.0;
    if (theta != 0.0) {
        for (int k = 0; k < m; ++k) {
            for (int n = 0; n < m; ++n) {
                s2 += std::exp(log_pref + std::log(cf.b[k][n]) +
                               k2.log_term(n - k - m, 0.5 * (k + n + md), log_y));
                // (n, l) = (k, n)
                s3 += std::exp(log_pref + std::log(cf.c[k][n]) +
                               k2.log_term(n - m + k, 0.5 * (n + md + k), log_y));
                for (int l = 0; l < m; ++l) {
                    s4 += std::exp(log_pref + std::log(cf.d[k][n][l]) +
                                   k3.log_term(n + l - k - m, 0.5 * (k + n + l + md), log_y));
                }
            }
        }
    }
    const double ccdf = s1 + theta * (s1 - s2 - s3 + s4);
    return clamp_probability(ccdf, "snr_ccdf_closed");
}

double snr_cdf_closed(const ClosedFormCoefficients& cf, double theta, double y) {
    return clamp_probability(1.0 - snr_ccdf_closed(cf, theta, y), "snr_cdf_closed");
}

double snr_ccdf_closed(const EndToEndSnrModel& model, double y) {
    const int m = closed_form_order(model);
    return snr_ccdf_closed(closed_form_coefficients(m, model.snr_scale), model_theta(model), y);
}

double snr_cdf_closed(const EndToEndSnrModel& model, double y) {
    const int m = closed_form_order(model);
    return snr_cdf_closed(closed_form_coefficients(m, model.snr_scale), model_theta(model), y);
}

double snr_pdf_closed(const ClosedFormCoefficients& cf, double theta, double y) {
    check_theta(theta);
    if (!(y > 0.0)) throw DomainError("snr_pdf_closed: y must be > 0");
    if (std::isinf(y)) return 0.0;
    const int m = cf.m;
    const double md = m;
    const double log_y = std::log(y);
    const double root_y = std::sqrt(y);
    const ScaledBesselTable k1(cf.zeta * root_y, 1);
    const ScaledBesselTable k2(cf.zeta * std::sqrt(2.0 * y), m);
    const ScaledBesselTable k3(2.0 * cf.zeta * root_y, m);
    const double log_b = std::log(cf.B);

    const double base = std::exp(log_b + k1.log_term(0, md - 1.0, log_y));
    double sq = 0.0;
    double st = 0.0;
    if (theta != 0.0) {
        for (int k = 0; k < m; ++k) {
            sq += std::exp(log_b + std::log(cf.q[k]) + k2.log_term(k, 0.5 * k + md - 1.0, log_y));
            for (int n = 0; n < m; ++n) {
                st += std::exp(log_b + std::log(cf.t[k][n]) +
                               k3.log_term(n - k, 0.5 * (k + n) + md - 1.0, log_y));
            }
        }
    }
    return std::max(0.0, base + theta * (base - sq + st));
}

double snr_pdf_closed(const EndToEndSnrModel& model, double y) {
    const int m = closed_form_order(model);
    return snr_pdf_closed(closed_form_coefficients(m, model.snr_scale), model_theta(model), y);
}

double mean_snr_factor(int m, double theta) {
    if (m < 1) throw DomainError("mean_snr_factor: m must be a positive integer");
    check_theta(theta);
    const double md = m;
    const double ln2 = std::numbers::ln2;
    double single = 0.0;
    double pair = 0.0;
    for (int k = 0; k < m; ++k) {
        const double bk = specfun::beta(md, k + 1.0);
        single += std::exp(-(md + k - 1.0) * ln2) / (md * bk);
        for (int n = 0; n < m; ++n) {
            const double bn = specfun::beta(md, n + 1.0);
            pair += std::exp(-(2.0 * md + k + n) * ln2) / (md * md * bk * bn);
        }
    }
    const double f = single - pair;
    return 1.0 + theta * (1.0 - f);
}

} // namespace swipt
