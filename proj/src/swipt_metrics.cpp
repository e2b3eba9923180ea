#include "swipt/swipt_metrics.hpp"

#include "swipt/errors.hpp"
#include "swipt/fading.hpp"
#include "swipt/product_dist.hpp"
#include "swipt/quadrature.hpp"
#include "swipt/specfun.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

namespace swipt {

namespace {

constexpr double kLn2 = std::numbers::ln2;

void check_m(int m) {
    if (m < 1) throw DomainError("fading m must be an integer >= 1");
}

void check_theta(double theta) {
    if (!(theta >= -1.0 && theta <= 1.0)) throw DomainError("theta must lie in [-1, 1]");
}

void check_scale(double s, const char* what) {
    if (!(s > 0.0) || std::isinf(s)) throw DomainError(std::string(what) + " must be positive and finite");
}

void check_threshold(const OutageQuery& q) {
    if (!(q.threshold >= 0.0)) throw DomainError("outage threshold must be >= 0");
}

quad::Options capacity_tolerance() {
    quad::Options opts;
    opts.abs_tol = 1e-11;
    opts.rel_tol = 1e-11;
    return opts;
}

EndToEndSnrModel rd_model(double gamma_hat_d, int m, double theta) {
    EndToEndSnrModel model;
    model.snr_scale = gamma_hat_d;
    model.marginal_sr = {static_cast<double>(m), 1.0};
    model.marginal_rd = {static_cast<double>(m), 1.0};
    model.copula = CopulaModel::fgm(theta);
    return model;
}

double meijer_capacity(std::vector<double> a, double x) {
    return specfun::meijer_g(specfun::meijer_g_capacity_shape(std::move(a)), x);
}

} // namespace

void validate(const SwiptSystem& sys) {
    auto positive = [](double v) { return v > 0.0 && std::isfinite(v); };
    if (!positive(sys.source_power)) throw DomainError("source power must be > 0");
    if (!positive(sys.noise_power)) throw DomainError("noise power must be > 0");
    if (!positive(sys.dist_sr) || !positive(sys.dist_rd)) throw DomainError("distances must be > 0");
    if (!positive(sys.pathloss_exp)) throw DomainError("path-loss exponent must be > 0");
    if (!(sys.ps_factor > 0.0 && sys.ps_factor < 1.0)) throw DomainError("rho must lie in (0, 1)");
    if (!(sys.eh_efficiency > 0.0 && sys.eh_efficiency <= 1.0)) {
        throw DomainError("kappa must lie in (0, 1]");
    }
    check_m(sys.fading_m);
    check_theta(sys.theta);
}

DerivedSnrScales derive_snr_scales(const SwiptSystem& sys) {
    validate(sys);
    const double n = sys.noise_power;
    const double a = sys.pathloss_exp;
    DerivedSnrScales s;
    s.gamma_hat_r = (1.0 - sys.ps_factor) * sys.source_power / (std::pow(sys.dist_sr, a) * n);
    s.gamma_hat_d = sys.eh_efficiency * sys.ps_factor * sys.source_power /
                    (std::pow(sys.dist_sr * sys.dist_rd, a) * n);
    return s;
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double ergodic_capacity_sr(double gamma_hat_r, int m) {
    check_scale(gamma_hat_r, "gamma_hat_r");
    check_m(m);
    const NakagamiPower unit{static_cast<double>(m), 1.0};
    // E[ln(1 + gamma_hat_r g)] over the unit-mean Gamma law of g.
    auto integrand = [&](double g) {
        if (g == 0.0) return 0.0;
        return std::log1p(gamma_hat_r * g) * power_pdf(unit, g);
    };
    const quad::Result r = quad::integrate_to_infinity(integrand, 0.0, capacity_tolerance());
    return r.value / (2.0 * kLn2);
}

double ergodic_capacity_rd(double gamma_hat_d, int m, double theta) {
    check_scale(gamma_hat_d, "gamma_hat_d");
    check_m(m);
    check_theta(theta);
    const ClosedFormCoefficients cf = closed_form_coefficients(m, gamma_hat_d);
    // y = gamma_hat_d s keeps the bulk of the density near s ~ 1.
    auto integrand = [&](double s) {
        if (s == 0.0) return 0.0;
        const double y = gamma_hat_d * s;
        return std::log1p(y) * snr_pdf_closed(cf, theta, y) * gamma_hat_d;
    };
    const quad::Result r = quad::integrate_to_infinity(integrand, 0.0, capacity_tolerance());
    return r.value / (2.0 * kLn2);
}

SrCapacityReport ergodic_capacity_sr_report(double gamma_hat_r, int m) {
    SrCapacityReport rep;
    rep.quadrature = ergodic_capacity_sr(gamma_hat_r, m);
    const double md = m;
    const double pref = 1.0 / (2.0 * std::exp(specfun::ln_gamma(md)) * kLn2);
    const double x = gamma_hat_r / md;
    rep.meijer_a1_one_minus_m = pref * meijer_capacity({1.0 - md, 1.0, 1.0}, x);
    rep.meijer_a1_one_minus_m_over_gr = pref * meijer_capacity({1.0 - md / gamma_hat_r, 1.0, 1.0}, x);
    return rep;
}

RdCapacityReport ergodic_capacity_rd_report(double gamma_hat_d, int m, double theta) {
    RdCapacityReport rep;
    rep.quadrature = ergodic_capacity_rd(gamma_hat_d, m, theta);
    const ClosedFormCoefficients cf = closed_form_coefficients(m, gamma_hat_d);
    const double md = m;
    const double z2 = cf.zeta * cf.zeta;
    const double g1 = meijer_capacity({1.0 - md, 1.0 - md, 1.0, 1.0}, 4.0 / z2);
    double bracket = g1;
    if (theta != 0.0) {
        double single = 0.0;
        double pair = 0.0;
        for (int k = 0; k < m; ++k) {
            single += cf.w[k] * meijer_capacity({1.0 - (md + k), 1.0 - md, 1.0, 1.0}, 2.0 / z2);
            for (int n = 0; n < m; ++n) {
                pair += cf.z[k][n] *
                        meijer_capacity({1.0 - (md + n), 1.0 - (md + k), 1.0, 1.0}, 1.0 / z2);
            }
        }
        bracket += theta * (g1 - single + pair);
    }
    rep.meijer_bracket = bracket;
    rep.meijer_d_bracket = cf.D * bracket;
    rep.meijer_pi_d_bracket = std::numbers::pi * cf.D * bracket;
    return rep;
}

double sr_snr_cdf(double gamma_hat_r, int m, double y) {
    check_scale(gamma_hat_r, "gamma_hat_r");
    check_m(m);
    return power_cdf({static_cast<double>(m), 1.0}, y / gamma_hat_r);
}

double sr_snr_ccdf(double gamma_hat_r, int m, double y) {
    check_scale(gamma_hat_r, "gamma_hat_r");
    check_m(m);
    return power_ccdf({static_cast<double>(m), 1.0}, y / gamma_hat_r);
}

double outage_probability(const DerivedSnrScales& s, int m, double theta, const OutageQuery& q) {
    check_threshold(q);
    check_theta(theta);
    if (q.threshold == 0.0) return 0.0;
    const double sr_survival = sr_snr_ccdf(s.gamma_hat_r, m, q.threshold);
    const double rd_survival =
        snr_ccdf_closed(closed_form_coefficients(m, s.gamma_hat_d), theta, q.threshold);
    // The FGM survival copula is the FGM copula itself.
    return 1.0 - copula_cdf(CopulaModel::fgm(theta), sr_survival, rd_survival);
}

double outage_probability(const SwiptSystem& sys, const OutageQuery& q) {
    return outage_probability(derive_snr_scales(sys), sys.fading_m, sys.theta, q);
}

double outage_probability_expanded(const DerivedSnrScales& s, int m, double theta,
                                   const OutageQuery& q) {
    check_threshold(q);
    check_theta(theta);
    check_scale(s.gamma_hat_r, "gamma_hat_r");
    if (q.threshold == 0.0) return 0.0;
    const double f_r =
        power_cdf_integer_series({static_cast<double>(m), 1.0}, q.threshold / s.gamma_hat_r);
    const double f_d = snr_cdf_closed(closed_form_coefficients(m, s.gamma_hat_d), theta, q.threshold);
    return 1.0 - (1.0 - f_r) * (1.0 - f_d) * (1.0 + theta * f_r * f_d);
}

double outage_probability_quadrature(const DerivedSnrScales& s, int m, double theta,
                                     const OutageQuery& q) {
    check_threshold(q);
    check_theta(theta);
    if (q.threshold == 0.0) return 0.0;
    const double sr_survival = sr_snr_ccdf(s.gamma_hat_r, m, q.threshold);
    const double rd_survival = 1.0 - product_cdf_general(rd_model(s.gamma_hat_d, m, theta), q.threshold);
    return 1.0 - survival_copula_cdf(CopulaModel::fgm(theta), sr_survival, rd_survival);
}

double asymptotic_capacity_sr(double gamma_hat_r, int m) {
    check_scale(gamma_hat_r, "gamma_hat_r");
    check_m(m);
    return (specfun::digamma(m) + std::log(gamma_hat_r / m)) / (2.0 * kLn2);
}

double asymptotic_outage(const DerivedSnrScales& s, int m, double theta, const OutageQuery& q) {
    check_threshold(q);
    check_theta(theta);
    check_scale(s.gamma_hat_r, "gamma_hat_r");
    check_m(m);
    if (q.threshold == 0.0) return 0.0;
    const double md = m;
    const double f_r_inf =
        std::exp(md * std::log(md * q.threshold / s.gamma_hat_r) - specfun::ln_gamma(md + 1.0));
    if (f_r_inf > 1.0) {
        std::ostringstream os;
        os << "asymptotic_outage: high-SNR relay CDF approximation is " << f_r_inf
           << " > 1 (gamma_hat_r = " << s.gamma_hat_r << ", m = " << m
           << ", threshold = " << q.threshold << ")";
        throw OutOfRegimeError(os.str());
    }
    const double f_d = snr_cdf_closed(closed_form_coefficients(m, s.gamma_hat_d), theta, q.threshold);
    return 1.0 - (1.0 - f_r_inf) * (1.0 - f_d) * (1.0 + theta * f_r_inf * f_d);
}

double asymptotic_outage(const SwiptSystem& sys, const OutageQuery& q) {
    return asymptotic_outage(derive_snr_scales(sys), sys.fading_m, sys.theta, q);
}

} // namespace swipt
