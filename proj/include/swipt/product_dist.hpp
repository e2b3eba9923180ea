#ifndef SWIPT_PRODUCT_DIST_HPP
#define SWIPT_PRODUCT_DIST_HPP

#include "swipt/copula.hpp"
#include "swipt/fading.hpp"

#include <vector>

namespace swipt {

// gamma_D = snr_scale * g_sr * g_rd with dependent fading powers.
struct EndToEndSnrModel {
    double snr_scale = 1.0;
    NakagamiPower marginal_sr;
    NakagamiPower marginal_rd;
    CopulaModel copula;
};

// Coefficient families of the closed-form CDF, PDF and RD capacity for a
// common integer m and unit mean powers. Every array has extent m.
struct ClosedFormCoefficients {
    int m = 1;
    double snr_scale = 1.0;
    double B = 0.0;
    double zeta = 0.0;
    std::vector<double> a;
    std::vector<std::vector<double>> b;
    std::vector<std::vector<double>> c;
    std::vector<std::vector<std::vector<double>>> d;
    std::vector<double> q;
    std::vector<std::vector<double>> t;
    std::vector<double> w;
    std::vector<std::vector<double>> z;
    double D = 0.0;
};

ClosedFormCoefficients closed_form_coefficients(int m, double snr_scale);

// Throws UnsupportedClosedForm unless the model has FGM/product dependence,
// one integer m >= 1 on both hops and unit mean powers. Returns that m.
int closed_form_order(const EndToEndSnrModel& model);

// F(y) from the copula integral: ∫_0^1 dC/du(u, F_rd(x / Q_sr(u))) du with
// x = y / snr_scale. Works for any copula and any m >= 0.5.
double product_cdf_general(const EndToEndSnrModel& model, double y);

double snr_cdf_closed(const EndToEndSnrModel& model, double y);
double snr_ccdf_closed(const EndToEndSnrModel& model, double y);

// Same evaluation from explicit coefficients; lets callers perturb a
// coefficient to confirm the validation harness notices.
double snr_ccdf_closed(const ClosedFormCoefficients& coeffs, double theta, double y);
double snr_cdf_closed(const ClosedFormCoefficients& coeffs, double theta, double y);

double snr_pdf_closed(const EndToEndSnrModel& model, double y);
double snr_pdf_closed(const ClosedFormCoefficients& coeffs, double theta, double y);

// E[g_sr g_rd] = 1 + theta (1 - f(m)) for unit-mean FGM-coupled powers.
double mean_snr_factor(int m, double theta);

} // namespace swipt

#endif
