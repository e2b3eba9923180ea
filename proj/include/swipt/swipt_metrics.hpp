#ifndef SWIPT_SWIPT_METRICS_HPP
#define SWIPT_SWIPT_METRICS_HPP

namespace swipt {

// Power-splitting decode-and-forward relay link. Powers in watts, distances
// in metres.
struct SwiptSystem {
    double source_power = 10.0;
    double noise_power = 1e-2;
    double ps_factor = 0.3;
    double eh_efficiency = 0.7;
    double dist_sr = 2.0;
    double dist_rd = 2.0;
    double pathloss_exp = 2.5;
    int fading_m = 1;
    double theta = 0.0;
};

struct DerivedSnrScales {
    double gamma_hat_r = 0.0;
    double gamma_hat_d = 0.0;
};

// Linear SNR threshold.
struct OutageQuery {
    double threshold = 1.0;
};

void validate(const SwiptSystem& sys);

// gamma_hat_r = (1 - rho) P_S / (d_SR^alpha N)
// gamma_hat_d = kappa rho P_S / ((d_SR d_RD)^alpha N)
DerivedSnrScales derive_snr_scales(const SwiptSystem& sys);

double db_to_linear(double db);

// Ergodic capacities in bits per channel use, half-duplex factor included.
// The returned value is the adaptive quadrature of the defining integral.
double ergodic_capacity_sr(double gamma_hat_r, int m);
double ergodic_capacity_rd(double gamma_hat_d, int m, double theta);

// Meijer-G closed forms evaluated next to the quadrature value. Two readings
// of the SR parameter and three RD prefactor conventions are kept, so a
// report can say which one agrees with the integral.
struct SrCapacityReport {
    double quadrature = 0.0;
    double meijer_a1_one_minus_m = 0.0;
    double meijer_a1_one_minus_m_over_gr = 0.0;
};

struct RdCapacityReport {
    double quadrature = 0.0;
    double meijer_bracket = 0.0;
    double meijer_d_bracket = 0.0;
    double meijer_pi_d_bracket = 0.0;
};

SrCapacityReport ergodic_capacity_sr_report(double gamma_hat_r, int m);
RdCapacityReport ergodic_capacity_rd_report(double gamma_hat_d, int m, double theta);

double sr_snr_cdf(double gamma_hat_r, int m, double y);
double sr_snr_ccdf(double gamma_hat_r, int m, double y);

// 1 - C_hat(Fbar_R(t), Fbar_D(t)) with the FGM survival copula.
double outage_probability(const SwiptSystem& sys, const OutageQuery& q);
double outage_probability(const DerivedSnrScales& s, int m, double theta, const OutageQuery& q);

// 1 - Fbar_R Fbar_D (1 + theta F_R F_D), each CDF from its own finite-sum or
// closed-form route; agrees with outage_probability up to rounding.
double outage_probability_expanded(const DerivedSnrScales& s, int m, double theta,
                                   const OutageQuery& q);

// Same composition with F_D from the copula-integral quadrature.
double outage_probability_quadrature(const DerivedSnrScales& s, int m, double theta,
                                     const OutageQuery& q);

// (psi(m) + ln(gamma_hat_r / m)) / (2 ln 2)
double asymptotic_capacity_sr(double gamma_hat_r, int m);

// High-SNR outage with F_R(t) ~ (m t / gamma_hat_r)^m / Gamma(m + 1).
// Throws OutOfRegimeError when that approximation exceeds 1.
double asymptotic_outage(const SwiptSystem& sys, const OutageQuery& q);
double asymptotic_outage(const DerivedSnrScales& s, int m, double theta, const OutageQuery& q);

} // namespace swipt

#endif
