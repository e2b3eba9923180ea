#ifndef SWIPT_FADING_HPP
#define SWIPT_FADING_HPP

namespace swipt {

// Nakagami-m fading power: Gamma with shape m and scale mean_power / m.
struct NakagamiPower {
    double m = 1.0;
    double mean_power = 1.0;
};

void validate(const NakagamiPower& d);

double power_pdf(const NakagamiPower& d, double g);
double power_cdf(const NakagamiPower& d, double g);
double power_ccdf(const NakagamiPower& d, double g);

// Finite-sum CDF for integer m: 1 - e^{-x} sum_{k<m} x^k/k!, x = m g / mean.
double power_cdf_integer_series(const NakagamiPower& d, double g);

// Inverse CDF for p in [0, 1). p = 1 throws (the support is unbounded).
double power_quantile(const NakagamiPower& d, double p);

bool is_integer_shape(double m);

} // namespace swipt

#endif
