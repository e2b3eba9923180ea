#ifndef SWIPT_QUADRATURE_HPP
#define SWIPT_QUADRATURE_HPP

#include <functional>

namespace swipt::quad {

struct Options {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_intervals = 4000;
};

struct Result {
    double value = 0.0;
    double error = 0.0;
    int evaluations = 0;
};

using Integrand = std::function<double(double)>;

// Globally adaptive 21-point Gauss–Kronrod on [a, b]. The interval with the
// largest error estimate is bisected until the summed estimate satisfies
// max(abs_tol, rel_tol·|value|). Throws QuadratureError (carrying the partial
// value and error) when the interval budget runs out.
Result integrate(const Integrand& f, double a, double b, const Options& opts = {});

// ∫_a^∞ f via x = a + t/(1 - t) on t ∈ [0, 1).
Result integrate_to_infinity(const Integrand& f, double a, const Options& opts = {});

} // namespace swipt::quad

#endif
