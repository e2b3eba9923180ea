#include "swipt/copula.hpp"

#include "swipt/errors.hpp"

#include <cmath>
#include <string>

namespace swipt {

namespace {

double effective_theta(const CopulaModel& c) {
    return c.family == CopulaFamily::FGM ? c.theta : 0.0;
}

void check_unit(double u, const char* what) {
    if (!(u >= 0.0 && u <= 1.0)) {
        throw DomainError(std::string(what) + ": argument outside [0, 1]");
    }
}

void check_interior(double u, const char* what) {
    if (!(u > 0.0 && u < 1.0)) {
        throw DomainError(std::string(what) + ": conditioning value must lie in (0, 1)");
    }
}

} // namespace

void validate(const CopulaModel& c) {
    if (c.family == CopulaFamily::FGM && !(c.theta >= -1.0 && c.theta <= 1.0)) {
        throw DomainError("FGM copula: theta must lie in [-1, 1]");
    }
}

double copula_cdf(const CopulaModel& c, double u1, double u2) {
    validate(c);
    check_unit(u1, "copula_cdf");
    check_unit(u2, "copula_cdf");
    return u1 * u2 * (1.0 + effective_theta(c) * (1.0 - u1) * (1.0 - u2));
}

double copula_density(const CopulaModel& c, double u1, double u2) {
    validate(c);
    check_unit(u1, "copula_density");
    check_unit(u2, "copula_density");
    return 1.0 + effective_theta(c) * (1.0 - 2.0 * u1) * (1.0 - 2.0 * u2);
}

double conditional_cdf(const CopulaModel& c, double u2, double u1) {
    validate(c);
    check_unit(u2, "conditional_cdf");
    check_interior(u1, "conditional_cdf");
    return u2 * (1.0 + effective_theta(c) * (1.0 - 2.0 * u1) * (1.0 - u2));
}

double conditional_quantile(const CopulaModel& c, double t, double u1) {
    validate(c);
    check_unit(t, "conditional_quantile");
    check_interior(u1, "conditional_quantile");
    // a u^2 - (1 + a) u + t = 0; the cancellation-free form of the smaller root.
    const double a = effective_theta(c) * (1.0 - 2.0 * u1);
    if (a == 0.0) return t;
    const double disc = std::max(0.0, (1.0 + a) * (1.0 + a) - 4.0 * a * t);
    const double root = 2.0 * t / ((1.0 + a) + std::sqrt(disc));
    return std::min(1.0, std::max(0.0, root));
}

double survival_copula_cdf(const CopulaModel& c, double u1, double u2) {
    check_unit(u1, "survival_copula_cdf");
    check_unit(u2, "survival_copula_cdf");
    return u1 + u2 - 1.0 + copula_cdf(c, 1.0 - u1, 1.0 - u2);
}

std::pair<double, double> sample_pair(const CopulaModel& c, PhiloxStream& rng) {
    const double u1 = rng.uniform();
    const double t = rng.uniform();
    return {u1, conditional_quantile(c, t, u1)};
}

} // namespace swipt
