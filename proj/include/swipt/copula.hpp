#ifndef SWIPT_COPULA_HPP
#define SWIPT_COPULA_HPP

#include "swipt/random.hpp"

#include <utility>

namespace swipt {

enum class CopulaFamily { Product, FGM };

// Dependence structure on [0,1]^2. theta is read only for FGM and must lie in
// [-1, 1]; Product behaves exactly like FGM with theta = 0.
struct CopulaModel {
    CopulaFamily family = CopulaFamily::Product;
    double theta = 0.0;

    static CopulaModel product() { return {CopulaFamily::Product, 0.0}; }
    static CopulaModel fgm(double theta) { return {CopulaFamily::FGM, theta}; }
};

// Throws DomainError when an FGM theta lies outside [-1, 1].
void validate(const CopulaModel& c);

double copula_cdf(const CopulaModel& c, double u1, double u2);
double copula_density(const CopulaModel& c, double u1, double u2);

// dC/du1 at (u1, u2), i.e. P(U2 <= u2 | U1 = u1). u1 must be interior.
double conditional_cdf(const CopulaModel& c, double u2, double u1);

// Inverse of conditional_cdf in u2.
double conditional_quantile(const CopulaModel& c, double t, double u1);

// u1 + u2 - 1 + C(1 - u1, 1 - u2).
double survival_copula_cdf(const CopulaModel& c, double u1, double u2);

// Conditional inversion: u1 uniform, u2 = conditional_quantile(t | u1).
std::pair<double, double> sample_pair(const CopulaModel& c, PhiloxStream& rng);

} // namespace swipt

#endif
