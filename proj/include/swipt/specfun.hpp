#ifndef SWIPT_SPECFUN_HPP
#define SWIPT_SPECFUN_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

/// Scalar special functions used by the closed-form performance expressions.
///
/// Everything here is a pure function of its arguments; no global state
/// (in particular no `signgam`) is touched, so all routines are reentrant.
namespace swipt::specfun {

/// ln Γ(x) for x > 0.
double ln_gamma(double x);

/// ψ(x) = d/dx ln Γ(x) for x > 0.
double digamma(double x);

/// B(a, b) = Γ(a)Γ(b)/Γ(a+b).
double beta(double a, double b);

/// Regularized lower incomplete gamma P(a, x).
double gamma_p(double a, double x);

/// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x), computed without
/// cancellation in the upper tail.
double gamma_q(double a, double x);

/// Non-regularized upper incomplete gamma Γ(a, x) = ∫ₓ^∞ t^{a-1} e^{-t} dt.
///
/// Series branch for x ≤ a + 1, Lentz continued fraction otherwise.
double upper_incomplete_gamma(double a, double x);

/// ln K_v(x) for x > 0 and any real v. Finite wherever K_v(x) itself would
/// overflow or underflow a double.
double log_bessel_k(double v, double x);

/// Modified Bessel function of the second kind K_v(x), x > 0, real v.
///
/// Evaluated from K_v(x) = ∫₀^∞ exp(-x cosh t) cosh(vt) dt with a trapezoidal
/// rule on the real line (the integrand is already doubly-exponentially
/// decaying, so the rule converges geometrically in the step). Returns +inf
/// when the true value exceeds the double range.
double bessel_k(double v, double x);

/// e^x K_v(x).
double bessel_k_scaled(double v, double x);

/// e^x K_n(x) for n = 0..n_max, from the integral representation for K_0 and
/// K_1 followed by upward recurrence (stable for K).
std::vector<double> bessel_k_scaled_sequence(double x, int n_max);

/// K_n(x) for integer n by a route independent of the integral
/// representation: power series (x ≤ 2) or Steed's continued fraction (x > 2)
/// for K_0, K_1, then upward recurrence. Used as a consistency check.
double bessel_k_integer_recurrence(int n, double x);

/// ln Γ(z) for complex z off the non-positive real axis (principal branch is
/// not guaranteed; only exp() of the result is meaningful).
std::complex<double> ln_gamma_complex(std::complex<double> z);

/// Meijer G^{m,n}_{p,q}(x | a; b) restricted to the three shapes that house
/// the ergodic-capacity closed forms: (1,2,2,2), (1,3,3,2), (1,4,4,2), all
/// with b = (1, 0).
struct MeijerGSpec {
    int m = 1;
    int n = 0;
    int p = 0;
    int q = 0;
    std::vector<double> a;
    std::vector<double> b;
};

/// Evaluates the Mellin–Barnes integral
///   G(x) = (1/2πi) ∫_L Π Γ(b_j + s) Π Γ(1 - a_j - s) / (Π Γ(1 - b_j - s) Π Γ(a_j + s)) x^{-s} ds
/// on the vertical line Re s = c midway between the largest left pole and the
/// smallest right pole. The line integral is a trapezoidal sum, refined by
/// step halving until successive estimates agree; the contour is truncated
/// where the integrand falls below 1e-16 of its peak.
///
/// Throws MeijerGError for unsupported shapes or when the left and right pole
/// sets cannot be separated; DomainError for x ≤ 0.
double meijer_g(const MeijerGSpec& spec, double x);

/// Convenience constructor: shape is inferred from the length of `a`.
MeijerGSpec meijer_g_capacity_shape(std::vector<double> a);

} // namespace swipt::specfun

#endif
