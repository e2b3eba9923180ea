#include "swipt/specfun.hpp"

#include "swipt/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace swipt::specfun {

namespace {

using cd = std::complex<double>;

bool is_supported_shape(const MeijerGSpec& s) {
    const bool shape_ok = s.m == 1 && s.q == 2 && s.n == s.p && s.p >= 2 && s.p <= 4;
    return shape_ok && s.a.size() == static_cast<std::size_t>(s.p) &&
           s.b.size() == static_cast<std::size_t>(s.q) && s.b[0] == 1.0 && s.b[1] == 0.0;
}

std::string describe(const MeijerGSpec& s) {
    std::ostringstream os;
    os << "G^{" << s.m << "," << s.n << "}_{" << s.p << "," << s.q << "} a=(";
    for (std::size_t i = 0; i < s.a.size(); ++i) os << (i ? "," : "") << s.a[i];
    os << ") b=(";
    for (std::size_t i = 0; i < s.b.size(); ++i) os << (i ? "," : "") << s.b[i];
    os << ")";
    return os.str();
}

class MellinBarnesIntegrand {
public:
    MellinBarnesIntegrand(const MeijerGSpec& spec, double x, double abscissa)
        : spec_(spec), log_x_(std::log(x)), c_(abscissa) {}

    cd log_value(double t) const {
        const cd s{c_, t};
        cd acc = -s * log_x_;
        for (int j = 0; j < spec_.m; ++j) acc += ln_gamma_complex(spec_.b[j] + s);
        for (int j = 0; j < spec_.n; ++j) acc += ln_gamma_complex(1.0 - spec_.a[j] - s);
        for (int j = spec_.m; j < spec_.q; ++j) acc -= ln_gamma_complex(1.0 - spec_.b[j] - s);
        for (int j = spec_.n; j < spec_.p; ++j) acc -= ln_gamma_complex(spec_.a[j] + s);
        return acc;
    }

    double real_part(double t) const { return std::exp(log_value(t)).real(); }

private:
    const MeijerGSpec& spec_;
    double log_x_;
    double c_;
};

} // namespace

MeijerGSpec meijer_g_capacity_shape(std::vector<double> a) {
    MeijerGSpec spec;
    spec.m = 1;
    spec.p = static_cast<int>(a.size());
    spec.n = spec.p;
    spec.q = 2;
    spec.a = std::move(a);
    spec.b = {1.0, 0.0};
    return spec;
}

double meijer_g(const MeijerGSpec& spec, double x) {
    if (!is_supported_shape(spec)) {
        throw MeijerGError("meijer_g: unsupported shape " + describe(spec) +
                           "; supported: (1,2,2,2), (1,3,3,2), (1,4,4,2) with b=(1,0)");
    }
    if (!(x > 0.0) || std::isinf(x)) throw DomainError("meijer_g: x must be finite and > 0");

    // Left poles from Γ(b_j + s) at s = -b_j - k; right poles from Γ(1 - a_j - s)
    // at s = 1 - a_j + k.
    double max_left = -std::numeric_limits<double>::infinity();
    int left_index = 0;
    for (int j = 0; j < spec.m; ++j) {
        if (-spec.b[j] > max_left) {
            max_left = -spec.b[j];
            left_index = j;
        }
    }
    double min_right = std::numeric_limits<double>::infinity();
    int right_index = 0;
    for (int j = 0; j < spec.n; ++j) {
        if (1.0 - spec.a[j] < min_right) {
            min_right = 1.0 - spec.a[j];
            right_index = j;
        }
    }
    if (!(max_left < min_right)) {
        std::ostringstream os;
        os << "meijer_g: cannot separate poles for " << describe(spec) << ": left pole of Gamma(b_"
           << left_index + 1 << "+s) at " << max_left << " collides with right pole of Gamma(1-a_"
           << right_index + 1 << "-s) at " << min_right;
        throw MeijerGError(os.str());
    }

    const double abscissa = 0.5 * (max_left + min_right);
    const MellinBarnesIntegrand integrand(spec, x, abscissa);

    // Truncation height: march until |φ| drops 1e-17 below the largest value seen.
    constexpr double kDrop = 39.0;
    double peak_log = integrand.log_value(0.0).real();
    double height = 0.0;
    for (double t = 0.5; t < 400.0; t += 0.5) {
        const double lm = integrand.log_value(t).real();
        peak_log = std::max(peak_log, lm);
        height = t;
        if (lm < peak_log - kDrop) break;
    }
    const double peak = std::exp(peak_log);

    // Trapezoid on [0, height] of Re φ; φ(-t) = conj φ(t) so G = (1/π)∫₀^∞ Re φ dt.
    double h = 0.25;
    int count = static_cast<int>(std::ceil(height / h));
    double sum = 0.5 * integrand.real_part(0.0);
    for (int k = 1; k <= count; ++k) sum += integrand.real_part(k * h);
    double estimate = h * sum;

    for (int level = 0; level < 12; ++level) {
        double mid = 0.0;
        for (int k = 0; k < count; ++k) mid += integrand.real_part((k + 0.5) * h);
        const double refined = 0.5 * estimate + 0.5 * h * mid;
        const double change = std::abs(refined - estimate);
        estimate = refined;
        h *= 0.5;
        count *= 2;
        if (level >= 1 && change <= 1e-14 * peak) break;
    }
    return estimate / std::numbers::pi;
}

} // namespace swipt::specfun
