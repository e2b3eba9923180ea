#include "swipt/quadrature.hpp"

#include "swipt/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>
#include <vector>

namespace swipt::quad {

namespace {

// QUADPACK qk21 abscissae and weights.
constexpr std::array<double, 11> xgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0,
};
constexpr std::array<double, 11> wgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077958109831074, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821,
};
constexpr std::array<double, 5> wg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338,
};

constexpr double kEpmach = std::numeric_limits<double>::epsilon();
constexpr double kUflow = std::numeric_limits<double>::min();

struct Segment {
    double a;
    double b;
    double value;
    double error;
    bool operator<(const Segment& other) const { return error < other.error; }
};

Segment qk21(const Integrand& f, double a, double b) {
    const double centr = 0.5 * (a + b);
    const double hlgth = 0.5 * (b - a);
    const double fc = f(centr);
    double resg = 0.0;
    double resk = wgk[10] * fc;
    double resabs = std::abs(resk);
    std::array<double, 10> fv1{};
    std::array<double, 10> fv2{};
    for (int j = 0; j < 10; ++j) {
        const double dx = hlgth * xgk[j];
        const double f1 = f(centr - dx);
        const double f2 = f(centr + dx);
        fv1[j] = f1;
        fv2[j] = f2;
        resk += wgk[j] * (f1 + f2);
        resabs += wgk[j] * (std::abs(f1) + std::abs(f2));
        // Odd Kronrod indices are the Gauss nodes.
        if (j % 2 == 1) resg += wg[j / 2] * (f1 + f2);
    }
    const double reskh = 0.5 * resk;
    double resasc = wgk[10] * std::abs(fc - reskh);
    for (int j = 0; j < 10; ++j) {
        resasc += wgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));
    }
    const double result = resk * hlgth;
    resabs *= std::abs(hlgth);
    resasc *= std::abs(hlgth);
    double abserr = std::abs((resk - resg) * hlgth);
    if (resasc != 0.0 && abserr != 0.0) {
        abserr = resasc * std::min(1.0, std::pow(200.0 * abserr / resasc, 1.5));
    }
    if (resabs > kUflow / (50.0 * kEpmach)) abserr = std::max(kEpmach * 50.0 * resabs, abserr);
    return {a, b, result, abserr};
}

} // namespace

Result integrate(const Integrand& f, double a, double b, const Options& opts) {
    if (a == b) return {};
    Result out;
    std::priority_queue<Segment> heap;
    Segment first = qk21(f, a, b);
    out.evaluations = 21;
    double total = first.value;
    double error = first.error;
    heap.push(first);

    auto target = [&] { return std::max(opts.abs_tol, opts.rel_tol * std::abs(total)); };
    while (error > target()) {
        if (static_cast<int>(heap.size()) >= opts.max_intervals) {
            std::ostringstream os;
            os << "quadrature: interval budget exhausted (value " << total << ", error " << error
               << ")";
            throw QuadratureError(os.str(), total, error);
        }
        const Segment worst = heap.top();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > std::min(worst.a, worst.b) && mid < std::max(worst.a, worst.b))) {
            std::ostringstream os;
            os << "quadrature: interval cannot be bisected further (value " << total << ", error "
               << error << ")";
            throw QuadratureError(os.str(), total, error);
        }
        heap.pop();
        const Segment left = qk21(f, worst.a, mid);
        const Segment right = qk21(f, mid, worst.b);
        out.evaluations += 42;
        total += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }

    // Re-sum from the pieces to shed the drift of the running updates.
    total = 0.0;
    error = 0.0;
    std::vector<Segment> pieces;
    pieces.reserve(heap.size());
    while (!heap.empty()) {
        pieces.push_back(heap.top());
        heap.pop();
    }
    std::sort(pieces.begin(), pieces.end(),
              [](const Segment& x, const Segment& y) { return x.a < y.a; });
    for (const Segment& s : pieces) {
        total += s.value;
        error += s.error;
    }
    out.value = total;
    out.error = error;
    return out;
}

Result integrate_to_infinity(const Integrand& f, double a, const Options& opts) {
    auto mapped = [&](double t) {
        const double one_minus = 1.0 - t;
        const double x = a + t / one_minus;
        const double v = f(x);
        return v == 0.0 ? 0.0 : v / (one_minus * one_minus);
    };
    return integrate(mapped, 0.0, 1.0, opts);
}

} // namespace swipt::quad
