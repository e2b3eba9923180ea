#ifndef SWIPT_MONTECARLO_HPP
#define SWIPT_MONTECARLO_HPP

#include "swipt/copula.hpp"
#include "swipt/fading.hpp"
#include "swipt/product_dist.hpp"
#include "swipt/random.hpp"
#include "swipt/swipt_metrics.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace swipt {

// Samples are split into fixed batches of batch_size; batch b always draws
// from PhiloxStream(seed, b) and is reduced on its own before the batches are
// merged in index order. The worker count only decides who computes which
// batch, so estimates are bit-identical for any number of workers. A
// batch_size above samples is treated as samples.
struct McConfig {
    std::uint64_t samples = 1000000;
    std::uint64_t seed = 20221;
    int workers = 1;
    std::uint64_t batch_size = 65536;
};

void validate(const McConfig& cfg);

struct McEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    double ci95_low = 0.0;
    double ci95_high = 0.0;
    std::uint64_t n = 0;
};

// One-pass mean/variance (Welford), mergeable with Chan's pairwise update.
class RunningStats {
public:
    void add(double x) {
        ++n_;
        const double delta = x - mean_;
        mean_ += delta / static_cast<double>(n_);
        m2_ += delta * (x - mean_);
    }
    void merge(const RunningStats& other);

    std::uint64_t count() const { return n_; }
    double mean() const { return mean_; }
    double variance() const { return n_ > 1 ? m2_ / static_cast<double>(n_ - 1) : 0.0; }
    McEstimate estimate() const;

private:
    std::uint64_t n_ = 0;
    double mean_ = 0.0;
    double m2_ = 0.0;
};

std::pair<double, double> sample_joint_powers(const CopulaModel& copula, const NakagamiPower& m1,
                                              const NakagamiPower& m2, PhiloxStream& rng);

struct MetricsEstimate {
    McEstimate cap_sr;
    McEstimate cap_rd;
    McEstimate cap_min;
    McEstimate outage;
    McEstimate mean_snr_d;
};

// Per draw: gamma_R = gamma_hat_r g_sr and gamma_D = gamma_hat_d g_sr g_rd,
// with the same g_sr in both.
MetricsEstimate simulate_metrics(const SwiptSystem& sys, const OutageQuery& q, const McConfig& cfg);
MetricsEstimate simulate_metrics(const DerivedSnrScales& scales, int m, double theta,
                                 const OutageQuery& q, const McConfig& cfg);

// E[g_sr g_rd] under the joint law.
McEstimate simulate_product_moment(const CopulaModel& copula, const NakagamiPower& m1,
                                   const NakagamiPower& m2, const McConfig& cfg);

// Fraction of simulated gamma_D = snr_scale g_sr g_rd at or below each grid
// value. The grid must be sorted ascending.
std::vector<double> empirical_snr_cdf(const EndToEndSnrModel& model, const std::vector<double>& grid,
                                      const McConfig& cfg);

// Draws of g_sr alone, for marginal checks.
std::vector<double> sample_sr_powers(const CopulaModel& copula, const NakagamiPower& m1,
                                     const NakagamiPower& m2, std::uint64_t count,
                                     std::uint64_t seed);

} // namespace swipt

#endif
