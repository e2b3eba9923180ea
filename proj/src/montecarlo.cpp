#include "swipt/montecarlo.hpp"

#include "swipt/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

namespace swipt {

namespace {

// Runs body(stream, count, acc) for every batch and returns the per-batch
// accumulators in batch order.
template <class Acc, class Body>
std::vector<Acc> run_batches(const McConfig& cfg, Body body) {
    validate(cfg);
    const std::uint64_t batch_size = std::min(cfg.batch_size, cfg.samples);
    const std::uint64_t batches = (cfg.samples + batch_size - 1) / batch_size;
    std::vector<Acc> results(batches);
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        for (;;) {
            const std::uint64_t b = next.fetch_add(1);
            if (b >= batches) return;
            const std::uint64_t begin = b * batch_size;
            const std::uint64_t count = std::min(batch_size, cfg.samples - begin);
            try {
                PhiloxStream stream(cfg.seed, b);
                body(stream, count, results[b]);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next.store(batches);
                return;
            }
        }
    };

    const auto threads = static_cast<std::uint64_t>(cfg.workers);
    if (threads <= 1 || batches <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        const std::uint64_t spawn = std::min(threads, batches);
        pool.reserve(spawn);
        for (std::uint64_t i = 0; i < spawn; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);
    return results;
}

struct MetricsAcc {
    RunningStats cap_sr;
    RunningStats cap_rd;
    RunningStats cap_min;
    RunningStats outage;
    RunningStats mean_snr_d;
};

} // namespace

void validate(const McConfig& cfg) {
    if (cfg.samples < 1) throw DomainError("McConfig: samples must be >= 1");
    if (cfg.workers < 1) throw DomainError("McConfig: workers must be >= 1");
    if (cfg.batch_size < 1) throw DomainError("McConfig: batch_size must be >= 1");
}

void RunningStats::merge(const RunningStats& other) {
    if (other.n_ == 0) return;
    if (n_ == 0) {
        *this = other;
        return;
    }
    const double na = static_cast<double>(n_);
    const double nb = static_cast<double>(other.n_);
    const double total = na + nb;
    const double delta = other.mean_ - mean_;
    mean_ += delta * nb / total;
    m2_ += other.m2_ + delta * delta * na * nb / total;
    n_ += other.n_;
}

McEstimate RunningStats::estimate() const {
    McEstimate e;
    e.n = n_;
    e.mean = mean_;
    e.std_error = n_ > 0 ? std::sqrt(variance() / static_cast<double>(n_)) : 0.0;
    e.ci95_low = e.mean - 1.96 * e.std_error;
    e.ci95_high = e.mean + 1.96 * e.std_error;
    return e;
}

std::pair<double, double> sample_joint_powers(const CopulaModel& copula, const NakagamiPower& m1,
                                              const NakagamiPower& m2, PhiloxStream& rng) {
    const auto [u1, u2] = sample_pair(copula, rng);
    // u2 can round to exactly 1 when the conditional law piles up near the edge.
    const double u2_open = std::min(u2, std::nextafter(1.0, 0.0));
    return {power_quantile(m1, u1), power_quantile(m2, u2_open)};
}

MetricsEstimate simulate_metrics(const DerivedSnrScales& scales, int m, double theta,
                                 const OutageQuery& q, const McConfig& cfg) {
    if (m < 1) throw DomainError("simulate_metrics: m must be >= 1");
    if (!(q.threshold >= 0.0)) throw DomainError("simulate_metrics: threshold must be >= 0");
    const CopulaModel copula = CopulaModel::fgm(theta);
    validate(copula);
    const NakagamiPower marginal{static_cast<double>(m), 1.0};
    const double inv_2ln2 = 0.5 / std::log(2.0);

    auto body = [&](PhiloxStream& rng, std::uint64_t count, MetricsAcc& acc) {
        for (std::uint64_t i = 0; i < count; ++i) {
            const auto [g_sr, g_rd] = sample_joint_powers(copula, marginal, marginal, rng);
            const double snr_r = scales.gamma_hat_r * g_sr;
            const double snr_d = scales.gamma_hat_d * g_sr * g_rd;
            const double c_sr = std::log1p(snr_r) * inv_2ln2;
            const double c_rd = std::log1p(snr_d) * inv_2ln2;
            acc.cap_sr.add(c_sr);
            acc.cap_rd.add(c_rd);
            acc.cap_min.add(std::min(c_sr, c_rd));
            acc.outage.add(std::min(snr_r, snr_d) <= q.threshold && q.threshold > 0.0 ? 1.0 : 0.0);
            acc.mean_snr_d.add(snr_d);
        }
    };
    const std::vector<MetricsAcc> parts = run_batches<MetricsAcc>(cfg, body);
    MetricsAcc total;
    for (const MetricsAcc& p : parts) {
        total.cap_sr.merge(p.cap_sr);
        total.cap_rd.merge(p.cap_rd);
        total.cap_min.merge(p.cap_min);
        total.outage.merge(p.outage);
        total.mean_snr_d.merge(p.mean_snr_d);
    }
    return {total.cap_sr.estimate(), total.cap_rd.estimate(), total.cap_min.estimate(),
            total.outage.estimate(), total.mean_snr_d.estimate()};
}

MetricsEstimate simulate_metrics(const SwiptSystem& sys, const OutageQuery& q, const McConfig& cfg) {
    return simulate_metrics(derive_snr_scales(sys), sys.fading_m, sys.theta, q, cfg);
}

McEstimate simulate_product_moment(const CopulaModel& copula, const NakagamiPower& m1,
                                   const NakagamiPower& m2, const McConfig& cfg) {
    validate(copula);
    auto body = [&](PhiloxStream& rng, std::uint64_t count, RunningStats& acc) {
        for (std::uint64_t i = 0; i < count; ++i) {
            const auto [g1, g2] = sample_joint_powers(copula, m1, m2, rng);
            acc.add(g1 * g2);
        }
    };
    RunningStats total;
    for (const RunningStats& p : run_batches<RunningStats>(cfg, body)) total.merge(p);
    return total.estimate();
}

std::vector<double> empirical_snr_cdf(const EndToEndSnrModel& model, const std::vector<double>& grid,
                                      const McConfig& cfg) {
    if (!std::is_sorted(grid.begin(), grid.end())) {
        throw DomainError("empirical_snr_cdf: grid must be sorted ascending");
    }
    validate(model.copula);
    using Counts = std::vector<std::uint64_t>;
    auto body = [&](PhiloxStream& rng, std::uint64_t count, Counts& bins) {
        bins.assign(grid.size() + 1, 0);
        for (std::uint64_t i = 0; i < count; ++i) {
            const auto [g1, g2] =
                sample_joint_powers(model.copula, model.marginal_sr, model.marginal_rd, rng);
            const double y = model.snr_scale * g1 * g2;
            // First grid value >= y; the sample counts towards that point and above.
            const auto idx = std::lower_bound(grid.begin(), grid.end(), y) - grid.begin();
            ++bins[static_cast<std::size_t>(idx)];
        }
    };
    std::vector<std::uint64_t> total(grid.size() + 1, 0);
    for (const Counts& part : run_batches<Counts>(cfg, body)) {
        for (std::size_t i = 0; i < total.size(); ++i) total[i] += part[i];
    }
    std::vector<double> ecdf(grid.size());
    std::uint64_t running = 0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        running += total[i];
        ecdf[i] = static_cast<double>(running) / static_cast<double>(cfg.samples);
    }
    return ecdf;
}

std::vector<double> sample_sr_powers(const CopulaModel& copula, const NakagamiPower& m1,
                                     const NakagamiPower& m2, std::uint64_t count,
                                     std::uint64_t seed) {
    std::vector<double> out;
    out.reserve(count);
    PhiloxStream rng(seed, 0);
    for (std::uint64_t i = 0; i < count; ++i) {
        out.push_back(sample_joint_powers(copula, m1, m2, rng).first);
    }
    return out;
}

} // namespace swipt
