#include "swipt/cli.hpp"
#include "swipt/errors.hpp"
#include "swipt/product_dist.hpp"

#include "point.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <iostream>
#include <mutex>
#include <thread>

namespace swipt::cli {

namespace {

bool keep_metric(const SweepSpec& spec, const std::string& name) {
    if (spec.metrics.empty()) return true;
    const std::string base = name.substr(0, name.find('['));
    return std::find(spec.metrics.begin(), spec.metrics.end(), base) != spec.metrics.end() ||
           std::find(spec.metrics.begin(), spec.metrics.end(), name) != spec.metrics.end();
}

class RowSink {
public:
    RowSink(const SweepSpec& spec, const ResolvedPoint& p, double theta, int m, Mode mode,
            std::vector<CsvRow>& out)
        : spec_(spec), tag_(parameter_tag(p)), out_(out) {
        proto_.variable = spec.variable == SweepVariable::ThresholdDb ? "threshold"
                                                                       : to_string(spec.variable);
        proto_.value = p.value;
        proto_.theta = theta;
        proto_.m = m;
        proto_.mode = to_string(mode);
    }

    void add(const std::string& name, double estimate) {
        if (!keep_metric(spec_, name)) return;
        CsvRow row = proto_;
        row.metric = name + "|" + tag_;
        row.estimate = estimate;
        out_.push_back(std::move(row));
    }

    void add(const std::string& name, const McEstimate& e, std::uint64_t seed) {
        if (!keep_metric(spec_, name)) return;
        CsvRow row = proto_;
        row.metric = name + "|" + tag_;
        row.estimate = e.mean;
        row.mc = e;
        row.seed = seed;
        out_.push_back(std::move(row));
    }

private:
    const SweepSpec& spec_;
    std::string tag_;
    std::vector<CsvRow>& out_;
    CsvRow proto_;
};

void evaluate_mode(const SweepSpec& spec, const ResolvedPoint& p, double theta, int m, Mode mode,
                   const McConfig& mc, std::vector<CsvRow>& out) {
    RowSink sink(spec, p, theta, m, mode, out);
    const DerivedSnrScales& s = p.scales;
    switch (mode) {
    case Mode::ClosedForm: {
        sink.add("outage", outage_probability(s, m, theta, p.query));
        sink.add("mean_snr_d", s.gamma_hat_d * mean_snr_factor(m, theta));
        if (keep_metric(spec, "cap_sr_meijer")) {
            const SrCapacityReport sr = ergodic_capacity_sr_report(s.gamma_hat_r, m);
            sink.add("cap_sr_meijer[a1=1-m]", sr.meijer_a1_one_minus_m);
            sink.add("cap_sr_meijer[a1=1-m/gr]", sr.meijer_a1_one_minus_m_over_gr);
        }
        if (keep_metric(spec, "cap_rd_meijer")) {
            const RdCapacityReport rd = ergodic_capacity_rd_report(s.gamma_hat_d, m, theta);
            sink.add("cap_rd_meijer[bracket]", rd.meijer_bracket);
            sink.add("cap_rd_meijer[D*bracket]", rd.meijer_d_bracket);
            sink.add("cap_rd_meijer[pi*D*bracket]", rd.meijer_pi_d_bracket);
        }
        break;
    }
    case Mode::Quadrature: {
        const bool need_caps = keep_metric(spec, "cap_sr") || keep_metric(spec, "cap_rd") ||
                               keep_metric(spec, "cap_min");
        if (need_caps) {
            const double c_sr = ergodic_capacity_sr(s.gamma_hat_r, m);
            const double c_rd = ergodic_capacity_rd(s.gamma_hat_d, m, theta);
            sink.add("cap_sr", c_sr);
            sink.add("cap_rd", c_rd);
            sink.add("cap_min", std::min(c_sr, c_rd));
        }
        if (keep_metric(spec, "outage")) {
            sink.add("outage", outage_probability_quadrature(s, m, theta, p.query));
        }
        break;
    }
    case Mode::MonteCarlo: {
        const MetricsEstimate e = simulate_metrics(s, m, theta, p.query, mc);
        sink.add("cap_sr", e.cap_sr, mc.seed);
        sink.add("cap_rd", e.cap_rd, mc.seed);
        sink.add("cap_min", e.cap_min, mc.seed);
        sink.add("outage", e.outage, mc.seed);
        sink.add("mean_snr_d", e.mean_snr_d, mc.seed);
        break;
    }
    case Mode::Asymptotic: {
        sink.add("cap_sr", asymptotic_capacity_sr(s.gamma_hat_r, m));
        if (keep_metric(spec, "outage")) {
            try {
                sink.add("outage", asymptotic_outage(s, m, theta, p.query));
            } catch (const OutOfRegimeError& e) {
                static std::mutex warn_mutex;
                std::lock_guard<std::mutex> lock(warn_mutex);
                std::cerr << "warning: skipped asymptotic outage at " << to_string(spec.variable)
                          << "=" << format_number(p.value) << ": " << e.what() << "\n";
            }
        }
        break;
    }
    }
}

struct Task {
    double grid_value;
    double theta;
    int m;
};

} // namespace

std::vector<double> effective_thetas(const SweepSpec& spec, double grid_value) {
    if (spec.variable == SweepVariable::Theta) return {grid_value};
    return spec.thetas;
}

std::vector<int> effective_ms(const SweepSpec& spec, double grid_value) {
    if (spec.variable == SweepVariable::M) {
        if (grid_value != std::floor(grid_value) || grid_value < 1) {
            throw ConfigError("m grid values must be integers >= 1");
        }
        return {static_cast<int>(grid_value)};
    }
    return spec.ms;
}

ResolvedPoint resolve_point(const SweepSpec& spec, double v, double theta, int m) {
    ResolvedPoint p;
    p.value = v;
    p.sys = spec.fixed;
    p.sys.theta = theta;
    p.sys.fading_m = m;
    p.query = spec.query;
    std::optional<double> gr = spec.gamma_hat_r;
    std::optional<double> gd = spec.gamma_hat_d;
    switch (spec.variable) {
    case SweepVariable::Rho: p.sys.ps_factor = v; break;
    case SweepVariable::SourcePower: p.sys.source_power = v; break;
    case SweepVariable::EhEfficiency: p.sys.eh_efficiency = v; break;
    case SweepVariable::NoisePower: p.sys.noise_power = v; break;
    case SweepVariable::DistSr:
        p.sys.dist_sr = v;
        if (spec.dist_total) p.sys.dist_rd = *spec.dist_total - v;
        break;
    case SweepVariable::GammaHatD: gd = v; break;
    case SweepVariable::GammaHatR: gr = v; break;
    case SweepVariable::ThresholdDb:
        p.query.threshold = db_to_linear(v);
        p.value = p.query.threshold;
        break;
    case SweepVariable::Theta:
    case SweepVariable::M: break;
    }
    if (!(p.query.threshold >= 0.0)) throw DomainError("threshold must be >= 0");
    p.scales = derive_snr_scales(p.sys);
    if (gr) {
        if (!(*gr > 0.0)) throw DomainError("gamma_hat_r must be > 0");
        p.scales.gamma_hat_r = *gr;
    }
    if (gd) {
        if (!(*gd > 0.0)) throw DomainError("gamma_hat_d must be > 0");
        p.scales.gamma_hat_d = *gd;
    }
    return p;
}

std::string parameter_tag(const ResolvedPoint& p) {
    const SwiptSystem& s = p.sys;
    return "ps=" + format_number(s.source_power) + ";n=" + format_number(s.noise_power) +
           ";rho=" + format_number(s.ps_factor) + ";kappa=" + format_number(s.eh_efficiency) +
           ";d_sr=" + format_number(s.dist_sr) + ";d_rd=" + format_number(s.dist_rd) +
           ";alpha=" + format_number(s.pathloss_exp) + ";gamma_t=" + format_number(p.query.threshold) +
           ";gamma_hat_r=" + format_number(p.scales.gamma_hat_r) +
           ";gamma_hat_d=" + format_number(p.scales.gamma_hat_d);
}

std::vector<CsvRow> evaluate_sweep(const SweepSpec& spec) {
    validate(spec);
    std::vector<Task> tasks;
    for (double v : spec.grid) {
        for (double theta : effective_thetas(spec, v)) {
            for (int m : effective_ms(spec, v)) tasks.push_back({v, theta, m});
        }
    }
    // Points run in parallel; each Monte-Carlo run stays on its own thread.
    // Results do not depend on the split because batches fix the streams.
    const int pool_size = std::max(1, std::min<int>(spec.mc.workers, static_cast<int>(tasks.size())));
    McConfig mc = spec.mc;
    if (pool_size > 1) mc.workers = 1;

    std::vector<std::vector<CsvRow>> results(tasks.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            try {
                const Task& t = tasks[i];
                const ResolvedPoint p = resolve_point(spec, t.grid_value, t.theta, t.m);
                for (Mode mode : spec.modes) evaluate_mode(spec, p, t.theta, t.m, mode, mc, results[i]);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next.store(tasks.size());
                return;
            }
        }
    };
    if (pool_size == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < pool_size; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);

    std::vector<CsvRow> rows;
    for (auto& part : results) {
        for (auto& r : part) rows.push_back(std::move(r));
    }
    return rows;
}

int run_sweep(const std::vector<SweepSpec>& specs, const std::string& out_path, bool emit_gnuplot,
              std::ostream& err) {
    try {
        if (specs.empty()) throw ConfigError("nothing to run");
        for (const SweepSpec& s : specs) validate(s);
        AtomicCsvWriter writer(out_path);
        std::vector<CsvRow> all;
        for (const SweepSpec& s : specs) {
            for (CsvRow& r : evaluate_sweep(s)) {
                writer.write(r);
                all.push_back(std::move(r));
            }
        }
        writer.commit();
        if (emit_gnuplot) {
            const std::string gp_path = out_path + ".gp";
            std::ofstream gp(gp_path, std::ios::binary | std::ios::trunc);
            gp << gnuplot_script(all, out_path, specs.front().log_spacing);
            if (!gp) throw ConfigError("cannot write gnuplot script '" + gp_path + "'");
        }
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace swipt::cli
