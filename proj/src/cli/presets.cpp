#include "swipt/cli.hpp"
#include "swipt/errors.hpp"

#include <cmath>

namespace swipt::cli {

namespace {

std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = n == 1 ? a : a + (b - a) * i / (n - 1);
    return v;
}

std::vector<double> logspace(double a, double b, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) {
        v[i] = n == 1 ? a : std::exp(std::log(a) + (std::log(b) - std::log(a)) * i / (n - 1));
    }
    return v;
}

// kappa = 0.7, P_S = 10 W, N = 1e-2 W, d_SR = d_RD = 2 m, alpha = 2.5
SwiptSystem capacity_baseline() {
    SwiptSystem s;
    s.source_power = 10.0;
    s.noise_power = 1e-2;
    s.ps_factor = 0.3;
    s.eh_efficiency = 0.7;
    s.dist_sr = 2.0;
    s.dist_rd = 2.0;
    s.pathloss_exp = 2.5;
    return s;
}

SweepSpec capacity_preset(const std::string& name, SweepVariable var, std::vector<double> grid,
                          bool log_spacing) {
    SweepSpec spec;
    spec.name = name;
    spec.variable = var;
    spec.grid = std::move(grid);
    spec.log_spacing = log_spacing;
    spec.fixed = capacity_baseline();
    spec.thetas = {-1.0, 0.0, 1.0};
    spec.ms = {1, 2};
    spec.modes = {Mode::ClosedForm, Mode::Quadrature, Mode::MonteCarlo};
    spec.metrics = {"cap_sr", "cap_rd", "cap_min", "cap_sr_meijer", "cap_rd_meijer"};
    spec.mc.samples = 200000;
    return spec;
}

// m = 1, P_S = 10 W, N = 1e-3 W, d_SR = d_RD = 2 m, alpha = 2.5, gamma_t = 0 dB
SweepSpec outage_rho_preset(const std::string& name, double kappa, double source_power,
                            std::vector<double> thetas) {
    SweepSpec spec;
    spec.name = name;
    spec.variable = SweepVariable::Rho;
    spec.grid = linspace(0.05, 0.95, 19);
    spec.fixed = capacity_baseline();
    spec.fixed.noise_power = 1e-3;
    spec.fixed.source_power = source_power;
    spec.fixed.eh_efficiency = kappa;
    spec.query.threshold = 1.0;
    spec.thetas = std::move(thetas);
    spec.ms = {1};
    spec.modes = {Mode::ClosedForm, Mode::Quadrature, Mode::MonteCarlo};
    spec.metrics = {"outage"};
    spec.mc.samples = 200000;
    return spec;
}

} // namespace

std::vector<std::string> preset_names() {
    return {"fig3", "fig4", "fig5", "fig6", "fig7", "fig8", "fig9", "fig10", "asym-csr"};
}

std::vector<SweepSpec> preset(const std::string& name) {
    if (name == "fig3") {
        return {capacity_preset(name, SweepVariable::Rho, linspace(0.05, 0.95, 19), false)};
    }
    if (name == "fig4") {
        return {capacity_preset(name, SweepVariable::SourcePower, logspace(0.1, 100.0, 16), true)};
    }
    if (name == "fig5") {
        return {capacity_preset(name, SweepVariable::EhEfficiency, linspace(0.1, 1.0, 10), false)};
    }
    if (name == "fig6") {
        SweepSpec s = capacity_preset(name, SweepVariable::NoisePower, logspace(1e-4, 1e-1, 13), true);
        s.fixed.source_power = 1.0;
        return {s};
    }
    if (name == "fig7") {
        SweepSpec s = capacity_preset(name, SweepVariable::DistSr, linspace(0.5, 3.5, 13), false);
        s.dist_total = 4.0;
        s.ms = {1};
        return {s};
    }
    if (name == "fig8") {
        return {outage_rho_preset(name, 0.7, 10.0, {-1.0, 0.0, 1.0}),
                outage_rho_preset(name, 1.0, 10.0, {-1.0, 0.0, 1.0})};
    }
    if (name == "fig9") {
        return {outage_rho_preset(name, 0.7, 1.0, {1.0}), outage_rho_preset(name, 0.7, 5.0, {1.0}),
                outage_rho_preset(name, 0.7, 10.0, {1.0})};
    }
    if (name == "fig10") {
        SweepSpec spec = outage_rho_preset(name, 0.7, 10.0, {1.0});
        spec.variable = SweepVariable::GammaHatD;
        spec.grid = logspace(1.0, 1e4, 13);
        spec.log_spacing = true;
        spec.ms = {1, 2, 3};
        spec.modes = {Mode::ClosedForm, Mode::Asymptotic, Mode::MonteCarlo};
        return {spec};
    }
    if (name == "asym-csr") {
        SweepSpec spec = capacity_preset(name, SweepVariable::GammaHatR, logspace(1.0, 1e4, 13), true);
        spec.fixed.noise_power = 1e-3;
        spec.ms = {1, 2, 3};
        spec.thetas = {0.0};
        spec.modes = {Mode::Quadrature, Mode::Asymptotic};
        spec.metrics = {"cap_sr"};
        return {spec};
    }
    std::string known;
    for (const auto& n : preset_names()) known += (known.empty() ? "" : ", ") + n;
    throw ConfigError("unknown preset '" + name + "' (known: " + known + ")");
}

} // namespace swipt::cli
