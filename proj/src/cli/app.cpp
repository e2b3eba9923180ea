#include "swipt/cli.hpp"
#include "swipt/errors.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace swipt::cli {

namespace {

struct GlobalFlags {
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> samples;
    std::optional<int> workers;
    std::optional<std::string> modes;
    bool emit_gnuplot = false;
    std::optional<std::string> inject_fault;
};

void apply_flags(const GlobalFlags& f, std::vector<SweepSpec>& specs) {
    for (SweepSpec& s : specs) {
        if (f.seed) s.mc.seed = *f.seed;
        if (f.samples) s.mc.samples = *f.samples;
        if (f.workers) s.mc.workers = *f.workers;
        if (f.modes) s.modes = parse_mode_list(*f.modes);
    }
}

FaultInjection parse_fault(const std::string& text) {
    // "<m>:<theta>", e.g. "2:0.5"
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw ConfigError("--inject-fault expects <m>:<theta>");
    FaultInjection f;
    f.enabled = true;
    try {
        f.m = std::stoi(text.substr(0, colon));
        f.theta = std::stod(text.substr(colon + 1));
    } catch (const std::exception&) {
        throw ConfigError("--inject-fault expects <m>:<theta>");
    }
    return f;
}

} // namespace

int main_entry(int argc, char** argv) {
    CLI::App app{"Dual-hop SWIPT relay performance under copula-dependent Nakagami-m fading"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalFlags flags;
    app.add_option("--seed", flags.seed, "Monte-Carlo seed (u64)");
    app.add_option("--samples", flags.samples, "Monte-Carlo sample count")->check(CLI::PositiveNumber);
    app.add_option("--workers", flags.workers, "worker threads")->check(CLI::PositiveNumber);
    app.add_option("--modes", flags.modes,
                   "comma list of closed_form,quadrature,monte_carlo,asymptotic");
    app.add_flag("--emit-gnuplot", flags.emit_gnuplot, "also write <csv>.gp");
    app.add_option("--inject-fault", flags.inject_fault)->group("");

    std::string config_path;
    std::string preset_name;
    std::string out_path;

    auto* sweep = app.add_subcommand("sweep", "run a parameter sweep from a config file");
    sweep->add_option("config", config_path, "config file")->required()->check(CLI::ExistingFile);
    sweep->add_option("-o,--output", out_path, "CSV output path")->required();

    auto* validate_cmd = app.add_subcommand("validate", "run the closed-form / quadrature / MC matrix");
    validate_cmd->add_option("-o,--output", out_path, "CSV output path")->required();

    auto* preset_cmd = app.add_subcommand("preset", "run a named figure preset");
    preset_cmd->add_option("name", preset_name, "preset name")
        ->required()
        ->check(CLI::IsMember(preset_names()));
    preset_cmd->add_option("-o,--output", out_path, "CSV output path")->required();

    auto* asym = app.add_subcommand("asymptotic", "sweep with exact and high-SNR forms side by side");
    asym->add_option("config", config_path, "config file")->required()->check(CLI::ExistingFile);
    asym->add_option("-o,--output", out_path, "CSV output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (validate_cmd->parsed()) {
            ValidationOptions opts;
            opts.mc.samples = flags.samples.value_or(1000000);
            opts.mc.seed = flags.seed.value_or(20221);
            opts.mc.workers = flags.workers.value_or(1);
            if (flags.inject_fault) opts.fault = parse_fault(*flags.inject_fault);
            return run_validation(opts, out_path, std::cout, std::cerr);
        }
        std::vector<SweepSpec> specs;
        if (preset_cmd->parsed()) {
            specs = preset(preset_name);
        } else {
            specs = {load_config(config_path)};
            if (asym->parsed()) specs.front().modes = {Mode::ClosedForm, Mode::Asymptotic};
        }
        apply_flags(flags, specs);
        return run_sweep(specs, out_path, flags.emit_gnuplot, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace swipt::cli
