#include "swipt/cli.hpp"
#include "swipt/errors.hpp"

#include "point.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace swipt::cli {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

class LineError {
public:
    LineError(std::string source, int line) : source_(std::move(source)), line_(line) {}
    [[noreturn]] void raise(const std::string& msg) const {
        std::ostringstream os;
        os << source_ << ":" << line_ << ": " << msg;
        throw ConfigError(os.str());
    }

private:
    std::string source_;
    int line_;
};

double to_number(const std::string& text, const LineError& where) {
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (trim(text.substr(used)).empty()) return v;
    } catch (const std::exception&) {
    }
    where.raise("not a number: '" + text + "'");
}

std::uint64_t to_unsigned(const std::string& text, const LineError& where) {
    const double v = to_number(text, where);
    if (v < 0 || v != std::floor(v) || v > 1.8e19) where.raise("expected a non-negative integer: '" + text + "'");
    // Plain digit strings go through stoull so values above 2^53 stay exact;
    // anything else (1e6, 1000.0) is taken from the parsed double.
    if (text.find_first_not_of("0123456789") == std::string::npos) return std::stoull(text);
    return static_cast<std::uint64_t>(v);
}

struct GridParts {
    std::optional<std::vector<double>> values;
    std::optional<double> start;
    std::optional<double> stop;
    std::optional<std::uint64_t> count;
    std::string spacing = "linear";
};

std::vector<double> build_grid(const GridParts& g, const std::string& source) {
    if (g.values) {
        if (g.start || g.stop || g.count) {
            throw ConfigError(source + ": give either 'values' or 'start/stop/count', not both");
        }
        return *g.values;
    }
    if (!g.start && !g.stop && !g.count) return {};
    if (!g.start || !g.stop || !g.count) {
        throw ConfigError(source + ": 'start', 'stop' and 'count' must be given together");
    }
    const std::uint64_t n = *g.count;
    if (n == 0) return {};
    std::vector<double> out(n);
    const bool log_spacing = g.spacing == "log";
    if (log_spacing && (*g.start <= 0.0 || *g.stop <= 0.0)) {
        throw ConfigError(source + ": log spacing needs positive start and stop");
    }
    for (std::uint64_t i = 0; i < n; ++i) {
        const double f = n == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(n - 1);
        out[i] = log_spacing
                     ? std::exp(std::log(*g.start) + f * (std::log(*g.stop) - std::log(*g.start)))
                     : *g.start + f * (*g.stop - *g.start);
    }
    return out;
}

} // namespace

std::string to_string(Mode mode) {
    switch (mode) {
    case Mode::ClosedForm: return "closed_form";
    case Mode::Quadrature: return "quadrature";
    case Mode::MonteCarlo: return "monte_carlo";
    case Mode::Asymptotic: return "asymptotic";
    }
    return "unknown";
}

Mode parse_mode(const std::string& text) {
    const std::string t = lower(trim(text));
    if (t == "closed_form") return Mode::ClosedForm;
    if (t == "quadrature") return Mode::Quadrature;
    if (t == "monte_carlo") return Mode::MonteCarlo;
    if (t == "asymptotic") return Mode::Asymptotic;
    throw ConfigError("unknown mode '" + text +
                      "' (expected closed_form, quadrature, monte_carlo or asymptotic)");
}

std::vector<Mode> parse_mode_list(const std::string& text) {
    std::vector<Mode> out;
    for (const auto& item : split_list(text)) {
        const Mode m = parse_mode(item);
        if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
    }
    if (out.empty()) throw ConfigError("mode list is empty");
    return out;
}

std::string to_string(SweepVariable v) {
    switch (v) {
    case SweepVariable::Rho: return "rho";
    case SweepVariable::SourcePower: return "source_power";
    case SweepVariable::EhEfficiency: return "eh_efficiency";
    case SweepVariable::NoisePower: return "noise_power";
    case SweepVariable::DistSr: return "dist_sr";
    case SweepVariable::GammaHatD: return "gamma_hat_d";
    case SweepVariable::GammaHatR: return "gamma_hat_r";
    case SweepVariable::ThresholdDb: return "threshold_db";
    case SweepVariable::Theta: return "theta";
    case SweepVariable::M: return "m";
    }
    return "unknown";
}

SweepVariable parse_sweep_variable(const std::string& text) {
    static const std::map<std::string, SweepVariable> table = {
        {"rho", SweepVariable::Rho},
        {"source_power", SweepVariable::SourcePower},
        {"eh_efficiency", SweepVariable::EhEfficiency},
        {"noise_power", SweepVariable::NoisePower},
        {"dist_sr", SweepVariable::DistSr},
        {"gamma_hat_d", SweepVariable::GammaHatD},
        {"gamma_hat_r", SweepVariable::GammaHatR},
        {"threshold_db", SweepVariable::ThresholdDb},
        {"theta", SweepVariable::Theta},
        {"m", SweepVariable::M},
    };
    const auto it = table.find(lower(trim(text)));
    if (it == table.end()) throw ConfigError("unknown sweep variable '" + text + "'");
    return it->second;
}

SweepSpec parse_config(std::istream& in, const std::string& source_name) {
    SweepSpec spec;
    spec.name = source_name;
    GridParts grid;
    std::optional<std::vector<double>> thetas;
    std::optional<std::vector<int>> ms;
    std::string section;
    std::string raw;
    int line_no = 0;

    while (std::getline(in, raw)) {
        ++line_no;
        const LineError where(source_name, line_no);
        std::string line = raw;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') where.raise("malformed section header");
            section = lower(trim(line.substr(1, line.size() - 2)));
            if (section != "system" && section != "sweep" && section != "mc") {
                where.raise("unknown section [" + section + "]");
            }
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) where.raise("expected 'key = value'");
        std::string key = lower(trim(line.substr(0, eq)));
        const std::string value = trim(line.substr(eq + 1));
        if (section.empty()) where.raise("key '" + key + "' appears before any section header");
        if (value.empty()) where.raise("key '" + key + "' has no value");

        // dB keys are converted here; everything downstream is linear.
        bool from_db = false;
        if (key.size() > 3 && key.ends_with("_db") && key != "threshold_db") {
            key.resize(key.size() - 3);
            from_db = true;
        }
        auto number = [&] {
            const double v = to_number(value, where);
            return from_db ? db_to_linear(v) : v;
        };
        auto no_db = [&] {
            if (from_db) where.raise("key '" + key + "_db' has no dB form");
        };

        if (section == "system") {
            SwiptSystem& s = spec.fixed;
            if (key == "source_power") s.source_power = number();
            else if (key == "noise_power") s.noise_power = number();
            else if (key == "ps_factor" || key == "rho") { no_db(); s.ps_factor = number(); }
            else if (key == "eh_efficiency" || key == "kappa") { no_db(); s.eh_efficiency = number(); }
            else if (key == "dist_sr") { no_db(); s.dist_sr = number(); }
            else if (key == "dist_rd") { no_db(); s.dist_rd = number(); }
            else if (key == "pathloss_exp" || key == "alpha") { no_db(); s.pathloss_exp = number(); }
            else if (key == "fading_m" || key == "m") {
                no_db();
                const double m = number();
                if (m != std::floor(m) || m < 1) where.raise("fading_m must be an integer >= 1");
                s.fading_m = static_cast<int>(m);
            }
            else if (key == "theta") { no_db(); s.theta = number(); }
            else if (key == "threshold") spec.query.threshold = number();
            else if (key == "threshold_db") spec.query.threshold = db_to_linear(to_number(value, where));
            else if (key == "gamma_hat_r") spec.gamma_hat_r = number();
            else if (key == "gamma_hat_d") spec.gamma_hat_d = number();
            else where.raise("unknown key '" + key + (from_db ? "_db" : "") + "' in [system]");
        } else if (section == "sweep") {
            no_db();
            if (key == "variable") spec.variable = parse_sweep_variable(value);
            else if (key == "name") spec.name = value;
            else if (key == "values") {
                std::vector<double> v;
                for (const auto& item : split_list(value)) v.push_back(to_number(item, where));
                grid.values = v;
            }
            else if (key == "start") grid.start = number();
            else if (key == "stop") grid.stop = number();
            else if (key == "count") grid.count = to_unsigned(value, where);
            else if (key == "spacing") {
                grid.spacing = lower(value);
                if (grid.spacing != "linear" && grid.spacing != "log") {
                    where.raise("spacing must be 'linear' or 'log'");
                }
            }
            else if (key == "thetas") {
                std::vector<double> v;
                for (const auto& item : split_list(value)) v.push_back(to_number(item, where));
                thetas = v;
            }
            else if (key == "ms") {
                std::vector<int> v;
                for (const auto& item : split_list(value)) {
                    const double m = to_number(item, where);
                    if (m != std::floor(m) || m < 1) where.raise("ms entries must be integers >= 1");
                    v.push_back(static_cast<int>(m));
                }
                ms = v;
            }
            else if (key == "modes") {
                try {
                    spec.modes = parse_mode_list(value);
                } catch (const ConfigError& e) {
                    where.raise(e.what());
                }
            }
            else if (key == "metrics") spec.metrics = split_list(value);
            else if (key == "dist_total") spec.dist_total = number();
            else where.raise("unknown key '" + key + "' in [sweep]");
        } else {
            no_db();
            if (key == "samples") spec.mc.samples = to_unsigned(value, where);
            else if (key == "seed") spec.mc.seed = to_unsigned(value, where);
            else if (key == "workers") spec.mc.workers = static_cast<int>(to_unsigned(value, where));
            else if (key == "batch_size") spec.mc.batch_size = to_unsigned(value, where);
            else where.raise("unknown key '" + key + "' in [mc]");
        }
    }

    spec.grid = build_grid(grid, source_name);
    spec.log_spacing = grid.spacing == "log";
    spec.thetas = thetas.value_or(std::vector<double>{spec.fixed.theta});
    spec.ms = ms.value_or(std::vector<int>{spec.fixed.fading_m});
    return spec;
}

SweepSpec load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    return parse_config(in, path);
}

void validate(const SweepSpec& spec) {
    const std::string where = spec.name.empty() ? std::string("sweep") : spec.name;
    if (spec.grid.empty()) throw ConfigError(where + ": sweep grid is empty");
    if (spec.modes.empty()) throw ConfigError(where + ": no modes selected");
    if (spec.variable != SweepVariable::Theta && spec.thetas.empty()) {
        throw ConfigError(where + ": theta list is empty");
    }
    if (spec.variable != SweepVariable::M && spec.ms.empty()) {
        throw ConfigError(where + ": m list is empty");
    }
    if (spec.dist_total && spec.variable != SweepVariable::DistSr) {
        throw ConfigError(where + ": dist_total only applies to dist_sr sweeps");
    }
    static const std::vector<std::string> known = {"cap_sr", "cap_rd", "cap_min", "cap_sr_meijer",
                                                   "cap_rd_meijer", "outage", "mean_snr_d"};
    for (const std::string& name : spec.metrics) {
        const std::string base = name.substr(0, name.find('['));
        if (std::find(known.begin(), known.end(), base) == known.end()) {
            throw ConfigError(where + ": unknown metric '" + name + "'");
        }
    }
    try {
        validate(spec.mc);
        for (double v : spec.grid) {
            if (!std::isfinite(v)) throw ConfigError("non-finite grid value");
            for (double theta : effective_thetas(spec, v)) {
                for (int m : effective_ms(spec, v)) resolve_point(spec, v, theta, m);
            }
        }
    } catch (const ConfigError& e) {
        throw ConfigError(where + ": " + e.what());
    } catch (const std::exception& e) {
        throw ConfigError(where + ": invalid sweep point: " + e.what());
    }
}

} // namespace swipt::cli
