#ifndef SWIPT_CLI_HPP
#define SWIPT_CLI_HPP

#include "swipt/montecarlo.hpp"
#include "swipt/swipt_metrics.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace swipt::cli {

enum class Mode { ClosedForm, Quadrature, MonteCarlo, Asymptotic };

std::string to_string(Mode mode);
Mode parse_mode(const std::string& text);
std::vector<Mode> parse_mode_list(const std::string& text);

enum class SweepVariable {
    Rho,
    SourcePower,
    EhEfficiency,
    NoisePower,
    DistSr,
    GammaHatD,
    GammaHatR,
    ThresholdDb,
    Theta,
    M,
};

std::string to_string(SweepVariable v);
SweepVariable parse_sweep_variable(const std::string& text);

struct SweepSpec {
    std::string name;
    SweepVariable variable = SweepVariable::Rho;
    // Swept values as written; threshold_db sweeps are in dB.
    std::vector<double> grid;
    bool log_spacing = false;
    SwiptSystem fixed;
    OutageQuery query;
    // Direct SNR-scale overrides; they bypass the physical parameterization.
    std::optional<double> gamma_hat_r;
    std::optional<double> gamma_hat_d;
    // When set, a dist_sr sweep keeps d_RD = dist_total - d_SR.
    std::optional<double> dist_total;
    std::vector<double> thetas;
    std::vector<int> ms;
    std::vector<Mode> modes = {Mode::ClosedForm, Mode::Quadrature};
    // Metric base names to keep; empty keeps all.
    std::vector<std::string> metrics;
    McConfig mc;
};

// Parses the key = value config format. Throws ConfigError with a line number.
SweepSpec parse_config(std::istream& in, const std::string& source_name);
SweepSpec load_config(const std::string& path);

// Throws ConfigError when the grid is empty or any point is outside the
// domain of the swept variable.
void validate(const SweepSpec& spec);

struct CsvRow {
    std::string variable;
    double value = 0.0;
    double theta = 0.0;
    int m = 1;
    std::string mode;
    std::string metric;
    double estimate = 0.0;
    std::optional<McEstimate> mc;
    std::uint64_t seed = 0;
    // Sample-based rows without a standard error still report seed and n.
    std::optional<std::uint64_t> n_samples;
};

extern const char* const kCsvHeader;

std::string format_number(double v);
std::string format_row(const CsvRow& row);

// Writes to <path>.tmp and renames on commit(); the temporary file is removed
// if the writer is destroyed without committing.
class AtomicCsvWriter {
public:
    explicit AtomicCsvWriter(std::string path);
    ~AtomicCsvWriter();
    AtomicCsvWriter(const AtomicCsvWriter&) = delete;
    AtomicCsvWriter& operator=(const AtomicCsvWriter&) = delete;

    void write(const CsvRow& row);
    void commit();

private:
    std::string path_;
    std::string tmp_path_;
    std::string buffer_;
    bool committed_ = false;
};

// Evaluates every (grid value, theta, m, mode) combination in grid order.
std::vector<CsvRow> evaluate_sweep(const SweepSpec& spec);

// Writes the CSV (and optionally a gnuplot sidecar <csv>.gp). Returns an exit
// status; error messages go to err.
int run_sweep(const std::vector<SweepSpec>& specs, const std::string& out_path, bool emit_gnuplot,
              std::ostream& err);

std::string gnuplot_script(const std::vector<CsvRow>& rows, const std::string& csv_path,
                           bool log_x);

std::vector<std::string> preset_names();
std::vector<SweepSpec> preset(const std::string& name);

struct FaultInjection {
    bool enabled = false;
    int m = 2;
    double theta = 0.5;
};

struct ValidationOptions {
    McConfig mc;
    FaultInjection fault;
};

int run_validation(const ValidationOptions& opts, const std::string& out_path, std::ostream& out,
                   std::ostream& err);

int main_entry(int argc, char** argv);

} // namespace swipt::cli

#endif
