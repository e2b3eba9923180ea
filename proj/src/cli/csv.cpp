#include "swipt/cli.hpp"
#include "swipt/errors.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace swipt::cli {

const char* const kCsvHeader =
    "variable,value,theta,m,mode,metric,estimate,stderr,ci95_low,ci95_high,seed,n_samples";

std::string format_number(double v) {
    if (v == 0.0) v = 0.0;  // no "-0"
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string format_row(const CsvRow& row) {
    std::string out;
    out.reserve(160);
    out += row.variable;
    out += ',' + format_number(row.value);
    out += ',' + format_number(row.theta);
    out += ',' + std::to_string(row.m);
    out += ',' + row.mode;
    out += ',' + row.metric;
    out += ',' + format_number(row.estimate);
    if (row.mc) {
        out += ',' + format_number(row.mc->std_error);
        out += ',' + format_number(row.mc->ci95_low);
        out += ',' + format_number(row.mc->ci95_high);
        out += ',' + std::to_string(row.seed);
        out += ',' + std::to_string(row.mc->n);
    } else if (row.n_samples) {
        out += ",,,," + std::to_string(row.seed) + ',' + std::to_string(*row.n_samples);
    } else {
        out += ",,,,,";
    }
    return out;
}

AtomicCsvWriter::AtomicCsvWriter(std::string path)
    : path_(std::move(path)), tmp_path_(path_ + ".tmp") {
    buffer_ = kCsvHeader;
    buffer_ += '\n';
}

AtomicCsvWriter::~AtomicCsvWriter() {
    if (!committed_) {
        std::error_code ec;
        std::filesystem::remove(tmp_path_, ec);
    }
}

void AtomicCsvWriter::write(const CsvRow& row) {
    buffer_ += format_row(row);
    buffer_ += '\n';
}

void AtomicCsvWriter::commit() {
    {
        std::ofstream out(tmp_path_, std::ios::binary | std::ios::trunc);
        if (!out) throw ConfigError("cannot open '" + tmp_path_ + "' for writing");
        out.write(buffer_.data(), static_cast<std::streamsize>(buffer_.size()));
        out.flush();
        if (!out) throw ConfigError("write to '" + tmp_path_ + "' failed");
    }
    std::error_code ec;
    std::filesystem::rename(tmp_path_, path_, ec);
    if (ec) throw ConfigError("cannot move output into place at '" + path_ + "': " + ec.message());
    committed_ = true;
}

std::string gnuplot_script(const std::vector<CsvRow>& rows, const std::string& csv_path,
                           bool log_x) {
    // One curve per (theta, m, mode, metric name).
    std::set<std::tuple<double, int, std::string, std::string>> series;
    std::string xlabel = rows.empty() ? "value" : rows.front().variable;
    for (const CsvRow& r : rows) {
        const std::string base = r.metric.substr(0, r.metric.find('|'));
        series.emplace(r.theta, r.m, r.mode, base);
    }
    const std::string file = std::filesystem::path(csv_path).filename().string();
    std::ostringstream gp;
    gp << "# gnuplot script for " << file << "\n";
    gp << "set datafile separator ','\n";
    gp << "set key outside right\n";
    gp << "set grid\n";
    gp << "set xlabel '" << xlabel << "'\n";
    gp << "set ylabel 'estimate'\n";
    if (log_x) gp << "set logscale x\n";
    gp << "data = '" << file << "'\n";
    gp << "plot \\\n";
    std::size_t i = 0;
    for (const auto& [theta, m, mode, metric] : series) {
        const std::string prefix = metric + "|";
        gp << "  data every ::1 using 2:((strcol(3) eq '" << format_number(theta)
           << "' && strcol(4) eq '" << m << "' && strcol(5) eq '" << mode << "' && strcol(6)[1:"
           << prefix.size() << "] eq '" << prefix << "') ? $7 : NaN) with linespoints title '"
           << metric << " " << mode << " theta=" << format_number(theta) << " m=" << m << "'";
        gp << (++i < series.size() ? ", \\\n" : "\n");
    }
    return gp.str();
}

} // namespace swipt::cli
