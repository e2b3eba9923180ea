#ifndef SWIPT_CLI_POINT_HPP
#define SWIPT_CLI_POINT_HPP

#include "swipt/cli.hpp"

namespace swipt::cli {

// One fully resolved evaluation point of a sweep.
struct ResolvedPoint {
    double value = 0.0;  // CSV value column (linear for threshold sweeps)
    SwiptSystem sys;
    OutageQuery query;
    DerivedSnrScales scales;
};

ResolvedPoint resolve_point(const SweepSpec& spec, double grid_value, double theta, int m);

// Effective theta and m lists once theta/m sweeps are taken into account.
std::vector<double> effective_thetas(const SweepSpec& spec, double grid_value);
std::vector<int> effective_ms(const SweepSpec& spec, double grid_value);

std::string parameter_tag(const ResolvedPoint& p);

} // namespace swipt::cli

#endif
