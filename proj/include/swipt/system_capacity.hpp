#ifndef SWIPT_SYSTEM_CAPACITY_HPP
#define SWIPT_SYSTEM_CAPACITY_HPP

#include "swipt/montecarlo.hpp"
#include "swipt/swipt_metrics.hpp"

namespace swipt {

// End-to-end ergodic capacity under both readings of min(C_SR, C_RD):
// the minimum of the two per-hop means, and the simulated mean of the
// per-draw minimum.
struct SystemCapacity {
    double cap_sr = 0.0;
    double cap_rd = 0.0;
    double min_of_means = 0.0;
    McEstimate mean_of_min_mc;
};

SystemCapacity ergodic_capacity_system(const SwiptSystem& sys, const McConfig& cfg);

// Analytic part only.
double min_of_mean_capacities(const SwiptSystem& sys);

} // namespace swipt

#endif
