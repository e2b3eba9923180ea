#include "swipt/system_capacity.hpp"

#include <algorithm>

namespace swipt {

double min_of_mean_capacities(const SwiptSystem& sys) {
    const DerivedSnrScales s = derive_snr_scales(sys);
    return std::min(ergodic_capacity_sr(s.gamma_hat_r, sys.fading_m),
                    ergodic_capacity_rd(s.gamma_hat_d, sys.fading_m, sys.theta));
}

SystemCapacity ergodic_capacity_system(const SwiptSystem& sys, const McConfig& cfg) {
    const DerivedSnrScales s = derive_snr_scales(sys);
    SystemCapacity out;
    out.cap_sr = ergodic_capacity_sr(s.gamma_hat_r, sys.fading_m);
    out.cap_rd = ergodic_capacity_rd(s.gamma_hat_d, sys.fading_m, sys.theta);
    out.min_of_means = std::min(out.cap_sr, out.cap_rd);
    out.mean_of_min_mc = simulate_metrics(s, sys.fading_m, sys.theta, OutageQuery{}, cfg).cap_min;
    return out;
}

} // namespace swipt
