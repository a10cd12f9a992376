#pragma once

#include "secrecy/marginals.hpp"
#include "secrecy/scenario.hpp"

namespace secrecy {

struct RateSolution {
    double rate_s = 0.0; ///< +inf when the target is met at every rate up to 64
    double achieved_eps = 0.0;
    int iterations = 0;
};

/// Outage probability of the curve as R_S -> 0+ under Rayleigh fading.
double min_feasible_eps(Curve curve, ScenarioTag scenario, const ChannelParams& params);

/// Largest R_S whose outage probability stays at or below eps_target, by
/// bisection on the non-decreasing map R_S -> eps (rate_s of params is
/// ignored). Throws NumericFailure if a monotonicity spot check fails.
RateSolution eps_outage_rate(Curve curve, ScenarioTag scenario, const ChannelParams& params,
                             double eps_target);

} // namespace secrecy
