#include "secrecy/rates.hpp"

#include "secrecy/errors.hpp"
#include "secrecy/rayleigh.hpp"

#include <cmath>
#include <limits>

namespace secrecy {

namespace {

constexpr double kNumericZeroRate = 1e-8;
constexpr double kMaxRate = 64.0;
constexpr double kRateTol = 1e-12;
constexpr double kMonotoneSlack = 1e-9;

double eps_at(Curve curve, ScenarioTag scenario, ChannelParams params, double rate_s) {
    params.rate_s = rate_s;
    return evaluate(curve, scenario, params);
}

} // namespace

double min_feasible_eps(Curve curve, ScenarioTag scenario, const ChannelParams& params) {
    params.validate();
    if (const auto variant = limit_variant(curve, scenario)) {
        return limit_rs0(*variant, params);
    }
    return eps_at(curve, scenario, params, kNumericZeroRate);
}

RateSolution eps_outage_rate(Curve curve, ScenarioTag scenario, const ChannelParams& params,
                             double eps_target) {
    params.validate();
    if (!(eps_target > 0.0 && eps_target < 1.0)) {
        throw InvalidParameter("target outage probability must lie in (0, 1)");
    }
    RateSolution sol;
    const double eps0 = min_feasible_eps(curve, scenario, params);
    if (eps0 > eps_target) {
        sol.achieved_eps = eps0;
        return sol;
    }

    double lo = 0.0;
    double eps_lo = eps0;
    double hi = 1.0;
    double eps_hi = eps_at(curve, scenario, params, hi);
    while (eps_hi <= eps_target) {
        ++sol.iterations;
        lo = hi;
        eps_lo = eps_hi;
        hi *= 2.0;
        if (hi > kMaxRate) {
            sol.rate_s = std::numeric_limits<double>::infinity();
            sol.achieved_eps = eps_lo;
            return sol;
        }
        eps_hi = eps_at(curve, scenario, params, hi);
    }

    while (hi - lo > kRateTol * std::max(1.0, hi)) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) {
            break;
        }
        ++sol.iterations;
        const double eps_mid = eps_at(curve, scenario, params, mid);
        if (eps_mid < eps_lo - kMonotoneSlack || eps_mid > eps_hi + kMonotoneSlack) {
            throw NumericFailure("outage curve is not monotone in the secrecy rate",
                                 std::max(eps_lo - eps_mid, eps_mid - eps_hi));
        }
        if (eps_mid <= eps_target) {
            lo = mid;
            eps_lo = eps_mid;
        } else {
            hi = mid;
            eps_hi = eps_mid;
        }
    }
    sol.rate_s = lo;
    sol.achieved_eps = eps_lo;
    return sol;
}

} // namespace secrecy
