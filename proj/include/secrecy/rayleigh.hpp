#pragma once

#include "secrecy/marginals.hpp"
#include "secrecy/scenario.hpp"

#include <optional>
#include <vector>

namespace secrecy {

/// Rates of the transformed exponential pair: Xt ~ Exp(lt_x) and
/// -Yt ~ Exp(lt_y), with thresholds s <= t.
struct RayleighRates {
    double lt_x;
    double lt_y;
    double s;
    double t;
};

RayleighRates rayleigh_rates(const ChannelParams& params);
/// Validates and builds rates directly; t defaults to s.
RayleighRates make_rates(double lt_x, double lt_y, double s, std::optional<double> t = {});

TransformedPair to_pair(const RayleighRates& r);

/// Unique stationary point of g and h, absent when lt_x == lt_y.
std::optional<double> ystar(const RayleighRates& r);

/// Closed forms for csit and nocsit. The equal-rate case lt_x == lt_y falls
/// back to the generic engine. Alt scenarios throw UnsupportedScenario.
double closed_bound(ScenarioTag scenario, Curve curve, const RayleighRates& r);

/// Curve value for any scenario under Rayleigh fading: closed forms where they
/// exist, the generic engine otherwise.
double evaluate(Curve curve, ScenarioTag scenario, const ChannelParams& params);

/// Eve SNR (linear) below which the csit lower bound equals F_Xt(s).
double eve_snr_threshold(double lambda_x, double lambda_y, double rho_x, double rate_s);

/// log2((lambda_y / lambda_x) (rho_x / rho_y)); secrecy rates below it keep the
/// csit lower bound at F_Xt(s). May be <= 0.
double rs_sufficient_bound(double lambda_x, double lambda_y, double rho_x, double rho_y);

enum class LimitVariant {
    csit_lower,
    csit_upper,
    csit_independent,
    nocsit_lower,
    nocsit_upper,
    nocsit_independent,
};

/// Analytic value of the curve as R_S -> 0+ (rate_s of params is ignored).
double limit_rs0(LimitVariant variant, const ChannelParams& params);

/// Limit variant for a curve, if an analytic limit is available.
std::optional<LimitVariant> limit_variant(Curve curve, ScenarioTag scenario);

/// Least-squares slope of -log eps against log rho_x over the upper half of
/// the grid (Bob SNR in dB, ascending, >= 5 points spanning >= 20 dB).
/// Throws NonIdentifiable when the curve sits at 1 on the whole fitted range or
/// touches 0.
double diversity_estimate(ScenarioTag scenario, Curve curve, const ChannelParams& params,
                          const std::vector<double>& snr_grid_db);

} // namespace secrecy
