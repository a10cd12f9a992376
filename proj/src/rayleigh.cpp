#include "secrecy/rayleigh.hpp"

#include "secrecy/bounds.hpp"
#include "secrecy/errors.hpp"

#include <algorithm>
#include <cmath>

namespace secrecy {

namespace {

// 1 - F_Xt(s - y) for y <= 0.
double sx(const RayleighRates& r, double y) { return std::exp(-r.lt_x * (r.s - y)); }
// F_Yt(y) for y <= 0.
double fy(const RayleighRates& r, double y) { return std::exp(r.lt_y * y); }

double g1(const RayleighRates& r, double y) { return fy(r, y) - sx(r, y); }
double h1(const RayleighRates& r, double y) { return 1.0 - sx(r, y) + fy(r, y); }

double generic(ScenarioTag scenario, Curve curve, const RayleighRates& r) {
    const TransformedPair pair = to_pair(r);
    if (curve == Curve::independent) {
        return independent_outage(scenario, pair);
    }
    return bound(scenario, curve == Curve::lower ? Direction::lower : Direction::upper, pair).value;
}

// Limit of g1 and h1 with s = 0, where the stationary point solves
// b e^{b y} = a e^{a y}.
struct ZeroRateLimit {
    double a;
    double b;
    double t0;

    std::optional<double> y0() const {
        if (a == b) {
            return std::nullopt;
        }
        return std::log(b / a) / (a - b);
    }
    double g(double y) const { return std::exp(b * y) - std::exp(a * y); }
};

ZeroRateLimit zero_rate_limit(const ChannelParams& params) {
    params.validate();
    return {params.lambda_x / params.rho_x, params.lambda_y / params.rho_y,
            std::exp2(params.rate_d) - 1.0};
}

} // namespace

RayleighRates rayleigh_rates(const ChannelParams& params) {
    params.validate();
    return {params.lambda_x / params.rho_x, params.lambda_y / (std::exp2(params.rate_s) * params.rho_y),
            params.s(), params.t()};
}

RayleighRates make_rates(double lt_x, double lt_y, double s, std::optional<double> t) {
    const double tt = t.value_or(s);
    if (!(std::isfinite(lt_x) && lt_x > 0.0 && std::isfinite(lt_y) && lt_y > 0.0)) {
        throw InvalidParameter("transformed rates must be positive and finite");
    }
    if (!(std::isfinite(s) && s >= 0.0 && std::isfinite(tt) && tt >= s)) {
        throw InvalidParameter("thresholds must satisfy 0 <= s <= t");
    }
    return {lt_x, lt_y, s, tt};
}

TransformedPair to_pair(const RayleighRates& r) { return exponential_pair(r.lt_x, r.lt_y, r.s, r.t); }

std::optional<double> ystar(const RayleighRates& r) {
    if (r.lt_x == r.lt_y) {
        return std::nullopt;
    }
    return (r.lt_x * r.s + std::log(r.lt_y / r.lt_x)) / (r.lt_x - r.lt_y);
}

double closed_bound(ScenarioTag scenario, Curve curve, const RayleighRates& r) {
    if (scenario == ScenarioTag::alt_csit || scenario == ScenarioTag::alt_nocsit) {
        throw UnsupportedScenario("no closed form for " + to_string(scenario));
    }
    const double lx = r.lt_x;
    const double ly = r.lt_y;

    if (curve == Curve::independent) {
        if (scenario == ScenarioTag::csit) {
            return std::clamp(1.0 - ly * std::exp(-lx * r.s) / (lx + ly), 0.0, 1.0);
        }
        const double v = -std::expm1(-lx * r.t) + lx * std::exp(ly * (r.s - r.t) - lx * r.t) / (lx + ly);
        return std::clamp(v, 0.0, 1.0);
    }

    const std::optional<double> y = ystar(r);
    if (!y) {
        return generic(scenario, curve, r);
    }

    double v = 0.0;
    if (scenario == ScenarioTag::csit) {
        if (curve == Curve::lower) {
            v = ly < lx * std::exp(-lx * r.s) ? g1(r, *y) : -std::expm1(-lx * r.s);
        } else {
            v = lx >= ly ? 1.0 : h1(r, *y);
        }
    } else {
        const double y_cut = std::min(*y, r.s - r.t);
        if (curve == Curve::lower) {
            v = std::max(g1(r, y_cut), -std::expm1(-lx * r.t));
        } else {
            v = ly > lx ? std::min(1.0, h1(r, y_cut)) : 1.0;
        }
    }
    return std::clamp(v, 0.0, 1.0);
}

double evaluate(Curve curve, ScenarioTag scenario, const ChannelParams& params) {
    const RayleighRates r = rayleigh_rates(params);
    if (scenario == ScenarioTag::csit || scenario == ScenarioTag::nocsit) {
        return closed_bound(scenario, curve, r);
    }
    return generic(scenario, curve, r);
}

double eve_snr_threshold(double lambda_x, double lambda_y, double rho_x, double rate_s) {
    if (!(lambda_x > 0.0 && lambda_y > 0.0 && rho_x > 0.0 && rate_s >= 0.0)) {
        throw InvalidParameter("threshold needs positive scales and SNR and a non-negative rate");
    }
    const double scale = std::exp2(rate_s);
    return (lambda_y / lambda_x) * (rho_x / scale) * std::exp((lambda_x / rho_x) * (scale - 1.0));
}

double rs_sufficient_bound(double lambda_x, double lambda_y, double rho_x, double rho_y) {
    if (!(lambda_x > 0.0 && lambda_y > 0.0 && rho_x > 0.0 && rho_y > 0.0)) {
        throw InvalidParameter("rate condition needs positive scales and SNRs");
    }
    return std::log2((lambda_y / lambda_x) * (rho_x / rho_y));
}

double limit_rs0(LimitVariant variant, const ChannelParams& params) {
    const ZeroRateLimit L = zero_rate_limit(params);
    const std::optional<double> y0 = L.y0();
    switch (variant) {
    case LimitVariant::csit_lower:
        return L.b < L.a ? L.g(*y0) : 0.0;
    case LimitVariant::csit_upper:
        return L.a < L.b ? 1.0 + L.g(*y0) : 1.0;
    case LimitVariant::csit_independent:
        return L.a / (L.a + L.b);
    case LimitVariant::nocsit_lower: {
        const double floor = -std::expm1(-L.a * L.t0);
        return y0 ? std::max(L.g(std::min(*y0, -L.t0)), floor) : floor;
    }
    case LimitVariant::nocsit_upper:
        return L.b > L.a ? std::min(1.0, 1.0 + L.g(std::min(*y0, -L.t0))) : 1.0;
    case LimitVariant::nocsit_independent:
        return -std::expm1(-L.a * L.t0) + L.a * std::exp(-(L.a + L.b) * L.t0) / (L.a + L.b);
    }
    return 0.0;
}

std::optional<LimitVariant> limit_variant(Curve curve, ScenarioTag scenario) {
    if (scenario == ScenarioTag::csit) {
        switch (curve) {
        case Curve::lower: return LimitVariant::csit_lower;
        case Curve::upper: return LimitVariant::csit_upper;
        case Curve::independent: return LimitVariant::csit_independent;
        }
    }
    if (scenario == ScenarioTag::nocsit) {
        switch (curve) {
        case Curve::lower: return LimitVariant::nocsit_lower;
        case Curve::upper: return LimitVariant::nocsit_upper;
        case Curve::independent: return LimitVariant::nocsit_independent;
        }
    }
    return std::nullopt;
}

double diversity_estimate(ScenarioTag scenario, Curve curve, const ChannelParams& params,
                          const std::vector<double>& snr_grid_db) {
    if (snr_grid_db.size() < 5) {
        throw InvalidParameter("diversity grid needs at least 5 points");
    }
    if (!std::is_sorted(snr_grid_db.begin(), snr_grid_db.end()) ||
        std::adjacent_find(snr_grid_db.begin(), snr_grid_db.end()) != snr_grid_db.end()) {
        throw InvalidParameter("diversity grid must be strictly ascending");
    }
    if (snr_grid_db.back() - snr_grid_db.front() < 20.0) {
        throw InvalidParameter("diversity grid must span at least 20 dB");
    }

    std::vector<double> xs;
    std::vector<double> ys;
    bool all_saturated = true;
    for (std::size_t i = snr_grid_db.size() / 2; i < snr_grid_db.size(); ++i) {
        ChannelParams p = params;
        p.rho_x = db_to_linear(snr_grid_db[i]);
        const double eps = evaluate(curve, scenario, p);
        if (!(eps > 0.0)) {
            throw NonIdentifiable("outage probability vanishes on the diversity grid");
        }
        all_saturated = all_saturated && eps >= 1.0;
        xs.push_back(std::log(p.rho_x));
        ys.push_back(-std::log(eps));
    }
    if (all_saturated) {
        throw NonIdentifiable("outage probability is 1 over the whole diversity grid");
    }

    const double n = static_cast<double>(xs.size());
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i] / n;
        my += ys[i] / n;
    }
    double sxy = 0.0;
    double sxx = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    return sxy / sxx;
}

} // namespace secrecy
