#include "secrecy/bounds.hpp"

#include "secrecy/copulas.hpp"
#include "secrecy/errors.hpp"
#include "secrecy/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace secrecy {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Tail mass treated as the effective -inf when bracketing stationary points.
constexpr double kTailMass = 1e-300;
constexpr int kGridPoints = 3000;
constexpr double kMaxQuadratureError = 1e-10;

void check_pair(const TransformedPair& pair) {
    if (!pair.xt || !pair.yt) {
        throw ConfigurationError("transformed pair is missing a marginal");
    }
    if (!(std::isfinite(pair.s) && pair.s >= 0.0 && std::isfinite(pair.t) && pair.t >= pair.s)) {
        throw ConfigurationError("thresholds must satisfy 0 <= s <= t");
    }
}

// Distance to the left of zero below which Yt keeps less than kTailMass.
double effective_tail(const Marginal& yt) {
    const Support sup = yt.support();
    if (std::isfinite(sup.lo)) {
        return -sup.lo;
    }
    if (auto* e = dynamic_cast<const ExponentialMarginal*>(&yt)) {
        return -std::log(kTailMass) / e->rate();
    }
    double y = -1.0;
    for (int i = 0; i < 2100 && yt.cdf(y) > kTailMass; ++i) {
        y *= 2.0;
    }
    return -y;
}

BoundResult select(Direction direction, std::vector<Candidate> boundary,
                   const std::vector<Candidate>& interior, std::vector<double> stationary) {
    BoundResult r;
    r.stationary_points = std::move(stationary);
    r.candidates = std::move(boundary);
    const std::size_t n_boundary = r.candidates.size();
    r.candidates.insert(r.candidates.end(), interior.begin(), interior.end());

    std::size_t best = 0;
    for (std::size_t i = 1; i < r.candidates.size(); ++i) {
        const double v = r.candidates[i].value;
        const double b = r.candidates[best].value;
        if (direction == Direction::lower ? v > b : v < b) {
            best = i;
        }
    }
    const double raw = r.candidates[best].value;
    r.value = std::clamp(raw, 0.0, 1.0);
    r.clamped = r.value != raw;
    if (r.value >= 1.0) {
        r.branch = Branch::saturated_one;
    } else if (best >= n_boundary) {
        r.branch = Branch::stationary_interior;
    } else {
        r.branch = Branch::trivial_boundary;
    }
    return r;
}

std::vector<double> integration_breakpoints(const TransformedPair& pair) {
    std::vector<double> pts;
    for (int k = 1; k <= 18; ++k) {
        pts.push_back(pair.yt->quantile(std::pow(10.0, -k)));
    }
    std::vector<double> levels{0.5};
    for (int k = 1; k <= 18; ++k) {
        levels.push_back(std::pow(10.0, -k));
    }
    for (int k = 1; k <= 15; ++k) {
        levels.push_back(1.0 - std::pow(10.0, -k));
    }
    for (double p : levels) {
        pts.push_back(pair.s - pair.xt->quantile(p));
    }
    pts.push_back(pair.s - pair.t);
    pts.erase(std::remove_if(pts.begin(), pts.end(),
                             [](double y) { return !std::isfinite(y) || y >= 0.0; }),
              pts.end());
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

// Integral of f_Yt(y) * w(y) over (lo, hi) with lo possibly -inf and hi <= 0,
// split at the breakpoints.
double integrate_against_yt(const TransformedPair& pair, const numerics::Fn& w, double lo,
                            double hi) {
    if (!(lo < hi)) {
        return 0.0;
    }
    const numerics::Fn f = [&](double y) {
        const double d = pair.yt->pdf(y);
        return d == 0.0 ? 0.0 : d * w(y);
    };
    std::vector<double> knots{lo};
    for (double p : integration_breakpoints(pair)) {
        if (p > lo && p < hi) {
            knots.push_back(p);
        }
    }
    knots.push_back(hi);

    const auto [total, error] = numerics::integrate(f, knots);
    if (!(error <= kMaxQuadratureError) || !std::isfinite(total)) {
        throw NumericFailure("independent outage quadrature did not converge", error);
    }
    return total;
}

} // namespace

std::string to_string(Branch branch) {
    switch (branch) {
    case Branch::trivial_boundary: return "trivial_boundary";
    case Branch::stationary_interior: return "stationary_interior";
    case Branch::saturated_one: return "saturated_one";
    }
    return "?";
}

double objective_g(const TransformedPair& pair, double y) {
    return pair.xt->cdf(pair.s - y) + pair.yt->cdf(y) - 1.0;
}

double objective_h(const TransformedPair& pair, double y) {
    return pair.xt->cdf(pair.s - y) + pair.yt->cdf(y);
}

std::vector<double> stationary_points(const TransformedPair& pair) {
    check_pair(pair);
    const double tail = effective_tail(*pair.yt);
    const numerics::Fn d = [&](double y) { return pair.yt->pdf(y) - pair.xt->pdf(pair.s - y); };

    // Log-spaced |y| from tail * 1e-15 up to tail, traversed left to right.
    std::vector<double> grid(kGridPoints);
    const double log_hi = std::log(tail);
    const double log_lo = log_hi + std::log(1e-15);
    for (int i = 0; i < kGridPoints; ++i) {
        const double frac = static_cast<double>(i) / (kGridPoints - 1);
        grid[i] = -std::exp(log_hi + frac * (log_lo - log_hi));
    }

    std::vector<double> roots;
    double prev_y = grid[0];
    double prev_d = d(prev_y);
    for (int i = 1; i < kGridPoints; ++i) {
        const double y = grid[i];
        const double dy = d(y);
        if (dy == 0.0 && pair.yt->pdf(y) > 0.0) {
            roots.push_back(y);
        } else if ((prev_d < 0.0 && dy > 0.0) || (prev_d > 0.0 && dy < 0.0)) {
            roots.push_back(numerics::bisect_root(d, prev_y, y));
        }
        prev_y = y;
        prev_d = dy;
    }
    return roots;
}

BoundResult bound(ScenarioTag scenario, Direction direction, const TransformedPair& pair) {
    check_pair(pair);
    const double s = pair.s;
    const double t = pair.t;
    const double fx_s = pair.xt->cdf(s);
    const double fx_t = pair.xt->cdf(t);
    const double fy_st = pair.yt->cdf(s - t);
    const bool lower = direction == Direction::lower;

    if (scenario == ScenarioTag::alt_nocsit) {
        std::vector<Candidate> boundary;
        if (lower) {
            boundary = {{0.0, fx_t}, {s - t, fy_st}};
        } else {
            boundary = {{-kInf, 1.0}, {s - t, fx_t + fy_st}};
        }
        BoundResult r = select(direction, boundary, {}, {});
        r.value = dual_value(lower ? CopulaKind::frechet_upper_M : CopulaKind::frechet_lower_W, fx_t,
                             fy_st);
        r.branch = r.value >= 1.0 ? Branch::saturated_one : Branch::trivial_boundary;
        return r;
    }

    const std::vector<double> all = stationary_points(pair);
    std::vector<double> used;
    std::vector<Candidate> interior;
    std::vector<Candidate> boundary;
    const auto objective = [&](double y) { return lower ? objective_g(pair, y) : objective_h(pair, y); };

    switch (scenario) {
    case ScenarioTag::csit:
        boundary = lower ? std::vector<Candidate>{{-kInf, 0.0}, {0.0, fx_s}}
                         : std::vector<Candidate>{{-kInf, 1.0}, {0.0, 1.0 + fx_s}};
        for (double y : all) {
            used.push_back(y);
            interior.push_back({y, objective(y)});
        }
        break;
    case ScenarioTag::nocsit:
        boundary = lower ? std::vector<Candidate>{{-kInf, 0.0}, {0.0, fx_t}}
                         : std::vector<Candidate>{{-kInf, 1.0}, {s - t, fx_t + fy_st}};
        for (double y : all) {
            if (y < s - t) {
                used.push_back(y);
                interior.push_back({y, objective(y)});
            }
        }
        break;
    case ScenarioTag::alt_csit:
        // Exchanged axes: locations are x = s - y.
        boundary = lower ? std::vector<Candidate>{{-kInf, 0.0}, {s, fx_s}, {kInf, fy_st}}
                         : std::vector<Candidate>{{-kInf, 1.0}, {t, fx_t + fy_st}, {s, 1.0 + fx_s}};
        for (double y : all) {
            if (y > s - t) {
                used.push_back(s - y);
                interior.push_back({s - y, objective(y)});
            }
        }
        break;
    case ScenarioTag::alt_nocsit:
        break;
    }
    return select(direction, std::move(boundary), interior, std::move(used));
}

double independent_outage(ScenarioTag scenario, const TransformedPair& pair) {
    check_pair(pair);
    const double s = pair.s;
    const double t = pair.t;
    const double fx_t = pair.xt->cdf(t);
    const double fy_st = pair.yt->cdf(s - t);
    const numerics::Fn fx_shift = [&](double y) { return pair.xt->cdf(s - y); };

    double value = 0.0;
    switch (scenario) {
    case ScenarioTag::csit:
        value = integrate_against_yt(pair, fx_shift, -kInf, 0.0);
        break;
    case ScenarioTag::nocsit:
        value = fx_t + integrate_against_yt(
                           pair, [&](double y) { return pair.xt->cdf(s - y) - fx_t; }, -kInf, s - t);
        break;
    case ScenarioTag::alt_csit:
        value = fy_st + integrate_against_yt(pair, fx_shift, s - t, 0.0);
        break;
    case ScenarioTag::alt_nocsit:
        value = dual_value(CopulaKind::product_Pi, fx_t, fy_st);
        break;
    }
    return std::clamp(value, 0.0, 1.0);
}

bool sufficient_condition_no_eavesdropper(ScenarioTag scenario, const TransformedPair& pair,
                                          const std::vector<double>& probe_grid) {
    check_pair(pair);
    if (probe_grid.empty()) {
        throw ConfigurationError("probe grid is empty");
    }
    double floor = 0.0;
    if (scenario == ScenarioTag::csit) {
        floor = pair.xt->cdf(pair.s);
    } else if (scenario == ScenarioTag::nocsit) {
        floor = pair.xt->cdf(pair.t);
    } else {
        throw ConfigurationError("sufficient condition is defined for csit and nocsit only");
    }
    for (double y : probe_grid) {
        const bool in_range = scenario == ScenarioTag::csit ? y <= 0.0 : y < pair.s - pair.t;
        if (!in_range) {
            throw ConfigurationError("probe point outside the admissible range");
        }
        if (pair.xt->cdf(pair.s - y) - floor > 1.0 - pair.yt->cdf(y)) {
            return false;
        }
    }
    return true;
}

} // namespace secrecy
