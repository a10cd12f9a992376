// Acceptance suite: one PASS/FAIL line per criterion. With an argument, runs
// only that criterion; exit status is non-zero if any run criterion fails.

#include "secrecy/bounds.hpp"
#include "secrecy/copulas.hpp"
#include "secrecy/montecarlo.hpp"
#include "secrecy/rates.hpp"
#include "secrecy/rayleigh.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace secrecy;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, double a, double b = 0, double c = 0, double d = 0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c, d);
    return buf;
}

ChannelParams params(double snr_bob_db, double snr_eve_db, double rs, double rd = 0.0) {
    ChannelParams p;
    p.rho_x = db_to_linear(snr_bob_db);
    p.rho_y = db_to_linear(snr_eve_db);
    p.rate_s = rs;
    p.rate_d = rd;
    return p;
}

// Criterion 1 grid: lambda in [0.2, 5], SNR in [-10, 20] dB, R_S in [0.01, 4],
// R_d in [0, 3].
std::vector<ChannelParams> random_grid(std::size_t n) {
    std::mt19937_64 rng(20240601);
    std::uniform_real_distribution<double> lam(0.2, 5.0), snr(-10.0, 20.0), rs(0.01, 4.0), rd(0.0, 3.0);
    std::vector<ChannelParams> out;
    for (std::size_t i = 0; i < n; ++i) {
        ChannelParams p;
        p.lambda_x = lam(rng);
        p.lambda_y = lam(rng);
        p.rho_x = db_to_linear(snr(rng));
        p.rho_y = db_to_linear(snr(rng));
        p.rate_s = rs(rng);
        p.rate_d = rd(rng);
        out.push_back(p);
    }
    return out;
}

double generic(ScenarioTag sc, Curve c, const TransformedPair& pair) {
    if (c == Curve::independent) {
        return independent_outage(sc, pair);
    }
    return bound(sc, c == Curve::lower ? Direction::lower : Direction::upper, pair).value;
}

Outcome closed_vs_generic() {
    const auto t0 = Clock::now();
    double worst = 0.0;
    const auto grid = random_grid(500);
    for (const ChannelParams& p : grid) {
        const RayleighRates r = rayleigh_rates(p);
        const TransformedPair pair = to_pair(r);
        for (ScenarioTag sc : {ScenarioTag::csit, ScenarioTag::nocsit}) {
            for (Curve c : {Curve::lower, Curve::upper, Curve::independent}) {
                worst = std::max(worst, std::abs(closed_bound(sc, c, r) - generic(sc, c, pair)));
            }
        }
    }
    const double secs = seconds_since(t0);
    return {worst <= 1e-9 && secs < 10.0,
            fmt("500 tuples x 6 combos, max |closed - generic| = %.3g (tol 1e-9), %.2f s (limit 10 s)",
                worst, secs)};
}

Outcome min_eps_values() {
    const auto t0 = Clock::now();
    const double v[4] = {
        min_feasible_eps(Curve::upper, ScenarioTag::csit, params(5, 0, 0)),
        min_feasible_eps(Curve::independent, ScenarioTag::csit, params(5, 0, 0)),
        min_feasible_eps(Curve::lower, ScenarioTag::csit, params(5, 5.1, 0)),
        min_feasible_eps(Curve::independent, ScenarioTag::csit, params(5, 5.1, 0)),
    };
    const double ref[4] = {0.5985108, 0.2402531, 0.0084706, 0.5057562};
    double worst = 0.0;
    for (int i = 0; i < 4; ++i) {
        worst = std::max(worst, std::abs(v[i] - ref[i]));
    }
    const double secs = seconds_since(t0);
    return {worst <= 1e-4 && secs < 1.0,
            fmt("worst %.7f upper, %.7f indep | best %.7f, indep %.7f", v[0], v[1], v[2], v[3]) +
                fmt("; max dev %.2g (tol 1e-4), %.3f s", worst, secs)};
}

Outcome eve_threshold() {
    const double th = eve_snr_threshold(1, 1, db_to_linear(15), 0.1);
    const double th_db = linear_to_db(th);
    ChannelParams p = params(15, 0, 0.1);
    p.rho_y = 0.99 * th;
    const Branch below = bound(ScenarioTag::csit, Direction::lower, transform(p)).branch;
    p.rho_y = 1.01 * th;
    const Branch above = bound(ScenarioTag::csit, Direction::lower, transform(p)).branch;
    const bool ok = std::abs(th_db - 14.7088) <= 0.001 && below == Branch::trivial_boundary &&
                    above == Branch::stationary_interior;
    return {ok, fmt("threshold %.5f dB (ref 14.7088 +- 0.001)", th_db) + ", branch " +
                    to_string(below) + " -> " + to_string(above)};
}

Outcome stationary_values() {
    const TransformedPair a = exponential_pair(1.0, 2.0, 1.0);
    const TransformedPair b = exponential_pair(1.0, 0.1, 1.0);
    const auto sa = stationary_points(a);
    const auto sb = stationary_points(b);
    if (sa.size() != 1 || sb.size() != 1) {
        return {false, "expected exactly one stationary point per curve"};
    }
    const double ga = objective_g(a, sa[0]);
    const double gb = objective_g(b, sb[0]);
    const bool ok = std::abs(ga + 0.033834) <= 1e-5 && std::abs(gb - 0.778729) <= 1e-5;
    return {ok, fmt("g(%.7f) = %.7f (ref -0.033834), g(%.7f) = %.7f (ref 0.778729)", sa[0], ga, sb[0], gb)};
}

Outcome monte_carlo() {
    const auto t0 = Clock::now();
    struct Point {
        ScenarioTag sc;
        double bob;
        double eve;
        double rs;
        double rd;
    };
    // csit, R_S = 0.1, Eve at 0 and 10 dB; nocsit with R_S = 0.1 and
    // R_d = 1; Eve at 5 dB, R_S = 0.5, R_d = 1, both scenarios.
    const std::vector<Point> pts{
        {ScenarioTag::csit, -5, 0, 0.1, 0},   {ScenarioTag::csit, 5, 0, 0.1, 0},
        {ScenarioTag::csit, 15, 0, 0.1, 0},   {ScenarioTag::csit, 10, 10, 0.1, 0},
        {ScenarioTag::nocsit, 0, 0, 0.1, 1},  {ScenarioTag::nocsit, 10, 0, 0.1, 1},
        {ScenarioTag::nocsit, 5, 10, 0.1, 1}, {ScenarioTag::nocsit, 15, 10, 0.1, 1},
        {ScenarioTag::csit, 0, 5, 0.5, 1},    {ScenarioTag::csit, 10, 5, 0.5, 1},
        {ScenarioTag::nocsit, 5, 5, 0.5, 1},  {ScenarioTag::nocsit, 15, 5, 0.5, 1},
    };
    int fails = 0;
    double worst_ratio = 0.0;
    std::uint64_t k = 0;
    for (const Point& pt : pts) {
        const ChannelParams p = params(pt.bob, pt.eve, pt.rs, pt.rd);
        const TransformedPair pair = transform(p);
        for (Curve c : {Curve::lower, Curve::upper, Curve::independent}) {
            Sampler sampler = IndependentSampler{};
            if (c != Curve::independent) {
                const Direction d = c == Curve::lower ? Direction::lower : Direction::upper;
                sampler = CouplingSampler{std::make_shared<const CouplingPlan>(
                    build_achieving_coupling(pair, pt.sc, d, 10000))};
            }
            const MCEstimate e = estimate(pt.sc, pair, sampler, 100000, 1000 + k++);
            const double analytic = evaluate(c, pt.sc, p);
            const double tol = std::max(3.0 * e.std_error, 2e-3);
            const double ratio = std::abs(e.mean - analytic) / tol;
            worst_ratio = std::max(worst_ratio, ratio);
            if (ratio > 1.0) {
                ++fails;
                std::printf("    miss: %s %s bob=%g eve=%g analytic=%.6f mc=%.6f tol=%.4f\n",
                            to_string(pt.sc).c_str(), to_string(c).c_str(), pt.bob, pt.eve, analytic,
                            e.mean, tol);
            }
        }
    }
    const double secs = seconds_since(t0);
    return {fails == 0 && secs < 60.0,
            fmt("12 points x 3 curves, %.0f outside max(3 se, 2e-3), worst |mc - analytic| / tol = %.2f, %.1f s (limit 60 s)",
                fails, worst_ratio, secs)};
}

Outcome dual_identities() {
    std::size_t bad = 0;
    double worst = 0.0;
    for (const ChannelParams& p : random_grid(500)) {
        const TransformedPair pair = transform(p);
        const double a = pair.xt->cdf(pair.t);
        const double b = pair.yt->cdf(pair.s - pair.t);
        const double up = bound(ScenarioTag::alt_nocsit, Direction::upper, pair).value;
        const double lo = bound(ScenarioTag::alt_nocsit, Direction::lower, pair).value;
        const double du = std::abs(up - std::min(a + b, 1.0));
        const double dl = std::abs(lo - std::max(a, b));
        worst = std::max({worst, du, dl});
        bad += (du > 0.0 || dl > 0.0) ? 1 : 0;
    }
    return {bad == 0, fmt("500 tuples, max deviation %.3g from min(a+b,1) / max(a,b)", worst)};
}

Outcome diversity() {
    std::vector<double> grid;
    for (int i = 0; i <= 40; ++i) {
        grid.push_back(20.0 + i);
    }
    struct Case {
        ScenarioTag sc;
        Curve c;
        double rd;
        const char* name;
    };
    const Case cases[] = {
        {ScenarioTag::csit, Curve::lower, 0.0, "csit lower"},
        {ScenarioTag::csit, Curve::upper, 0.0, "csit upper"},
        {ScenarioTag::nocsit, Curve::lower, 1.0, "nocsit lower"},
        {ScenarioTag::nocsit, Curve::upper, 1.0, "nocsit upper"},
        {ScenarioTag::nocsit, Curve::independent, 1.0, "nocsit indep"},
    };
    bool ok = true;
    std::string detail;
    for (const Case& c : cases) {
        const double d = diversity_estimate(c.sc, c.c, params(0, 0, 0.1, c.rd), grid);
        const bool pass = std::abs(d - 1.0) <= 0.05;
        ok = ok && pass;
        detail += std::string(detail.empty() ? "" : ", ") + c.name + fmt(" %.4f", d) + (pass ? "" : "(!)");
    }
    return {ok, "slopes over 20-60 dB (target 1 +- 0.05): " + detail};
}

Outcome zero_rate_limits() {
    struct Case {
        LimitVariant v;
        ScenarioTag sc;
        Curve c;
    };
    const Case cases[] = {
        {LimitVariant::csit_lower, ScenarioTag::csit, Curve::lower},
        {LimitVariant::csit_upper, ScenarioTag::csit, Curve::upper},
        {LimitVariant::nocsit_lower, ScenarioTag::nocsit, Curve::lower},
        {LimitVariant::nocsit_independent, ScenarioTag::nocsit, Curve::independent},
    };
    // Both sides of lambda_y / rho_y vs lambda_x / rho_x.
    const std::pair<double, double> snrs[] = {{5, 0}, {5, 5.1}, {0, 0}, {10, -3}, {-2, 6}};
    double worst = 0.0;
    bool dichotomy = true;
    for (const Case& c : cases) {
        for (auto [bob, eve] : snrs) {
            for (double rd : {0.0, 1.0, 2.0}) {
                const double lim = limit_rs0(c.v, params(bob, eve, 0, rd));
                const double near = closed_bound(c.sc, c.c, rayleigh_rates(params(bob, eve, 1e-6, rd)));
                worst = std::max(worst, std::abs(lim - near));
            }
        }
    }
    // Best case with csit: positive limit iff Eve's effective channel is stronger.
    dichotomy = limit_rs0(LimitVariant::csit_lower, params(5, 5.1, 0)) > 0.0 &&
                limit_rs0(LimitVariant::csit_lower, params(5, 4.9, 0)) == 0.0 &&
                limit_rs0(LimitVariant::csit_lower, params(5, 5.0, 0)) == 0.0;
    return {worst <= 1e-4 && dichotomy,
            fmt("4 variants x 15 settings, max |limit - closed(R_S=1e-6)| = %.3g (tol 1e-4)", worst) +
                (dichotomy ? ", zero/positive dichotomy holds" : ", dichotomy broken")};
}

Outcome properties() {
    std::size_t order_bad = 0;
    std::size_t mono_bad = 0;
    std::size_t nocsit_bad = 0;
    const ScenarioTag all[] = {ScenarioTag::csit, ScenarioTag::nocsit, ScenarioTag::alt_csit,
                               ScenarioTag::alt_nocsit};
    for (const ChannelParams& p : random_grid(100)) {
        const TransformedPair pair = transform(p);
        for (ScenarioTag sc : all) {
            const double lo = generic(sc, Curve::lower, pair);
            const double ind = generic(sc, Curve::independent, pair);
            const double hi = generic(sc, Curve::upper, pair);
            order_bad += (lo > ind + 1e-9 || ind > hi + 1e-9) ? 1 : 0;
        }
        if (p.rate_d > 0.0) {
            nocsit_bad += generic(ScenarioTag::nocsit, Curve::lower, pair) <
                                  generic(ScenarioTag::csit, Curve::lower, pair) - 1e-9
                              ? 1
                              : 0;
            nocsit_bad += generic(ScenarioTag::nocsit, Curve::independent, pair) <
                                  generic(ScenarioTag::csit, Curve::independent, pair) - 1e-9
                              ? 1
                              : 0;
        }
    }
    const double rates[] = {0.01, 0.05, 0.1, 0.25, 0.5, 1, 1.5, 2, 3, 4};
    for (const ChannelParams& base : random_grid(20)) {
        for (ScenarioTag sc : all) {
            for (Curve c : {Curve::lower, Curve::upper, Curve::independent}) {
                double prev = -1.0;
                for (double r : rates) {
                    ChannelParams p = base;
                    p.rate_s = r;
                    const double v = generic(sc, c, transform(p));
                    mono_bad += v < prev - 1e-9 ? 1 : 0;
                    prev = v;
                }
            }
        }
    }
    double coincide = 0.0;
    for (double bob = -5.0; bob <= 25.0; bob += 1.0) {
        const TransformedPair pair = transform(params(bob, 5, 0.5, 1.0));
        coincide = std::max(coincide, std::abs(generic(ScenarioTag::csit, Curve::upper, pair) -
                                               generic(ScenarioTag::nocsit, Curve::upper, pair)));
    }
    const bool ok = order_bad == 0 && mono_bad == 0 && nocsit_bad == 0 && coincide <= 1e-9;
    return {ok, fmt("ordering violations %.0f, monotonicity violations %.0f, nocsit<csit violations %.0f",
                    order_bad, mono_bad, nocsit_bad) +
                    fmt(", max |csit upper - nocsit upper| at Eve 5 dB = %.3g (tol 1e-9)", coincide)};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome determinism() {
    const auto dir = std::filesystem::temp_directory_path();
    const std::string a = (dir / "acceptance_sweep_a.dat").string();
    const std::string b = (dir / "acceptance_sweep_b.dat").string();
    const std::string cmd = std::string(SECOUT_PATH) +
                            " sweep --var snr-bob --start -5 --stop 15 --points 21 --snr-eve 0 --rs 0.1"
                            " --mc-samples 20000 --seed 11 --atoms 2000 --out ";
    const int ra = std::system((cmd + a).c_str());
    const int rb = std::system((cmd + b).c_str());
    const std::string fa = slurp(a);
    const std::string fb = slurp(b);
    std::filesystem::remove(a);
    std::filesystem::remove(b);
    const bool ok = ra == 0 && rb == 0 && !fa.empty() && fa == fb;
    return {ok, fmt("two sweep runs with Monte Carlo columns, %.0f bytes each, identical: ", fa.size()) +
                    (fa == fb ? "yes" : "no")};
}

const std::vector<std::pair<std::string, std::function<Outcome()>>>& criteria() {
    static const std::vector<std::pair<std::string, std::function<Outcome()>>> list{
        {"closed-form/generic agreement", closed_vs_generic},
        {"minimum feasible eps", min_eps_values},
        {"Eve SNR switching point", eve_threshold},
        {"stationary objective values", stationary_values},
        {"Monte Carlo concordance", monte_carlo},
        {"dual-copula identities", dual_identities},
        {"diversity gains", diversity},
        {"zero-rate limits", zero_rate_limits},
        {"property suite", properties},
        {"sweep determinism", determinism},
    };
    return list;
}

} // namespace

int main(int argc, char** argv) {
    const auto& list = criteria();
    std::vector<std::size_t> which;
    if (argc > 1) {
        const int n = std::atoi(argv[1]);
        if (n < 1 || n > static_cast<int>(list.size())) {
            std::fprintf(stderr, "criterion must be 1..%zu\n", list.size());
            return 2;
        }
        which.push_back(static_cast<std::size_t>(n - 1));
    } else {
        for (std::size_t i = 0; i < list.size(); ++i) {
            which.push_back(i);
        }
    }
    int failed = 0;
    for (std::size_t i : which) {
        Outcome o{false, ""};
        try {
            o = list[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("%s C%zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, list[i].first.c_str(),
                    o.detail.c_str());
        failed += o.pass ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}
