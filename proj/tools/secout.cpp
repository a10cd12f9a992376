// secout: secrecy outage bounds from the command line.
//
//   secout sweep --var snr-bob --start -5 --stop 15 --snr-eve 0 --rs 0.1 --out fig.dat
//   secout query bound --scenario csit --direction upper --snr-bob 0 --snr-eve 0 --rs 1
//   secout query threshold --snr-bob 15 --rs 0.1
//   secout query rate --curve indep --scenario csit --eps 0.2402 --snr-bob 5 --snr-eve 0
//   secout verify --seed 7

#include "secrecy/bounds.hpp"
#include "secrecy/copulas.hpp"
#include "secrecy/errors.hpp"
#include "secrecy/montecarlo.hpp"
#include "secrecy/rates.hpp"
#include "secrecy/rayleigh.hpp"
#include "secrecy/sweep.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

using namespace secrecy;

namespace {

// Replaces `--config FILE` by the file's key=value entries written as long
// options, so flags after it on the command line take precedence.
std::vector<std::string> expand_config(int argc, char** argv) {
    std::vector<std::string> out;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        std::string path;
        if (arg == "--config" && i + 1 < argc) {
            path = argv[++i];
        } else if (arg.rfind("--config=", 0) == 0) {
            path = arg.substr(9);
        } else {
            out.push_back(arg);
            continue;
        }
        for (const CLI::ConfigItem& item : CLI::ConfigINI().from_file(path)) {
            if (item.name == "++" || item.name == "--") {
                continue;
            }
            out.push_back("--" + item.name);
            out.insert(out.end(), item.inputs.begin(), item.inputs.end());
        }
    }
    // CLI11 consumes the vector from the back.
    std::reverse(out.begin(), out.end());
    return out;
}

struct PointArgs {
    std::string scenario = "csit";
    std::string direction = "lower";
    double snr_bob_db = 0.0;
    double snr_eve_db = 0.0;
    double lx = 1.0;
    double ly = 1.0;
    double rs = 0.1;
    double rd = 0.0;

    ChannelParams params() const {
        ChannelParams p;
        p.lambda_x = lx;
        p.lambda_y = ly;
        p.rho_x = db_to_linear(snr_bob_db);
        p.rho_y = db_to_linear(snr_eve_db);
        p.rate_s = rs;
        p.rate_d = rd;
        p.validate();
        return p;
    }
};

void add_point_options(CLI::App* app, PointArgs& a, bool with_direction = true) {
    app->add_option("--scenario", a.scenario, "csit, nocsit, alt-csit or alt-nocsit")
        ->check(CLI::IsMember({"csit", "nocsit", "alt-csit", "alt-nocsit"}));
    if (with_direction) {
        app->add_option("--direction,--curve", a.direction, "lower, upper or indep")
            ->check(CLI::IsMember({"lower", "upper", "indep", "independent"}));
    }
    app->add_option("--snr-bob", a.snr_bob_db, "Bob SNR in dB");
    app->add_option("--snr-eve", a.snr_eve_db, "Eve SNR in dB");
    app->add_option("--lx", a.lx, "inverse mean of Bob's channel gain");
    app->add_option("--ly", a.ly, "inverse mean of Eve's channel gain");
    app->add_option("--rs", a.rs, "secrecy rate (bits per channel use)");
    app->add_option("--rd", a.rd, "dummy rate (bits per channel use)");
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

void print_pairs(const std::vector<std::pair<std::string, std::string>>& kv) {
    for (std::size_t i = 0; i < kv.size(); ++i) {
        std::cout << (i ? " " : "") << kv[i].first << '=' << kv[i].second;
    }
    std::cout << '\n';
}

int query_bound(const PointArgs& a) {
    const ChannelParams p = a.params();
    const ScenarioTag sc = parse_scenario(a.scenario);
    const Curve curve = parse_curve(a.direction);
    const TransformedPair pair = transform(p);
    if (curve == Curve::independent) {
        print_pairs({{"scenario", to_string(sc)},
                     {"direction", "indep"},
                     {"value", fmt(independent_outage(sc, pair))}});
        return 0;
    }
    const Direction d = curve == Curve::lower ? Direction::lower : Direction::upper;
    const BoundResult r = bound(sc, d, pair);
    print_pairs({{"scenario", to_string(sc)},
                 {"direction", to_string(d)},
                 {"value", fmt(r.value)},
                 {"branch", to_string(r.branch)}});
    return 0;
}

int query_threshold(const PointArgs& a) {
    const double lin = eve_snr_threshold(a.lx, a.ly, db_to_linear(a.snr_bob_db), a.rs);
    print_pairs({{"threshold_db", fmt(linear_to_db(lin))}, {"threshold_linear", fmt(lin)}});
    return 0;
}

int query_rate(const PointArgs& a, double eps) {
    const RateSolution r =
        eps_outage_rate(parse_curve(a.direction), parse_scenario(a.scenario), a.params(), eps);
    print_pairs({{"rate", fmt(r.rate_s)},
                 {"achieved_eps", fmt(r.achieved_eps)},
                 {"iterations", std::to_string(r.iterations)}});
    return 0;
}

int query_limit(const PointArgs& a) {
    const Curve c = parse_curve(a.direction);
    const ScenarioTag sc = parse_scenario(a.scenario);
    print_pairs({{"scenario", to_string(sc)},
                 {"direction", to_string(c)},
                 {"limit", fmt(min_feasible_eps(c, sc, a.params()))}});
    return 0;
}

int query_diversity(const PointArgs& a, double from_db, double to_db, int points) {
    if (points < 2) {
        throw InvalidParameter("diversity grid needs at least 2 points");
    }
    std::vector<double> grid;
    for (int i = 0; i < points; ++i) {
        grid.push_back(from_db + (to_db - from_db) * i / (points - 1));
    }
    const double slope =
        diversity_estimate(parse_scenario(a.scenario), parse_curve(a.direction), a.params(), grid);
    print_pairs({{"slope", fmt(slope)}});
    return 0;
}

// Monte Carlo against the analytic curves on a fixed panel of points.
int verify(std::uint64_t n_samples, std::uint64_t seed, std::size_t atoms) {
    struct Point {
        ScenarioTag scenario;
        double snr_bob;
        double snr_eve;
        double rs;
        double rd;
    };
    const std::vector<Point> panel{
        {ScenarioTag::csit, 0, 0, 0.1, 0},        {ScenarioTag::csit, 10, 0, 0.1, 0},
        {ScenarioTag::csit, 5, 10, 1.0, 0},       {ScenarioTag::nocsit, 0, 0, 0.1, 1},
        {ScenarioTag::nocsit, 10, 5, 0.5, 1},     {ScenarioTag::alt_csit, 5, 0, 0.5, 1},
        {ScenarioTag::alt_nocsit, 5, 0, 0.1, 1},
    };
    int failures = 0;
    std::uint64_t k = 0;
    for (const Point& pt : panel) {
        ChannelParams p;
        p.rho_x = db_to_linear(pt.snr_bob);
        p.rho_y = db_to_linear(pt.snr_eve);
        p.rate_s = pt.rs;
        p.rate_d = pt.rd;
        const TransformedPair pair = transform(p);
        for (Curve c : {Curve::lower, Curve::upper, Curve::independent}) {
            const double analytic = evaluate(c, pt.scenario, p);
            Sampler sampler = IndependentSampler{};
            if (c != Curve::independent) {
                sampler = CouplingSampler{std::make_shared<const CouplingPlan>(build_achieving_coupling(
                    pair, pt.scenario, c == Curve::lower ? Direction::lower : Direction::upper, atoms))};
            }
            const MCEstimate e = estimate(pt.scenario, pair, sampler, n_samples, seed + k++);
            const double tol = std::max(3.0 * e.std_error, 2e-3);
            const bool ok = std::abs(e.mean - analytic) <= tol;
            failures += ok ? 0 : 1;
            std::cout << (ok ? "ok   " : "FAIL ") << to_string(pt.scenario) << ' ' << to_string(c)
                      << " snr=" << pt.snr_bob << " snr_eve=" << pt.snr_eve << " rs=" << pt.rs
                      << " rd=" << pt.rd << " analytic=" << fmt(analytic) << " mc=" << fmt(e.mean)
                      << " tol=" << fmt(tol) << '\n';
        }
    }
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Secrecy outage probability bounds for wiretap channels with unknown fading dependence"};
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    app.require_subcommand(1);

    PointArgs sweep_args;
    std::string sweep_var = "snr-bob";
    SweepSpec spec;
    std::string out_path;
    std::uint64_t mc_samples = 0;
    std::uint64_t seed = 0;
    std::size_t atoms = 10000;
    auto* sweep = app.add_subcommand("sweep", "write one figure's data as a column file");
    sweep->add_option("--config", "key=value file of sweep options; later flags override it");
    add_point_options(sweep, sweep_args, false);
    sweep->add_option("--var", sweep_var, "snr-bob, snr-eve, eps or rs")
        ->check(CLI::IsMember({"snr-bob", "snr", "snr-eve", "eps", "rs"}));
    sweep->add_option("--start", spec.start)->required();
    sweep->add_option("--stop", spec.stop)->required();
    sweep->add_option("--points", spec.points, "grid points (default 41)");
    auto* sweep_mc = sweep->add_option("--mc-samples", mc_samples, "add Monte Carlo columns");
    auto* sweep_seed = sweep->add_option("--seed", seed);
    sweep->add_option("--atoms", atoms, "atoms per axis of the achieving couplings");
    sweep->add_option("--out", out_path)->required();

    auto* query = app.add_subcommand("query", "evaluate a single point");
    query->require_subcommand(1);
    PointArgs qa;
    double eps = 0.1;
    double grid_from = 20.0;
    double grid_to = 60.0;
    int grid_points = 41;
    auto* q_bound = query->add_subcommand("bound", "lower/upper bound or independent outage");
    add_point_options(q_bound, qa);
    auto* q_threshold = query->add_subcommand("threshold", "Eve SNR at which the best case changes");
    add_point_options(q_threshold, qa, false);
    auto* q_rate = query->add_subcommand("rate", "eps-outage secrecy rate");
    add_point_options(q_rate, qa);
    q_rate->add_option("--eps", eps, "target outage probability")->required();
    auto* q_limit = query->add_subcommand("limit", "outage probability as R_S -> 0");
    add_point_options(q_limit, qa);
    auto* q_div = query->add_subcommand("diversity", "high-SNR slope of the outage curve");
    add_point_options(q_div, qa);
    q_div->add_option("--from", grid_from, "grid start in dB");
    q_div->add_option("--to", grid_to, "grid end in dB");
    q_div->add_option("--points", grid_points);

    std::uint64_t verify_samples = 100000;
    std::uint64_t verify_seed = 1;
    std::size_t verify_atoms = 10000;
    auto* verify_cmd = app.add_subcommand("verify", "compare Monte Carlo with the analytic curves");
    verify_cmd->add_option("--mc-samples", verify_samples);
    verify_cmd->add_option("--seed", verify_seed);
    verify_cmd->add_option("--atoms", verify_atoms);

    try {
        app.parse(expand_config(argc, argv));
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (sweep->parsed()) {
            spec.variable = parse_sweep_variable(sweep_var);
            spec.fixed = sweep_args.params();
            spec.scenario = parse_scenario(sweep_args.scenario);
            if (*sweep_mc) {
                MonteCarloSpec mc;
                mc.n_samples = mc_samples;
                mc.n_atoms = atoms;
                if (*sweep_seed) {
                    mc.seed = seed;
                }
                spec.mc = mc;
            }
            run_sweep(spec, out_path);
            return 0;
        }
        if (q_bound->parsed()) return query_bound(qa);
        if (q_threshold->parsed()) return query_threshold(qa);
        if (q_rate->parsed()) return query_rate(qa, eps);
        if (q_limit->parsed()) return query_limit(qa);
        if (q_div->parsed()) return query_diversity(qa, grid_from, grid_to, grid_points);
        if (verify_cmd->parsed()) return verify(verify_samples, verify_seed, verify_atoms);
    } catch (const NumericFailure& e) {
        std::cerr << "numeric failure: " << e.what() << '\n';
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
