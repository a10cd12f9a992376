#include "secrecy/sweep.hpp"

#include "secrecy/copulas.hpp"
#include "secrecy/errors.hpp"
#include "secrecy/montecarlo.hpp"
#include "secrecy/rates.hpp"
#include "secrecy/rayleigh.hpp"
#include "secrecy/rng.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <fstream>
#include <memory>
#include <thread>

namespace secrecy {

namespace {

constexpr Curve kCurves[] = {Curve::lower, Curve::upper, Curve::independent};

void check_spec(const SweepSpec& spec) {
    if (spec.points < 2) {
        throw ConfigurationError("a sweep needs at least 2 points");
    }
    if (!(spec.start < spec.stop)) {
        throw ConfigurationError("sweep start must be below stop");
    }
    if (spec.mc) {
        if (!spec.mc->seed) {
            throw ConfigurationError("Monte Carlo columns need an explicit seed");
        }
        if (spec.variable == SweepVariable::eps_target) {
            throw ConfigurationError("Monte Carlo columns are not defined for an eps sweep");
        }
    }
    if (spec.variable == SweepVariable::eps_target && !(spec.start > 0.0 && spec.stop < 1.0)) {
        throw ConfigurationError("eps sweep must stay inside (0, 1)");
    }
    if (spec.variable == SweepVariable::rate_s && spec.start < 0.0) {
        throw ConfigurationError("rate sweep must start at a non-negative rate");
    }
}

double sweep_value(const SweepSpec& spec, int i) {
    if (i == spec.points - 1) {
        return spec.stop;
    }
    return spec.start + (spec.stop - spec.start) * i / (spec.points - 1);
}

std::vector<double> compute_row(const SweepSpec& spec, int i) {
    const double v = sweep_value(spec, i);
    ChannelParams p = spec.fixed;
    switch (spec.variable) {
    case SweepVariable::snr_bob_db: p.rho_x = db_to_linear(v); break;
    case SweepVariable::snr_eve_db: p.rho_y = db_to_linear(v); break;
    case SweepVariable::rate_s: p.rate_s = v; break;
    case SweepVariable::eps_target: break;
    }
    p.validate();

    std::vector<double> row{v};
    for (Curve c : kCurves) {
        if (spec.variable == SweepVariable::eps_target) {
            row.push_back(eps_outage_rate(c, spec.scenario, p, v).rate_s);
        } else {
            row.push_back(evaluate(c, spec.scenario, p));
        }
    }
    if (spec.mc) {
        const TransformedPair pair = transform(p);
        const std::uint64_t seed = *spec.mc->seed;
        for (std::uint64_t k = 0; k < 3; ++k) {
            Sampler sampler = IndependentSampler{};
            if (kCurves[k] != Curve::independent) {
                const Direction d = kCurves[k] == Curve::lower ? Direction::lower : Direction::upper;
                sampler = CouplingSampler{std::make_shared<const CouplingPlan>(
                    build_achieving_coupling(pair, spec.scenario, d, spec.mc->n_atoms))};
            }
            const std::uint64_t s = derive_seed(seed, static_cast<std::uint64_t>(i), k);
            row.push_back(estimate(spec.scenario, pair, sampler, spec.mc->n_samples, s, 1).mean);
        }
    }
    return row;
}

} // namespace

SweepVariable parse_sweep_variable(const std::string& name) {
    if (name == "snr-bob" || name == "snr") return SweepVariable::snr_bob_db;
    if (name == "snr-eve") return SweepVariable::snr_eve_db;
    if (name == "eps") return SweepVariable::eps_target;
    if (name == "rs") return SweepVariable::rate_s;
    throw InvalidParameter("unknown sweep variable '" + name + "'");
}

std::string column_name(SweepVariable variable) {
    switch (variable) {
    case SweepVariable::snr_bob_db: return "snr";
    case SweepVariable::snr_eve_db: return "snr_eve";
    case SweepVariable::eps_target: return "eps";
    case SweepVariable::rate_s: return "rs";
    }
    return "?";
}

SweepTable compute_sweep(const SweepSpec& spec, unsigned threads) {
    check_spec(spec);
    SweepTable table;
    table.header = {column_name(spec.variable), "lower", "upper", "indep"};
    if (spec.mc) {
        table.header.insert(table.header.end(), {"lowerMC", "upperMC", "indepMC"});
    }
    const auto n = static_cast<std::size_t>(spec.points);
    table.rows.resize(n);
    std::vector<std::exception_ptr> errors(n);

    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < n;) {
            try {
                table.rows[i] = compute_row(spec, static_cast<int>(i));
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < threads; ++w) {
            pool.emplace_back(worker);
        }
        for (auto& th : pool) {
            th.join();
        }
    }
    for (const auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return table;
}

void write_table(const SweepTable& table, std::ostream& out) {
    for (std::size_t c = 0; c < table.header.size(); ++c) {
        out << (c ? " " : "") << table.header[c];
    }
    out << '\n';
    char buf[32];
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            std::snprintf(buf, sizeof buf, "%.10g", row[c]);
            out << (c ? " " : "") << buf;
        }
        out << '\n';
    }
}

void run_sweep(const SweepSpec& spec, const std::string& out_path, unsigned threads) {
    const SweepTable table = compute_sweep(spec, threads);
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open '" + out_path + "' for writing");
    }
    write_table(table, out);
    out.flush();
    if (!out) {
        throw IoError("failed writing '" + out_path + "'");
    }
}

} // namespace secrecy
