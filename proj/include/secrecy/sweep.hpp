#pragma once

#include "secrecy/marginals.hpp"
#include "secrecy/scenario.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace secrecy {

enum class SweepVariable { snr_bob_db, snr_eve_db, eps_target, rate_s };

/// Accepts "snr-bob", "snr-eve", "eps" and "rs".
SweepVariable parse_sweep_variable(const std::string& name);
/// Header name of the sweep column: snr, snr_eve, eps or rs.
std::string column_name(SweepVariable variable);

struct MonteCarloSpec {
    std::uint64_t n_samples = 100000;
    std::optional<std::uint64_t> seed;
    std::size_t n_atoms = 10000;
};

/// Evenly spaced sweep of one variable with the rest fixed. SNR variables are
/// in dB. An eps_target sweep reports eps-outage rates instead of
/// probabilities.
struct SweepSpec {
    SweepVariable variable = SweepVariable::snr_bob_db;
    double start = 0.0;
    double stop = 1.0;
    int points = 41;
    ChannelParams fixed;
    ScenarioTag scenario = ScenarioTag::csit;
    std::optional<MonteCarloSpec> mc;
};

struct SweepTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

SweepTable compute_sweep(const SweepSpec& spec, unsigned threads = 0);

/// Whitespace separated, one header line, values with 10 significant digits.
void write_table(const SweepTable& table, std::ostream& out);

/// Throws IoError when out_path cannot be written.
void run_sweep(const SweepSpec& spec, const std::string& out_path, unsigned threads = 0);

} // namespace secrecy
