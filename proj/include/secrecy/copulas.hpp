#pragma once

#include "secrecy/marginals.hpp"
#include "secrecy/scenario.hpp"

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace secrecy {

enum class CopulaKind { frechet_lower_W, frechet_upper_M, product_Pi };

/// C(a, b); throws DomainError unless both arguments lie in [0, 1].
double copula_value(CopulaKind kind, double a, double b);

/// Dual copula a + b - C(a, b), i.e. the probability of a union.
double dual_value(CopulaKind kind, double a, double b);

/// Discrete joint law on n quantile-midpoint atoms per axis. Pair i couples
/// x_atoms[i] with y_atoms[assignment[i]], each with mass 1/n.
struct CouplingPlan {
    std::size_t n_atoms = 0;
    std::vector<double> x_atoms;
    std::vector<double> y_atoms;
    std::vector<std::size_t> assignment;

    std::pair<double, double> pair_at(std::size_t i) const {
        return {x_atoms[i], y_atoms[assignment[i]]};
    }
};

/// Greedy plan that minimises (lower) or maximises (upper) the number of atom
/// pairs in the outage region. Throws ResolutionError for n_atoms < 100.
///
/// The outage regions are down-sets, so the y-atoms compatible with a given
/// x-atom form nested index ranges and greedy matching from the most
/// constrained x-atom is optimal.
CouplingPlan build_achieving_coupling(const TransformedPair& pair, ScenarioTag scenario,
                                      Direction direction, std::size_t n_atoms);

/// Fraction of the plan's atom pairs inside the outage region.
double empirical_outage(const CouplingPlan& plan, ScenarioTag scenario, double s, double t);

/// Independent uniform draws of atom pairs. Throws EmptyRequest for count 0.
std::vector<std::pair<double, double>> sample_coupling(const CouplingPlan& plan, std::size_t count,
                                                       std::uint64_t seed);

} // namespace secrecy
