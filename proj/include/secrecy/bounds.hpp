#pragma once

#include "secrecy/marginals.hpp"
#include "secrecy/scenario.hpp"

#include <vector>

namespace secrecy {

enum class Branch { trivial_boundary, stationary_interior, saturated_one };

std::string to_string(Branch branch);

struct Candidate {
    double location; ///< may be +-inf for limit candidates
    double value;
};

/// Outcome of a distribution-free bound.
///
/// Candidate and stationary locations are given in the y coordinate except for
/// alt_csit, where the axes are exchanged and locations refer to x = s - y.
struct BoundResult {
    double value = 0.0;
    Branch branch = Branch::trivial_boundary;
    bool clamped = false;
    std::vector<double> stationary_points;
    std::vector<Candidate> candidates;
};

/// g(y) = F_Xt(s - y) + F_Yt(y) - 1
double objective_g(const TransformedPair& pair, double y);
/// h(y) = F_Xt(s - y) + F_Yt(y)
double objective_h(const TransformedPair& pair, double y);

/// All y < 0 with f_Yt(y) = f_Xt(s - y), ascending.
std::vector<double> stationary_points(const TransformedPair& pair);

/// Sharp bound on the outage probability over all joint laws with the given
/// marginals.
BoundResult bound(ScenarioTag scenario, Direction direction, const TransformedPair& pair);

/// Outage probability for independent Xt and Yt. Throws NumericFailure when the
/// quadrature error estimate exceeds 1e-10.
double independent_outage(ScenarioTag scenario, const TransformedPair& pair);

/// Checks that knowing Eve's channel cannot push the best case below the
/// single-user outage, i.e. F_Xt(s - y) - F_Xt(s) <= 1 - F_Yt(y) for csit, and
/// F_Xt(s - y) - F_Xt(t) <= 1 - F_Yt(y) with y < s - t for nocsit, at every probe.
bool sufficient_condition_no_eavesdropper(ScenarioTag scenario, const TransformedPair& pair,
                                          const std::vector<double>& probe_grid);

} // namespace secrecy
