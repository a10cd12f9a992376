#pragma once

#include "secrecy/copulas.hpp"
#include "secrecy/marginals.hpp"
#include "secrecy/scenario.hpp"

#include <cstdint>
#include <memory>
#include <variant>

namespace secrecy {

struct MCEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::uint64_t n_samples = 0;
    std::uint64_t seed = 0;
};

bool outage_event(ScenarioTag scenario, const TransformedPair& pair, double x, double y) noexcept;

/// Xt and Yt drawn independently by inverse cdf.
struct IndependentSampler {};

/// Atom pairs drawn uniformly from a coupling plan.
struct CouplingSampler {
    std::shared_ptr<const CouplingPlan> plan;
};

using Sampler = std::variant<IndependentSampler, CouplingSampler>;

/// Bernoulli estimate of the outage probability from n draws.
///
/// Draws come in blocks of 2^15; block b always uses stream b of the seed, so
/// the result does not depend on `threads` (0 means hardware concurrency).
/// Throws SampleSizeError for n < 1000.
MCEstimate estimate(ScenarioTag scenario, const TransformedPair& pair, const Sampler& sampler,
                    std::uint64_t n, std::uint64_t seed, unsigned threads = 0);

} // namespace secrecy
