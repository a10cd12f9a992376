#include "secrecy/montecarlo.hpp"

#include "secrecy/errors.hpp"
#include "secrecy/rng.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>
#include <vector>

namespace secrecy {

namespace {

constexpr std::uint64_t kBlock = std::uint64_t{1} << 15;

std::uint64_t count_block(ScenarioTag scenario, const TransformedPair& pair, const Sampler& sampler,
                          std::uint64_t seed, std::uint64_t block, std::uint64_t draws) {
    Stream stream(seed, block);
    std::uint64_t hits = 0;
    if (const auto* c = std::get_if<CouplingSampler>(&sampler)) {
        const CouplingPlan& plan = *c->plan;
        for (std::uint64_t k = 0; k < draws; ++k) {
            const auto [x, y] = plan.pair_at(stream.index(plan.n_atoms));
            hits += outage_event(scenario, pair, x, y) ? 1 : 0;
        }
    } else {
        for (std::uint64_t k = 0; k < draws; ++k) {
            const double x = pair.xt->quantile(stream.uniform());
            const double y = pair.yt->quantile(stream.uniform());
            hits += outage_event(scenario, pair, x, y) ? 1 : 0;
        }
    }
    return hits;
}

} // namespace

bool outage_event(ScenarioTag scenario, const TransformedPair& pair, double x, double y) noexcept {
    return in_outage_region(scenario, pair.s, pair.t, x, y);
}

MCEstimate estimate(ScenarioTag scenario, const TransformedPair& pair, const Sampler& sampler,
                    std::uint64_t n, std::uint64_t seed, unsigned threads) {
    if (n < 1000) {
        throw SampleSizeError("Monte Carlo estimate needs at least 1000 samples");
    }
    if (!pair.xt || !pair.yt) {
        throw ConfigurationError("transformed pair is missing a marginal");
    }
    if (const auto* c = std::get_if<CouplingSampler>(&sampler); c && (!c->plan || c->plan->n_atoms == 0)) {
        throw ConfigurationError("coupling sampler has no plan");
    }

    const std::uint64_t n_blocks = (n + kBlock - 1) / kBlock;
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, n_blocks));

    std::atomic<std::uint64_t> next_block{0};
    std::vector<std::uint64_t> hits(threads, 0);
    const auto worker = [&](unsigned w) {
        for (std::uint64_t b; (b = next_block.fetch_add(1)) < n_blocks;) {
            const std::uint64_t draws = std::min(kBlock, n - b * kBlock);
            hits[w] += count_block(scenario, pair, sampler, seed, b, draws);
        }
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < threads; ++w) {
            pool.emplace_back(worker, w);
        }
        for (auto& th : pool) {
            th.join();
        }
    }

    std::uint64_t total = 0;
    for (std::uint64_t h : hits) {
        total += h;
    }
    MCEstimate e;
    e.n_samples = n;
    e.seed = seed;
    e.mean = static_cast<double>(total) / static_cast<double>(n);
    e.std_error = std::sqrt(e.mean * (1.0 - e.mean) / static_cast<double>(n));
    return e;
}

} // namespace secrecy
