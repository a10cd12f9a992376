#include "secrecy/copulas.hpp"

#include "secrecy/errors.hpp"
#include "secrecy/rng.hpp"

#include <algorithm>
#include <set>

namespace secrecy {

namespace {

void check_unit(double a, double b) {
    if (!(a >= 0.0 && a <= 1.0 && b >= 0.0 && b <= 1.0)) {
        throw DomainError("copula arguments must lie in [0, 1]");
    }
}

} // namespace

double copula_value(CopulaKind kind, double a, double b) {
    check_unit(a, b);
    switch (kind) {
    case CopulaKind::frechet_lower_W: return std::max(a + b - 1.0, 0.0);
    case CopulaKind::frechet_upper_M: return std::min(a, b);
    case CopulaKind::product_Pi: return a * b;
    }
    return 0.0;
}

double dual_value(CopulaKind kind, double a, double b) {
    check_unit(a, b);
    switch (kind) {
    case CopulaKind::frechet_lower_W: return std::min(a + b, 1.0);
    case CopulaKind::frechet_upper_M: return std::max(a, b);
    case CopulaKind::product_Pi: return a + b - a * b;
    }
    return 0.0;
}

CouplingPlan build_achieving_coupling(const TransformedPair& pair, ScenarioTag scenario,
                                      Direction direction, std::size_t n_atoms) {
    if (n_atoms < 100) {
        throw ResolutionError("coupling plan needs at least 100 atoms");
    }
    if (!pair.xt || !pair.yt) {
        throw ConfigurationError("transformed pair is missing a marginal");
    }
    const double n = static_cast<double>(n_atoms);
    CouplingPlan plan;
    plan.n_atoms = n_atoms;
    plan.x_atoms.resize(n_atoms);
    plan.y_atoms.resize(n_atoms);
    plan.assignment.assign(n_atoms, n_atoms);
    for (std::size_t i = 0; i < n_atoms; ++i) {
        const double u = (static_cast<double>(i) + 0.5) / n;
        plan.x_atoms[i] = pair.xt->quantile(u);
        plan.y_atoms[i] = pair.yt->quantile(u);
    }

    // first_outside(x): smallest y index whose pair with x leaves the region.
    // Regions are down-sets, so membership is monotone in the y index.
    const auto first_outside = [&](double x) {
        const auto it = std::partition_point(plan.y_atoms.begin(), plan.y_atoms.end(), [&](double y) {
            return in_outage_region(scenario, pair.s, pair.t, x, y);
        });
        return static_cast<std::size_t>(it - plan.y_atoms.begin());
    };

    std::set<std::size_t> free_y;
    for (std::size_t j = 0; j < n_atoms; ++j) {
        free_y.insert(free_y.end(), j);
    }
    std::vector<std::size_t> unmatched;

    if (direction == Direction::lower) {
        // Keep pairs out of the region; smallest x is the most constrained.
        for (std::size_t i = 0; i < n_atoms; ++i) {
            const auto it = free_y.lower_bound(first_outside(plan.x_atoms[i]));
            if (it == free_y.end()) {
                unmatched.push_back(i);
                continue;
            }
            plan.assignment[i] = *it;
            free_y.erase(it);
        }
    } else {
        // Pack pairs into the region; largest x is the most constrained.
        for (std::size_t k = n_atoms; k-- > 0;) {
            const auto it = free_y.lower_bound(first_outside(plan.x_atoms[k]));
            if (it == free_y.begin()) {
                unmatched.push_back(k);
                continue;
            }
            const auto prev = std::prev(it);
            plan.assignment[k] = *prev;
            free_y.erase(prev);
        }
        std::sort(unmatched.begin(), unmatched.end());
    }

    auto y = free_y.begin();
    for (std::size_t i : unmatched) {
        plan.assignment[i] = *y++;
    }
    return plan;
}

double empirical_outage(const CouplingPlan& plan, ScenarioTag scenario, double s, double t) {
    std::size_t inside = 0;
    for (std::size_t i = 0; i < plan.n_atoms; ++i) {
        const auto [x, y] = plan.pair_at(i);
        inside += in_outage_region(scenario, s, t, x, y) ? 1 : 0;
    }
    return plan.n_atoms == 0 ? 0.0 : static_cast<double>(inside) / static_cast<double>(plan.n_atoms);
}

std::vector<std::pair<double, double>> sample_coupling(const CouplingPlan& plan, std::size_t count,
                                                       std::uint64_t seed) {
    if (count == 0) {
        throw EmptyRequest("sample_coupling called with count 0");
    }
    if (plan.n_atoms == 0) {
        throw ConfigurationError("coupling plan is empty");
    }
    Stream stream(seed, 0);
    std::vector<std::pair<double, double>> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        out.push_back(plan.pair_at(stream.index(plan.n_atoms)));
    }
    return out;
}

} // namespace secrecy
