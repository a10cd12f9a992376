#pragma once

#include <functional>
#include <vector>

namespace secrecy::numerics {

using Fn = std::function<double(double)>;

/// Bisection on a bracket with f(lo) and f(hi) of opposite sign. Stops when
/// the bracket is narrower than xtol or no longer splits in floating point.
double bisect_root(const Fn& f, double lo, double hi, double xtol = 1e-12);

struct Integral {
    double value;
    double error;
};

/// Globally adaptive 15-point Gauss-Kronrod over the panels between
/// consecutive knots. The first knot may be -inf and the last +inf. The panel
/// with the largest error estimate is bisected until the summed estimate is
/// below abs_tol or max_panels is reached.
Integral integrate(const Fn& f, const std::vector<double>& knots, double abs_tol = 1e-13,
                   int max_panels = 4000);

} // namespace secrecy::numerics
