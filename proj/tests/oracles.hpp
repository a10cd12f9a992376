#pragma once

// Brute-force references used to pin the library's numbers. They share no
// code with the library apart from the marginals they are handed.

#include "secrecy/marginals.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace oracle {

/// Composite Simpson rule with n (even) panels.
inline double simpson(const std::function<double(double)>& f, double a, double b, int n = 200000) {
    const double h = (b - a) / n;
    double acc = f(a) + f(b);
    for (int i = 1; i < n; ++i) {
        acc += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    }
    return acc * h / 3.0;
}

/// Dense-grid extremum of fn over [lo, hi], including both ends, followed by
/// a second dense grid over the two cells around the best node.
inline double grid_max(const std::function<double(double)>& fn, double lo, double hi, int n = 400000) {
    double best = -std::numeric_limits<double>::infinity();
    double at = lo;
    for (int i = 0; i <= n; ++i) {
        const double x = lo + (hi - lo) * i / n;
        const double v = fn(x);
        if (v > best) {
            best = v;
            at = x;
        }
    }
    const double h = (hi - lo) / n;
    const double a = std::max(lo, at - h);
    const double b = std::min(hi, at + h);
    for (int i = 0; i <= 20000; ++i) {
        best = std::max(best, fn(a + (b - a) * i / 20000));
    }
    return best;
}

inline double grid_min(const std::function<double(double)>& fn, double lo, double hi, int n = 400000) {
    return -grid_max([&](double y) { return -fn(y); }, lo, hi, n);
}

/// Integral of f_Yt(y) F_Xt(s - y) over [lo, hi] for exponential marginals,
/// by Simpson in y after truncating the left tail at 60 / rate_yt.
inline double csit_independent(double lx, double ly, double s) {
    const auto f = [&](double y) { return ly * std::exp(ly * y) * (1.0 - std::exp(-lx * (s - y))); };
    return simpson(f, -60.0 / ly, 0.0);
}

} // namespace oracle
