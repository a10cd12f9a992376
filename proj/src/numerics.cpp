#include "secrecy/numerics.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <queue>

namespace secrecy::numerics {

double bisect_root(const Fn& f, double lo, double hi, double xtol) {
    double flo = f(lo);
    while (hi - lo > xtol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) {
            break;
        }
        const double fmid = f(mid);
        if (fmid == 0.0) {
            return mid;
        }
        if ((fmid < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

namespace {

struct Panel {
    double a;
    double b;
    double value;
    double error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

using Rule = boost::math::quadrature::gauss_kronrod<double, 15>;

} // namespace

Integral integrate(const Fn& f, const std::vector<double>& knots, double abs_tol, int max_panels) {
    if (knots.size() < 2) {
        return {0.0, 0.0};
    }
    // Infinite ends are mapped onto (0, 1]: y = b - (1 - u) / u below and
    // y = a + (1 - u) / u above.
    struct Piece {
        Fn g;
        double a;
        double b;
    };
    std::vector<Piece> pieces;
    for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
        const double a = knots[i];
        const double b = knots[i + 1];
        if (!(a < b)) {
            continue;
        }
        if (std::isinf(a) && std::isinf(b)) {
            pieces.push_back({[&f](double u) {
                                  const double w = (1.0 - u) / u;
                                  return (f(w) + f(-w)) / (u * u);
                              },
                              0.0, 1.0});
        } else if (std::isinf(a)) {
            pieces.push_back({[&f, b](double u) { return f(b - (1.0 - u) / u) / (u * u); }, 0.0, 1.0});
        } else if (std::isinf(b)) {
            pieces.push_back({[&f, a](double u) { return f(a + (1.0 - u) / u) / (u * u); }, 0.0, 1.0});
        } else {
            pieces.push_back({std::cref(f), a, b});
        }
    }

    double total = 0.0;
    double error = 0.0;
    int panels = 0;
    std::vector<std::priority_queue<Panel>> queues(pieces.size());
    const auto eval = [&](std::size_t k, double a, double b) {
        double err = 0.0;
        const double v = Rule::integrate(pieces[k].g, a, b, 0, 0.0, &err);
        ++panels;
        return Panel{a, b, v, err};
    };
    for (std::size_t k = 0; k < pieces.size(); ++k) {
        const Panel p = eval(k, pieces[k].a, pieces[k].b);
        total += p.value;
        error += p.error;
        queues[k].push(p);
    }
    while (error > abs_tol && panels < max_panels) {
        std::size_t worst = 0;
        for (std::size_t k = 1; k < queues.size(); ++k) {
            if (queues[k].top().error > queues[worst].top().error) {
                worst = k;
            }
        }
        const Panel p = queues[worst].top();
        const double mid = 0.5 * (p.a + p.b);
        if (!(mid > p.a && mid < p.b)) {
            break;
        }
        queues[worst].pop();
        const Panel l = eval(worst, p.a, mid);
        const Panel r = eval(worst, mid, p.b);
        total += l.value + r.value - p.value;
        error += l.error + r.error - p.error;
        queues[worst].push(l);
        queues[worst].push(r);
    }
    return {total, error};
}

} // namespace secrecy::numerics
