#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace resim::quad {

class QuadratureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    double rel_tol = 1e-6;
    double abs_tol = 0.0;
    std::size_t max_intervals = 4000;
};

struct Result {
    double value = 0.0;
    double error_bound = 0.0;
    std::size_t intervals = 0;
};

namespace detail {

// Gauss 7 / Kronrod 15 node-weight table on [-1,1]: {abscissa, gauss w, kronrod w}.
inline constexpr double kG7K15[8][3] = {
    {0.000000000000000000, 0.417959183673469388, 0.209482141084727828},
    {0.405845151377397167, 0.381830050505118945, 0.190350578064785410},
    {0.741531185599394440, 0.279705391489276668, 0.140653259715525919},
    {0.949107912342758525, 0.129484966168869693, 0.063092092629978553},
    {0.207784955007898468, 0.0,                  0.204432940075298892},
    {0.586087235467691130, 0.0,                  0.169004726639267903},
    {0.864864423359769073, 0.0,                  0.104790010322250184},
    {0.991455371120812639, 0.0,                  0.022935322010529225},
};

template <class F>
void gk15(F&& f, double a, double b, double& value, double& err) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    double f0 = f(mid);
    double g7 = kG7K15[0][1] * f0;
    double k15 = kG7K15[0][2] * f0;
    for (int i = 1; i < 8; ++i) {
        const double dx = half * kG7K15[i][0];
        const double fi = f(mid + dx) + f(mid - dx);
        g7 += kG7K15[i][1] * fi;
        k15 += kG7K15[i][2] * fi;
    }
    g7 *= half;
    k15 *= half;

    value = k15;
    // Conservative bound: the Kronrod value is far more accurate than the
    // embedded Gauss rule, so their difference dominates the true error.
    err = std::abs(k15 - g7);
}

struct Segment {
    double a, b, value, err;
};

}  // namespace detail

/// Globally adaptive Gauss-Kronrod integration over the union of
/// [breakpoints[i], breakpoints[i+1]] panels. The panel list lets callers
/// pre-split around known difficult regions (integrable singularities,
/// sign changes); the worst-error segment is then bisected until the summed
/// error bound meets max(rel_tol * |value|, abs_tol).
/// Throws QuadratureError with diagnostics when the subdivision cap is hit.
template <class F>
Result integrate(F&& f, std::span<const double> breakpoints, const Options& opt = {}) {
    if (breakpoints.size() < 2) {
        throw std::invalid_argument("integrate: need at least two breakpoints");
    }
    std::vector<detail::Segment> segs;
    segs.reserve(opt.max_intervals);
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        detail::Segment s{breakpoints[i], breakpoints[i + 1], 0.0, 0.0};
        if (!(s.a < s.b)) {
            throw std::invalid_argument("integrate: breakpoints must increase strictly");
        }
        detail::gk15(f, s.a, s.b, s.value, s.err);
        segs.push_back(s);
    }

    for (;;) {
        double total = 0.0, total_err = 0.0;
        std::size_t worst = 0;
        for (std::size_t i = 0; i < segs.size(); ++i) {
            total += segs[i].value;
            total_err += segs[i].err;
            if (segs[i].err > segs[worst].err) worst = i;
        }
        const double goal = std::max(opt.rel_tol * std::abs(total), opt.abs_tol);
        if (total_err <= goal || total_err == 0.0) {
            return Result{total, total_err, segs.size()};
        }
        if (segs.size() >= opt.max_intervals) {
            throw QuadratureError(
                "integrate: error bound " + std::to_string(total_err) + " above goal " +
                std::to_string(goal) + " after " + std::to_string(segs.size()) +
                " intervals");
        }
        detail::Segment left = segs[worst];
        const double mid = 0.5 * (left.a + left.b);
        detail::Segment right{mid, left.b, 0.0, 0.0};
        left.b = mid;
        detail::gk15(f, left.a, left.b, left.value, left.err);
        detail::gk15(f, right.a, right.b, right.value, right.err);
        segs[worst] = left;
        segs.push_back(right);
    }
}

template <class F>
Result integrate(F&& f, double a, double b, const Options& opt = {}) {
    const double pts[2] = {a, b};
    return integrate(f, std::span<const double>(pts, 2), opt);
}

}  // namespace resim::quad
