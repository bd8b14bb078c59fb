#include "resim/stats.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "resim/quadrature.hpp"

namespace resim {

namespace {

double square(double x) { return x * x; }

// E(X^2) restricted to the upper tail {X > Fbar^-1(a)}, i.e. the exact value
// of integral_0^a (Fbar^-1(p))^2 dp for the lognormal.
double tail_second_moment(const LognormalParams& lp, double a) {
    const double za = inv_normal_cdf_upper(a);
    return std::exp(2.0 * lp.mu + 2.0 * square(lp.sigma)) *
           normal_cdf_upper(za - 2.0 * lp.sigma);
}

// Head cutoff for integrands dominated by (Fbar^-1(p))^2: below this point
// the remaining mass is provably negligible relative to E(X^2).
double head_cutoff(const LognormalParams& lp) {
    const double za = 2.0 * lp.sigma + inv_normal_cdf_upper(1e-12);
    const double a = normal_cdf_upper(za);
    return a > 1e-300 ? a : 1e-300;
}

// Geometric ladder of breakpoints from the head cutoff up to `top`, so the
// adaptive rule starts with panels matched to the integrable growth of
// (Fbar^-1)^2 as p -> 0.
std::vector<double> ladder_breakpoints(double a, double top) {
    std::vector<double> pts;
    pts.push_back(a);
    for (double p = a * 100.0; p < top * 0.99; p *= 100.0) pts.push_back(p);
    pts.push_back(top);
    return pts;
}

}  // namespace

MomentEstimates weighted_moments(std::span<const double> values,
                                 std::span<const double> weights) {
    if (values.size() != weights.size()) {
        throw std::invalid_argument("weighted_moments: values/weights length mismatch");
    }
    const std::uint64_t n = values.size();
    if (n < 2) {
        throw std::invalid_argument("weighted_moments: need at least 2 samples");
    }
    CompensatedSum sw, s2w, sw2;
    for (std::uint64_t i = 0; i < n; ++i) {
        const double v = values[i];
        const double w = weights[i];
        if (!(w > 0.0)) {
            throw std::invalid_argument("weighted_moments: weights must be > 0");
        }
        const double vw = v * w;
        sw.add(vw);
        s2w.add((v * v) * w);
        sw2.add(vw * vw);
    }
    const double dn = static_cast<double>(n);
    return MomentEstimates{sw.value() / dn, s2w.value() / dn, sw2.value() / dn, n};
}

SimulationErrors simulation_errors(const MomentEstimates& m, double confidence_level) {
    const double z = confidence_radius(confidence_level);
    if (!(m.mean_x > 0.0)) {
        throw std::domain_error(
            "simulation_errors: relative error undefined for non-positive mean");
    }
    const double dn = static_cast<double>(m.n);
    return SimulationErrors{z * std::sqrt(m.var_x() / dn) / m.mean_x,
                            z * std::sqrt(m.var_y() / dn) / m.mean_x};
}

double sample_improvement(double regular, double enhanced) {
    if (!(enhanced > 0.0)) {
        throw std::domain_error("sample_improvement: enhanced error must be > 0");
    }
    return square(regular / enhanced);
}

double variance_gap_quadrature(const LognormalParams& severity, double k) {
    if (!(k >= 1.0) || !std::isfinite(k)) {
        throw std::domain_error("variance_gap_quadrature: k must be finite and >= 1");
    }
    if (k == 1.0) return 0.0;  // t is the identity, the integrand vanishes

    const double expo = (k - 1.0) / k;
    auto integrand = [&](double p) {
        return square(lognormal_comp_quantile(severity, p)) *
               (k * std::pow(p, expo) - 1.0);
    };

    const double a = head_cutoff(severity);
    // |k p^((k-1)/k) - 1| <= 1 + k a^((k-1)/k) on [0, a].
    const double head_bound =
        (1.0 + k * std::pow(a, expo)) * tail_second_moment(severity, a);

    std::vector<double> pts = ladder_breakpoints(a, 0.01);
    const double sign_change = std::pow(k, -k / (k - 1.0));
    if (sign_change > 0.011) pts.push_back(sign_change);
    pts.push_back(0.5);
    pts.push_back(1.0);

    quad::Options opt;
    opt.rel_tol = 1e-6;
    opt.abs_tol = 1e-13 * tail_second_moment(severity, 0.5);  // floor near k -> 1
    const quad::Result body = quad::integrate(integrand, pts, opt);

    const double total_err = body.error_bound + head_bound;
    if (total_err > std::max(1e-5 * std::abs(body.value), 10.0 * opt.abs_tol)) {
        throw quad::QuadratureError(
            "variance_gap_quadrature: head truncation dominates the error bound");
    }
    return body.value;
}

K2Inequality k2_inequality_check(const LognormalParams& severity) {
    auto q2 = [&](double p) { return square(lognormal_comp_quantile(severity, p)); };

    const double a = head_cutoff(severity);
    const double head_bound = tail_second_moment(severity, a);  // |1 - 2 sqrt(p)| <= 1

    quad::Options opt;
    opt.rel_tol = 1e-6;
    opt.abs_tol = 1e-13 * tail_second_moment(severity, 0.5);

    std::vector<double> left_pts = ladder_breakpoints(a, 0.25);
    const quad::Result lhs = quad::integrate(
        [&](double p) { return q2(p) * (1.0 - 2.0 * std::sqrt(p)); }, left_pts, opt);

    const double right_pts[3] = {0.25, 0.5, 1.0};
    const quad::Result rhs = quad::integrate(
        [&](double p) { return q2(p) * (2.0 * std::sqrt(p) - 1.0); },
        std::span<const double>(right_pts, 3), opt);

    if (head_bound > std::max(1e-5 * std::abs(lhs.value), 10.0 * opt.abs_tol)) {
        throw quad::QuadratureError(
            "k2_inequality_check: head truncation dominates the error bound");
    }
    return K2Inequality{lhs.value, rhs.value};
}

}  // namespace resim
