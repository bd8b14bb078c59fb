#pragma once

#include <cmath>
#include <cstdint>
#include <span>

#include "resim/distributions.hpp"

namespace resim {

/// Compensated (Neumaier) running sum; merging two sums is associative
/// enough for a fixed combination order to be reproducible.
class CompensatedSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }

    void merge(const CompensatedSum& other) {
        add(other.sum_);
        comp_ += other.comp_;
    }

    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

/// Weighted moment estimates over n samples with values s and weights w:
/// mean_x  = (1/n) sum s*w    (estimates E(X))
/// mean_x2 = (1/n) sum s^2*w  (estimates E(X^2))
/// mean_y2 = (1/n) sum (s*w)^2  (estimates E(Y^2) for the weighted variable)
struct MomentEstimates {
    double mean_x = 0.0;
    double mean_x2 = 0.0;
    double mean_y2 = 0.0;
    std::uint64_t n = 0;

    /// Var(X) = E(X^2) - E(X)^2, floored at 0 against rounding.
    double var_x() const {
        const double v = mean_x2 - mean_x * mean_x;
        return v > 0.0 ? v : 0.0;
    }

    /// Var(Y) = E(Y^2) - E(X)^2 (X and Y share the mean), floored at 0.
    double var_y() const {
        const double v = mean_y2 - mean_x * mean_x;
        return v > 0.0 ? v : 0.0;
    }
};

/// Computes the three weighted moment sums above with compensated
/// accumulation. Throws std::invalid_argument on length mismatch, n < 2, or
/// a non-positive weight.
MomentEstimates weighted_moments(std::span<const double> values,
                                 std::span<const double> weights);

struct SimulationErrors {
    double regular;
    double enhanced;
};

/// Relative 95%-style error radii of the mean estimate:
/// regular  = z * sqrt(Var(X)/n) / mean_x   (unweighted method)
/// enhanced = z * sqrt(Var(Y)/n) / mean_x   (weighted method)
/// with z = confidence_radius(confidence_level). When every weight is 1 the
/// two are bit-identical. Throws std::domain_error when mean_x <= 0 (the
/// relative error is undefined).
SimulationErrors simulation_errors(const MomentEstimates& m, double confidence_level);

/// Sample improvement I = Var(X)/Var(Y), estimated as (regular/enhanced)^2:
/// the factor by which the unweighted method's sample size must grow to
/// match the weighted method's accuracy. Throws std::domain_error when
/// enhanced is 0.
double sample_improvement(double regular, double enhanced);

/// Var(Y) - Var(X) for the severity distribution alone under t(q) = q^k,
/// computed by adaptive quadrature of
///   integral_0^1 (Fbar^-1(p))^2 * (k * p^((k-1)/k) - 1) dp.
/// Negative means the transform reduces variance. Exactly 0 for k = 1.
/// Throws QuadratureError if the requested accuracy cannot be reached.
double variance_gap_quadrature(const LognormalParams& severity, double k);

struct K2Inequality {
    double lhs;  // integral over [0, 1/4] of (Fbar^-1)^2 (1 - 2 sqrt(p))
    double rhs;  // integral over [1/4, 1] of (Fbar^-1)^2 (2 sqrt(p) - 1)
};

/// Both sides of the k = 2 variance-reduction inequality; variance is
/// reduced exactly when lhs > rhs, and lhs - rhs equals
/// -variance_gap_quadrature(severity, 2) up to quadrature tolerance.
K2Inequality k2_inequality_check(const LognormalParams& severity);

}  // namespace resim
