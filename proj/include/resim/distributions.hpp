#pragma once

#include <cstdint>

namespace resim {

/// Log-space parameters of a lognormal severity distribution:
/// log(X) ~ Normal(mu, sigma^2), sigma > 0.
struct LognormalParams {
    double mu = 0.0;
    double sigma = 1.0;

    bool operator==(const LognormalParams&) const = default;
};

/// Expected number of event occurrences per simulated year.
struct Frequency {
    double lambda = 0.0;

    bool operator==(const Frequency&) const = default;
};

/// Moment fit of a lognormal: the returned parameters reproduce `mean` and
/// `sd` as the first two moments of the distribution.
/// Throws std::domain_error unless mean > 0 and sd > 0.
LognormalParams fit_lognormal(double mean, double sd);

/// Upper-tail standard normal quantile: the z with P(Z > z) = p.
/// Rational approximation (AS 241 parameterized on the upper tail, so small
/// p never round-trips through 1 - p) polished with one Halley step against
/// normal_cdf_upper. Absolute error stays below 1e-9 for
/// p in [1e-300, 1 - 1e-16]. Throws std::domain_error for p outside (0,1).
double inv_normal_cdf_upper(double p);

/// Complementary standard normal CDF, P(Z > z).
double normal_cdf_upper(double z);

/// Upper-tail lognormal quantile exp(mu + sigma * inv_normal_cdf_upper(p)).
/// Strictly decreasing in p. Throws std::domain_error for p outside (0,1).
double lognormal_comp_quantile(const LognormalParams& params, double p);

/// Upper-tail Poisson quantile: the smallest n with P(X <= n) >= 1 - p.
/// Stable forward recurrence on the pmf with a running CDF sum, capped at
/// n = lambda + 20*sqrt(lambda) + 50; exceeding the cap throws
/// std::runtime_error. Throws std::domain_error for p outside (0,1) or
/// invalid lambda.
std::uint32_t poisson_comp_quantile(double lambda, double p);

/// z multiplier for a symmetric two-sided confidence interval at `level`,
/// i.e. inv_normal_cdf_upper((1 - level) / 2).
/// Throws std::domain_error for level outside (0,1).
double confidence_radius(double level);

}  // namespace resim
