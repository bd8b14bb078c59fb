#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "resim/distributions.hpp"

namespace resim {

/// Power-function transform t(q) = q^k on the unit interval, k >= 1.
/// t(0) = 0, t(1) = 1, strictly increasing; each transformed sample carries
/// the weight t'(q) = k * q^(k-1).
class PowerTransform {
public:
    explicit PowerTransform(double k);

    double k() const { return k_; }

    /// t(q) = q^k for q in [0,1].
    double apply(double q) const;

    /// t^-1(p) = p^(1/k) for p in [0,1].
    double inverse(double p) const;

private:
    double k_;
};

enum class SamplingScheme { riemann, random };

/// How probability levels are produced: the deterministic midpoint partition
/// (riemann) or seeded uniform draws (random). The seed fully determines all
/// stochastic choices of a run in both schemes (permutation in riemann,
/// draws in random).
struct SampleMode {
    SamplingScheme scheme = SamplingScheme::riemann;
    std::uint64_t seed = 0;

    bool operator==(const SampleMode&) const = default;
};

/// Equidistant midpoints r_i = (i - 1/2) / n, i = 1..n.
/// Throws std::domain_error for n = 0.
std::vector<double> midpoint_partition(std::uint64_t n);

/// n seeded uniform draws, all strictly inside (0,1). Identical output for
/// identical (n, seed). Throws std::domain_error for n = 0.
std::vector<double> uniform_sample(std::uint64_t n, std::uint64_t seed);

/// Sample weight t'(q) = k * q^(k-1). Throws std::domain_error for q
/// outside the open interval (0,1).
double transform_weight(const PowerTransform& t, double q);

/// log t'(q), evaluated as log(k) + (k-1)*log(q). Exactly 0 for k = 1.
/// Used where per-event weights are accumulated in log space.
double log_transform_weight(const PowerTransform& t, double q);

struct SeveritySample {
    double value;
    double weight;
};

/// One transformed severity draw: value F^-1(t(q)) on the complementary
/// quantile of `params`, paired with weight t'(q).
SeveritySample severity_sample(const LognormalParams& params, const PowerTransform& t,
                               double q);

/// Uniform random permutation of {1..n} (Fisher-Yates over the run PRNG),
/// deterministic given (n, seed). n above 2^32 - 1 is rejected.
std::vector<std::uint32_t> permute(std::uint64_t n, std::uint64_t seed);

/// Seed-derivation rule for partitioned sub-streams:
/// child_seed = hash(seed, stream_index). Streams derived for distinct
/// indices are independent for practical purposes and reproducible.
std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t stream_index);

/// Sequential stream of uniforms in the open interval (0,1) over a seeded
/// mt19937_64. uniform_sample(n, seed) materializes exactly the first n
/// values of UniformStream(seed).
class UniformStream {
public:
    explicit UniformStream(std::uint64_t seed) : eng_(seed) {}

    double next() {
        // 53-bit mantissa, offset by half a step: never exactly 0 or 1.
        return (static_cast<double>(eng_() >> 11) + 0.5) * 0x1.0p-53;
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace resim
