#include "resim/sampling.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace resim {

namespace {

std::uint64_t split_mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Unbiased-enough bounded draw (bias < 2^-32 for the sizes in scope).
std::uint64_t bounded(std::uint64_t x, std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(x) * static_cast<unsigned __int128>(n)) >> 64);
}

void check_open_unit(double q, const char* who) {
    if (!(q > 0.0 && q < 1.0)) {
        throw std::domain_error(std::string(who) + ": q must lie in (0,1)");
    }
}

}  // namespace

PowerTransform::PowerTransform(double k) : k_(k) {
    if (!(k >= 1.0) || !std::isfinite(k)) {
        throw std::domain_error("PowerTransform: exponent k must be finite and >= 1");
    }
}

double PowerTransform::apply(double q) const { return std::pow(q, k_); }

double PowerTransform::inverse(double p) const { return std::pow(p, 1.0 / k_); }

std::vector<double> midpoint_partition(std::uint64_t n) {
    if (n == 0) throw std::domain_error("midpoint_partition: n must be >= 1");
    std::vector<double> r(n);
    const double dn = static_cast<double>(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        r[i] = (static_cast<double>(i) + 0.5) / dn;
    }
    return r;
}

std::vector<double> uniform_sample(std::uint64_t n, std::uint64_t seed) {
    if (n == 0) throw std::domain_error("uniform_sample: n must be >= 1");
    std::vector<double> u(n);
    UniformStream stream(seed);
    for (auto& x : u) x = stream.next();
    return u;
}

double transform_weight(const PowerTransform& t, double q) {
    check_open_unit(q, "transform_weight");
    return t.k() * std::pow(q, t.k() - 1.0);
}

double log_transform_weight(const PowerTransform& t, double q) {
    check_open_unit(q, "log_transform_weight");
    return std::log(t.k()) + (t.k() - 1.0) * std::log(q);
}

SeveritySample severity_sample(const LognormalParams& params, const PowerTransform& t,
                               double q) {
    check_open_unit(q, "severity_sample");
    return SeveritySample{lognormal_comp_quantile(params, t.apply(q)),
                          transform_weight(t, q)};
}

std::vector<std::uint32_t> permute(std::uint64_t n, std::uint64_t seed) {
    if (n == 0) throw std::domain_error("permute: n must be >= 1");
    if (n > std::numeric_limits<std::uint32_t>::max()) {
        throw std::domain_error("permute: n exceeds the supported 2^32 - 1 range");
    }
    std::vector<std::uint32_t> perm(n);
    for (std::uint64_t i = 0; i < n; ++i) perm[i] = static_cast<std::uint32_t>(i + 1);
    std::mt19937_64 eng(seed);
    for (std::uint64_t i = n - 1; i > 0; --i) {
        const std::uint64_t j = bounded(eng(), i + 1);
        std::swap(perm[i], perm[j]);
    }
    return perm;
}

std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t stream_index) {
    return split_mix64(seed ^ split_mix64(stream_index));
}

}  // namespace resim
