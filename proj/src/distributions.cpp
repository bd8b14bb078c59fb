#include "resim/distributions.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace resim {

namespace {

constexpr double kInvSqrt2Pi = 0.3989422804014326779;  // 1/sqrt(2*pi)
constexpr double kInvSqrt2 = 0.7071067811865475244;    // 1/sqrt(2)

// Rational approximations from Wichura's AS 241 (PPND16), evaluated here on
// the upper-tail probability so that small p is used directly and never
// round-trips through 1 - p.
double as241_upper(double p) {
    const double q = 0.5 - p;  // lower-tail prob minus 1/2
    if (std::abs(q) <= 0.425) {
        const double r = 0.180625 - q * q;
        return q *
               (((((((r * 2509.0809287301226727 + 33430.575583588128105) * r +
                     67265.770927008700853) *
                        r +
                    45921.953931549871457) *
                       r +
                   13731.693765509461125) *
                      r +
                  1971.5909503065514427) *
                     r +
                 133.14166789178437745) *
                    r +
                3.387132872796366608) /
               (((((((r * 5226.495278852854561 + 28729.085735721942674) * r +
                     39307.89580009271061) *
                        r +
                    21213.794301586595867) *
                       r +
                   5394.1960214247511077) *
                      r +
                  687.1870074920579083) *
                     r +
                 42.313330701600911252) *
                    r +
                1.0);
    }

    // Tail branches: work from whichever tail probability is the small one.
    const double r0 = (q > 0.0) ? p : 1.0 - p;
    double r = std::sqrt(-std::log(r0));
    double val;
    if (r <= 5.0) {
        r -= 1.6;
        val = (((((((r * 7.7454501427834140764e-4 + 0.0227238449892691845833) * r +
                    0.24178072517745061177) *
                       r +
                   1.27045825245236838258) *
                      r +
                  3.64784832476320460504) *
                     r +
                 5.7694972214606914055) *
                    r +
                4.6303378461565452959) *
                   r +
               1.42343711074968357734) /
              (((((((r * 1.05075007164441684324e-9 + 5.475938084995344946e-4) * r +
                    0.0151986665636164571966) *
                       r +
                   0.14810397642748007459) *
                      r +
                  0.68976733498510000455) *
                     r +
                 1.6763848301838038494) *
                    r +
                2.05319162663775882187) *
                   r +
               1.0);
    } else {
        r -= 5.0;
        val = (((((((r * 2.01033439929228813265e-7 + 2.71155556874348757815e-5) * r +
                    0.0012426609473880784386) *
                       r +
                   0.026532189526576123093) *
                      r +
                  0.29656057182850489123) *
                     r +
                 1.7848265399172913358) *
                    r +
                5.4637849111641143699) *
                   r +
               6.6579046435011037772) /
              (((((((r * 2.04426310338993978564e-15 + 1.4215117583164458887e-7) * r +
                    1.8463183175100546818e-5) *
                       r +
                   7.868691311456132591e-4) *
                      r +
                  0.0148753612908506148525) *
                     r +
                 0.13692988092273580531) *
                    r +
                0.59983220655588793769) *
                   r +
               1.0);
    }
    return (q > 0.0) ? val : -val;
}

}  // namespace

LognormalParams fit_lognormal(double mean, double sd) {
    if (!(mean > 0.0) || !std::isfinite(mean)) {
        throw std::domain_error("fit_lognormal: mean must be finite and > 0");
    }
    if (!(sd > 0.0) || !std::isfinite(sd)) {
        throw std::domain_error("fit_lognormal: sd must be finite and > 0");
    }
    const double ratio = sd / mean;
    const double sigma2 = std::log1p(ratio * ratio);
    const double sigma = std::sqrt(sigma2);
    return LognormalParams{std::log(mean) - 0.5 * sigma2, sigma};
}

double normal_cdf_upper(double z) { return 0.5 * std::erfc(z * kInvSqrt2); }

double inv_normal_cdf_upper(double p) {
    if (!(p > 0.0 && p < 1.0)) {
        throw std::domain_error("inv_normal_cdf_upper: p must lie in (0,1)");
    }
    double z = as241_upper(p);

    // One Halley step against the complementary CDF. Skipped deep in the
    // tails where erfc and the density are subnormal; AS 241 alone is well
    // within tolerance there.
    if (std::abs(z) < 35.0) {
        const double density = kInvSqrt2Pi * std::exp(-0.5 * z * z);
        if (density > 0.0) {
            const double u = (normal_cdf_upper(z) - p) / density;
            const double step = u / (1.0 - 0.5 * u * z);
            if (std::isfinite(step)) z += step;
        }
    }
    return z;
}

double lognormal_comp_quantile(const LognormalParams& params, double p) {
    if (!(p > 0.0 && p < 1.0)) {
        throw std::domain_error("lognormal_comp_quantile: p must lie in (0,1)");
    }
    return std::exp(params.mu + params.sigma * inv_normal_cdf_upper(p));
}

std::uint32_t poisson_comp_quantile(double lambda, double p) {
    if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
        throw std::domain_error("poisson_comp_quantile: lambda must be finite and >= 0");
    }
    if (!(p > 0.0 && p < 1.0)) {
        throw std::domain_error("poisson_comp_quantile: p must lie in (0,1)");
    }
    if (lambda == 0.0) return 0;

    const double target = 1.0 - p;
    const double cap_d = lambda + 20.0 * std::sqrt(lambda) + 50.0;
    const std::uint64_t cap = static_cast<std::uint64_t>(cap_d);

    double pmf = std::exp(-lambda);
    double cdf = pmf;
    std::uint64_t n = 0;
    while (cdf < target) {
        ++n;
        if (n > cap) {
            throw std::runtime_error(
                "poisson_comp_quantile: recurrence cap exceeded (lambda = " +
                std::to_string(lambda) + ", p = " + std::to_string(p) + ")");
        }
        pmf *= lambda / static_cast<double>(n);
        cdf += pmf;
    }
    return static_cast<std::uint32_t>(n);
}

double confidence_radius(double level) {
    if (!(level > 0.0 && level < 1.0)) {
        throw std::domain_error("confidence_radius: level must lie in (0,1)");
    }
    return inv_normal_cdf_upper(0.5 * (1.0 - level));
}

}  // namespace resim
