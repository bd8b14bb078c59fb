#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace resim {

/// Reinsurance financial terms: a per-event occurrence layer and a per-year
/// aggregate layer, each a (attachment, limit) pair.
struct Contract {
    std::string name;
    double occ_attach = 0.0;
    double occ_limit = 0.0;
    double agg_attach = 0.0;
    double agg_limit = 0.0;

    bool operator==(const Contract&) const = default;

    /// Throws std::domain_error naming the offending field unless all terms
    /// are finite, attachments >= 0 and limits > 0.
    void validate() const;
};

/// Occurrence layer applied to one event's gross loss:
/// min(max(0, gross - occ_attach), occ_limit).
/// Throws std::domain_error for negative or non-finite gross.
inline double apply_occurrence(const Contract& c, double gross) {
    if (!(gross >= 0.0) || !std::isfinite(gross)) {
        throw std::domain_error("apply_occurrence: gross loss must be finite and >= 0");
    }
    return std::min(std::max(0.0, gross - c.occ_attach), c.occ_limit);
}

/// Aggregate layer applied once to a year's summed occurrence-layered loss:
/// min(max(0, annual - agg_attach), agg_limit).
/// Throws std::domain_error for negative or non-finite annual loss.
inline double apply_aggregate(const Contract& c, double annual) {
    if (!(annual >= 0.0) || !std::isfinite(annual)) {
        throw std::domain_error("apply_aggregate: annual loss must be finite and >= 0");
    }
    return std::min(std::max(0.0, annual - c.agg_attach), c.agg_limit);
}

inline void Contract::validate() const {
    auto bad = [&](const char* field, const char* why) {
        throw std::domain_error("contract '" + name + "': " + field + " " + why);
    };
    if (!std::isfinite(occ_attach) || occ_attach < 0.0) bad("occ_attach", "must be finite and >= 0");
    if (!std::isfinite(occ_limit) || occ_limit <= 0.0) bad("occ_limit", "must be finite and > 0");
    if (!std::isfinite(agg_attach) || agg_attach < 0.0) bad("agg_attach", "must be finite and >= 0");
    if (!std::isfinite(agg_limit) || agg_limit <= 0.0) bad("agg_limit", "must be finite and > 0");
}

}  // namespace resim
