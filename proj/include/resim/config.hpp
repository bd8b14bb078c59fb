#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "resim/engine.hpp"

namespace resim {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses the flat key=value config format:
///   trials, lambda, severity_mean, severity_sd, k_values (comma list),
///   mode (riemann|random), seed, confidence_level, chunk_trials, and one
///   `contract = name,occ_att,occ_lim,agg_att,agg_lim` line per contract.
/// `#` starts a comment. Unknown keys, missing required keys, duplicate
/// scalar keys and invalid values all raise ConfigError with the line and
/// field. Defaults: mode riemann, seed 0, confidence_level 0.95,
/// chunk_trials 65536.
SimulationPlan parse_config(std::string_view text);

/// Reads and parses a config file; I/O failures raise ConfigError.
SimulationPlan load_config_file(const std::string& path);

/// Canonical config text; parse_config(serialize_config(plan)) == plan.
std::string serialize_config(const SimulationPlan& plan);

/// Writes the per-(contract, k) metric table as CSV with header
/// contract,occ_attach,occ_limit,agg_attach,agg_limit,el,el_percent,k,
/// sim_error_regular_pct,sim_error_enhanced_pct,sample_improvement.
/// Throws std::runtime_error on I/O failure.
void emit_results(const SimulationResult& result, const std::string& path);

/// Writes the sample-improvement sweep as CSV with header
/// k,contract,sample_improvement (k-major order).
void emit_sweep(const SimulationResult& result, const std::string& path);

}  // namespace resim
