#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "resim/distributions.hpp"
#include "resim/sampling.hpp"
#include "resim/stats.hpp"
#include "resim/terms.hpp"

namespace resim {

/// Everything that determines a simulation run's output: model parameters,
/// transform exponents, sampling mode and seed, contracts, and the chunk
/// size of the deterministic reduction. Two equal plans produce bit-equal
/// results on the same build, independent of thread count.
struct SimulationPlan {
    std::uint64_t num_trials = 0;
    Frequency frequency;
    double severity_mean = 0.0;
    double severity_sd = 0.0;
    std::vector<double> k_values;
    SampleMode mode;
    std::vector<Contract> contracts;
    double confidence_level = 0.95;
    std::uint64_t chunk_trials = 65536;

    bool operator==(const SimulationPlan&) const = default;

    LognormalParams severity_params() const;

    /// Throws std::invalid_argument naming the first offending field.
    void validate() const;
};

/// One contract's column of the simulated year loss table.
struct WeightedYearTable {
    std::vector<double> net_loss;      // per trial
    std::vector<double> trial_weight;  // per trial; empty years have weight 1
};

/// Per-year event counts: poisson_comp_quantile(lambda, r) over the midpoint
/// partition of num_trials. Deterministic; counts come out nonincreasing.
std::vector<std::uint32_t> draw_frequencies(Frequency frequency, std::uint64_t num_trials);

struct EventSample {
    std::vector<double> losses;
    std::vector<double> weights;
};

/// Severity (loss, weight) pairs for a year's worth of events.
/// riemann: pairs generated on the midpoint partition of total_events, then
/// reordered by a seeded random permutation (pairs stay aligned).
/// random: pairs generated from uniform_sample(total_events, seed).
EventSample build_event_losses(std::uint64_t total_events, const LognormalParams& severity,
                               const PowerTransform& t, const SampleMode& mode);

/// Consecutively assigns events to trials by the frequency counts, applies
/// the occurrence layer per event, sums within the year, applies the
/// aggregate layer once, and accumulates each trial's weight as the
/// exponential of its summed log event weights (empty product = 1).
/// Throws std::invalid_argument when sum(frequencies) != losses.size().
WeightedYearTable assemble_trials(std::span<const std::uint32_t> frequencies,
                                  std::span<const double> losses,
                                  std::span<const double> weights, const Contract& contract);

/// Result row for one (contract, k) pair. Errors are ratios relative to the
/// expected loss (multiply by 100 for the usual percentage form); they and
/// the improvement are NaN when the expected loss is not positive.
struct ContractMetrics {
    Contract contract;
    double k = 1.0;
    MomentEstimates moments;
    double expected_loss = 0.0;
    double el_percent = 0.0;  // 100 * expected_loss / occ_limit
    double sim_error_regular = 0.0;
    double sim_error_enhanced = 0.0;
    double sample_improvement = 1.0;
};

struct SimulationResult {
    /// Grouped by contract in plan order, k ascending within a contract.
    std::vector<ContractMetrics> rows;
};

/// Execution knobs that do not affect results.
struct ExecOptions {
    unsigned threads = 0;  // 0 = hardware concurrency
    /// Streams the year loss table of the first configured k to a CSV
    /// (trial,weight,net_loss_<contract>...). Forces sequential chunk
    /// processing; the metrics are unchanged.
    std::optional<std::string> dump_ylt_path;
    std::function<void(const std::string&)> progress;
};

/// Runs the full plan: one shared frequency draw, severity regenerated per k
/// from child stream derive_stream_seed(seed, k_index) (further partitioned
/// per chunk in random mode), trials reduced chunk-wise with compensated
/// sums and merged pairwise over chunk index, so results depend on
/// chunk_trials but not on thread count.
SimulationResult simulate(const SimulationPlan& plan, const ExecOptions& exec = {});

}  // namespace resim
