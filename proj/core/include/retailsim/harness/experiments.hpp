#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "retailsim/agents/department.hpp"
#include "retailsim/harness/scenario.hpp"
#include "retailsim/harness/stats.hpp"
#include "retailsim/metrics/record.hpp"

namespace retailsim {

// Seed of replication `rep`. Factor levels reuse it, so every level of an
// experiment sees common random numbers.
std::uint64_t replication_seed(std::uint64_t master_seed, std::size_t rep) noexcept;

/// Simulates one replication; throws ConfigError or InvariantViolation.
MetricsRecord run_replication(const ScenarioConfig& config, std::size_t rep, RunOptions options = {});

struct FactorLevel {
    std::string label;
    double value = 0.0;
    ScenarioConfig config;
};

struct ExperimentResult {
    std::string name;   // exp1, exp2, ...
    std::string factor; // what varies across levels
    std::size_t replications = 0;
    std::vector<FactorLevel> levels;
    std::vector<std::vector<MetricsRecord>> records; // [level][replication]
    // Level whose KPI means are the denominators of ratio(); customer-mix only.
    std::optional<std::size_t> baseline;
    std::string ratio_kpi = "transactions";

    std::vector<double> values(std::size_t level, std::string_view kpi) const;
    Summary summary(std::size_t level, std::string_view kpi, double confidence = 0.95) const;
    // Per-replication ratio level/baseline of ratio_kpi, summarised.
    std::optional<Summary> ratio(std::size_t level, double confidence = 0.95) const;
};

/// Runs every level x replication, on `threads` workers (0 = hardware
/// concurrency). Records come back ordered by level then replication no
/// matter which finished first.
ExperimentResult run_experiment(std::string name, std::string factor, std::vector<FactorLevel> levels,
                                 std::size_t replications, unsigned threads = 0);

// Staff mix for c cashiers out of `total` front-line staff; the remaining
// sellers are level 2 in proportion `level2_share`, rounded down. Managers are
// left as configured.
StaffCounts staff_mix(const StaffCounts& base, int cashiers, int total, double level2_share);

ExperimentResult experiment_staff_mix(const ScenarioConfig& base, std::size_t replications,
                                      std::vector<int> cashiers = {1, 2, 3, 4, 5, 6, 7}, int total = 10,
                                      unsigned threads = 0);

ExperimentResult experiment_empowerment(const ScenarioConfig& base, std::size_t replications,
                                        std::vector<double> levels = {0.0, 0.25, 0.5, 0.75, 1.0},
                                        unsigned threads = 0);

struct NamedMix {
    std::string label;
    CustomerMix mix;
};

// Even mix first (the baseline), then each single-type population.
std::vector<NamedMix> standard_mixes();

/// The first mix is the baseline for ratio().
ExperimentResult experiment_customer_mix(const ScenarioConfig& base, std::size_t replications,
                                         std::vector<NamedMix> mixes = standard_mixes(), unsigned threads = 0);

/// Paths (JSON pointer syntax) where two configs differ.
std::vector<std::string> config_diff(const ScenarioConfig& a, const ScenarioConfig& b);

// Config fields each experiment is allowed to change, as JSON pointer
// prefixes; "/name" is always allowed.
std::vector<std::string> factor_paths(std::string_view factor);

/// Every difference between a level and `base` outside the factor's paths.
std::vector<std::string> audit_factor_isolation(const ExperimentResult& result, const ScenarioConfig& base);

// --- sensitivity ----------------------------------------------------------------

struct SensitivityParameter {
    std::string name;
    std::string description;
    double (*get)(const ScenarioConfig&);
    void (*set)(ScenarioConfig&, double);
    double lo;
    double hi;
};

const std::vector<SensitivityParameter>& sensitivity_parameters();
std::vector<std::string> default_sensitivity_parameters();

struct SensitivityRow {
    std::string parameter;
    double base_value = 0.0;
    double low_value = 0.0;
    double high_value = 0.0;
    double kpi_low = 0.0;
    double kpi_base = 0.0;
    double kpi_high = 0.0;
    // (dKPI / KPI) / (dparam / param) from the central difference; 0 when the
    // parameter could not move.
    double elasticity = 0.0;
    std::size_t rank = 0; // 1 = largest |elasticity|
};

/// One-at-a-time +/- delta relative perturbation. Throws ConfigError naming
/// every unknown parameter.
std::vector<SensitivityRow> sensitivity_sweep(const ScenarioConfig& base, const std::vector<std::string>& parameters,
                                              double delta, std::size_t replications,
                                              std::string_view kpi_name = "transactions", unsigned threads = 0);

} // namespace retailsim
