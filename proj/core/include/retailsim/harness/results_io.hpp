#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "retailsim/harness/experiments.hpp"

namespace retailsim {

// Shortest round-tripping decimal for a double; integers print without a
// fractional part.
std::string format_number(double v);

// Header of the per-replication file: experiment, level, level_value,
// replication, seed, then one column per KPI.
std::vector<std::string> replication_csv_header();
// Header of the aggregate file: experiment, level, level_value, n, then
// <kpi>_mean, <kpi>_sd, <kpi>_ci95 per KPI, then ratio_mean and ratio_ci95.
std::vector<std::string> aggregate_csv_header();

void write_replication_csv(const ExperimentResult& result, std::ostream& out);
void write_aggregate_csv(const ExperimentResult& result, std::ostream& out);
nlohmann::json manifest(const ExperimentResult& result);

struct ResultFiles {
    std::filesystem::path replications;
    std::filesystem::path aggregate;
    std::filesystem::path manifest;
};

/// Writes replications.csv, aggregate.csv and manifest.json into `dir`,
/// creating it if needed. Throws std::runtime_error naming the path on I/O
/// failure.
ResultFiles write_results(const ExperimentResult& result, const std::filesystem::path& dir);

/// Re-runs the experiment a manifest describes.
ExperimentResult rerun_manifest(const nlohmann::json& manifest, unsigned threads = 0);
ExperimentResult rerun_manifest(const std::filesystem::path& path, unsigned threads = 0);

void write_sensitivity_csv(const std::vector<SensitivityRow>& rows, std::ostream& out);

/// Whitespace-separated columns "level_value mean lower upper" for one KPI
/// read back from an aggregate CSV, ready for gnuplot's `with yerrorlines`.
void write_plot_data(const std::filesystem::path& aggregate_csv, std::string_view kpi, std::ostream& out);

// Splits one CSV line; fields never contain commas or quotes here.
std::vector<std::string> split_csv_line(std::string_view line);

} // namespace retailsim
