#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "retailsim/agents/staff.hpp"
#include "retailsim/engine/calendar.hpp"
#include "retailsim/metrics/satisfaction.hpp"
#include "retailsim/population/customer_type.hpp"
#include "retailsim/population/footfall.hpp"
#include "retailsim/population/likelihood.hpp"
#include "retailsim/population/triangular.hpp"

namespace retailsim {

struct Probabilities {
    double conversion_rate = 0.5;
    double ask_help = 0.5;
    double ask_refund = 0.1;
    double regoal = 0.3;       // refund turns into a new purchase
    double level2_help = 0.3;  // share of help requests needing a level-2 seller

    bool operator==(const Probabilities&) const = default;
};

// All in minutes.
struct Durations {
    TriangularSpec browse{2.0, 6.0, 15.0};
    TriangularSpec decide{0.5, 1.0, 3.0};
    TriangularSpec help_level1{1.0, 3.0, 8.0};
    TriangularSpec help_level2{2.0, 5.0, 12.0};
    TriangularSpec till{0.5, 1.5, 3.0};
    TriangularSpec refund{1.0, 2.0, 3.0};
    TriangularSpec manager_auth{0.5, 1.0, 1.5};
    TriangularSpec patience{1.0, 3.0, 5.0};
    TriangularSpec resting{720.0, 2880.0, 10080.0};

    bool operator==(const Durations&) const = default;
};

/// Everything one replication needs.
struct ScenarioConfig {
    std::string name = "default";
    std::uint64_t seed = 20070701;
    Calendar calendar = Calendar::standard(10);
    double closing_drain_limit = 15.0; // minutes after closing by which the department must be empty

    std::size_t pool_size = 2000;
    CustomerMix mix = even_mix();
    FootfallTable footfall;

    Probabilities probabilities;
    LikelihoodAdjustment adjustment;
    Durations durations;

    StaffCounts staffing{4, 3, 3, 1};
    double empowerment = 0.5;
    double refund_threshold = 50.0;       // pounds
    TriangularSpec refund_amount{5.0, 30.0, 120.0};

    SatisfactionWeights weights;

    // Staff-mix experiment: share of the non-cashier staff trained to level 2
    // (rounded down).
    double seller_level2_share = 0.5;

    bool operator==(const ScenarioConfig&) const = default;
};

/// Every rule the config breaks, each prefixed by its field path. Empty when
/// the config is usable.
std::vector<std::string> validate(const ScenarioConfig& config);

// Longest a customer can stay after closing under the configured bounds
// (queue patience and service maxima), ignoring time already spent.
double worst_case_drain_minutes(const ScenarioConfig& config);

nlohmann::json to_json(const ScenarioConfig& config);
// Same document as to_json, written as TOML.
std::string to_toml(const ScenarioConfig& config);

/// Builds a config from a parsed document. Collects all missing or malformed
/// fields and validation failures into one ConfigError.
ScenarioConfig scenario_from_json(const nlohmann::json& doc);

enum class ScenarioFormat { Json, Toml };

ScenarioConfig parse_scenario(std::string_view text, ScenarioFormat format);

/// Loads a scenario file; `.toml` files are read as TOML, everything else as
/// JSON.
ScenarioConfig load_scenario(const std::filesystem::path& path);

std::string format_clock(int minute_of_day);

} // namespace retailsim
