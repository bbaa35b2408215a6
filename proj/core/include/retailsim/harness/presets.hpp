#pragma once

#include <string_view>
#include <vector>

#include "retailsim/harness/scenario.hpp"

namespace retailsim {

// Built-in synthetic scenarios. All figures are invented: "atv-like" is a
// help-heavy department with long services and modest footfall, "ww-like" a
// busy department with quick services where most visits end at the till.
const std::vector<std::string_view>& preset_names();

/// Throws ConfigError for an unknown name.
ScenarioConfig preset(std::string_view name);

// Weekday hours 09-20 follow a lunchtime and early-evening hump, Saturday is
// busier, Sunday 11-17 is flat. `peak` is the Saturday peak hourly rate.
FootfallTable footfall_profile(const Calendar& calendar, double peak);

} // namespace retailsim
