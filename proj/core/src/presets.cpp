#include "retailsim/harness/presets.hpp"

#include <algorithm>
#include <cmath>

#include "retailsim/error.hpp"

namespace retailsim {

namespace {

// Relative intensity by hour of an open day, peak 1.0.
constexpr double kWeekdayShape[kHoursPerDay] = {
    0, 0, 0, 0, 0, 0, 0, 0, 0,                  // 00-08
    0.45, 0.55, 0.70, 0.85, 0.80, 0.65, 0.60,   // 09-15
    0.65, 0.75, 0.80, 0.60, 0, 0, 0, 0,         // 16-23
};

constexpr double kDayWeight[kDaysPerWeek] = {0.70, 0.65, 0.70, 0.75, 0.85, 1.00, 0.80};

ScenarioConfig atv_like()
{
    ScenarioConfig c;
    c.name = "atv-like";
    c.pool_size = 12000;
    c.footfall = footfall_profile(c.calendar, 60.0);
    c.probabilities.conversion_rate = 0.45;
    c.probabilities.ask_help = 0.7;
    c.probabilities.level2_help = 0.4;
    c.durations.browse = {3.0, 8.0, 15.0};
    c.durations.help_level1 = {2.0, 5.0, 10.0};
    c.durations.help_level2 = {3.0, 7.0, 13.0};
    c.durations.till = {1.0, 2.0, 4.0};
    c.durations.refund = {1.0, 2.0, 3.0};
    return c;
}

ScenarioConfig ww_like()
{
    ScenarioConfig c;
    c.name = "ww-like";
    c.pool_size = 15000;
    c.footfall = footfall_profile(c.calendar, 140.0);
    c.probabilities.conversion_rate = 0.6;
    c.probabilities.ask_help = 0.35;
    c.probabilities.level2_help = 0.2;
    c.durations.browse = {1.0, 4.0, 10.0};
    c.durations.help_level1 = {1.0, 2.5, 6.0};
    c.durations.help_level2 = {1.5, 4.0, 9.0};
    c.durations.till = {0.5, 1.2, 3.0};
    c.durations.refund = {1.0, 1.5, 3.0};
    return c;
}

ScenarioConfig default_preset()
{
    ScenarioConfig c;
    c.name = "default";
    c.pool_size = 10000;
    c.footfall = footfall_profile(c.calendar, 90.0);
    return c;
}

} // namespace

const std::vector<std::string_view>& preset_names()
{
    static const std::vector<std::string_view> names{"default", "atv-like", "ww-like"};
    return names;
}

ScenarioConfig preset(std::string_view name)
{
    if (name == "default") {
        return default_preset();
    }
    if (name == "atv-like") {
        return atv_like();
    }
    if (name == "ww-like") {
        return ww_like();
    }
    throw ConfigError("unknown preset '" + std::string(name) + "'");
}

FootfallTable footfall_profile(const Calendar& calendar, double peak)
{
    FootfallTable t;
    for (int d = 0; d < kDaysPerWeek; ++d) {
        const DayHours& h = calendar.day(d);
        if (!h.open) {
            continue;
        }
        for (int hour = 0; hour < kHoursPerDay; ++hour) {
            if (h.opening_minute >= (hour + 1) * 60 || h.closing_minute <= hour * 60) {
                continue;
            }
            const double shape = d == 6 ? 0.75 : std::max(kWeekdayShape[hour], 0.45);
            // Round to a tenth so the scenario files stay readable.
            const double r = peak * kDayWeight[d] * shape;
            t.rate[static_cast<std::size_t>(d)][static_cast<std::size_t>(hour)] = std::round(r * 10.0) / 10.0;
        }
    }
    return t;
}

} // namespace retailsim
