#pragma once

#include <cmath>

#include "retailsim/harness/presets.hpp"
#include "retailsim/harness/scenario.hpp"

namespace fixtures {

// Two busy weeks with thin staffing, so queues, reneges and closing-time
// flushes all occur.
inline retailsim::ScenarioConfig small_scenario(int weeks = 2)
{
    retailsim::ScenarioConfig c;
    c.name = "small";
    c.calendar = retailsim::Calendar::standard(weeks);
    c.pool_size = 400;
    c.footfall = retailsim::footfall_profile(c.calendar, 40.0);
    c.staffing = {1, 1, 1, 1};
    c.probabilities.ask_refund = 0.25;
    c.durations.resting = {60.0, 600.0, 2880.0};
    return c;
}

// Instant services, endless patience and no refunds: every entry reaches the
// purchase decision and nobody queues.
inline retailsim::ScenarioConfig no_congestion(retailsim::CustomerType type, int weeks = 10, double peak = 800.0)
{
    retailsim::ScenarioConfig c;
    c.name = "no-congestion";
    c.calendar = retailsim::Calendar::standard(weeks);
    c.pool_size = 20000;
    c.mix = retailsim::single_type_mix(type);
    c.footfall = retailsim::footfall_profile(c.calendar, peak);
    c.probabilities.ask_refund = 0.0;
    const retailsim::TriangularSpec zero{0, 0, 0};
    auto& d = c.durations;
    d.browse = d.decide = d.help_level1 = d.help_level2 = d.till = d.refund = d.manager_auth = zero;
    d.patience = {1e7, 1e7, 1e7};
    d.resting = {30, 60, 120};
    return c;
}

// Open minutes of [a, b) computed day by day, independent of Calendar.
inline double open_overlap(const retailsim::Calendar& cal, double a, double b)
{
    double total = 0.0;
    for (int day = static_cast<int>(std::floor(a / 1440.0)); day * 1440.0 < b; ++day) {
        const auto& h = cal.days()[static_cast<std::size_t>(day % 7)];
        if (!h.open) {
            continue;
        }
        const double lo = std::max(a, day * 1440.0 + h.opening_minute);
        const double hi = std::min(b, day * 1440.0 + h.closing_minute);
        total += std::max(0.0, hi - lo);
    }
    return total;
}

} // namespace fixtures
