#pragma once

#include <array>
#include <optional>

#include "retailsim/engine/calendar.hpp"
#include "retailsim/engine/rng.hpp"

namespace retailsim {

inline constexpr int kHoursPerDay = 24;

// Expected arrivals per hour, by weekday (Monday first) and hour of day.
struct FootfallTable {
    std::array<std::array<double, kHoursPerDay>, kDaysPerWeek> rate{};

    double at(int weekday, int hour) const
    {
        return rate.at(static_cast<std::size_t>(weekday)).at(static_cast<std::size_t>(hour));
    }
    FootfallTable scaled(double factor) const;

    bool operator==(const FootfallTable&) const = default;
};

/// Gap to the next arrival during the given hour: exponential with mean
/// 60 / rate minutes, or nothing when the hour has no footfall.
std::optional<double> next_arrival_gap(int weekday, int hour, const FootfallTable& table, RngStream& stream);

/// Next arrival strictly inside [from, window_end) for the hour window that
/// contains it, or nothing if the exponential gap overshoots the window.
/// Restarting the clock at every hour boundary is exact for a piecewise
/// constant Poisson rate because the exponential is memoryless.
std::optional<SimTime> next_arrival_in_window(SimTime from, SimTime window_end, int weekday, int hour,
                                              const FootfallTable& table, RngStream& stream);

} // namespace retailsim
