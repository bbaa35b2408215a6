#pragma once

#include <array>
#include <string_view>

#include "retailsim/engine/sim_time.hpp"

namespace retailsim {

inline constexpr int kDaysPerWeek = 7;
inline constexpr std::array<std::string_view, kDaysPerWeek> kDayNames{
    "monday", "tuesday", "wednesday", "thursday", "friday", "saturday", "sunday"};

struct DayHours {
    bool open = false;
    int opening_minute = 0; // minute of day, inclusive
    int closing_minute = 0; // minute of day, exclusive

    bool operator==(const DayHours&) const = default;
};

/// Weekly opening hours repeated over the run lifespan. Day 0 is Monday and
/// t = 0 is Monday 00:00.
class Calendar {
public:
    Calendar() = default;
    Calendar(std::array<DayHours, kDaysPerWeek> days, int lifespan_weeks);

    // Mon-Sat 09:00-20:00, Sun 11:00-17:00.
    static Calendar standard(int lifespan_weeks = 10);

    const std::array<DayHours, kDaysPerWeek>& days() const noexcept { return days_; }
    const DayHours& day(int weekday) const { return days_.at(static_cast<std::size_t>(weekday)); }
    int lifespan_weeks() const noexcept { return lifespan_weeks_; }
    SimTime lifespan_minutes() const noexcept { return lifespan_weeks_ * kMinutesPerWeek; }
    int lifespan_days() const noexcept { return lifespan_weeks_ * kDaysPerWeek; }

    /// True iff t falls inside that weekday's [opening, closing) interval.
    /// Throws std::out_of_range for t outside [0, lifespan].
    bool is_open(SimTime t) const;

    static int weekday(SimTime t);
    static int day_index(SimTime t);
    static double minute_of_day(SimTime t);

    // Open minutes that fall in [from, to); both ends are clamped to the lifespan.
    double open_minutes_between(SimTime from, SimTime to) const;
    double total_open_minutes() const { return open_minutes_between(0.0, lifespan_minutes()); }

    bool operator==(const Calendar&) const = default;

private:
    std::array<DayHours, kDaysPerWeek> days_{};
    int lifespan_weeks_ = 1;
};

} // namespace retailsim
