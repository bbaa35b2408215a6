#include "retailsim/engine/calendar.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "retailsim/error.hpp"

namespace retailsim {

Calendar::Calendar(std::array<DayHours, kDaysPerWeek> days, int lifespan_weeks)
    : days_(days), lifespan_weeks_(lifespan_weeks)
{
    std::vector<std::string> problems;
    if (lifespan_weeks < 1) {
        problems.push_back("calendar.lifespan_weeks: must be >= 1");
    }
    for (int d = 0; d < kDaysPerWeek; ++d) {
        const DayHours& h = days_[static_cast<std::size_t>(d)];
        if (!h.open) {
            continue;
        }
        const std::string path = "calendar." + std::string(kDayNames[static_cast<std::size_t>(d)]);
        if (h.opening_minute < 0 || h.closing_minute > static_cast<int>(kMinutesPerDay)) {
            problems.push_back(path + ": hours must lie within 00:00-24:00");
        }
        if (h.opening_minute >= h.closing_minute) {
            problems.push_back(path + ": opening must be before closing");
        }
    }
    if (!problems.empty()) {
        throw ConfigError(std::move(problems));
    }
}

Calendar Calendar::standard(int lifespan_weeks)
{
    std::array<DayHours, kDaysPerWeek> days{};
    for (int d = 0; d < 6; ++d) {
        days[static_cast<std::size_t>(d)] = DayHours{true, 9 * 60, 20 * 60};
    }
    days[6] = DayHours{true, 11 * 60, 17 * 60};
    return Calendar(days, lifespan_weeks);
}

int Calendar::day_index(SimTime t)
{
    return static_cast<int>(std::floor(t / kMinutesPerDay));
}

int Calendar::weekday(SimTime t)
{
    return day_index(t) % kDaysPerWeek;
}

double Calendar::minute_of_day(SimTime t)
{
    return t - day_index(t) * kMinutesPerDay;
}

bool Calendar::is_open(SimTime t) const
{
    if (t < 0.0 || t > lifespan_minutes()) {
        throw std::out_of_range("time " + std::to_string(t) + " outside the simulated lifespan");
    }
    const DayHours& h = days_[static_cast<std::size_t>(weekday(t))];
    const double m = minute_of_day(t);
    return h.open && m >= h.opening_minute && m < h.closing_minute;
}

double Calendar::open_minutes_between(SimTime from, SimTime to) const
{
    from = std::max(from, 0.0);
    to = std::min(to, lifespan_minutes());
    if (to <= from) {
        return 0.0;
    }
    double total = 0.0;
    for (int day = day_index(from); day * kMinutesPerDay < to; ++day) {
        const DayHours& h = days_[static_cast<std::size_t>(day % kDaysPerWeek)];
        if (!h.open) {
            continue;
        }
        const double open = day * kMinutesPerDay + h.opening_minute;
        const double close = day * kMinutesPerDay + h.closing_minute;
        const double lo = std::max(open, from);
        const double hi = std::min(close, to);
        if (hi > lo) {
            total += hi - lo;
        }
    }
    return total;
}

} // namespace retailsim
