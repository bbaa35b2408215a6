#pragma once

namespace retailsim {

// Simulated minutes since Monday 00:00 of the first week.
using SimTime = double;

inline constexpr SimTime kMinutesPerHour = 60.0;
inline constexpr SimTime kMinutesPerDay = 24.0 * kMinutesPerHour;
inline constexpr SimTime kMinutesPerWeek = 7.0 * kMinutesPerDay;

} // namespace retailsim
