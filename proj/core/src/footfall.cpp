#include "retailsim/population/footfall.hpp"

namespace retailsim {

FootfallTable FootfallTable::scaled(double factor) const
{
    FootfallTable out = *this;
    for (auto& day : out.rate) {
        for (double& r : day) {
            r *= factor;
        }
    }
    return out;
}

std::optional<double> next_arrival_gap(int weekday, int hour, const FootfallTable& table, RngStream& stream)
{
    const double per_hour = table.at(weekday, hour);
    if (per_hour <= 0.0) {
        return std::nullopt;
    }
    return stream.exponential(kMinutesPerHour / per_hour);
}

std::optional<SimTime> next_arrival_in_window(SimTime from, SimTime window_end, int weekday, int hour,
                                              const FootfallTable& table, RngStream& stream)
{
    const auto gap = next_arrival_gap(weekday, hour, table, stream);
    if (!gap) {
        return std::nullopt;
    }
    const SimTime t = from + *gap;
    if (t >= window_end) {
        return std::nullopt;
    }
    return t;
}

} // namespace retailsim
