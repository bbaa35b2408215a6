#pragma once

#include <cstdint>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "retailsim/engine/sim_time.hpp"
#include "retailsim/error.hpp"

namespace retailsim {

inline constexpr std::uint32_t kSystemTarget = std::numeric_limits<std::uint32_t>::max();

template <typename Kind>
struct Event {
    SimTime fire_time = 0.0;
    std::uint64_t sequence_no = 0;
    Kind kind{};
    std::uint32_t target = kSystemTarget;
    // Free-form payload the model uses to recognise stale events.
    std::uint64_t token = 0;
};

/// Pending-event set and simulation clock.
///
/// Events fire in (fire_time, sequence_no) order; sequence numbers are handed
/// out at scheduling time, so simultaneous events run first-in first-out.
template <typename Kind>
class Scheduler {
public:
    using EventType = Event<Kind>;

    SimTime now() const noexcept { return now_; }
    bool empty() const noexcept { return pending_.empty(); }
    std::size_t pending() const noexcept { return pending_.size(); }
    std::uint64_t dispatched() const noexcept { return dispatched_; }

    std::uint64_t schedule(SimTime at, Kind kind, std::uint32_t target = kSystemTarget, std::uint64_t token = 0)
    {
        if (!(at >= now_)) {
            throw ModelError("event scheduled in the past: t=" + std::to_string(at) + " now=" + std::to_string(now_));
        }
        const std::uint64_t seq = next_sequence_++;
        pending_.push(EventType{at, seq, kind, target, token});
        return seq;
    }

    const EventType& peek() const { return pending_.top(); }

    // Removes and returns the next event without touching the clock.
    EventType pop()
    {
        EventType ev = pending_.top();
        pending_.pop();
        return ev;
    }

    /// Executes every event with fire_time <= end, then parks the clock at end.
    template <typename Dispatch>
    void run_until(SimTime end, Dispatch&& dispatch)
    {
        if (end < now_) {
            throw ModelError("run_until target lies in the past");
        }
        while (!pending_.empty() && pending_.top().fire_time <= end) {
            EventType ev = pop();
            now_ = ev.fire_time;
            ++dispatched_;
            dispatch(ev);
        }
        now_ = end;
    }

private:
    struct Later {
        bool operator()(const EventType& a, const EventType& b) const noexcept
        {
            if (a.fire_time != b.fire_time) {
                return a.fire_time > b.fire_time;
            }
            return a.sequence_no > b.sequence_no;
        }
    };

    std::priority_queue<EventType, std::vector<EventType>, Later> pending_;
    SimTime now_ = 0.0;
    std::uint64_t next_sequence_ = 0;
    std::uint64_t dispatched_ = 0;
};

} // namespace retailsim
