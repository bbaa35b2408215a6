#pragma once

#include <array>
#include <cstdint>
#include <deque>
#include <optional>
#include <unordered_map>
#include <vector>

#include "retailsim/agents/staff.hpp"
#include "retailsim/engine/sim_time.hpp"

namespace retailsim {

struct QueueEntry {
    std::uint32_t customer = 0;
    ServiceKind kind = ServiceKind::Till;
    SimTime join_time = 0.0;
    SimTime patience_deadline = 0.0;
    // Unique per enqueue; renege events carry it so stale ones can be told apart.
    std::uint64_t ticket = 0;
};

enum class QueueDiscipline : std::uint8_t { Fifo };

class ServiceQueue {
public:
    explicit ServiceQueue(ServiceKind kind, QueueDiscipline discipline = QueueDiscipline::Fifo)
        : kind_(kind), discipline_(discipline)
    {
    }

    ServiceKind kind() const noexcept { return kind_; }
    QueueDiscipline discipline() const noexcept { return discipline_; }
    bool empty() const noexcept { return entries_.empty(); }
    std::size_t size() const noexcept { return entries_.size(); }
    const std::deque<QueueEntry>& entries() const noexcept { return entries_; }
    const QueueEntry& front() const { return entries_.front(); }

    void push(const QueueEntry& e) { entries_.push_back(e); }
    QueueEntry pop_front();
    std::optional<QueueEntry> remove(std::uint32_t customer);

private:
    ServiceKind kind_;
    QueueDiscipline discipline_;
    std::deque<QueueEntry> entries_;
};

struct QueueTally {
    std::uint64_t enqueued = 0;
    std::uint64_t served = 0; // served from the queue, not on arrival
    std::uint64_t reneged = 0;
    std::uint64_t flushed = 0; // removed when the department closed

    bool balanced(std::size_t still_waiting) const noexcept
    {
        return enqueued == served + reneged + flushed + still_waiting;
    }
};

/// One FIFO queue per service kind. A customer is in at most one queue.
class QueueSystem {
public:
    QueueSystem();

    /// Appends an entry and returns its ticket. The caller schedules the
    /// renege at the patience deadline. Throws ModelError if the customer is
    /// already queued or the deadline precedes the join time.
    std::uint64_t enqueue(std::uint32_t customer, ServiceKind kind, SimTime now, SimTime patience_deadline);

    /// Removes a customer whose patience ran out. Returns nothing for a stale
    /// renege (the customer was served, or the ticket belongs to an older
    /// queue visit).
    std::optional<QueueEntry> renege(std::uint32_t customer, std::uint64_t ticket);

    /// Pops the longest-waiting entry among the queues this role can serve,
    /// or nothing when none of them has a waiter.
    std::optional<QueueEntry> allocate_next(StaffRole role);

    // Empties one queue at closing time.
    std::vector<QueueEntry> flush(ServiceKind kind);

    bool contains(std::uint32_t customer) const { return where_.count(customer) != 0; }
    bool has_compatible_waiter(StaffRole role) const;
    std::size_t waiting() const noexcept { return where_.size(); }

    const ServiceQueue& queue(ServiceKind kind) const { return queues_[static_cast<std::size_t>(kind)]; }
    const QueueTally& tally(ServiceKind kind) const { return tallies_[static_cast<std::size_t>(kind)]; }

private:
    std::array<ServiceQueue, kServiceKindCount> queues_;
    std::array<QueueTally, kServiceKindCount> tallies_{};
    std::unordered_map<std::uint32_t, std::uint64_t> where_; // customer -> ticket
    std::uint64_t next_ticket_ = 1;
};

} // namespace retailsim
