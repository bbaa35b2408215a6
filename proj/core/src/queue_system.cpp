#include "retailsim/service/queue_system.hpp"

#include <algorithm>
#include <string>

#include "retailsim/error.hpp"

namespace retailsim {

QueueEntry ServiceQueue::pop_front()
{
    QueueEntry e = entries_.front();
    entries_.pop_front();
    return e;
}

std::optional<QueueEntry> ServiceQueue::remove(std::uint32_t customer)
{
    auto it = std::find_if(entries_.begin(), entries_.end(),
                           [customer](const QueueEntry& e) { return e.customer == customer; });
    if (it == entries_.end()) {
        return std::nullopt;
    }
    QueueEntry e = *it;
    entries_.erase(it);
    return e;
}

QueueSystem::QueueSystem()
    : queues_{ServiceQueue(ServiceKind::HelpLevel1), ServiceQueue(ServiceKind::HelpLevel2),
              ServiceQueue(ServiceKind::Till), ServiceQueue(ServiceKind::Refund),
              ServiceQueue(ServiceKind::ManagerAuth)}
{
}

std::uint64_t QueueSystem::enqueue(std::uint32_t customer, ServiceKind kind, SimTime now, SimTime patience_deadline)
{
    if (contains(customer)) {
        throw ModelError("customer " + std::to_string(customer) + " enqueued twice");
    }
    if (patience_deadline < now) {
        throw ModelError("patience deadline before join time");
    }
    const std::uint64_t ticket = next_ticket_++;
    queues_[static_cast<std::size_t>(kind)].push(QueueEntry{customer, kind, now, patience_deadline, ticket});
    ++tallies_[static_cast<std::size_t>(kind)].enqueued;
    where_.emplace(customer, ticket);
    return ticket;
}

std::optional<QueueEntry> QueueSystem::renege(std::uint32_t customer, std::uint64_t ticket)
{
    auto it = where_.find(customer);
    if (it == where_.end() || it->second != ticket) {
        return std::nullopt;
    }
    for (auto& q : queues_) {
        if (auto e = q.remove(customer)) {
            where_.erase(it);
            ++tallies_[static_cast<std::size_t>(q.kind())].reneged;
            return e;
        }
    }
    throw ModelError("queue index out of sync for customer " + std::to_string(customer));
}

std::optional<QueueEntry> QueueSystem::allocate_next(StaffRole role)
{
    ServiceQueue* best = nullptr;
    for (auto& q : queues_) {
        if (q.empty() || !compatible(role, q.kind())) {
            continue;
        }
        if (best == nullptr || q.front().join_time < best->front().join_time ||
            (q.front().join_time == best->front().join_time && q.front().ticket < best->front().ticket)) {
            best = &q;
        }
    }
    if (best == nullptr) {
        return std::nullopt;
    }
    QueueEntry e = best->pop_front();
    where_.erase(e.customer);
    ++tallies_[static_cast<std::size_t>(e.kind)].served;
    return e;
}

std::vector<QueueEntry> QueueSystem::flush(ServiceKind kind)
{
    auto& q = queues_[static_cast<std::size_t>(kind)];
    std::vector<QueueEntry> out(q.entries().begin(), q.entries().end());
    while (!q.empty()) {
        where_.erase(q.pop_front().customer);
    }
    tallies_[static_cast<std::size_t>(kind)].flushed += out.size();
    return out;
}

bool QueueSystem::has_compatible_waiter(StaffRole role) const
{
    return std::any_of(queues_.begin(), queues_.end(),
                       [role](const ServiceQueue& q) { return !q.empty() && compatible(role, q.kind()); });
}

} // namespace retailsim
