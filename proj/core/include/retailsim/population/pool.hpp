#pragma once

#include <cstddef>
#include <optional>
#include <queue>
#include <span>
#include <utility>
#include <vector>

#include "retailsim/engine/rng.hpp"
#include "retailsim/population/customer.hpp"

namespace retailsim {

/// Per-type member counts for a pool of the given size. Uses the largest
/// remainder method, so each count is within one of size * share.
std::array<std::size_t, kCustomerTypeCount> realise_mix(std::size_t size, const CustomerMix& mix);

/// Fixed population of customers. Members are either eligible (in the pool
/// and rested), resting, or in the store.
class CustomerPool {
public:
    CustomerPool(std::size_t size, const CustomerMix& mix);

    std::size_t size() const noexcept { return members_.size(); }
    std::size_t in_store() const noexcept { return in_store_; }

    Customer& operator[](CustomerId id) { return members_.at(id); }
    const Customer& operator[](CustomerId id) const { return members_.at(id); }
    std::span<const Customer> members() const noexcept { return members_; }
    std::span<Customer> members() noexcept { return members_; }

    // Members that could be released at `now`.
    std::size_t eligible_count(SimTime now);

    /// Picks a uniformly random eligible member and moves it to Entering.
    /// Returns nothing when every member is resting or in the store.
    std::optional<CustomerId> release(SimTime now, RngStream& stream);

    /// Takes back an exiting customer; it becomes eligible again once
    /// `resting_minutes` have passed. The satisfaction index is kept.
    void return_to_pool(CustomerId id, SimTime now, double resting_minutes);

private:
    void wake_rested(SimTime now);

    using Resting = std::pair<SimTime, CustomerId>;

    std::vector<Customer> members_;
    std::vector<CustomerId> eligible_;
    std::priority_queue<Resting, std::vector<Resting>, std::greater<>> resting_;
    std::size_t in_store_ = 0;
};

} // namespace retailsim
