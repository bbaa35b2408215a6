#include "retailsim/population/pool.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "retailsim/error.hpp"

namespace retailsim {

std::array<std::size_t, kCustomerTypeCount> realise_mix(std::size_t size, const CustomerMix& mix)
{
    std::array<std::size_t, kCustomerTypeCount> counts{};
    std::array<double, kCustomerTypeCount> remainder{};
    std::size_t assigned = 0;
    for (std::size_t i = 0; i < kCustomerTypeCount; ++i) {
        const double exact = static_cast<double>(size) * mix[i];
        counts[i] = static_cast<std::size_t>(std::floor(exact));
        remainder[i] = exact - static_cast<double>(counts[i]);
        assigned += counts[i];
    }
    std::array<std::size_t, kCustomerTypeCount> order{};
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return remainder[a] > remainder[b]; });
    for (std::size_t k = 0; assigned < size && k < kCustomerTypeCount; ++k) {
        if (mix[order[k]] > 0.0) {
            ++counts[order[k]];
            ++assigned;
        }
    }
    return counts;
}

CustomerPool::CustomerPool(std::size_t size, const CustomerMix& mix)
{
    if (size == 0) {
        throw ConfigError("pool.size: must be positive");
    }
    const auto counts = realise_mix(size, mix);
    members_.reserve(size);
    for (std::size_t t = 0; t < kCustomerTypeCount; ++t) {
        for (std::size_t k = 0; k < counts[t]; ++k) {
            Customer c;
            c.id = static_cast<CustomerId>(members_.size());
            c.type = static_cast<CustomerType>(t);
            members_.push_back(c);
        }
    }
    eligible_.resize(members_.size());
    std::iota(eligible_.begin(), eligible_.end(), CustomerId{0});
}

void CustomerPool::wake_rested(SimTime now)
{
    while (!resting_.empty() && resting_.top().first <= now) {
        eligible_.push_back(resting_.top().second);
        resting_.pop();
    }
}

std::size_t CustomerPool::eligible_count(SimTime now)
{
    wake_rested(now);
    return eligible_.size();
}

std::optional<CustomerId> CustomerPool::release(SimTime now, RngStream& stream)
{
    wake_rested(now);
    if (eligible_.empty()) {
        return std::nullopt;
    }
    const auto pick = static_cast<std::size_t>(stream.uniform_index(eligible_.size()));
    const CustomerId id = eligible_[pick];
    eligible_[pick] = eligible_.back();
    eligible_.pop_back();

    Customer& c = members_[id];
    if (c.state != CustomerState::InPool) {
        throw ModelError("released customer " + std::to_string(id) + " was not in the pool");
    }
    c.state = CustomerState::Entering;
    ++c.step;
    ++in_store_;
    return id;
}

void CustomerPool::return_to_pool(CustomerId id, SimTime now, double resting_minutes)
{
    Customer& c = members_.at(id);
    if (c.state != CustomerState::Exiting) {
        throw ModelError("customer " + std::to_string(id) + " returned to the pool while " +
                         std::string(to_string(c.state)));
    }
    c.state = CustomerState::InPool;
    ++c.step;
    c.resting_until = now + resting_minutes;
    resting_.emplace(c.resting_until, id);
    --in_store_;
}

} // namespace retailsim
