#pragma once

#include <cstdint>

#include "retailsim/agents/states.hpp"
#include "retailsim/engine/sim_time.hpp"
#include "retailsim/population/customer_type.hpp"

namespace retailsim {

using CustomerId = std::uint32_t;

// A member of the finite population. Persists across visits.
struct Customer {
    CustomerId id = 0;
    CustomerType type = CustomerType::ShoppingEnthusiast;
    CustomerState state = CustomerState::InPool;
    CustomerGoal goal = CustomerGoal::Purchase;

    std::int64_t satisfaction = 0;
    std::uint32_t purchases = 0; // outstanding purchases that could still be refunded
    std::uint32_t visits = 0;
    bool ever_sought_refund = false;

    SimTime resting_until = 0.0;
    double refund_amount = 0.0;

    // Bumped on every state change; scheduled customer events carry the
    // value they were created under and are dropped when it no longer matches.
    std::uint64_t step = 0;
};

} // namespace retailsim
