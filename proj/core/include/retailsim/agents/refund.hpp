#pragma once

#include "retailsim/engine/rng.hpp"

namespace retailsim {

struct RefundRequest {
    double amount = 0.0; // pounds
    bool requires_manager = false;
};

enum class RefundRoute { CashierHandles, ManagerRequired };

/// Amounts above the threshold always go to a manager. At or below it the
/// cashier decides alone with probability `empowerment`. One uniform is drawn
/// on every call so the decision stream stays aligned across empowerment
/// levels.
RefundRoute refund_route(const RefundRequest& request, double empowerment, double threshold, RngStream& stream);

} // namespace retailsim
