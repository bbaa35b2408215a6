#include "retailsim/agents/refund.hpp"

namespace retailsim {

RefundRoute refund_route(const RefundRequest& request, double empowerment, double threshold, RngStream& stream)
{
    const double u = stream.uniform01();
    if (request.amount > threshold) {
        return RefundRoute::ManagerRequired;
    }
    return u < empowerment ? RefundRoute::CashierHandles : RefundRoute::ManagerRequired;
}

} // namespace retailsim
