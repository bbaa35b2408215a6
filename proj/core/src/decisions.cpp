#include "retailsim/agents/decisions.hpp"

namespace retailsim {

CustomerGoal choose_goal(const Customer& customer, double base_refund, const LikelihoodAdjustment& adjust,
                         RngStream& decisions)
{
    const double u = decisions.uniform01();
    // A zero base switches refunds off; the High rule would otherwise lift it to one half.
    if (customer.purchases == 0 || base_refund == 0.0) {
        return CustomerGoal::Purchase;
    }
    const double p = adjust.probability(base_refund, profile(customer.type).ask_refund);
    return u < p ? CustomerGoal::Refund : CustomerGoal::Purchase;
}

std::optional<ServiceKind> choose_help(const Customer& customer, double base_ask_help, double level2_share,
                                       const LikelihoodAdjustment& adjust, RngStream& decisions)
{
    const double u_help = decisions.uniform01();
    const double u_level = decisions.uniform01();
    if (!(u_help < adjust.probability(base_ask_help, profile(customer.type).ask_help))) {
        return std::nullopt;
    }
    return u_level < level2_share ? ServiceKind::HelpLevel2 : ServiceKind::HelpLevel1;
}

PurchaseDecision decide_purchase(const Customer& customer, double conversion_rate,
                                 const LikelihoodAdjustment& adjust, RngStream& decisions)
{
    const double p = adjust.probability(conversion_rate, profile(customer.type).buy);
    return decisions.uniform01() < p ? PurchaseDecision::Buy : PurchaseDecision::Leave;
}

double sample_patience(const Customer& customer, const TriangularSpec& patience, const LikelihoodAdjustment& adjust,
                       RngStream& delays)
{
    return sample_triangular(adjust.delay(patience, profile(customer.type).wait), delays);
}

bool regoal_after_refund(double p_regoal, RngStream& decisions)
{
    return decisions.uniform01() < p_regoal;
}

} // namespace retailsim
