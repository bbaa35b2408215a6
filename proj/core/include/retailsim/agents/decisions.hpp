#pragma once

#include "retailsim/agents/staff.hpp"
#include "retailsim/agents/states.hpp"
#include "retailsim/engine/rng.hpp"
#include "retailsim/population/customer.hpp"
#include "retailsim/population/likelihood.hpp"

namespace retailsim {

// Each function consumes a fixed number of draws whatever the outcome, so
// changing a probability never shifts later draws on the same stream.

/// Refund with probability adjust(base_refund, ask_refund) if the customer
/// has something to return, otherwise Purchase.
CustomerGoal choose_goal(const Customer& customer, double base_refund, const LikelihoodAdjustment& adjust,
                         RngStream& decisions);

// Whether a browsing customer asks for advice; nothing when they do not,
// otherwise the help level they need.
std::optional<ServiceKind> choose_help(const Customer& customer, double base_ask_help, double level2_share,
                                       const LikelihoodAdjustment& adjust, RngStream& decisions);

enum class PurchaseDecision { Buy, Leave };

PurchaseDecision decide_purchase(const Customer& customer, double conversion_rate,
                                 const LikelihoodAdjustment& adjust, RngStream& decisions);

// Queue patience, with the mode shifted by the customer's willingness to wait.
double sample_patience(const Customer& customer, const TriangularSpec& patience, const LikelihoodAdjustment& adjust,
                       RngStream& delays);

bool regoal_after_refund(double p_regoal, RngStream& decisions);

} // namespace retailsim
