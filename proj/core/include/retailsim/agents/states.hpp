#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

namespace retailsim {

enum class CustomerState : std::uint8_t {
    InPool,
    Entering,
    Browsing,
    SeekingHelp,
    QueuedForHelp,
    BeingHelped,
    DecidingPurchase,
    QueuedAtTill,
    Paying,
    QueuedForRefund,
    RefundInService,
    AwaitingManagerAuth,
    Exiting,
};

inline constexpr std::size_t kCustomerStateCount = 13;

enum class CustomerGoal : std::uint8_t { Purchase, Refund };

enum class CustomerTrigger : std::uint8_t {
    Release,      // drawn from the pool into the department
    Browse,       // purchase goal chosen, or refund turned into a new purchase goal
    WantHelp,     // finished browsing and asks for advice
    SkipHelp,     // finished browsing, goes straight to the buying decision
    ServiceStart, // a compatible staff member took the customer on
    JoinQueue,    // nobody compatible was free
    ServiceDone,  // the staff member released the customer
    Leave,        // decided not to buy
    NeedManager,  // refund needs a manager's authorisation
    Renege,       // patience ran out in a queue
    Closing,      // the department is closing
    ReturnToPool, // left the department
};

inline constexpr std::size_t kCustomerTriggerCount = 12;

std::string_view to_string(CustomerState s) noexcept;
std::string_view to_string(CustomerTrigger t) noexcept;
std::string_view to_string(CustomerGoal g) noexcept;

/// The customer statechart. Returns the successor state, or nothing when the
/// trigger is not defined in `from`. Closing maps the committed states (till
/// and refund queues, service in progress) onto themselves.
std::optional<CustomerState> next_state(CustomerState from, CustomerTrigger trigger) noexcept;

/// Triggers the simulation can raise while a customer sits in `state`.
std::span<const CustomerTrigger> possible_triggers(CustomerState state) noexcept;

// States left immediately, unserved, when the department closes.
bool exits_at_closing(CustomerState state) noexcept;

// True for states counted as being inside the department.
bool in_department(CustomerState state) noexcept;

} // namespace retailsim
