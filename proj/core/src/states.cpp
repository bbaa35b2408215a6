#include "retailsim/agents/states.hpp"

namespace retailsim {

namespace {

using S = CustomerState;
using T = CustomerTrigger;

struct Edge {
    S from;
    T trigger;
    S to;
};

// clang-format off
constexpr Edge kEdges[] = {
    {S::InPool,              T::Release,      S::Entering},

    {S::Entering,            T::Browse,       S::Browsing},
    {S::Entering,            T::ServiceStart, S::RefundInService},
    {S::Entering,            T::JoinQueue,    S::QueuedForRefund},

    {S::Browsing,            T::WantHelp,     S::SeekingHelp},
    {S::Browsing,            T::SkipHelp,     S::DecidingPurchase},
    {S::Browsing,            T::Closing,      S::Exiting},

    {S::SeekingHelp,         T::ServiceStart, S::BeingHelped},
    {S::SeekingHelp,         T::JoinQueue,    S::QueuedForHelp},
    {S::SeekingHelp,         T::Closing,      S::Exiting},

    {S::QueuedForHelp,       T::ServiceStart, S::BeingHelped},
    {S::QueuedForHelp,       T::Renege,       S::Exiting},
    {S::QueuedForHelp,       T::Closing,      S::Exiting},

    {S::BeingHelped,         T::ServiceDone,  S::DecidingPurchase},
    {S::BeingHelped,         T::Closing,      S::BeingHelped},

    {S::DecidingPurchase,    T::ServiceStart, S::Paying},
    {S::DecidingPurchase,    T::JoinQueue,    S::QueuedAtTill},
    {S::DecidingPurchase,    T::Leave,        S::Exiting},
    {S::DecidingPurchase,    T::Closing,      S::Exiting},

    {S::QueuedAtTill,        T::ServiceStart, S::Paying},
    {S::QueuedAtTill,        T::Renege,       S::Exiting},
    {S::QueuedAtTill,        T::Closing,      S::QueuedAtTill},

    {S::Paying,              T::ServiceDone,  S::Exiting},
    {S::Paying,              T::Closing,      S::Paying},

    {S::QueuedForRefund,     T::ServiceStart, S::RefundInService},
    {S::QueuedForRefund,     T::Renege,       S::Exiting},
    {S::QueuedForRefund,     T::Closing,      S::QueuedForRefund},

    {S::RefundInService,     T::ServiceDone,  S::Exiting},
    {S::RefundInService,     T::Browse,       S::Browsing},
    {S::RefundInService,     T::NeedManager,  S::AwaitingManagerAuth},
    {S::RefundInService,     T::Closing,      S::RefundInService},

    // Waiting for and being seen by a manager share one state.
    {S::AwaitingManagerAuth, T::JoinQueue,    S::AwaitingManagerAuth},
    {S::AwaitingManagerAuth, T::ServiceStart, S::AwaitingManagerAuth},
    {S::AwaitingManagerAuth, T::ServiceDone,  S::Exiting},
    {S::AwaitingManagerAuth, T::Browse,       S::Browsing},
    {S::AwaitingManagerAuth, T::Renege,       S::Exiting},
    {S::AwaitingManagerAuth, T::Closing,      S::AwaitingManagerAuth},

    {S::Exiting,             T::ReturnToPool, S::InPool},
};

// What the department can raise in each state; must stay a subset of kEdges.
constexpr T kInPool[] = {T::Release};
constexpr T kEntering[] = {T::Browse, T::ServiceStart, T::JoinQueue};
constexpr T kBrowsing[] = {T::WantHelp, T::SkipHelp, T::Closing};
constexpr T kSeekingHelp[] = {T::ServiceStart, T::JoinQueue, T::Closing};
constexpr T kQueuedForHelp[] = {T::ServiceStart, T::Renege, T::Closing};
constexpr T kBeingHelped[] = {T::ServiceDone, T::Closing};
constexpr T kDeciding[] = {T::ServiceStart, T::JoinQueue, T::Leave, T::Closing};
constexpr T kQueuedAtTill[] = {T::ServiceStart, T::Renege, T::Closing};
constexpr T kPaying[] = {T::ServiceDone, T::Closing};
constexpr T kQueuedForRefund[] = {T::ServiceStart, T::Renege, T::Closing};
constexpr T kRefundInService[] = {T::ServiceDone, T::Browse, T::NeedManager, T::Closing};
constexpr T kAwaitingManager[] = {T::JoinQueue, T::ServiceStart, T::ServiceDone, T::Browse, T::Renege, T::Closing};
constexpr T kExiting[] = {T::ReturnToPool};
// clang-format on

} // namespace

std::optional<CustomerState> next_state(CustomerState from, CustomerTrigger trigger) noexcept
{
    for (const Edge& e : kEdges) {
        if (e.from == from && e.trigger == trigger) {
            return e.to;
        }
    }
    return std::nullopt;
}

std::span<const CustomerTrigger> possible_triggers(CustomerState state) noexcept
{
    switch (state) {
    case S::InPool:
        return kInPool;
    case S::Entering:
        return kEntering;
    case S::Browsing:
        return kBrowsing;
    case S::SeekingHelp:
        return kSeekingHelp;
    case S::QueuedForHelp:
        return kQueuedForHelp;
    case S::BeingHelped:
        return kBeingHelped;
    case S::DecidingPurchase:
        return kDeciding;
    case S::QueuedAtTill:
        return kQueuedAtTill;
    case S::Paying:
        return kPaying;
    case S::QueuedForRefund:
        return kQueuedForRefund;
    case S::RefundInService:
        return kRefundInService;
    case S::AwaitingManagerAuth:
        return kAwaitingManager;
    case S::Exiting:
        return kExiting;
    }
    return {};
}

bool exits_at_closing(CustomerState state) noexcept
{
    return state == S::Browsing || state == S::SeekingHelp || state == S::QueuedForHelp ||
           state == S::DecidingPurchase;
}

bool in_department(CustomerState state) noexcept
{
    return state != S::InPool;
}

std::string_view to_string(CustomerState s) noexcept
{
    switch (s) {
    case S::InPool:
        return "InPool";
    case S::Entering:
        return "Entering";
    case S::Browsing:
        return "Browsing";
    case S::SeekingHelp:
        return "SeekingHelp";
    case S::QueuedForHelp:
        return "QueuedForHelp";
    case S::BeingHelped:
        return "BeingHelped";
    case S::DecidingPurchase:
        return "DecidingPurchase";
    case S::QueuedAtTill:
        return "QueuedAtTill";
    case S::Paying:
        return "Paying";
    case S::QueuedForRefund:
        return "QueuedForRefund";
    case S::RefundInService:
        return "RefundInService";
    case S::AwaitingManagerAuth:
        return "AwaitingManagerAuth";
    case S::Exiting:
        return "Exiting";
    }
    return "?";
}

std::string_view to_string(CustomerTrigger t) noexcept
{
    switch (t) {
    case T::Release:
        return "Release";
    case T::Browse:
        return "Browse";
    case T::WantHelp:
        return "WantHelp";
    case T::SkipHelp:
        return "SkipHelp";
    case T::ServiceStart:
        return "ServiceStart";
    case T::JoinQueue:
        return "JoinQueue";
    case T::ServiceDone:
        return "ServiceDone";
    case T::Leave:
        return "Leave";
    case T::NeedManager:
        return "NeedManager";
    case T::Renege:
        return "Renege";
    case T::Closing:
        return "Closing";
    case T::ReturnToPool:
        return "ReturnToPool";
    }
    return "?";
}

std::string_view to_string(CustomerGoal g) noexcept
{
    return g == CustomerGoal::Purchase ? "purchase" : "refund";
}

} // namespace retailsim
