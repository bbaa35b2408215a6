#include "retailsim/metrics/satisfaction.hpp"

namespace retailsim {

std::string_view to_string(SatisfactionEvent e) noexcept
{
    return kSatisfactionEventNames[static_cast<std::size_t>(e)];
}

std::optional<SatisfactionEvent> parse_satisfaction_event(std::string_view s) noexcept
{
    for (std::size_t i = 0; i < kSatisfactionEventNames.size(); ++i) {
        if (kSatisfactionEventNames[i] == s) {
            return static_cast<SatisfactionEvent>(i);
        }
    }
    return std::nullopt;
}

SatisfactionClass3 classify3(std::int64_t index) noexcept
{
    if (index > 0) {
        return SatisfactionClass3::Satisfied;
    }
    if (index < 0) {
        return SatisfactionClass3::Unsatisfied;
    }
    return SatisfactionClass3::Neutral;
}

SatisfactionClass5 classify5(std::int64_t index) noexcept
{
    if (index < -5) {
        return SatisfactionClass5::VeryDissatisfied;
    }
    if (index <= -2) {
        return SatisfactionClass5::Dissatisfied;
    }
    if (index <= 1) {
        return SatisfactionClass5::Neutral;
    }
    if (index <= 5) {
        return SatisfactionClass5::Satisfied;
    }
    return SatisfactionClass5::VerySatisfied;
}

std::string_view to_string(SatisfactionClass3 c) noexcept
{
    switch (c) {
    case SatisfactionClass3::Unsatisfied:
        return "unsatisfied";
    case SatisfactionClass3::Neutral:
        return "neutral";
    case SatisfactionClass3::Satisfied:
        return "satisfied";
    }
    return "?";
}

std::string_view to_string(SatisfactionClass5 c) noexcept
{
    switch (c) {
    case SatisfactionClass5::VeryDissatisfied:
        return "very_dissatisfied";
    case SatisfactionClass5::Dissatisfied:
        return "dissatisfied";
    case SatisfactionClass5::Neutral:
        return "neutral";
    case SatisfactionClass5::Satisfied:
        return "satisfied";
    case SatisfactionClass5::VerySatisfied:
        return "very_satisfied";
    }
    return "?";
}

std::int64_t SatisfactionLedger::record(Customer& customer, SatisfactionEvent event)
{
    const int w = weights_[event];
    customer.satisfaction += w;
    applied_total_ += w;
    ++counts_[static_cast<std::size_t>(event)];
    return customer.satisfaction;
}

} // namespace retailsim
