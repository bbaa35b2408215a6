#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include "retailsim/population/customer.hpp"

namespace retailsim {

enum class SatisfactionEvent : std::uint8_t {
    PurchaseCompleted,
    HelpReceived,
    RefundGrantedByCashier,
    RefundViaManager,
    RenegedFromQueue,
    LeftAtCloseUnserved,
    LeftWithoutBuying,
};

inline constexpr std::size_t kSatisfactionEventCount = 7;

inline constexpr std::array<std::string_view, kSatisfactionEventCount> kSatisfactionEventNames{
    "purchase_completed",   "help_received",          "refund_granted_by_cashier", "refund_via_manager",
    "reneged_from_queue",   "left_at_close_unserved", "left_without_buying"};

std::string_view to_string(SatisfactionEvent e) noexcept;
std::optional<SatisfactionEvent> parse_satisfaction_event(std::string_view s) noexcept;

// Whole-number weight added to a customer's index per event.
struct SatisfactionWeights {
    std::array<int, kSatisfactionEventCount> weight{2, 1, 1, 0, -2, -1, 0};

    int operator[](SatisfactionEvent e) const noexcept { return weight[static_cast<std::size_t>(e)]; }
    int& operator[](SatisfactionEvent e) noexcept { return weight[static_cast<std::size_t>(e)]; }

    bool operator==(const SatisfactionWeights&) const = default;
};

enum class SatisfactionClass3 : std::int8_t { Unsatisfied = -1, Neutral = 0, Satisfied = 1 };

enum class SatisfactionClass5 : std::int8_t {
    VeryDissatisfied = -2,
    Dissatisfied = -1,
    Neutral = 0,
    Satisfied = 1,
    VerySatisfied = 2,
};

// Sign of the index: >0 satisfied, 0 neutral ("don't know"), <0 unsatisfied.
SatisfactionClass3 classify3(std::int64_t index) noexcept;

// Below -5 very dissatisfied; -5..-2 dissatisfied; -1..1 neutral; 2..5
// satisfied; above 5 very satisfied.
SatisfactionClass5 classify5(std::int64_t index) noexcept;

std::string_view to_string(SatisfactionClass3 c) noexcept;
std::string_view to_string(SatisfactionClass5 c) noexcept;

/// Applies weights to customers' running indices and keeps per-event counts.
class SatisfactionLedger {
public:
    explicit SatisfactionLedger(const SatisfactionWeights& weights) : weights_(weights) {}

    std::int64_t record(Customer& customer, SatisfactionEvent event);

    const SatisfactionWeights& weights() const noexcept { return weights_; }
    std::uint64_t count(SatisfactionEvent e) const noexcept { return counts_[static_cast<std::size_t>(e)]; }
    // Sum of every weight applied so far.
    std::int64_t applied_total() const noexcept { return applied_total_; }

private:
    SatisfactionWeights weights_;
    std::array<std::uint64_t, kSatisfactionEventCount> counts_{};
    std::int64_t applied_total_ = 0;
};

} // namespace retailsim
