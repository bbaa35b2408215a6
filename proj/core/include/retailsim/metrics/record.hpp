#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "retailsim/agents/staff.hpp"
#include "retailsim/engine/calendar.hpp"
#include "retailsim/metrics/satisfaction.hpp"
#include "retailsim/population/pool.hpp"
#include "retailsim/service/queue_system.hpp"

namespace retailsim {

using KindCounts = std::array<std::uint64_t, kServiceKindCount>;
using TypeCounts = std::array<std::uint64_t, kCustomerTypeCount>;

/// Outputs of one replication.
struct MetricsRecord {
    std::uint64_t seed = 0;

    // Flow
    std::uint64_t footfall = 0;      // arrivals drawn from the footfall table
    std::uint64_t lost_footfall = 0; // arrivals with no eligible pool member
    std::uint64_t entries = 0;
    std::uint64_t exits = 0;
    TypeCounts entries_by_type{};

    // Sales and refunds
    std::uint64_t transactions = 0;
    TypeCounts transactions_by_type{};
    std::uint64_t buy_decisions = 0;
    std::uint64_t left_without_buying = 0;
    std::uint64_t left_at_close = 0;
    std::uint64_t refund_requests = 0;
    std::uint64_t refunds = 0;
    std::uint64_t refunds_by_cashier = 0;
    std::uint64_t refunds_via_manager = 0;
    std::uint64_t refund_regoals = 0;
    std::uint64_t refund_routings = 0;
    std::uint64_t subthreshold_routings = 0;
    std::uint64_t subthreshold_manager_routings = 0;

    // Queueing, per ServiceKind
    KindCounts served_immediately{};
    KindCounts enqueued{};
    KindCounts served_from_queue{};
    KindCounts reneged{};
    KindCounts flushed_at_close{};

    // Satisfaction at the end of the run
    std::uint64_t satisfied = 0;
    std::uint64_t neutral = 0;
    std::uint64_t unsatisfied = 0;
    std::array<std::uint64_t, 5> five_class{}; // very dissatisfied .. very satisfied
    std::int64_t overall_satisfaction = 0;
    double refund_seeker_mean_satisfaction = 0.0;
    std::uint64_t refund_seekers = 0;
    std::vector<double> neutral_fraction_by_week;

    // Staff, per StaffRole; mean over members of busy open minutes / open minutes
    std::array<double, kStaffRoleCount> utilization{};

    // Closing behaviour
    std::uint64_t open_days = 0;
    std::uint64_t days_emptied_in_time = 0;
    double max_drain_minutes = 0.0;
    std::uint64_t till_queued_at_close = 0;
    std::uint64_t till_ejected_at_close = 0;

    // Engine
    std::uint64_t events = 0;
    std::uint64_t event_log_hash = 0;

    std::uint64_t reneges_total() const noexcept;
    double role_utilization(StaffRole r) const noexcept { return utilization[static_cast<std::size_t>(r)]; }

    bool operator==(const MetricsRecord&) const = default;
};

// Run-level inputs finalize needs to audit a record.
struct RunSnapshot {
    const CustomerPool& pool;
    const StaffRoster& staff;
    const QueueSystem& queues;
    const Calendar& calendar;
    const SatisfactionLedger& ledger;
    std::vector<std::string> runtime_diagnostics; // raised while the run was executing
};

/// Fills the end-of-run satisfaction and utilisation figures into `record`,
/// then checks every accounting identity. Throws InvariantViolation listing
/// all failures.
void finalize(MetricsRecord& record, const RunSnapshot& run);

// Identity checks on a finished record alone; returns the failures.
std::vector<std::string> audit(const MetricsRecord& record, std::size_t pool_size);

/// Named scalar view of a record, used for CSV columns and aggregation.
struct KpiColumn {
    std::string name;
    std::function<double(const MetricsRecord&)> value;
};

const std::vector<KpiColumn>& kpi_columns();
const KpiColumn& kpi(std::string_view name);

} // namespace retailsim
