#include "retailsim/metrics/record.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "retailsim/error.hpp"

namespace retailsim {

std::uint64_t MetricsRecord::reneges_total() const noexcept
{
    return std::accumulate(reneged.begin(), reneged.end(), std::uint64_t{0});
}

std::vector<std::string> audit(const MetricsRecord& r, std::size_t pool_size)
{
    std::vector<std::string> out;
    auto fail = [&out](std::string msg) { out.push_back(std::move(msg)); };

    if (r.entries != r.exits) {
        fail("entries " + std::to_string(r.entries) + " != exits " + std::to_string(r.exits));
    }
    if (r.transactions > r.entries) {
        fail("more transactions than entries");
    }
    if (r.satisfied + r.neutral + r.unsatisfied != pool_size) {
        fail("satisfaction classes do not partition the pool");
    }
    const auto five = std::accumulate(r.five_class.begin(), r.five_class.end(), std::uint64_t{0});
    if (five != pool_size) {
        fail("five-class counts do not partition the pool");
    }
    if (r.footfall != r.entries + r.lost_footfall) {
        fail("footfall != entries + lost footfall");
    }
    for (std::size_t k = 0; k < kServiceKindCount; ++k) {
        if (r.enqueued[k] != r.served_from_queue[k] + r.reneged[k] + r.flushed_at_close[k]) {
            fail("queue conservation broken for " + std::string(to_string(static_cast<ServiceKind>(k))));
        }
    }
    for (std::size_t i = 0; i < kStaffRoleCount; ++i) {
        if (!(r.utilization[i] >= 0.0 && r.utilization[i] <= 1.0)) {
            fail("utilisation of " + std::string(to_string(static_cast<StaffRole>(i))) + " outside [0, 1]");
        }
    }
    if (r.refunds != r.refunds_by_cashier + r.refunds_via_manager) {
        fail("refund split does not add up");
    }
    if (r.till_ejected_at_close != 0) {
        fail("customers ejected from the till queue at closing");
    }
    return out;
}

void finalize(MetricsRecord& r, const RunSnapshot& run)
{
    std::vector<std::string> problems = run.runtime_diagnostics;

    r.satisfied = r.neutral = r.unsatisfied = 0;
    r.five_class.fill(0);
    r.overall_satisfaction = 0;
    std::int64_t refund_sum = 0;
    r.refund_seekers = 0;
    std::uint64_t visits = 0;
    for (const Customer& c : run.pool.members()) {
        switch (classify3(c.satisfaction)) {
        case SatisfactionClass3::Satisfied:
            ++r.satisfied;
            break;
        case SatisfactionClass3::Neutral:
            ++r.neutral;
            break;
        case SatisfactionClass3::Unsatisfied:
            ++r.unsatisfied;
            break;
        }
        ++r.five_class[static_cast<std::size_t>(static_cast<int>(classify5(c.satisfaction)) + 2)];
        r.overall_satisfaction += c.satisfaction;
        visits += c.visits;
        if (c.ever_sought_refund) {
            ++r.refund_seekers;
            refund_sum += c.satisfaction;
        }
        if (c.state != CustomerState::InPool) {
            problems.push_back("customer " + std::to_string(c.id) + " still in the department at run end");
        }
    }
    r.refund_seeker_mean_satisfaction =
        r.refund_seekers == 0 ? 0.0 : static_cast<double>(refund_sum) / static_cast<double>(r.refund_seekers);

    if (r.overall_satisfaction != run.ledger.applied_total()) {
        problems.push_back("overall satisfaction differs from the sum of applied weights");
    }
    if (visits != r.entries) {
        problems.push_back("pool visit counts do not add up to entries");
    }

    const double open = run.calendar.total_open_minutes();
    for (StaffRole role : kAllStaffRoles) {
        double sum = 0.0;
        std::size_t n = 0;
        for (const StaffMember& m : run.staff.members()) {
            if (m.role != role) {
                continue;
            }
            if (m.busy) {
                problems.push_back("staff member " + std::to_string(m.id) + " still busy at run end");
            }
            sum += open > 0.0 ? m.busy_open_minutes / open : 0.0;
            ++n;
        }
        r.utilization[static_cast<std::size_t>(role)] = n == 0 ? 0.0 : sum / static_cast<double>(n);
    }

    for (ServiceKind kind : kAllServiceKinds) {
        const auto k = static_cast<std::size_t>(kind);
        const QueueTally& t = run.queues.tally(kind);
        if (!run.queues.queue(kind).empty()) {
            problems.push_back(std::string(to_string(kind)) + " queue not empty at run end");
        }
        if (t.enqueued != r.enqueued[k] || t.served != r.served_from_queue[k] || t.reneged != r.reneged[k] ||
            t.flushed != r.flushed_at_close[k]) {
            problems.push_back(std::string(to_string(kind)) + " queue tally disagrees with recorded counts");
        }
    }

    auto more = audit(r, run.pool.size());
    problems.insert(problems.end(), more.begin(), more.end());
    if (!problems.empty()) {
        throw InvariantViolation(std::move(problems));
    }
}

namespace {

template <typename F>
KpiColumn col(std::string name, F f)
{
    return KpiColumn{std::move(name), [f](const MetricsRecord& r) { return static_cast<double>(f(r)); }};
}

std::vector<KpiColumn> build_columns()
{
    std::vector<KpiColumn> c;
    c.push_back(col("transactions", [](const MetricsRecord& r) { return r.transactions; }));
    c.push_back(col("satisfied", [](const MetricsRecord& r) { return r.satisfied; }));
    c.push_back(col("neutral", [](const MetricsRecord& r) { return r.neutral; }));
    c.push_back(col("unsatisfied", [](const MetricsRecord& r) { return r.unsatisfied; }));
    c.push_back(col("overall_satisfaction", [](const MetricsRecord& r) { return r.overall_satisfaction; }));
    c.push_back(col("very_dissatisfied", [](const MetricsRecord& r) { return r.five_class[0]; }));
    c.push_back(col("dissatisfied", [](const MetricsRecord& r) { return r.five_class[1]; }));
    c.push_back(col("neutral5", [](const MetricsRecord& r) { return r.five_class[2]; }));
    c.push_back(col("satisfied5", [](const MetricsRecord& r) { return r.five_class[3]; }));
    c.push_back(col("very_satisfied", [](const MetricsRecord& r) { return r.five_class[4]; }));
    c.push_back(col("footfall", [](const MetricsRecord& r) { return r.footfall; }));
    c.push_back(col("lost_footfall", [](const MetricsRecord& r) { return r.lost_footfall; }));
    c.push_back(col("entries", [](const MetricsRecord& r) { return r.entries; }));
    c.push_back(col("exits", [](const MetricsRecord& r) { return r.exits; }));
    c.push_back(col("left_without_buying", [](const MetricsRecord& r) { return r.left_without_buying; }));
    c.push_back(col("left_at_close", [](const MetricsRecord& r) { return r.left_at_close; }));
    c.push_back(col("refund_requests", [](const MetricsRecord& r) { return r.refund_requests; }));
    c.push_back(col("refunds", [](const MetricsRecord& r) { return r.refunds; }));
    c.push_back(col("refunds_via_manager", [](const MetricsRecord& r) { return r.refunds_via_manager; }));
    c.push_back(col("manager_refund_fraction", [](const MetricsRecord& r) {
        return r.subthreshold_routings == 0
                   ? 0.0
                   : static_cast<double>(r.subthreshold_manager_routings) / static_cast<double>(r.subthreshold_routings);
    }));
    c.push_back(col("refund_satisfaction",
                    [](const MetricsRecord& r) { return r.refund_seeker_mean_satisfaction; }));
    for (ServiceKind k : kAllServiceKinds) {
        const auto i = static_cast<std::size_t>(k);
        c.push_back(col("reneged_" + std::string(to_string(k)), [i](const MetricsRecord& r) { return r.reneged[i]; }));
    }
    for (StaffRole role : kAllStaffRoles) {
        const auto i = static_cast<std::size_t>(role);
        c.push_back(col("utilization_" + std::string(to_string(role)),
                        [i](const MetricsRecord& r) { return r.utilization[i]; }));
    }
    c.push_back(col("max_drain_minutes", [](const MetricsRecord& r) { return r.max_drain_minutes; }));
    return c;
}

} // namespace

const std::vector<KpiColumn>& kpi_columns()
{
    static const std::vector<KpiColumn> columns = build_columns();
    return columns;
}

const KpiColumn& kpi(std::string_view name)
{
    for (const auto& c : kpi_columns()) {
        if (c.name == name) {
            return c;
        }
    }
    throw ConfigError("unknown KPI '" + std::string(name) + "'");
}

} // namespace retailsim
