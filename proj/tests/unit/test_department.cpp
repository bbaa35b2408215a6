#include <doctest.h>

#include <map>
#include <sstream>

#include "../common/fixtures.hpp"
#include "retailsim/agents/department.hpp"
#include "retailsim/error.hpp"
#include "retailsim/harness/presets.hpp"

using namespace retailsim;

namespace {

using TK = TraceRecord::Kind;

// Footfall only during the last hour of Monday.
ScenarioConfig last_hour_monday(double rate)
{
    ScenarioConfig c;
    c.calendar = Calendar::standard(1);
    c.pool_size = 200;
    c.footfall.rate[0][19] = rate;
    return c;
}

std::string event_log(const ScenarioConfig& cfg, std::uint64_t seed, MetricsRecord* out = nullptr)
{
    std::ostringstream log;
    RunOptions opts;
    opts.event_log = &log;
    Department d(cfg, seed, opts);
    const auto r = d.run();
    if (out != nullptr) {
        *out = r;
    }
    return log.str();
}

} // namespace

TEST_SUITE("department")
{
    TEST_CASE("same seed, same log and record; other seed, other log")
    {
        const auto cfg = fixtures::small_scenario();
        MetricsRecord a;
        MetricsRecord b;
        MetricsRecord c;
        const auto la = event_log(cfg, 42, &a);
        const auto lb = event_log(cfg, 42, &b);
        const auto lc = event_log(cfg, 43, &c);
        CHECK(la == lb);
        CHECK(a == b);
        CHECK(la != lc);
        CHECK(a.event_log_hash != c.event_log_hash);
        CHECK(a.events == static_cast<std::uint64_t>(std::count(la.begin(), la.end(), '\n')));
    }

    TEST_CASE("event log is ordered by time, then sequence")
    {
        std::istringstream in(event_log(fixtures::small_scenario(), 3));
        double t = 0.0;
        double last_t = -1.0;
        unsigned long long seq = 0;
        unsigned long long last_seq = 0;
        std::string kind;
        unsigned target = 0;
        unsigned long long token = 0;
        bool ordered = true;
        std::size_t lines = 0;
        while (in >> t >> seq >> kind >> target >> token) {
            ordered = ordered && (t > last_t || (t == last_t && seq > last_seq));
            last_t = t;
            last_seq = seq;
            ++lines;
        }
        CHECK(lines > 1000);
        CHECK(ordered);
    }

    TEST_CASE("a department runs once")
    {
        Department d(fixtures::small_scenario(1), 1);
        d.run();
        CHECK_THROWS_AS(d.run(), ModelError);
    }

    TEST_CASE("invalid config is rejected up front")
    {
        auto cfg = fixtures::small_scenario(1);
        cfg.mix[0] = 0.5;
        CHECK_THROWS_AS(Department(cfg, 1), ConfigError);
    }

    TEST_CASE("browsers all leave the moment the store closes")
    {
        auto cfg = last_hour_monday(30.0);
        cfg.footfall.rate[0][10] = 30.0;
        cfg.durations.browse = {700, 700, 700};
        cfg.probabilities.ask_refund = 0.0;
        Department d(cfg, 8);
        const auto r = d.run();
        REQUIRE(r.entries > 0);
        CHECK(r.left_at_close == r.entries);
        CHECK(r.transactions == 0);
        CHECK(r.max_drain_minutes == 0.0);
        CHECK(r.days_emptied_in_time == r.open_days);
    }

    TEST_CASE("a customer paying at close finishes and leaves before the limit")
    {
        auto cfg = last_hour_monday(20.0);
        cfg.durations.browse = {0, 0, 0};
        cfg.durations.decide = {0, 0, 0};
        cfg.durations.till = {8, 8, 8};
        cfg.durations.patience = {5, 5, 5};
        cfg.probabilities.conversion_rate = 1.0;
        cfg.probabilities.ask_help = 0.0;
        cfg.staffing = {1, 0, 0, 0};
        SimTime last_exit = 0.0;
        RunOptions opts;
        opts.trace = [&](const TraceRecord& t) {
            if (t.kind == TK::Exit) {
                last_exit = t.time;
            }
        };
        Department d(cfg, 12, opts);
        const auto r = d.run();
        const double close = 20 * 60.0;
        CHECK(r.transactions > 0);
        CHECK(last_exit > close);
        CHECK(last_exit <= close + 15.0);
        CHECK(r.max_drain_minutes > 0.0);
        CHECK(r.till_ejected_at_close == 0);
    }

    TEST_CASE("a department that cannot empty in time fails its run")
    {
        auto cfg = last_hour_monday(20.0);
        cfg.durations.browse = {0, 0, 0};
        cfg.durations.decide = {0, 0, 0};
        cfg.durations.till = {30, 30, 30};
        cfg.probabilities.conversion_rate = 1.0;
        cfg.probabilities.ask_help = 0.0;
        Department d(cfg, 12);
        CHECK_THROWS_AS(d.run(), InvariantViolation);
    }

    TEST_CASE("no staff for level-2 help: every such seeker reneges or is flushed")
    {
        auto cfg = fixtures::small_scenario();
        cfg.staffing = {2, 2, 0, 1};
        cfg.probabilities.level2_help = 0.5;
        Department d(cfg, 21);
        const auto r = d.run();
        const auto k = static_cast<std::size_t>(ServiceKind::HelpLevel2);
        CHECK(r.enqueued[k] > 0);
        CHECK(r.served_immediately[k] == 0);
        CHECK(r.served_from_queue[k] == 0);
        CHECK(r.enqueued[k] == r.reneged[k] + r.flushed_at_close[k]);
    }

    TEST_CASE("work conservation holds after every event")
    {
        RunOptions opts;
        opts.audit_work_conservation = true;
        for (std::uint64_t seed : {1, 2, 3}) {
            Department d(fixtures::small_scenario(), seed, opts);
            CHECK_NOTHROW(d.run());
        }
    }

    TEST_CASE("queue waits are non-negative and within patience")
    {
        std::map<std::uint32_t, std::pair<double, double>> joined; // customer -> (join, deadline)
        std::size_t from_queue = 0;
        bool ok = true;
        RunOptions opts;
        opts.trace = [&](const TraceRecord& t) {
            if (t.kind == TK::Enqueue) {
                joined[t.customer] = {t.time, t.value};
            } else if (t.kind == TK::ServiceStart && t.flag) {
                const auto [join, deadline] = joined.at(t.customer);
                ok = ok && t.time >= join && t.time <= deadline;
                ++from_queue;
            }
        };
        Department d(fixtures::small_scenario(), 4, opts);
        d.run();
        CHECK(from_queue > 100);
        CHECK(ok);
    }

    TEST_CASE("refund goals only after a purchase, and every service matches its staff")
    {
        const Department* dept = nullptr;
        bool refund_gate = true;
        bool compatible_pairs = true;
        std::size_t refund_entries = 0;
        RunOptions opts;
        opts.trace = [&](const TraceRecord& t) {
            if (t.kind == TK::Transition && t.from == CustomerState::Entering &&
                (t.to == CustomerState::RefundInService || t.to == CustomerState::QueuedForRefund)) {
                ++refund_entries;
                refund_gate = refund_gate && dept->pool()[t.customer].purchases >= 1;
            }
            if (t.kind == TK::ServiceStart) {
                compatible_pairs = compatible_pairs && compatible(dept->staff()[t.staff].role, t.service);
            }
        };
        Department d(fixtures::small_scenario(), 6, opts);
        dept = &d;
        d.run();
        CHECK(refund_entries > 50);
        CHECK(refund_gate);
        CHECK(compatible_pairs);
    }

    TEST_CASE("refunds never reduce the transaction count")
    {
        std::uint64_t purchases = 0;
        RunOptions opts;
        opts.trace = [&](const TraceRecord& t) {
            if (t.kind == TK::Satisfaction && t.satisfaction == SatisfactionEvent::PurchaseCompleted) {
                ++purchases;
            }
        };
        Department d(fixtures::small_scenario(), 7, opts);
        const auto r = d.run();
        CHECK(r.refunds > 0);
        CHECK(r.transactions == purchases);
    }

    TEST_CASE("zero empowerment routes every small refund through a manager")
    {
        auto cfg = fixtures::small_scenario();
        cfg.empowerment = 0.0;
        Department d(cfg, 8);
        const auto r = d.run();
        CHECK(r.subthreshold_routings > 0);
        CHECK(r.subthreshold_manager_routings == r.subthreshold_routings);
        CHECK(r.refunds_by_cashier == 0);
    }

    TEST_CASE("full empowerment with small refunds leaves the manager idle")
    {
        auto cfg = fixtures::small_scenario();
        cfg.empowerment = 1.0;
        cfg.refund_amount = {5, 20, 50};
        Department d(cfg, 9);
        const auto r = d.run();
        CHECK(r.refunds > 0);
        CHECK(r.refunds_via_manager == 0);
        CHECK(r.role_utilization(StaffRole::Manager) == 0.0);
    }

    TEST_CASE("regoal probability extremes")
    {
        auto cfg = fixtures::small_scenario();
        cfg.probabilities.regoal = 0.0;
        const auto none = Department(cfg, 10).run();
        CHECK(none.refunds > 0);
        CHECK(none.refund_regoals == 0);
        cfg.probabilities.regoal = 1.0;
        const auto all = Department(cfg, 10).run();
        // Refunds that finish after closing cannot turn into a browse.
        CHECK(all.refund_regoals > 0);
        CHECK(all.refund_regoals <= all.refunds);
    }

    TEST_CASE("every open day of the busiest preset empties within the limit")
    {
        const auto r = Department(preset("ww-like"), 1).run();
        CHECK(r.open_days == 70);
        CHECK(r.days_emptied_in_time == r.open_days);
        CHECK(r.max_drain_minutes <= 15.0);
        CHECK(r.till_ejected_at_close == 0);
    }

    TEST_CASE("default bounds keep the worst case inside the drain limit")
    {
        for (auto name : preset_names()) {
            const auto cfg = preset(name);
            CAPTURE(name);
            CHECK(worst_case_drain_minutes(cfg) <= cfg.closing_drain_limit);
        }
    }
}
