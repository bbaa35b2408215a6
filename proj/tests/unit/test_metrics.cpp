#include <doctest.h>

#include <map>
#include <vector>

#include "../common/fixtures.hpp"
#include "retailsim/agents/department.hpp"
#include "retailsim/error.hpp"
#include "retailsim/metrics/record.hpp"
#include "retailsim/metrics/satisfaction.hpp"

using namespace retailsim;

TEST_SUITE("metrics")
{
    TEST_CASE("three-class labels follow the sign")
    {
        CHECK(classify3(0) == SatisfactionClass3::Neutral);
        CHECK(classify3(1) == SatisfactionClass3::Satisfied);
        CHECK(classify3(-1) == SatisfactionClass3::Unsatisfied);
        CHECK(to_string(classify3(0)) == "neutral");
    }

    TEST_CASE("five-class labels from -10 to 10 match the hand table")
    {
        using C = SatisfactionClass5;
        const C vd = C::VeryDissatisfied, d = C::Dissatisfied, n = C::Neutral, s = C::Satisfied,
                vs = C::VerySatisfied;
        const C table[21] = {vd, vd, vd, vd, vd, d, d, d, d, n, n, n, s, s, s, s, vs, vs, vs, vs, vs};
        for (int i = -10; i <= 10; ++i) {
            CAPTURE(i);
            CHECK(classify5(i) == table[i + 10]);
        }
        CHECK(classify5(-6) == C::VeryDissatisfied);
    }

    TEST_CASE("three and five class never disagree in sign")
    {
        for (std::int64_t i = -1000; i <= 1000; ++i) {
            const int s3 = static_cast<int>(classify3(i));
            const int s5 = static_cast<int>(classify5(i));
            REQUIRE(s3 * s5 >= 0);
        }
    }

    TEST_CASE("ledger adds weights and counts events")
    {
        SatisfactionLedger ledger{SatisfactionWeights{}};
        Customer c;
        CHECK(ledger.record(c, SatisfactionEvent::PurchaseCompleted) == 2);
        CHECK(ledger.record(c, SatisfactionEvent::RenegedFromQueue) == 0);
        CHECK(c.satisfaction == 0);
        CHECK(ledger.count(SatisfactionEvent::PurchaseCompleted) == 1);
        CHECK(ledger.applied_total() == 0);
        ledger.record(c, SatisfactionEvent::LeftAtCloseUnserved);
        CHECK(c.satisfaction == -1);
        CHECK(ledger.applied_total() == -1);
    }

    TEST_CASE("event names round-trip")
    {
        for (std::size_t i = 0; i < kSatisfactionEventCount; ++i) {
            const auto e = static_cast<SatisfactionEvent>(i);
            CHECK(parse_satisfaction_event(to_string(e)) == e);
        }
        CHECK_FALSE(parse_satisfaction_event("smiled").has_value());
    }

    TEST_CASE("all-zero weights leave every customer neutral")
    {
        auto cfg = fixtures::small_scenario(1);
        cfg.weights.weight.fill(0);
        Department d(cfg, 1);
        const auto r = d.run();
        CHECK(r.entries > 0);
        CHECK(r.neutral == cfg.pool_size);
        CHECK(r.overall_satisfaction == 0);
    }

    TEST_CASE("zero footfall gives an empty record")
    {
        auto cfg = fixtures::small_scenario(1);
        cfg.footfall = FootfallTable{};
        Department d(cfg, 1);
        const auto r = d.run();
        CHECK(r.entries == 0);
        CHECK(r.transactions == 0);
        CHECK(r.reneges_total() == 0);
        CHECK(r.neutral == cfg.pool_size);
        CHECK(r.utilization == std::array<double, kStaffRoleCount>{});
        CHECK(r.open_days == 7);
        CHECK(r.days_emptied_in_time == 7);
    }

    TEST_CASE("replaying the satisfaction trace reproduces every index")
    {
        const auto cfg = fixtures::small_scenario();
        std::map<std::uint32_t, std::int64_t> replay;
        RunOptions opts;
        opts.trace = [&](const TraceRecord& t) {
            if (t.kind == TraceRecord::Kind::Satisfaction) {
                replay[t.customer] += cfg.weights[t.satisfaction];
            }
        };
        Department d(cfg, 77, opts);
        const auto r = d.run();
        std::int64_t total = 0;
        bool all_match = true;
        for (const Customer& c : d.pool().members()) {
            const auto it = replay.find(c.id);
            all_match = all_match && c.satisfaction == (it == replay.end() ? 0 : it->second);
            total += c.satisfaction;
        }
        CHECK(all_match);
        CHECK(total == r.overall_satisfaction);
        CHECK(r.satisfied + r.neutral + r.unsatisfied == cfg.pool_size);
    }

    TEST_CASE("utilisation equals busy open minutes replayed from the trace")
    {
        const auto cfg = fixtures::small_scenario();
        std::map<std::uint32_t, double> started;
        std::map<std::uint32_t, double> busy;
        RunOptions opts;
        opts.trace = [&](const TraceRecord& t) {
            if (t.kind == TraceRecord::Kind::ServiceStart) {
                started[t.staff] = t.time;
            } else if (t.kind == TraceRecord::Kind::ServiceEnd) {
                busy[t.staff] += fixtures::open_overlap(cfg.calendar, started.at(t.staff), t.time);
            }
        };
        Department d(cfg, 5, opts);
        const auto r = d.run();
        const double open = fixtures::open_overlap(cfg.calendar, 0.0, cfg.calendar.lifespan_minutes());
        std::array<double, kStaffRoleCount> sum{};
        std::array<int, kStaffRoleCount> n{};
        for (const StaffMember& m : d.staff().members()) {
            sum[static_cast<std::size_t>(m.role)] += busy[m.id] / open;
            ++n[static_cast<std::size_t>(m.role)];
        }
        for (std::size_t i = 0; i < kStaffRoleCount; ++i) {
            CAPTURE(i);
            CHECK(r.utilization[i] == doctest::Approx(sum[i] / n[i]).epsilon(1e-9));
            CHECK(r.utilization[i] > 0.0);
            CHECK(r.utilization[i] <= 1.0);
        }
    }

    TEST_CASE("audit catches broken identities")
    {
        MetricsRecord r;
        r.entries = 5;
        r.exits = 4;
        r.transactions = 6;
        r.satisfied = 3;
        r.footfall = 9;
        r.enqueued[2] = 1;
        r.utilization[0] = 1.5;
        const auto problems = audit(r, 10);
        CHECK(problems.size() >= 6);
    }

    TEST_CASE("mean absolute index grows with visit count when every weight is nonzero")
    {
        auto cfg = fixtures::small_scenario(4);
        cfg.weights.weight = {2, 1, 1, -1, -2, -1, -1};
        // Tails over visit counts, pooled across seeds; doubling k keeps the
        // differences well clear of sampling noise.
        std::map<std::uint32_t, std::pair<double, int>> by_visits;
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            Department d(cfg, seed);
            d.run();
            for (const Customer& c : d.pool().members()) {
                auto& [sum, n] = by_visits[c.visits];
                sum += static_cast<double>(std::abs(c.satisfaction));
                ++n;
            }
        }
        double previous = -1.0;
        int groups = 0;
        for (std::uint32_t k = 1;; k *= 2) {
            double sum = 0.0;
            int n = 0;
            for (auto it = by_visits.lower_bound(k); it != by_visits.end(); ++it) {
                sum += it->second.first;
                n += it->second.second;
            }
            if (n < 100) {
                break;
            }
            CAPTURE(k);
            CHECK(sum / n >= previous);
            previous = sum / n;
            ++groups;
        }
        CHECK(groups >= 3);
    }

    TEST_CASE("kpi lookup")
    {
        MetricsRecord r;
        r.transactions = 12;
        r.subthreshold_routings = 4;
        r.subthreshold_manager_routings = 1;
        CHECK(kpi("transactions").value(r) == 12.0);
        CHECK(kpi("manager_refund_fraction").value(r) == 0.25);
        CHECK_THROWS_AS(kpi("nope"), ConfigError);
    }
}
