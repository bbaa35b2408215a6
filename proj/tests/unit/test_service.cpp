#include <doctest.h>

#include <algorithm>
#include <limits>
#include <random>
#include <vector>

#include "retailsim/agents/staff.hpp"
#include "retailsim/engine/scheduler.hpp"
#include "retailsim/error.hpp"
#include "retailsim/service/queue_system.hpp"

using namespace retailsim;

namespace {

struct Visitor {
    double arrival;
    ServiceKind kind;
    double patience;
    double service;
};

struct Outcome {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> served; // (customer, staff) in start order
    std::vector<std::uint32_t> reneged;
};

// Staff ids: 0 = level-1 seller, 1 = level-2 seller.
Outcome run_queue_system(const std::vector<Visitor>& visitors)
{
    enum class Ev { Arrive, Done, Renege };
    Scheduler<Ev> sched;
    StaffRoster staff({0, 1, 1, 0});
    QueueSystem queues;
    const Calendar cal = Calendar::standard(1);
    Outcome out;
    for (std::uint32_t i = 0; i < visitors.size(); ++i) {
        sched.schedule(visitors[i].arrival, Ev::Arrive, i);
    }
    auto start = [&](StaffId s, std::uint32_t c, ServiceKind k) {
        staff.assign(s, c, k, sched.now());
        out.served.emplace_back(c, s);
        sched.schedule(sched.now() + visitors[c].service, Ev::Done, s);
    };
    sched.run_until(10'000.0, [&](const Event<Ev>& e) {
        switch (e.kind) {
        case Ev::Arrive: {
            const Visitor& v = visitors[e.target];
            if (auto s = staff.find_idle(v.kind)) {
                start(*s, e.target, v.kind);
            } else {
                const auto ticket = queues.enqueue(e.target, v.kind, sched.now(), sched.now() + v.patience);
                sched.schedule(sched.now() + v.patience, Ev::Renege, e.target, ticket);
            }
            break;
        }
        case Ev::Done: {
            const auto s = static_cast<StaffId>(e.target);
            staff.release(s, sched.now(), cal);
            if (auto next = queues.allocate_next(staff[s].role)) {
                start(s, next->customer, next->kind);
            }
            break;
        }
        case Ev::Renege:
            if (queues.renege(e.target, e.token)) {
                out.reneged.push_back(e.target);
            }
            break;
        }
    });
    return out;
}

// Direct replay: one list of waiters in arrival order, scanned from the front.
Outcome run_oracle(const std::vector<Visitor>& visitors)
{
    const double inf = std::numeric_limits<double>::infinity();
    const ServiceKind l1 = ServiceKind::HelpLevel1;
    double free_at[2] = {0.0, 0.0};
    bool busy[2] = {false, false};
    std::vector<std::uint32_t> waiting;
    std::vector<std::uint32_t> order(visitors.size());
    for (std::uint32_t i = 0; i < order.size(); ++i) {
        order[i] = i;
    }
    std::sort(order.begin(), order.end(),
              [&](std::uint32_t a, std::uint32_t b) { return visitors[a].arrival < visitors[b].arrival; });
    std::size_t next_arrival = 0;
    Outcome out;
    auto can = [&](int s, ServiceKind k) { return s == 1 || k == l1; };
    auto begin = [&](int s, std::uint32_t c, double now) {
        busy[s] = true;
        free_at[s] = now + visitors[c].service;
        out.served.emplace_back(c, static_cast<std::uint32_t>(s));
    };
    while (true) {
        double t_arr = next_arrival < order.size() ? visitors[order[next_arrival]].arrival : inf;
        double t_done = inf;
        int done_staff = -1;
        for (int s = 0; s < 2; ++s) {
            if (busy[s] && free_at[s] < t_done) {
                t_done = free_at[s];
                done_staff = s;
            }
        }
        double t_ren = inf;
        std::size_t ren_idx = 0;
        for (std::size_t w = 0; w < waiting.size(); ++w) {
            const Visitor& v = visitors[waiting[w]];
            if (v.arrival + v.patience < t_ren) {
                t_ren = v.arrival + v.patience;
                ren_idx = w;
            }
        }
        const double t = std::min({t_arr, t_done, t_ren});
        if (t == inf) {
            break;
        }
        if (t == t_arr) {
            const std::uint32_t c = order[next_arrival++];
            const ServiceKind k = visitors[c].kind;
            // Level-1 help prefers the level-1 seller.
            if (!busy[0] && can(0, k)) {
                begin(0, c, t);
            } else if (!busy[1]) {
                begin(1, c, t);
            } else {
                waiting.push_back(c);
            }
        } else if (t == t_done) {
            busy[done_staff] = false;
            for (std::size_t w = 0; w < waiting.size(); ++w) {
                if (can(done_staff, visitors[waiting[w]].kind)) {
                    begin(done_staff, waiting[w], t);
                    waiting.erase(waiting.begin() + static_cast<long>(w));
                    break;
                }
            }
        } else {
            out.reneged.push_back(waiting[ren_idx]);
            waiting.erase(waiting.begin() + static_cast<long>(ren_idx));
        }
    }
    return out;
}

} // namespace

TEST_SUITE("service")
{
    TEST_CASE("earlier joiner is served first")
    {
        QueueSystem q;
        q.enqueue(7, ServiceKind::Till, 1.0, 10.0);
        q.enqueue(3, ServiceKind::Till, 2.0, 10.0);
        CHECK(q.allocate_next(StaffRole::Cashier)->customer == 7);
        CHECK(q.allocate_next(StaffRole::Cashier)->customer == 3);
        CHECK_FALSE(q.allocate_next(StaffRole::Cashier).has_value());
    }

    TEST_CASE("level-2 seller takes the older entry across both help queues")
    {
        QueueSystem q;
        q.enqueue(1, ServiceKind::HelpLevel1, 1.0, 9.0);
        q.enqueue(2, ServiceKind::HelpLevel2, 2.0, 9.0);
        const auto e = q.allocate_next(StaffRole::SellerLevel2);
        REQUIRE(e.has_value());
        CHECK(e->customer == 1);
        CHECK(e->kind == ServiceKind::HelpLevel1);
        // Same join time: lower ticket wins.
        QueueSystem r;
        r.enqueue(5, ServiceKind::HelpLevel2, 3.0, 9.0);
        r.enqueue(4, ServiceKind::HelpLevel1, 3.0, 9.0);
        CHECK(r.allocate_next(StaffRole::SellerLevel2)->customer == 5);
    }

    TEST_CASE("idle cashier ignores help queues")
    {
        QueueSystem q;
        q.enqueue(1, ServiceKind::HelpLevel1, 0.0, 5.0);
        q.enqueue(2, ServiceKind::HelpLevel2, 0.0, 5.0);
        CHECK_FALSE(q.allocate_next(StaffRole::Cashier).has_value());
        CHECK_FALSE(q.has_compatible_waiter(StaffRole::Cashier));
        CHECK(q.has_compatible_waiter(StaffRole::SellerLevel1));
        CHECK_FALSE(q.has_compatible_waiter(StaffRole::Manager));
    }

    TEST_CASE("duplicate enqueue and a deadline before joining are model errors")
    {
        QueueSystem q;
        q.enqueue(1, ServiceKind::Till, 0.0, 1.0);
        CHECK_THROWS_AS(q.enqueue(1, ServiceKind::Refund, 0.5, 2.0), ModelError);
        CHECK_THROWS_AS(q.enqueue(2, ServiceKind::Till, 5.0, 4.0), ModelError);
    }

    TEST_CASE("deadline at join time reneges unless served at once")
    {
        QueueSystem q;
        const auto t = q.enqueue(1, ServiceKind::Till, 4.0, 4.0);
        CHECK(q.renege(1, t).has_value());
        CHECK(q.waiting() == 0);
    }

    TEST_CASE("renege after service is inert, as is a ticket from an older visit")
    {
        QueueSystem q;
        const auto t1 = q.enqueue(1, ServiceKind::Till, 0.0, 5.0);
        REQUIRE(q.allocate_next(StaffRole::Cashier).has_value());
        CHECK_FALSE(q.renege(1, t1).has_value());
        const auto t2 = q.enqueue(1, ServiceKind::Till, 6.0, 11.0);
        CHECK_FALSE(q.renege(1, t1).has_value());
        CHECK(q.contains(1));
        CHECK(q.renege(1, t2).has_value());
        CHECK(q.tally(ServiceKind::Till).balanced(0));
    }

    TEST_CASE("flush empties one queue and counts it")
    {
        QueueSystem q;
        q.enqueue(1, ServiceKind::HelpLevel1, 0.0, 5.0);
        q.enqueue(2, ServiceKind::HelpLevel1, 0.0, 5.0);
        q.enqueue(3, ServiceKind::Till, 0.0, 5.0);
        CHECK(q.flush(ServiceKind::HelpLevel1).size() == 2);
        CHECK(q.tally(ServiceKind::HelpLevel1).flushed == 2);
        CHECK(q.waiting() == 1);
        CHECK_FALSE(q.contains(1));
    }

    TEST_CASE("small random instances match a direct FIFO replay")
    {
        std::mt19937_64 gen(2718);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        for (int trial = 0; trial < 2000; ++trial) {
            const int n = 1 + static_cast<int>(gen() % 6);
            std::vector<Visitor> vs;
            for (int i = 0; i < n; ++i) {
                vs.push_back({u(gen) * 10.0, u(gen) < 0.5 ? ServiceKind::HelpLevel1 : ServiceKind::HelpLevel2,
                              u(gen) * 4.0, 0.5 + u(gen) * 4.0});
            }
            const Outcome got = run_queue_system(vs);
            const Outcome want = run_oracle(vs);
            CAPTURE(trial);
            REQUIRE(got.served == want.served);
            REQUIRE(got.reneged == want.reneged);
            REQUIRE(got.served.size() + got.reneged.size() == vs.size());
        }
    }

    TEST_CASE("tallies balance under random churn")
    {
        std::mt19937_64 gen(31);
        QueueSystem q;
        std::vector<std::pair<std::uint32_t, std::uint64_t>> tickets;
        std::uint32_t next = 0;
        for (int step = 0; step < 20000; ++step) {
            const auto r = gen() % 4;
            if (r == 0 || r == 1) {
                const auto kind = static_cast<ServiceKind>(gen() % kServiceKindCount);
                tickets.emplace_back(next, q.enqueue(next, kind, step, step + 3.0));
                ++next;
            } else if (r == 2 && !tickets.empty()) {
                const auto& [c, t] = tickets[gen() % tickets.size()];
                (void)q.renege(c, t);
            } else {
                (void)q.allocate_next(static_cast<StaffRole>(gen() % kStaffRoleCount));
            }
        }
        for (ServiceKind k : kAllServiceKinds) {
            CHECK(q.tally(k).balanced(q.queue(k).size()));
        }
    }
}
