#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "retailsim/engine/calendar.hpp"
#include "retailsim/engine/rng.hpp"
#include "retailsim/engine/scheduler.hpp"
#include "retailsim/error.hpp"

using namespace retailsim;

namespace {

enum class Tag { A, B };

using Sched = Scheduler<Tag>;

} // namespace

TEST_SUITE("engine")
{
    TEST_CASE("event at now runs before one at now plus epsilon")
    {
        Sched s;
        s.schedule(1e-9, Tag::B, 2);
        s.schedule(0.0, Tag::A, 1);
        std::vector<std::uint32_t> order;
        s.run_until(1.0, [&](const auto& e) { order.push_back(e.target); });
        CHECK(order == std::vector<std::uint32_t>{1, 2});
    }

    TEST_CASE("simultaneous events run in insertion order")
    {
        Sched s;
        for (std::uint32_t i = 0; i < 50; ++i) {
            s.schedule(5.0, Tag::A, i);
        }
        std::vector<std::uint32_t> order;
        s.run_until(10.0, [&](const auto& e) { order.push_back(e.target); });
        REQUIRE(order.size() == 50);
        CHECK(std::is_sorted(order.begin(), order.end()));
    }

    TEST_CASE("a million random events come out globally sorted")
    {
        std::mt19937_64 gen(7);
        std::uniform_real_distribution<double> when(0.0, 1000.0);
        Sched s;
        struct Key {
            double t;
            std::uint64_t seq;
        };
        std::vector<Key> expected;
        for (int i = 0; i < 1'000'000; ++i) {
            // Coarse times force plenty of ties.
            const double t = std::floor(when(gen) * 10.0) / 10.0;
            expected.push_back({t, s.schedule(t, Tag::A)});
        }
        std::stable_sort(expected.begin(), expected.end(), [](const Key& a, const Key& b) { return a.t < b.t; });
        std::size_t i = 0;
        bool ok = true;
        s.run_until(1000.0, [&](const auto& e) {
            ok = ok && e.fire_time == expected[i].t && e.sequence_no == expected[i].seq;
            ++i;
        });
        CHECK(ok);
        CHECK(i == expected.size());
    }

    TEST_CASE("scheduling in the past is a model error")
    {
        Sched s;
        s.run_until(10.0, [](const auto&) {});
        CHECK_THROWS_AS(s.schedule(9.99, Tag::A), ModelError);
        CHECK_NOTHROW(s.schedule(10.0, Tag::A));
        CHECK_THROWS_AS(s.run_until(5.0, [](const auto&) {}), ModelError);
    }

    TEST_CASE("run_until on an empty queue only moves the clock")
    {
        Sched s;
        int fired = 0;
        s.run_until(42.5, [&](const auto&) { ++fired; });
        CHECK(fired == 0);
        CHECK(s.now() == 42.5);
    }

    TEST_CASE("run_until now fires only events due now")
    {
        Sched s;
        s.run_until(3.0, [](const auto&) {});
        s.schedule(3.0, Tag::A, 1);
        s.schedule(3.5, Tag::A, 2);
        std::vector<std::uint32_t> fired;
        s.run_until(3.0, [&](const auto& e) { fired.push_back(e.target); });
        CHECK(fired == std::vector<std::uint32_t>{1});
        CHECK(s.pending() == 1);
    }

    TEST_CASE("events scheduled during dispatch at the same time still run")
    {
        Sched s;
        s.schedule(1.0, Tag::A, 0);
        std::vector<std::uint32_t> fired;
        s.run_until(2.0, [&](const auto& e) {
            fired.push_back(e.target);
            if (e.target < 3) {
                s.schedule(s.now(), Tag::B, e.target + 1);
            }
        });
        CHECK(fired == std::vector<std::uint32_t>{0, 1, 2, 3});
    }

    TEST_CASE("standard calendar")
    {
        const Calendar cal = Calendar::standard(10);
        CHECK(cal.is_open(10 * 60.0));        // Monday 10:00
        CHECK_FALSE(cal.is_open(8 * 60 + 59)); // Monday 08:59
        CHECK(cal.is_open(9 * 60.0));
        CHECK_FALSE(cal.is_open(20 * 60.0));
        CHECK(cal.is_open(6 * kMinutesPerDay + 11 * 60.0)); // Sunday 11:00
        CHECK_FALSE(cal.is_open(6 * kMinutesPerDay + 17 * 60.0));
        CHECK(cal.lifespan_minutes() == 10 * 7 * 24 * 60.0);
        CHECK_THROWS_AS((void)cal.is_open(cal.lifespan_minutes() + 1.0), std::out_of_range);
        CHECK_THROWS_AS((void)cal.is_open(-1.0), std::out_of_range);
        // 6 days x 11 h + 6 h per week.
        CHECK(cal.total_open_minutes() == doctest::Approx(10 * (6 * 660 + 360)));
    }

    TEST_CASE("is_open agrees with interval arithmetic on 1e5 random probes")
    {
        std::array<DayHours, kDaysPerWeek> days{};
        days[0] = {true, 8 * 60, 17 * 60 + 30};
        days[1] = {true, 9 * 60, 21 * 60};
        days[2] = {false, 0, 0};
        days[3] = {true, 0, 24 * 60};
        days[4] = {true, 10 * 60 + 15, 10 * 60 + 16};
        days[5] = {true, 7 * 60, 23 * 60};
        days[6] = {true, 12 * 60, 13 * 60};
        const Calendar cal(days, 3);
        std::mt19937_64 gen(99);
        std::uniform_real_distribution<double> t(0.0, cal.lifespan_minutes());
        int mismatches = 0;
        for (int i = 0; i < 100'000; ++i) {
            const double x = i % 10 == 0 ? std::floor(t(gen)) : t(gen); // integer minutes hit the edges
            const long whole_days = static_cast<long>(x / 1440.0);
            const double m = x - static_cast<double>(whole_days) * 1440.0;
            const DayHours& d = days[static_cast<std::size_t>(whole_days % 7)];
            const bool expected = d.open && m >= d.opening_minute && m < d.closing_minute;
            mismatches += cal.is_open(x) != expected ? 1 : 0;
        }
        CHECK(mismatches == 0);
    }

    TEST_CASE("calendar validation")
    {
        std::array<DayHours, kDaysPerWeek> days{};
        days[0] = {true, 600, 600};
        CHECK_THROWS_AS(Calendar(days, 1), ConfigError);
        days[0] = {true, 600, 700};
        CHECK_THROWS_AS(Calendar(days, 0), ConfigError);
        CHECK_NOTHROW(Calendar(days, 1));
    }

    TEST_CASE("open minutes between clips to opening hours")
    {
        const Calendar cal = Calendar::standard(1);
        CHECK(cal.open_minutes_between(0.0, 9 * 60.0) == 0.0);
        CHECK(cal.open_minutes_between(8 * 60.0, 10 * 60.0) == doctest::Approx(60.0));
        CHECK(cal.open_minutes_between(19 * 60.0, 24 * 60.0 + 9 * 60 + 30) == doctest::Approx(90.0));
    }

    TEST_CASE("splitmix64 matches the reference sequence")
    {
        // Reference outputs of splitmix64 seeded with 0.
        std::uint64_t state = 0;
        CHECK(splitmix64(state) == 0xE220A8397B1DCDAFULL);
        CHECK(splitmix64(state) == 0x6E789E6AA1B965F4ULL);
        CHECK(splitmix64(state) == 0x06C45D188009454FULL);
    }

    TEST_CASE("streams are reproducible and distinct")
    {
        RngStream a(123, StreamId::Delays);
        RngStream b(123, StreamId::Delays);
        RngStream c(123, StreamId::Decisions);
        RngStream d(124, StreamId::Delays);
        int same_ab = 0;
        int same_ac = 0;
        int same_ad = 0;
        for (int i = 0; i < 1000; ++i) {
            const auto x = a.next_u64();
            same_ab += x == b.next_u64() ? 1 : 0;
            same_ac += x == c.next_u64() ? 1 : 0;
            same_ad += x == d.next_u64() ? 1 : 0;
        }
        CHECK(same_ab == 1000);
        CHECK(same_ac == 0);
        CHECK(same_ad == 0);
        CHECK(a.draws() == 1000);
    }

    TEST_CASE("stream draws match mt19937_64 seeded through derive_seed")
    {
        RngStream s(2024, StreamId::Arrivals);
        std::mt19937_64 ref(derive_seed(2024, 1));
        for (int i = 0; i < 100; ++i) {
            const std::uint64_t r = ref();
            CHECK(s.next_u64() == r);
        }
        std::mt19937_64 ref2(derive_seed(2024, 1));
        RngStream s2(2024, StreamId::Arrivals);
        const double u = static_cast<double>(ref2() >> 11) / 9007199254740992.0;
        CHECK(s2.uniform01() == u);
    }

    TEST_CASE("uniform draws stay in range")
    {
        RngStream s(5, StreamId::PoolSelection);
        bool ok = true;
        for (int i = 0; i < 100000; ++i) {
            const double u = s.uniform01();
            ok = ok && u >= 0.0 && u < 1.0;
            ok = ok && s.uniform_index(7) < 7;
        }
        CHECK(ok);
        CHECK_THROWS_AS(s.uniform_index(0), ModelError);
    }
}
