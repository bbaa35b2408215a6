#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "retailsim/agents/staff.hpp"
#include "retailsim/agents/states.hpp"
#include "retailsim/engine/rng.hpp"
#include "retailsim/engine/scheduler.hpp"
#include "retailsim/harness/scenario.hpp"
#include "retailsim/metrics/record.hpp"
#include "retailsim/metrics/satisfaction.hpp"
#include "retailsim/population/pool.hpp"
#include "retailsim/service/queue_system.hpp"

namespace retailsim {

enum class DepartmentEvent : std::uint8_t {
    HourStart,  // an arrival window opens; token = day * 24 + hour
    Arrival,    // token = arrival window
    BrowseDone, // token = customer step
    DecideDone, // token = customer step
    ServiceDone, // token = staff id
    Renege,     // token = queue ticket
    StoreClose, // token = day
    DrainCheck, // token = day
    WeekEnd,    // token = week number (1-based)
};

std::string_view to_string(DepartmentEvent e) noexcept;

/// Fine-grained record of what happened, for tests and offline audits.
struct TraceRecord {
    enum class Kind : std::uint8_t {
        Arrival,
        Enter,
        Exit,
        Transition,
        ServiceStart,
        ServiceEnd,
        Enqueue,
        Renege,
        Flush,
        Satisfaction,
        RefundRouted,
        StoreClose,
        DrainCheck,
    };

    Kind kind = Kind::Arrival;
    SimTime time = 0.0;
    std::uint32_t customer = 0;
    std::uint32_t staff = 0;
    ServiceKind service = ServiceKind::Till;
    CustomerState from = CustomerState::InPool;
    CustomerState to = CustomerState::InPool;
    CustomerTrigger trigger = CustomerTrigger::Release;
    SatisfactionEvent satisfaction = SatisfactionEvent::PurchaseCompleted;
    int weight = 0;
    double value = 0.0; // patience deadline, refund amount, join time, occupancy
    bool flag = false;  // lost arrival, served from queue, manager required
};

struct RunOptions {
    std::ostream* event_log = nullptr; // one text line per dispatched event
    std::function<void(const TraceRecord&)> trace;
    // Check after every event that no idle staff member could serve a waiter.
    bool audit_work_conservation = false;
};

/// One department over the whole lifespan: the finite customer pool, the
/// customer statechart, passive staff and the queues between them.
class Department {
public:
    Department(const ScenarioConfig& config, std::uint64_t run_seed, RunOptions options = {});

    Department(const Department&) = delete;
    Department& operator=(const Department&) = delete;

    /// Simulates the lifespan and returns the audited record. Throws
    /// InvariantViolation when any accounting identity fails.
    MetricsRecord run();

    const CustomerPool& pool() const noexcept { return pool_; }
    const StaffRoster& staff() const noexcept { return staff_; }
    const QueueSystem& queues() const noexcept { return queues_; }
    SimTime now() const noexcept { return scheduler_.now(); }

private:
    using Ev = Event<DepartmentEvent>;

    void seed_calendar_events();
    void dispatch(const Ev& ev);
    void log_event(const Ev& ev);

    void on_hour_start(std::uint64_t window);
    void on_arrival(std::uint64_t window);
    void schedule_next_arrival(std::uint64_t window);
    void on_enter(Customer& c);
    void on_browse_done(Customer& c);
    void on_decide_done(Customer& c);
    void on_service_done(Customer& c, StaffId staff);
    void on_renege(Customer& c, std::uint64_t ticket);
    void on_store_closing(std::uint64_t day);
    void on_drain_check(std::uint64_t day);
    void on_week_end(std::uint64_t week);

    enum class SeekOutcome { ImmediateService, Queued };
    SeekOutcome seek_service(Customer& c, ServiceKind kind);
    void start_service(StaffId staff, Customer& c, ServiceKind kind, bool from_queue);
    void allocate_next(StaffId staff);
    void start_browsing(Customer& c);
    void schedule_decision(Customer& c);
    void on_refund_complete(Customer& c);
    void leave_at_close(Customer& c);
    void exit(Customer& c);

    void apply(Customer& c, CustomerTrigger trigger);
    void record(Customer& c, SatisfactionEvent event);
    bool open_now() const;
    const TriangularSpec& service_spec(ServiceKind kind) const;
    void trace(TraceRecord rec) const;
    void audit_work_conservation();

    ScenarioConfig config_;
    RunOptions options_;
    Scheduler<DepartmentEvent> scheduler_;
    RngStreams streams_;
    CustomerPool pool_;
    StaffRoster staff_;
    QueueSystem queues_;
    SatisfactionLedger ledger_;
    MetricsRecord record_;
    std::vector<std::string> diagnostics_;

    bool draining_ = false;
    SimTime closed_at_ = 0.0;
    bool drained_ = true;
    std::uint64_t hash_ = 0xcbf29ce484222325ULL;
    bool ran_ = false;
};

} // namespace retailsim
