#include "retailsim/agents/department.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <ostream>

#include "retailsim/agents/decisions.hpp"
#include "retailsim/agents/refund.hpp"
#include "retailsim/error.hpp"

namespace retailsim {

std::string_view to_string(DepartmentEvent e) noexcept
{
    switch (e) {
    case DepartmentEvent::HourStart:
        return "hour_start";
    case DepartmentEvent::Arrival:
        return "arrival";
    case DepartmentEvent::BrowseDone:
        return "browse_done";
    case DepartmentEvent::DecideDone:
        return "decide_done";
    case DepartmentEvent::ServiceDone:
        return "service_done";
    case DepartmentEvent::Renege:
        return "renege";
    case DepartmentEvent::StoreClose:
        return "store_close";
    case DepartmentEvent::DrainCheck:
        return "drain_check";
    case DepartmentEvent::WeekEnd:
        return "week_end";
    }
    return "?";
}

namespace {

using TK = TraceRecord::Kind;

void fnv_mix(std::uint64_t& h, std::uint64_t v)
{
    for (int i = 0; i < 8; ++i) {
        h ^= (v >> (8 * i)) & 0xffU;
        h *= 0x100000001b3ULL;
    }
}

std::size_t idx(ServiceKind k)
{
    return static_cast<std::size_t>(k);
}

} // namespace

Department::Department(const ScenarioConfig& config, std::uint64_t run_seed, RunOptions options)
    : config_(config),
      options_(std::move(options)),
      streams_(run_seed),
      pool_(config.pool_size, config.mix),
      staff_(config.staffing),
      ledger_(config.weights)
{
    if (auto problems = validate(config_); !problems.empty()) {
        throw ConfigError(std::move(problems));
    }
    record_.seed = run_seed;
}

MetricsRecord Department::run()
{
    if (ran_) {
        throw ModelError("a Department runs once");
    }
    ran_ = true;
    seed_calendar_events();
    scheduler_.run_until(config_.calendar.lifespan_minutes(), [this](const Ev& ev) { dispatch(ev); });

    record_.events = scheduler_.dispatched();
    record_.event_log_hash = hash_;
    RunSnapshot snapshot{pool_, staff_, queues_, config_.calendar, ledger_, diagnostics_};
    finalize(record_, snapshot);
    return record_;
}

void Department::seed_calendar_events()
{
    const Calendar& cal = config_.calendar;
    for (int day = 0; day < cal.lifespan_days(); ++day) {
        const int weekday = day % kDaysPerWeek;
        const DayHours& h = cal.day(weekday);
        if (!h.open) {
            continue;
        }
        const SimTime midnight = day * kMinutesPerDay;
        for (int hour = 0; hour < kHoursPerDay; ++hour) {
            const int start = std::max(hour * 60, h.opening_minute);
            const int end = std::min((hour + 1) * 60, h.closing_minute);
            if (end > start && config_.footfall.at(weekday, hour) > 0.0) {
                scheduler_.schedule(midnight + start, DepartmentEvent::HourStart, kSystemTarget,
                                    static_cast<std::uint64_t>(day) * kHoursPerDay + static_cast<std::uint64_t>(hour));
            }
        }
        const SimTime close = midnight + h.closing_minute;
        scheduler_.schedule(close, DepartmentEvent::StoreClose, kSystemTarget, static_cast<std::uint64_t>(day));
        scheduler_.schedule(close + config_.closing_drain_limit, DepartmentEvent::DrainCheck, kSystemTarget,
                            static_cast<std::uint64_t>(day));
    }
    for (int week = 1; week <= cal.lifespan_weeks(); ++week) {
        scheduler_.schedule(week * kMinutesPerWeek, DepartmentEvent::WeekEnd, kSystemTarget,
                            static_cast<std::uint64_t>(week));
    }
}

void Department::log_event(const Ev& ev)
{
    fnv_mix(hash_, std::bit_cast<std::uint64_t>(ev.fire_time));
    fnv_mix(hash_, ev.sequence_no);
    fnv_mix(hash_, static_cast<std::uint64_t>(ev.kind));
    fnv_mix(hash_, ev.target);
    fnv_mix(hash_, ev.token);
    if (options_.event_log != nullptr) {
        char line[128];
        const int n = std::snprintf(line, sizeof line, "%.6f %llu %s %u %llu\n", ev.fire_time,
                                    static_cast<unsigned long long>(ev.sequence_no),
                                    std::string(to_string(ev.kind)).c_str(), ev.target,
                                    static_cast<unsigned long long>(ev.token));
        options_.event_log->write(line, n);
    }
}

void Department::dispatch(const Ev& ev)
{
    log_event(ev);
    switch (ev.kind) {
    case DepartmentEvent::HourStart:
        on_hour_start(ev.token);
        break;
    case DepartmentEvent::Arrival:
        on_arrival(ev.token);
        break;
    case DepartmentEvent::BrowseDone: {
        Customer& c = pool_[ev.target];
        if (c.step == ev.token) {
            on_browse_done(c);
        }
        break;
    }
    case DepartmentEvent::DecideDone: {
        Customer& c = pool_[ev.target];
        if (c.step == ev.token) {
            on_decide_done(c);
        }
        break;
    }
    case DepartmentEvent::ServiceDone:
        on_service_done(pool_[ev.target], static_cast<StaffId>(ev.token));
        break;
    case DepartmentEvent::Renege:
        on_renege(pool_[ev.target], ev.token);
        break;
    case DepartmentEvent::StoreClose:
        on_store_closing(ev.token);
        break;
    case DepartmentEvent::DrainCheck:
        on_drain_check(ev.token);
        break;
    case DepartmentEvent::WeekEnd:
        on_week_end(ev.token);
        break;
    }
    if (options_.audit_work_conservation) {
        audit_work_conservation();
    }
}

// --- arrivals ----------------------------------------------------------------

void Department::on_hour_start(std::uint64_t window)
{
    schedule_next_arrival(window);
}

void Department::schedule_next_arrival(std::uint64_t window)
{
    const auto day = static_cast<int>(window / kHoursPerDay);
    const auto hour = static_cast<int>(window % kHoursPerDay);
    const int weekday = day % kDaysPerWeek;
    const DayHours& h = config_.calendar.day(weekday);
    const SimTime end = day * kMinutesPerDay + std::min((hour + 1) * 60, h.closing_minute);
    const auto next = next_arrival_in_window(scheduler_.now(), end, weekday, hour, config_.footfall,
                                             streams_[StreamId::Arrivals]);
    if (next) {
        scheduler_.schedule(*next, DepartmentEvent::Arrival, kSystemTarget, window);
    }
}

void Department::on_arrival(std::uint64_t window)
{
    ++record_.footfall;
    const auto id = pool_.release(scheduler_.now(), streams_[StreamId::PoolSelection]);
    trace({.kind = TK::Arrival, .time = scheduler_.now(), .customer = id.value_or(0), .flag = !id.has_value()});
    if (!id) {
        ++record_.lost_footfall;
    } else {
        Customer& c = pool_[*id];
        trace({.kind = TK::Transition,
               .time = scheduler_.now(),
               .customer = c.id,
               .from = CustomerState::InPool,
               .to = CustomerState::Entering,
               .trigger = CustomerTrigger::Release});
        on_enter(c);
    }
    schedule_next_arrival(window);
}

// --- customer statechart -------------------------------------------------------

void Department::apply(Customer& c, CustomerTrigger trigger)
{
    const auto next = next_state(c.state, trigger);
    if (!next) {
        throw ModelError("customer " + std::to_string(c.id) + ": no transition for " +
                         std::string(to_string(trigger)) + " in " + std::string(to_string(c.state)));
    }
    trace({.kind = TK::Transition,
           .time = scheduler_.now(),
           .customer = c.id,
           .from = c.state,
           .to = *next,
           .trigger = trigger});
    c.state = *next;
    ++c.step;
}

void Department::record(Customer& c, SatisfactionEvent event)
{
    ledger_.record(c, event);
    trace({.kind = TK::Satisfaction,
           .time = scheduler_.now(),
           .customer = c.id,
           .satisfaction = event,
           .weight = config_.weights[event]});
}

bool Department::open_now() const
{
    return config_.calendar.is_open(scheduler_.now());
}

void Department::on_enter(Customer& c)
{
    ++c.visits;
    ++record_.entries;
    ++record_.entries_by_type[static_cast<std::size_t>(c.type)];
    trace({.kind = TK::Enter, .time = scheduler_.now(), .customer = c.id});

    c.goal = choose_goal(c, config_.probabilities.ask_refund, config_.adjustment, streams_[StreamId::Decisions]);
    if (c.goal == CustomerGoal::Refund) {
        c.ever_sought_refund = true;
        ++record_.refund_requests;
        c.refund_amount = sample_triangular(config_.refund_amount, streams_[StreamId::RefundAmounts]);
        seek_service(c, ServiceKind::Refund);
    } else {
        start_browsing(c);
    }
}

void Department::start_browsing(Customer& c)
{
    apply(c, CustomerTrigger::Browse);
    const TriangularSpec spec = config_.adjustment.delay(config_.durations.browse, LikelihoodClass::Moderate);
    const double d = sample_triangular(spec, streams_[StreamId::Delays]);
    scheduler_.schedule(scheduler_.now() + d, DepartmentEvent::BrowseDone, c.id, c.step);
}

void Department::on_browse_done(Customer& c)
{
    const auto help = choose_help(c, config_.probabilities.ask_help, config_.probabilities.level2_help,
                                  config_.adjustment, streams_[StreamId::Decisions]);
    if (!open_now()) {
        leave_at_close(c);
        return;
    }
    if (help) {
        apply(c, CustomerTrigger::WantHelp);
        seek_service(c, *help);
    } else {
        apply(c, CustomerTrigger::SkipHelp);
        schedule_decision(c);
    }
}

void Department::schedule_decision(Customer& c)
{
    const double d = sample_triangular(config_.durations.decide, streams_[StreamId::Delays]);
    scheduler_.schedule(scheduler_.now() + d, DepartmentEvent::DecideDone, c.id, c.step);
}

void Department::on_decide_done(Customer& c)
{
    const auto decision =
        decide_purchase(c, config_.probabilities.conversion_rate, config_.adjustment, streams_[StreamId::Decisions]);
    if (!open_now()) {
        leave_at_close(c);
        return;
    }
    if (decision == PurchaseDecision::Buy) {
        ++record_.buy_decisions;
        seek_service(c, ServiceKind::Till);
    } else {
        ++record_.left_without_buying;
        record(c, SatisfactionEvent::LeftWithoutBuying);
        apply(c, CustomerTrigger::Leave);
        exit(c);
    }
}

Department::SeekOutcome Department::seek_service(Customer& c, ServiceKind kind)
{
    if (const auto s = staff_.find_idle(kind)) {
        apply(c, CustomerTrigger::ServiceStart);
        ++record_.served_immediately[idx(kind)];
        start_service(*s, c, kind, false);
        return SeekOutcome::ImmediateService;
    }
    apply(c, CustomerTrigger::JoinQueue);
    const SimTime now = scheduler_.now();
    const double patience =
        sample_patience(c, config_.durations.patience, config_.adjustment, streams_[StreamId::Delays]);
    const SimTime deadline = now + patience;
    const auto ticket = queues_.enqueue(c.id, kind, now, deadline);
    ++record_.enqueued[idx(kind)];
    trace({.kind = TK::Enqueue, .time = now, .customer = c.id, .service = kind, .value = deadline});
    if (deadline <= config_.calendar.lifespan_minutes()) {
        scheduler_.schedule(deadline, DepartmentEvent::Renege, c.id, ticket);
    }
    return SeekOutcome::Queued;
}

void Department::start_service(StaffId staff, Customer& c, ServiceKind kind, bool from_queue)
{
    const SimTime now = scheduler_.now();
    staff_.assign(staff, c.id, kind, now);
    const double d = sample_triangular(service_spec(kind), streams_[StreamId::Delays]);
    scheduler_.schedule(now + d, DepartmentEvent::ServiceDone, c.id, staff);
    trace({.kind = TK::ServiceStart, .time = now, .customer = c.id, .staff = staff, .service = kind, .flag = from_queue});
}

const TriangularSpec& Department::service_spec(ServiceKind kind) const
{
    switch (kind) {
    case ServiceKind::HelpLevel1:
        return config_.durations.help_level1;
    case ServiceKind::HelpLevel2:
        return config_.durations.help_level2;
    case ServiceKind::Till:
        return config_.durations.till;
    case ServiceKind::Refund:
        return config_.durations.refund;
    case ServiceKind::ManagerAuth:
        return config_.durations.manager_auth;
    }
    throw ModelError("unknown service kind");
}

void Department::allocate_next(StaffId staff)
{
    if (staff_[staff].busy) {
        return;
    }
    const auto entry = queues_.allocate_next(staff_[staff].role);
    if (!entry) {
        return;
    }
    ++record_.served_from_queue[idx(entry->kind)];
    Customer& c = pool_[entry->customer];
    apply(c, CustomerTrigger::ServiceStart);
    start_service(staff, c, entry->kind, true);
}

void Department::on_service_done(Customer& c, StaffId staff)
{
    const SimTime now = scheduler_.now();
    const ServiceKind kind = staff_[staff].kind;
    if (staff_[staff].customer != c.id) {
        throw ModelError("service completion for a customer the staff member is not serving");
    }
    staff_.release(staff, now, config_.calendar);
    trace({.kind = TK::ServiceEnd, .time = now, .customer = c.id, .staff = staff, .service = kind});
    allocate_next(staff);

    switch (kind) {
    case ServiceKind::HelpLevel1:
    case ServiceKind::HelpLevel2:
        record(c, SatisfactionEvent::HelpReceived);
        apply(c, CustomerTrigger::ServiceDone);
        if (open_now()) {
            schedule_decision(c);
        } else {
            leave_at_close(c);
        }
        break;
    case ServiceKind::Till:
        record(c, SatisfactionEvent::PurchaseCompleted);
        ++c.purchases;
        ++record_.transactions;
        ++record_.transactions_by_type[static_cast<std::size_t>(c.type)];
        apply(c, CustomerTrigger::ServiceDone);
        exit(c);
        break;
    case ServiceKind::Refund: {
        RefundRequest request{c.refund_amount, false};
        const auto route = refund_route(request, config_.empowerment, config_.refund_threshold,
                                        streams_[StreamId::Decisions]);
        request.requires_manager = route == RefundRoute::ManagerRequired;
        ++record_.refund_routings;
        if (request.amount <= config_.refund_threshold) {
            ++record_.subthreshold_routings;
            record_.subthreshold_manager_routings += request.requires_manager ? 1 : 0;
        }
        trace({.kind = TK::RefundRouted, .time = now, .customer = c.id, .value = request.amount,
               .flag = request.requires_manager});
        if (request.requires_manager) {
            apply(c, CustomerTrigger::NeedManager);
            seek_service(c, ServiceKind::ManagerAuth);
        } else {
            record(c, SatisfactionEvent::RefundGrantedByCashier);
            ++record_.refunds;
            ++record_.refunds_by_cashier;
            on_refund_complete(c);
        }
        break;
    }
    case ServiceKind::ManagerAuth:
        record(c, SatisfactionEvent::RefundViaManager);
        ++record_.refunds;
        ++record_.refunds_via_manager;
        on_refund_complete(c);
        break;
    }
}

void Department::on_refund_complete(Customer& c)
{
    c.goal = CustomerGoal::Purchase;
    if (c.purchases > 0) {
        --c.purchases;
    }
    const bool regoal = regoal_after_refund(config_.probabilities.regoal, streams_[StreamId::Decisions]);
    if (regoal && open_now()) {
        ++record_.refund_regoals;
        start_browsing(c);
    } else {
        apply(c, CustomerTrigger::ServiceDone);
        exit(c);
    }
}

void Department::on_renege(Customer& c, std::uint64_t ticket)
{
    const auto entry = queues_.renege(c.id, ticket);
    if (!entry) {
        return;
    }
    ++record_.reneged[idx(entry->kind)];
    trace({.kind = TK::Renege, .time = scheduler_.now(), .customer = c.id, .service = entry->kind});
    record(c, SatisfactionEvent::RenegedFromQueue);
    apply(c, CustomerTrigger::Renege);
    exit(c);
}

void Department::leave_at_close(Customer& c)
{
    ++record_.left_at_close;
    record(c, SatisfactionEvent::LeftAtCloseUnserved);
    apply(c, CustomerTrigger::Closing);
    exit(c);
}

void Department::exit(Customer& c)
{
    const SimTime now = scheduler_.now();
    ++record_.exits;
    if (c.goal == CustomerGoal::Refund) {
        // Walked out before the refund was settled; the goal does not carry over.
        c.goal = CustomerGoal::Purchase;
    }
    const double rest = sample_triangular(config_.durations.resting, streams_[StreamId::Delays]);
    trace({.kind = TK::Exit, .time = now, .customer = c.id});
    trace({.kind = TK::Transition,
           .time = now,
           .customer = c.id,
           .from = CustomerState::Exiting,
           .to = CustomerState::InPool,
           .trigger = CustomerTrigger::ReturnToPool});
    pool_.return_to_pool(c.id, now, rest);
    if (draining_ && !drained_ && pool_.in_store() == 0) {
        drained_ = true;
        record_.max_drain_minutes = std::max(record_.max_drain_minutes, now - closed_at_);
    }
}

// --- calendar ------------------------------------------------------------------

void Department::on_store_closing(std::uint64_t day)
{
    const SimTime now = scheduler_.now();
    ++record_.open_days;
    draining_ = true;
    drained_ = false;
    closed_at_ = now;
    record_.till_queued_at_close += queues_.queue(ServiceKind::Till).size();
    trace({.kind = TK::StoreClose, .time = now, .customer = static_cast<std::uint32_t>(day),
           .value = static_cast<double>(pool_.in_store())});

    for (ServiceKind kind : {ServiceKind::HelpLevel1, ServiceKind::HelpLevel2}) {
        const auto flushed = queues_.flush(kind);
        record_.flushed_at_close[idx(kind)] += flushed.size();
        for (const auto& e : flushed) {
            trace({.kind = TK::Flush, .time = now, .customer = e.customer, .service = kind});
        }
    }
    for (Customer& c : pool_.members()) {
        if (c.state == CustomerState::InPool) {
            continue;
        }
        if (exits_at_closing(c.state)) {
            leave_at_close(c);
        } else {
            apply(c, CustomerTrigger::Closing);
        }
    }
    if (pool_.in_store() == 0) {
        drained_ = true;
    }
}

void Department::on_drain_check(std::uint64_t day)
{
    const std::size_t inside = pool_.in_store();
    trace({.kind = TK::DrainCheck, .time = scheduler_.now(), .customer = static_cast<std::uint32_t>(day),
           .value = static_cast<double>(inside)});
    if (inside == 0) {
        ++record_.days_emptied_in_time;
    } else {
        diagnostics_.push_back("day " + std::to_string(day) + ": " + std::to_string(inside) +
                               " customers still inside " + std::to_string(config_.closing_drain_limit) +
                               " minutes after closing");
        record_.max_drain_minutes = std::max(record_.max_drain_minutes, config_.closing_drain_limit);
    }
    draining_ = false;
}

void Department::on_week_end(std::uint64_t)
{
    std::uint64_t neutral = 0;
    for (const Customer& c : pool_.members()) {
        neutral += c.satisfaction == 0 ? 1 : 0;
    }
    record_.neutral_fraction_by_week.push_back(static_cast<double>(neutral) / static_cast<double>(pool_.size()));
}

// --- instrumentation -------------------------------------------------------------

void Department::trace(TraceRecord rec) const
{
    if (options_.trace) {
        options_.trace(rec);
    }
}

void Department::audit_work_conservation()
{
    for (const StaffMember& m : staff_.members()) {
        if (!m.busy && queues_.has_compatible_waiter(m.role)) {
            diagnostics_.push_back("t=" + std::to_string(scheduler_.now()) + ": idle " +
                                   std::string(to_string(m.role)) + " while a compatible customer waits");
            return;
        }
    }
}

} // namespace retailsim
