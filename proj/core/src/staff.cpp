#include "retailsim/agents/staff.hpp"

#include <string>

#include "retailsim/error.hpp"

namespace retailsim {

std::string_view to_string(StaffRole r) noexcept
{
    switch (r) {
    case StaffRole::Cashier:
        return "cashier";
    case StaffRole::SellerLevel1:
        return "seller_level1";
    case StaffRole::SellerLevel2:
        return "seller_level2";
    case StaffRole::Manager:
        return "manager";
    }
    return "?";
}

std::string_view to_string(ServiceKind k) noexcept
{
    switch (k) {
    case ServiceKind::HelpLevel1:
        return "help_level1";
    case ServiceKind::HelpLevel2:
        return "help_level2";
    case ServiceKind::Till:
        return "till";
    case ServiceKind::Refund:
        return "refund";
    case ServiceKind::ManagerAuth:
        return "manager_auth";
    }
    return "?";
}

int StaffCounts::of(StaffRole role) const noexcept
{
    switch (role) {
    case StaffRole::Cashier:
        return cashiers;
    case StaffRole::SellerLevel1:
        return sellers_level1;
    case StaffRole::SellerLevel2:
        return sellers_level2;
    case StaffRole::Manager:
        return managers;
    }
    return 0;
}

StaffRoster::StaffRoster(const StaffCounts& counts)
{
    for (StaffRole role : kAllStaffRoles) {
        const int n = counts.of(role);
        if (n < 0) {
            throw ConfigError("staffing." + std::string(to_string(role)) + ": must be >= 0");
        }
        for (int k = 0; k < n; ++k) {
            StaffMember m;
            m.id = static_cast<StaffId>(staff_.size());
            m.role = role;
            staff_.push_back(m);
        }
    }
}

std::size_t StaffRoster::count(StaffRole role) const noexcept
{
    std::size_t n = 0;
    for (const auto& m : staff_) {
        n += m.role == role ? 1 : 0;
    }
    return n;
}

std::optional<StaffId> StaffRoster::find_idle(ServiceKind kind) const
{
    std::optional<StaffId> substitute;
    for (const auto& m : staff_) {
        if (m.busy || !compatible(m.role, kind)) {
            continue;
        }
        const bool specialist = !(kind == ServiceKind::HelpLevel1 && m.role == StaffRole::SellerLevel2);
        if (specialist) {
            return m.id;
        }
        if (!substitute) {
            substitute = m.id;
        }
    }
    return substitute;
}

void StaffRoster::assign(StaffId id, std::uint32_t customer, ServiceKind kind, double now)
{
    StaffMember& m = staff_.at(id);
    if (!compatible(m.role, kind)) {
        throw ModelError(std::string(to_string(m.role)) + " cannot provide " + std::string(to_string(kind)));
    }
    if (m.busy) {
        throw ModelError("staff member " + std::to_string(id) + " is already busy");
    }
    m.busy = true;
    m.customer = customer;
    m.kind = kind;
    m.busy_since = now;
    ++m.services[static_cast<std::size_t>(kind)];
}

void StaffRoster::release(StaffId id, double now, const Calendar& calendar)
{
    StaffMember& m = staff_.at(id);
    if (!m.busy) {
        throw ModelError("staff member " + std::to_string(id) + " released while idle");
    }
    m.busy = false;
    m.busy_open_minutes += calendar.open_minutes_between(m.busy_since, now);
}

} // namespace retailsim
