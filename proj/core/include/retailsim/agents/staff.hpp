#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "retailsim/engine/calendar.hpp"

namespace retailsim {

using StaffId = std::uint32_t;

enum class StaffRole : std::uint8_t { Cashier, SellerLevel1, SellerLevel2, Manager };
inline constexpr std::size_t kStaffRoleCount = 4;

enum class ServiceKind : std::uint8_t { HelpLevel1, HelpLevel2, Till, Refund, ManagerAuth };
inline constexpr std::size_t kServiceKindCount = 5;

inline constexpr std::array<ServiceKind, kServiceKindCount> kAllServiceKinds{
    ServiceKind::HelpLevel1, ServiceKind::HelpLevel2, ServiceKind::Till, ServiceKind::Refund,
    ServiceKind::ManagerAuth};
inline constexpr std::array<StaffRole, kStaffRoleCount> kAllStaffRoles{
    StaffRole::Cashier, StaffRole::SellerLevel1, StaffRole::SellerLevel2, StaffRole::Manager};

std::string_view to_string(StaffRole r) noexcept;
std::string_view to_string(ServiceKind k) noexcept;

// Cashier: till, refund. Level-1 seller: level-1 help. Level-2 seller: both
// help levels. Manager: refund authorisation only.
constexpr bool compatible(StaffRole role, ServiceKind kind) noexcept
{
    switch (role) {
    case StaffRole::Cashier:
        return kind == ServiceKind::Till || kind == ServiceKind::Refund;
    case StaffRole::SellerLevel1:
        return kind == ServiceKind::HelpLevel1;
    case StaffRole::SellerLevel2:
        return kind == ServiceKind::HelpLevel1 || kind == ServiceKind::HelpLevel2;
    case StaffRole::Manager:
        return kind == ServiceKind::ManagerAuth;
    }
    return false;
}

struct StaffCounts {
    int cashiers = 0;
    int sellers_level1 = 0;
    int sellers_level2 = 0;
    int managers = 0;

    int of(StaffRole role) const noexcept;
    bool operator==(const StaffCounts&) const = default;
};

struct StaffMember {
    StaffId id = 0;
    StaffRole role = StaffRole::Cashier;
    bool busy = false;
    std::uint32_t customer = 0;
    ServiceKind kind = ServiceKind::Till;
    double busy_since = 0.0;
    double busy_open_minutes = 0.0;
    std::array<std::uint64_t, kServiceKindCount> services{};
};

/// The passive staff side: members wait to be asked and stay busy until the
/// customer releases them.
class StaffRoster {
public:
    explicit StaffRoster(const StaffCounts& counts);

    std::size_t size() const noexcept { return staff_.size(); }
    const std::vector<StaffMember>& members() const noexcept { return staff_; }
    const StaffMember& operator[](StaffId id) const { return staff_.at(id); }
    std::size_t count(StaffRole role) const noexcept;

    /// Idle member able to provide `kind`. Exact-role specialists are tried
    /// before substitutes (a level-2 seller covers level-1 help only when no
    /// level-1 seller is idle); ties go to the lowest id.
    std::optional<StaffId> find_idle(ServiceKind kind) const;

    /// Marks the member busy with the customer. Throws ModelError when the
    /// member is busy or cannot provide the kind.
    void assign(StaffId id, std::uint32_t customer, ServiceKind kind, double now);

    /// Frees the member and credits the busy time that fell inside opening
    /// hours.
    void release(StaffId id, double now, const Calendar& calendar);

private:
    std::vector<StaffMember> staff_;
};

} // namespace retailsim
