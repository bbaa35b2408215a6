#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include "retailsim/population/likelihood.hpp"

namespace retailsim {

enum class CustomerType : std::uint8_t {
    ShoppingEnthusiast,
    SolutionDemander,
    ServiceSeeker,
    DisinterestedShopper,
    InternetShopper,
};

inline constexpr std::size_t kCustomerTypeCount = 5;

struct CustomerTypeProfile {
    std::string_view name;
    LikelihoodClass buy;
    LikelihoodClass wait;
    LikelihoodClass ask_help;
    LikelihoodClass ask_refund;
};

// The five behavioural types, indexed by CustomerType.
const std::array<CustomerTypeProfile, kCustomerTypeCount>& builtin_profiles() noexcept;
const CustomerTypeProfile& profile(CustomerType type) noexcept;

std::string_view to_string(CustomerType type) noexcept;
std::optional<CustomerType> parse_customer_type(std::string_view s) noexcept;

// Population share per CustomerType.
using CustomerMix = std::array<double, kCustomerTypeCount>;

CustomerMix even_mix() noexcept;
CustomerMix single_type_mix(CustomerType type) noexcept;

} // namespace retailsim
