#include "retailsim/population/customer_type.hpp"

namespace retailsim {

namespace {

using L = LikelihoodClass;

// buy, wait, ask for help, ask for refund
constexpr std::array<CustomerTypeProfile, kCustomerTypeCount> kProfiles{{
    {"shopping_enthusiast", L::High, L::Moderate, L::Moderate, L::Low},
    {"solution_demander", L::High, L::Low, L::Low, L::Low},
    {"service_seeker", L::Moderate, L::High, L::High, L::Low},
    {"disinterested_shopper", L::Low, L::Low, L::Low, L::High},
    {"internet_shopper", L::Low, L::High, L::High, L::Low},
}};

} // namespace

const std::array<CustomerTypeProfile, kCustomerTypeCount>& builtin_profiles() noexcept
{
    return kProfiles;
}

const CustomerTypeProfile& profile(CustomerType type) noexcept
{
    return kProfiles[static_cast<std::size_t>(type)];
}

std::string_view to_string(CustomerType type) noexcept
{
    return profile(type).name;
}

std::optional<CustomerType> parse_customer_type(std::string_view s) noexcept
{
    for (std::size_t i = 0; i < kProfiles.size(); ++i) {
        if (kProfiles[i].name == s) {
            return static_cast<CustomerType>(i);
        }
    }
    return std::nullopt;
}

CustomerMix even_mix() noexcept
{
    CustomerMix mix{};
    mix.fill(1.0 / kCustomerTypeCount);
    return mix;
}

CustomerMix single_type_mix(CustomerType type) noexcept
{
    CustomerMix mix{};
    mix[static_cast<std::size_t>(type)] = 1.0;
    return mix;
}

} // namespace retailsim
