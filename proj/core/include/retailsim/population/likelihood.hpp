#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "retailsim/population/triangular.hpp"

namespace retailsim {

enum class LikelihoodClass : std::uint8_t { Low, Moderate, High };

std::string_view to_string(LikelihoodClass c) noexcept;
std::optional<LikelihoodClass> parse_likelihood(std::string_view s) noexcept;

/// Turns a moderate (population-average) value into a low or high one.
///
/// A moderate class keeps the base value. A high class moves it `shift` of
/// the way toward its upper bound and a low class `shift` of the way toward
/// its lower bound. For probabilities the bounds are 0 and 1; for triangular
/// delays only the mode moves, between the spec's min and max. The default
/// shift of one half is the midpoint rule.
struct LikelihoodAdjustment {
    double shift = 0.5;

    double probability(double base, LikelihoodClass c) const;
    TriangularSpec delay(const TriangularSpec& spec, LikelihoodClass c) const;

    bool operator==(const LikelihoodAdjustment&) const = default;
};

// Midpoint-rule shorthands. Throw ConfigError for base outside [0, 1] or an
// invalid spec.
double adjust_probability(double base, LikelihoodClass c);
TriangularSpec adjust_delay(const TriangularSpec& spec, LikelihoodClass c);

} // namespace retailsim
