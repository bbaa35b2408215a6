#include "retailsim/population/likelihood.hpp"

#include "retailsim/error.hpp"

namespace retailsim {

std::string_view to_string(LikelihoodClass c) noexcept
{
    switch (c) {
    case LikelihoodClass::Low:
        return "low";
    case LikelihoodClass::Moderate:
        return "moderate";
    case LikelihoodClass::High:
        return "high";
    }
    return "?";
}

std::optional<LikelihoodClass> parse_likelihood(std::string_view s) noexcept
{
    if (s == "low") {
        return LikelihoodClass::Low;
    }
    if (s == "moderate") {
        return LikelihoodClass::Moderate;
    }
    if (s == "high") {
        return LikelihoodClass::High;
    }
    return std::nullopt;
}

double LikelihoodAdjustment::probability(double base, LikelihoodClass c) const
{
    if (!(base >= 0.0 && base <= 1.0)) {
        throw ConfigError("probability " + std::to_string(base) + " outside [0, 1]");
    }
    switch (c) {
    case LikelihoodClass::Low:
        return base - shift * base;
    case LikelihoodClass::Moderate:
        return base;
    case LikelihoodClass::High:
        return base + shift * (1.0 - base);
    }
    return base;
}

TriangularSpec LikelihoodAdjustment::delay(const TriangularSpec& spec, LikelihoodClass c) const
{
    if (!spec.valid()) {
        throw ConfigError("invalid triangular spec");
    }
    TriangularSpec out = spec;
    switch (c) {
    case LikelihoodClass::Low:
        out.mode = spec.mode - shift * (spec.mode - spec.min);
        break;
    case LikelihoodClass::Moderate:
        break;
    case LikelihoodClass::High:
        out.mode = spec.mode + shift * (spec.max - spec.mode);
        break;
    }
    return out;
}

double adjust_probability(double base, LikelihoodClass c)
{
    return LikelihoodAdjustment{}.probability(base, c);
}

TriangularSpec adjust_delay(const TriangularSpec& spec, LikelihoodClass c)
{
    return LikelihoodAdjustment{}.delay(spec, c);
}

} // namespace retailsim
