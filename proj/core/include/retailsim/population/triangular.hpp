#pragma once

#include <string>
#include <vector>

#include "retailsim/engine/rng.hpp"

namespace retailsim {

// Triangular(min, mode, max). Durations are in minutes, amounts in pounds.
struct TriangularSpec {
    double min = 0.0;
    double mode = 0.0;
    double max = 0.0;

    bool valid() const noexcept;
    double mean() const noexcept { return (min + mode + max) / 3.0; }
    // P(X <= x) for the analytic distribution.
    double cdf(double x) const noexcept;

    bool operator==(const TriangularSpec&) const = default;
};

// Appends a message to problems when spec is not 0 <= min <= mode <= max.
void check_triangular(const TriangularSpec& spec, const std::string& path, std::vector<std::string>& problems);

// Inverse-CDF draw; exactly one uniform is consumed.
double sample_triangular(const TriangularSpec& spec, RngStream& stream);

} // namespace retailsim
