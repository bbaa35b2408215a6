#pragma once

#include <cstddef>
#include <span>

namespace retailsim {

struct Summary {
    std::size_t n = 0;
    double mean = 0.0;
    double sd = 0.0;         // sample standard deviation
    double half_width = 0.0; // Student-t half-width at the requested confidence

    double lower() const noexcept { return mean - half_width; }
    double upper() const noexcept { return mean + half_width; }
};

// Two-sided Student-t critical value, e.g. confidence 0.95 and df 19 -> 2.093.
double t_critical(double confidence, double df);

/// Mean, sample sd and t confidence half-width. One observation gives a zero
/// half-width; an empty span gives an all-zero summary.
Summary summarize(std::span<const double> xs, double confidence = 0.95);

// Intervals that share no point.
bool disjoint(const Summary& a, const Summary& b) noexcept;

struct WelchResult {
    double t = 0.0;
    double df = 0.0;
    double p_one_sided = 1.0; // P(T >= t) under equal means: small when a > b
};

/// Welch's unequal-variance t test of mean(a) > mean(b).
WelchResult welch_greater(std::span<const double> a, std::span<const double> b);

} // namespace retailsim
