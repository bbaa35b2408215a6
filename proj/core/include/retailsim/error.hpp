#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace retailsim {

// Raised when the simulation reaches a state the model forbids, e.g. an
// event scheduled in the past or a staff member paired with a kind of
// service they cannot perform. Always a programming error.
class ModelError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// A scenario failed validation. Carries every problem found, each prefixed
// with the offending field path.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(std::vector<std::string> problems);
    explicit ConfigError(const std::string& problem) : ConfigError(std::vector<std::string>{problem}) {}

    const std::vector<std::string>& problems() const noexcept { return problems_; }

private:
    std::vector<std::string> problems_;
};

// A finished run broke one of its conservation or accounting identities.
class InvariantViolation : public std::runtime_error {
public:
    explicit InvariantViolation(std::vector<std::string> diagnostics);

    const std::vector<std::string>& diagnostics() const noexcept { return diagnostics_; }

private:
    std::vector<std::string> diagnostics_;
};

} // namespace retailsim
