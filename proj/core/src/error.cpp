#include "retailsim/error.hpp"

namespace retailsim {

namespace {

std::string join_lines(const std::string& head, const std::vector<std::string>& lines)
{
    std::string out = head;
    for (const auto& line : lines) {
        out += "\n  ";
        out += line;
    }
    return out;
}

} // namespace

ConfigError::ConfigError(std::vector<std::string> problems)
    : std::runtime_error(join_lines("invalid scenario:", problems)), problems_(std::move(problems))
{
}

InvariantViolation::InvariantViolation(std::vector<std::string> diagnostics)
    : std::runtime_error(join_lines("run invariant violated:", diagnostics)), diagnostics_(std::move(diagnostics))
{
}

} // namespace retailsim
