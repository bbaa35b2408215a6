#include "retailsim/population/triangular.hpp"

#include <cmath>

namespace retailsim {

bool TriangularSpec::valid() const noexcept
{
    return std::isfinite(min) && std::isfinite(mode) && std::isfinite(max) && 0.0 <= min && min <= mode &&
           mode <= max;
}

double TriangularSpec::cdf(double x) const noexcept
{
    if (x < min) {
        return 0.0;
    }
    if (x >= max) {
        return 1.0;
    }
    const double width = max - min;
    if (x <= mode) {
        return (x - min) * (x - min) / (width * (mode - min));
    }
    return 1.0 - (max - x) * (max - x) / (width * (max - mode));
}

void check_triangular(const TriangularSpec& spec, const std::string& path, std::vector<std::string>& problems)
{
    if (!spec.valid()) {
        problems.push_back(path + ": triangular spec needs finite 0 <= min <= mode <= max");
    }
}

double sample_triangular(const TriangularSpec& spec, RngStream& stream)
{
    const double u = stream.uniform01();
    const double width = spec.max - spec.min;
    if (width <= 0.0) {
        return spec.min;
    }
    const double left = spec.mode - spec.min;
    if (u * width < left) {
        return spec.min + std::sqrt(u * width * left);
    }
    return spec.max - std::sqrt((1.0 - u) * width * (spec.max - spec.mode));
}

} // namespace retailsim
