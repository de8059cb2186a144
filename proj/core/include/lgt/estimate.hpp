#pragma once

#include <cstdint>
#include <string_view>

namespace lgt {

enum class Method { quadrature, monte_carlo, enumeration };

std::string_view to_string(Method method);

/// A numerical result. `std_error` is zero for the exact methods
/// (quadrature, enumeration) and the standard error of the mean otherwise.
/// `n` counts grid points, samples or enumerated states.
struct Estimate {
    double value = 0.0;
    double std_error = 0.0;
    std::uint64_t n = 0;
    Method method = Method::quadrature;

    static Estimate exact(double value, std::uint64_t n, Method method) {
        return {value, 0.0, n, method};
    }
};

}  // namespace lgt
