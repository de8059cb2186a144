#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lgt {

enum class ErrorKind {
    invalid_argument,
    invalid_topology,
    resource_limit,
    unsupported_operation,
    degenerate_normalization,
    degenerate_configuration,
    invalid_observable,
    table_corruption,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries one of the kinds above so the
// CLI and tests can tell them apart without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message);

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

}  // namespace lgt
