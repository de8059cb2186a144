#include "lgt/error.hpp"

namespace lgt {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::invalid_argument: return "invalid-argument";
        case ErrorKind::invalid_topology: return "invalid-topology";
        case ErrorKind::resource_limit: return "resource-limit";
        case ErrorKind::unsupported_operation: return "unsupported-operation";
        case ErrorKind::degenerate_normalization: return "degenerate-normalization";
        case ErrorKind::degenerate_configuration: return "degenerate-configuration";
        case ErrorKind::invalid_observable: return "invalid-observable";
        case ErrorKind::table_corruption: return "table-corruption";
    }
    return "unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

}  // namespace lgt
