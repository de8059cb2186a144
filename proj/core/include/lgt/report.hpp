#pragma once

#include <ostream>
#include <span>
#include <string>

#include "lgt/estimate.hpp"
#include "lgt/hexpotts.hpp"
#include "lgt/identities.hpp"

namespace lgt {

/// {"value", "stderr", "n", "method"}
std::string to_json(const Estimate& e);

/// {"name", "lhs", "rhs", "abs_diff", "gate", "passed", "gated", "meta"}.
/// Infinite or NaN numbers are written as strings.
std::string to_json(const IdentityReport& r);

/// All probabilities, defects and standard errors of one mesh.
std::string to_json(const IndependenceResult& r);

/// Header plus one row per mesh.
void write_csv(std::ostream& out, std::span<const IndependenceResult> results);

}  // namespace lgt
