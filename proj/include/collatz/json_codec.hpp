#pragma once

#include <json.hpp>

#include "collatz/arith.hpp"

namespace collatz {

/// Reads a Nat written as a decimal string (the canonical form) or as an
/// unsigned JSON number.
Nat nat_from_json(const nlohmann::json& value);

}  // namespace collatz
