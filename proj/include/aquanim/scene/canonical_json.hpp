#pragma once

#include <string>

#include <json.hpp>

namespace aquanim {

// Deterministic JSON text: object keys sorted, no whitespace, floating point
// numbers printed with 17 significant digits so they parse back bit-exactly.
// Throws DomainError on NaN or infinity.
std::string canonical_dump(const nlohmann::json& value);

// "%.17g" formatting of a finite double.
std::string format_number(double value);

}  // namespace aquanim
