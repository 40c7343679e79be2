#pragma once

// JSON documents shared by the C API and the command-line tool. Key order is
// fixed and expressions print in graded-lex order, so output is byte-stable.

#include <string>
#include <string_view>

#include "wfp/models.hpp"
#include "wfp/poisson.hpp"

namespace wfp {

inline constexpr std::string_view kToolkitVersion = "1.0.0";
inline constexpr std::string_view kSchemaVersion = "1";

// {"coords": ["x","y","z","t"], "k": string|null, "matrix": 4x4 strings}
std::string bivector_to_json(const Bivector& b);

// Inverse of bivector_to_json. Throws std::invalid_argument on a malformed
// document and ParseError/OverflowError on a bad expression.
Bivector bivector_from_json(std::string_view json);

std::string jacobi_to_json(const Bivector& b);
std::string linear_part_to_json(const StructureConstants& sc);

// Catalogue of all models with s kept symbolic.
std::string catalogue_to_json();

}  // namespace wfp
