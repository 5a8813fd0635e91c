#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "gschur/exactmath/laurent.hpp"
#include "gschur/exactmath/matrix.hpp"
#include "gschur/fock/decomposition.hpp"
#include "gschur/fock/fock_space.hpp"

namespace gschur {

using Json = nlohmann::json;

enum class Convention { V, VInverse };

/// [[exponent, coefficient], ...] with exponents descending; coefficients are
/// JSON integers when they fit in 64 bits and decimal strings otherwise.
Json laurent_to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j);

Json cyclo_to_json(const CycloNum& c);
CycloNum cyclo_from_json(int e, const Json& j);
Json matrix_to_json(const CycloMatrix& m);
CycloMatrix matrix_from_json(int e, const Json& j);

Json fock_to_json(const FockVector& x);
FockVector fock_from_json(const Json& j);

/// Entries are written in the requested convention: V stores d(v), VInverse
/// stores d(v^-1).  Unknown columns are written as null.
Json decomposition_to_json(const DecompositionMatrix& d, Convention conv, const std::vector<bool>& known = {});
DecompositionMatrix decomposition_from_json(const Json& j, std::vector<bool>* known = nullptr);

/// Lower triangular table, least dominant partition first, "." for zero and
/// "?" for unknown columns; entries shown as d(v) or d(v^-1).
std::string render_gap_text(const DecompositionMatrix& d, Convention conv, const std::vector<bool>& known = {});
/// Classical layout: most dominant first, (lambda, mu) entry d_{lambda' mu'}(1).
std::string render_classical(const DecompositionMatrix& d);

std::string matrix_to_text(const CycloMatrix& m, const std::string& indent = "  ");

}  // namespace gschur
