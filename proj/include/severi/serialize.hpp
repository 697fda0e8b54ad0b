#pragma once

#include <json.hpp>

#include "severi/algebra.hpp"
#include "severi/cohomology.hpp"
#include "severi/twisting.hpp"

namespace severi {

/// Key order is insertion order, so emission is byte-stable.
using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Scalars are strings "p" or "p/q"; elements are power-basis coordinate
/// vectors of scalars. Malformed input throws ParseError.
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

/// {f, g, char, chi}: f and g in x, char 0 for Q.
Json field_to_json(const Extension& L);
Extension field_from_json(const Json& j);

Json element_to_json(const ExtElement& x);
ExtElement element_from_json(const Extension& L, const Json& j);

/// {rows, cols, entries: [[coefficient vectors]]}.
Json matrix_to_json(const Matrix& A);
Matrix matrix_from_json(const Extension& L, const Json& j);

/// {degree, a, at_generator, normalized, scale_exponents?, scalar_exponent?}.
Json cocycle_to_json(const Cocycle& xi);
Cocycle cocycle_from_json(const Extension& L, const Json& j);

/// {schema, field, a, n, m, M, equations, provenance, basis_degree,
///  normal_basis, cocycle}.
Json surface_model_to_json(const SurfaceModel& model);
SurfaceModel surface_model_from_json(const Json& j);

/// {schema, field, a, dprime, equation, degree_in_plane, fermat, genus?,
///  pullback_factor}.
Json twisted_curve_to_json(const TwistedCurve& curve, const SurfaceModel& model);
PicardGenerator picard_from_json(const Extension& L, const Json& j);

/// {schema, field, a, dim, labels, structure_constants: [dim][dim][dim],
///  associative, center_dimension}.
Json algebra_to_json(const CyclicAlgebra& A);
/// Rebuilds the algebra from field and a and checks the table agrees.
CyclicAlgebra algebra_from_json(const Json& j);

/// Parses text, mapping syntax errors to ParseError.
Json parse_json(const std::string& text);

}  // namespace severi
