#pragma once

#include "crq/cayley.hpp"
#include "crq/quadric.hpp"
#include "crq/star_algebra.hpp"
#include "crq/vector_field.hpp"

#include <json.hpp>

namespace crq {

using Json = nlohmann::json;

// All parsers throw Error(ErrorKind::Parse) on malformed input; errors raised
// by the constructors they call (InvalidForm, InvalidParameter, ...) pass
// through unchanged.

/// Accepts an integer, a rational string "p/q", or a pair [re, im] of those.
Scalar parse_scalar(const Json& j);
/// [re, im] with both parts as rational strings.
Json scalar_to_json(const Scalar& x);

ComplexMatrix parse_matrix(const Json& j);
Json matrix_to_json(const ComplexMatrix& m);

/// Either {"builtin": name, ...} with name in complex, matrix (m), dual,
/// octonions, product/tensor (factors), swap (of), twist (of, alpha), or the
/// full form {dim, unit, mult[i][j][k], star, associative, name}.
StarAlgebra parse_algebra(const Json& j);
/// Full structure-constant form.
Json algebra_to_json(const StarAlgebra& a);

/// {family, params} with family in ex, ey, type2, type5, tensor, product,
/// custom. Custom params are {dim_w, dim_z, conj, form[a][b][l]}.
QuadricSpec parse_quadric(const Json& j);
/// Custom descriptor reproducing the structure tensors of q.
Json quadric_to_json(const QuadricSpec& q);

/// {algebra, m, r, alpha}.
SphereSpec parse_sphere(const Json& j);
Json sphere_to_json(const SphereSpec& s);

/// {dim_w, dim_z, terms: [{component, exponents, re, im}]}.
PolyVecField parse_field(const Json& j);
Json field_to_json(const PolyVecField& f);

}  // namespace crq
