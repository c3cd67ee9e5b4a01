#pragma once

#include "crq/cayley.hpp"
#include "crq/closed_form.hpp"
#include "crq/groups.hpp"
#include "crq/hol.hpp"
#include "crq/symmetry.hpp"

#include <cstdint>

namespace crq {

/// Conjugation, hermitian symmetry, non-degeneracy and minimality.
CheckReport validation_suite(const QuadricSpec& q);

/// Grading, tangency of every basis field, zeta and chi membership, bracket
/// antisymmetry and Jacobi identity, grading closure, bracket surjectivity and
/// the ideal property of the derived algebra.
CheckReport property_suite(const QuadricSpec& q, const GradedLieAlgebra& g);

/// Span equality of every available closed-form level with the solver output.
CheckReport closed_form_suite(const QuadricSpec& q, const GradedLieAlgebra& g);

/// sigma for Type II quadrics and gamma otherwise; Unsupported without a model.
BirationalMap default_symmetry(const QuadricSpec& q);

/// Property S and grade reversal for default_symmetry(q).
CheckReport symmetry_suite(const QuadricSpec& q, const GradedLieAlgebra& g, std::uint64_t seed = 1);

/// Heisenberg simple transitivity (25 pairs), gplus = gamma o heisenberg o
/// gamma (20 samples), step-two BCH in both halves (20 samples each) and, when
/// `symbolic` is set, equality of the b-subgroup algebra with g^0.
CheckReport group_suite(const QuadricSpec& q, const GradedLieAlgebra& g, std::uint64_t seed = 1,
                        bool symbolic = true);

/// Sphere and quadric exchange, the sigma identity on the sphere's quadric, and
/// the sphere algebra audits including dim s = dim hol of the quadric.
CheckReport cayley_suite(const SphereSpec& s, std::uint64_t seed = 1);

}  // namespace crq
