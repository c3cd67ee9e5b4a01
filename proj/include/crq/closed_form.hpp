#pragma once

#include "crq/hol.hpp"

#include <array>

namespace crq {

/// Basis of g^k for k in {-2, -1, 0} from the formulas valid for every
/// standard quadric:
///   g^-2 = {a d/dw : a in iV}
///   g^-1 = {h(z,c) d/dw + c d/dz : c in Z}
///   g^0  = {aw d/dw + bz d/dz : a h(z,z) = h(bz,z) + h(z,bz)}
/// The g^0 pairs (a, b) are found as the real kernel of the polarized
/// condition without assuming that b determines a.
std::vector<PolyVecField> general_closed_form(const QuadricSpec& q, int k);

/// Basis of g^k from the formulas for the matrix quadric w + w* = z beta z*
/// over A^{m x m} x A^{m x n} (A associative):
///   g^-2 = {a d/dw : a + a* = 0}
///   g^-1 = {z beta c* d/dw + c d/dz}
///   g^1  = {z beta c* w d/dw + (z beta c* z - w c) d/dz}
/// (g^1 is the image of g^-1 under (w, z) -> (w^-1, w^-1 z); the variant
/// with + w c is not tangent.)
///   g^2  = {w a w d/dw + w a z d/dz : a + a* = 0}
/// and for m = n = 1, beta = 1 also
///   g^0  = {(aw + wa*) d/dw + az d/dz : a in A} + {delta(w) d/dw + delta(z) d/dz : delta in der(A,*)}.
/// Throws Unsupported when the quadric is not of this form or the level has
/// no formula.
std::vector<PolyVecField> algebra_closed_form(const QuadricSpec& q, int k);

/// The generic g^0 pair basis: real kernel of (A, B) -> polarized condition.
struct LinearPair {
    ComplexMatrix a;  // on W, commutes with conj_W
    ComplexMatrix b;  // on Z
};
std::vector<LinearPair> linear_pairs(const QuadricSpec& q);
PolyVecField linear_field(const QuadricSpec& q, const LinearPair& p);

/// Closed-form levels available for q; unavailable levels stay empty and
/// are marked false.
struct ClosedFormBasis {
    GradedLieAlgebra algebra;
    std::array<bool, 5> available{};
};
ClosedFormBasis closed_form_basis(const QuadricSpec& q);

/// True when q carries the structure required by algebra_closed_form.
bool has_algebra_form(const QuadricSpec& q);

}  // namespace crq
