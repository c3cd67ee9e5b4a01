#pragma once

#include "crq/symmetry.hpp"

namespace crq {

/// A birational map together with the exact audit that admitted it as an
/// automorphism of Q.
struct GroupElement {
    std::string family;  // heisenberg, gplus, linear
    BirationalMap map;
    CheckReport audit;
};

/// Sampled audit: m maps random Q-points into Q and tangent vectors of Q to
/// tangent vectors; singular samples are skipped and counted.
CheckReport audit_automorphism(const QuadricSpec& q, const BirationalMap& m, std::uint64_t seed = 1,
                               std::size_t samples = 50);
/// Exact check that a polynomial map (components in w then z) sends Q into Q,
/// by substituting the parametrization of Q.
CheckResult check_polynomial_automorphism(const QuadricSpec& q, const std::vector<Poly>& components);

/// (w, z) -> (w + a + h(z, b), z + b); throws InvalidParameter unless (a, b) in Q.
GroupElement heisenberg(const QuadricSpec& q, const QuadricPoint& ab);
/// The unique Heisenberg element mapping p to p2 (both on Q).
GroupElement heisenberg_between(const QuadricSpec& q, const QuadricPoint& p, const QuadricPoint& p2);
/// (w, z) -> (e + wa + h(z, c))^-1 (w, z + wc); throws InvalidParameter unless (a, c) in Q.
/// The differential at 0 is (dw, dz) -> (dw, dz + dw c).
GroupElement gplus(const QuadricSpec& q, const QuadricPoint& ac);

/// (w, z) -> (f w, g z); throws NotInGLQ unless f commutes with conj_W,
/// f h(x, y) = h(gx, gy) on basis pairs, and both are invertible.
GroupElement linear_element(const QuadricSpec& q, const ComplexMatrix& f, const ComplexMatrix& g);
/// On Q(A): (w, z) -> (a g(w) a*, a g(z)) for invertible a and a
/// *-automorphism g of A (matrix in the basis of A).
GroupElement dp_linear(const QuadricSpec& q, const StarAlgebra::Element& a, const ComplexMatrix& g);
/// On the matrix quadric over A: (w, z) -> (a g(w) a*, a g(z) u) with
/// a in GL_m(A), u beta u* = beta and g a *-automorphism applied entrywise.
GroupElement b_element(const QuadricSpec& q, const AlgMatrix<Scalar>& a, const AlgMatrix<Scalar>& u,
                       const ComplexMatrix& g);

/// Real span of the fields generated by the b_element family:
/// (aw + wa*) d/dw + az d/dz, zx d/dz with x beta + beta x* = 0, and
/// delta(w) d/dw + delta(z) d/dz for delta in der(A, *).
std::vector<PolyVecField> b_subgroup_fields(const QuadricSpec& q);

/// Half of the nilpotent part a field lives in: -1 for grades -2/-1, +1 for 1/2.
/// Throws InvalidGrading for mixed or grade 0 input; 0 for the zero field.
int nilpotent_half(const PolyVecField& x);

/// Time-one flow of a field in g^-2 + g^-1 (a Heisenberg element) or in
/// g^1 + g^2 (its conjugate by gamma).
GroupElement exp_field(const QuadricSpec& q, const PolyVecField& x);
/// x + y + [x, y]/2 for x, y in the same half. With [X, Y] = X(Y) - Y(X),
/// exp(y) o exp(x) = exp(bch2(x, y)).
PolyVecField bch2(const PolyVecField& x, const PolyVecField& y);

}  // namespace crq
