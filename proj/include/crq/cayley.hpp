#pragma once

#include "crq/hol.hpp"
#include "crq/quadric.hpp"
#include "crq/star_algebra.hpp"
#include "crq/symmetry.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace crq {

/// Generalized sphere {z in A^{m x r} : z alpha z* = 1} with alpha = 1_m x beta.
/// Coordinates of z follow the AlgMatrix layout; the first m columns form the
/// W-part x and the remaining n = r - m columns the Z-part y.
struct SphereSpec {
    StarAlgebra algebra;
    std::size_t m = 1;
    std::size_t r = 2;
    ComplexMatrix alpha;
    ComplexMatrix beta;
    /// A^{m x m} as a star algebra, used for inverses.
    StarAlgebra envelope;

    std::size_t n() const { return r - m; }
    std::size_t d() const { return algebra.dim(); }
    /// Complex dimension of E = A^{m x r}.
    std::size_t dim() const { return m * r * d(); }
};

/// Throws InvalidParameter unless r > m >= 1 and alpha = 1_m x beta, InvalidForm
/// when alpha is not hermitian, singular or has fewer than m positive
/// eigenvalues, and Unsupported for a non-associative algebra.
SphereSpec make_sphere(const StarAlgebra& a, std::size_t m, std::size_t r, const ComplexMatrix& alpha);

/// The quadric {x + x* = y beta y*} on A^{m x m} x A^{m x n}.
QuadricSpec sphere_quadric(const SphereSpec& s);

/// Point (x, y) of E = A^{m x m} x A^{m x n} over Q(sqrt 2, i).
struct CayleyPoint {
    AlgMatrix<Scalar2> x;
    AlgMatrix<Scalar2> y;
};

CayleyPoint split_point(const SphereSpec& s, const AlgMatrix<Scalar2>& z);
AlgMatrix<Scalar2> join_point(const SphereSpec& s, const CayleyPoint& p);
CayleyPoint lift_point(const SphereSpec& s, const QuadricPoint& p);

/// kappa(x, y) = (1 - x)^{-1} (1 + x, sqrt2 y); SingularPoint when 1 - x is singular.
CayleyPoint cayley(const SphereSpec& s, const CayleyPoint& p);
/// kappa^{-1}(x, y) = (x + 1)^{-1} (x - 1, sqrt2 y); SingularPoint when x + 1 is singular.
CayleyPoint cayley_inverse(const SphereSpec& s, const CayleyPoint& p);

bool sphere_contains(const SphereSpec& s, const AlgMatrix<Scalar2>& z);
bool sphere_contains(const SphereSpec& s, const CayleyPoint& p);
/// x + x* = y beta y*.
bool cayley_quadric_contains(const SphereSpec& s, const CayleyPoint& p);

/// Sphere points kappa^{-1}(q) u for quadric points q and scalar unitary
/// phases u.
std::vector<CayleyPoint> sphere_samples(const SphereSpec& s, std::size_t count, std::uint64_t seed);

/// kappa maps sphere samples into the quadric, kappa^{-1} maps quadric
/// samples into the sphere, and both composites are the identity.
CheckReport sphere_to_quadric_check(const SphereSpec& s, std::uint64_t seed = 1, std::size_t samples = 50);

/// kappa o (-id) o kappa^{-1} = (w^{-1}, -w^{-1} z) on the matrix quadric of
/// q, at (1,0), (2,0) and random regular points. Throws Unsupported when q
/// has no associative matrix-family form.
CheckReport sigma_identity_check(const QuadricSpec& q, std::uint64_t seed = 1, std::size_t samples = 50);

/// Sphere sharing the algebra and beta of a matrix-family quadric.
SphereSpec sphere_of(const QuadricSpec& q);

// ---------------------------------------------------------------------------
// Infinitesimal automorphisms of the sphere. Fields live on E with no
// W-part: PolyVecField(0, dim E). Tangency residuals are polynomials in
// 2 dim E variables z_0.., zbar_0...

/// F alpha z* + z alpha F* for the field F d/dz, as an m x m matrix of
/// polynomials in z and zbar.
AlgMatrix<Poly> sphere_residual(const SphereSpec& s, const PolyVecField& f);
/// z alpha z* - 1 in z and zbar.
AlgMatrix<Poly> sphere_equation(const SphereSpec& s);
/// True when every residual entry is a combination of the entries of
/// z alpha z* - 1 with multipliers of degree <= 1 in z and zbar.
bool in_sphere_ideal(const SphereSpec& s, const AlgMatrix<Poly>& residual);

/// Real basis of the polynomial fields of degree <= 2 tangent to the sphere,
/// found by ideal membership of the residual with degree <= 1 multipliers.
std::vector<PolyVecField> sphere_hol(const SphereSpec& s);

/// (a - z alpha a* z) d/dz.
PolyVecField p_field(const SphereSpec& s, const AlgMatrix<Scalar>& a);
/// (1 - z alpha z*) a alpha z* + z alpha a* (1 - z alpha z*).
AlgMatrix<Poly> p_field_factorization(const SphereSpec& s, const AlgMatrix<Scalar>& a);
/// p_field(e) for e running through a real basis of E.
std::vector<PolyVecField> p_fields(const SphereSpec& s);

/// delta = i z d/dz.
PolyVecField sphere_delta(const SphereSpec& s);

struct KPDecomposition {
    std::vector<PolyVecField> k;
    std::vector<PolyVecField> p;
};
/// Splits a real span into the 0- and -1-eigenspaces of (ad delta)^2. Throws
/// InvalidGrading when the span is not (ad delta)^2-invariant with only
/// those eigenvalues.
KPDecomposition k_p_decompose(const SphereSpec& s, const std::vector<PolyVecField>& fields);

/// Audits of a computed sphere algebra: k linear, p-fields tangent with the
/// expected factorization, p equals the span of the p-fields, evaluation at
/// the origin maps p isomorphically onto E, and delta lies in k.
CheckReport check_sphere_algebra(const SphereSpec& s, const std::vector<PolyVecField>& hol);

}  // namespace crq
