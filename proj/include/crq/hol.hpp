#pragma once

#include "crq/quadric.hpp"
#include "crq/vector_field.hpp"

#include <array>
#include <string>
#include <vector>

namespace crq {

/// Restriction of polynomials on E to the quadric. Points of Q are
/// parametrized by (z, zbar, s) with w = h(z,z)/2 + i sum_j s_j v_j, where
/// (v_j) is the real basis of V and s is real. Ring variables are ordered
/// z_0.., zbar_0.., s_0...
class TangencyContext {
public:
    explicit TangencyContext(const QuadricSpec& q);

    const QuadricSpec& quadric() const { return q_; }
    std::size_t ring_vars() const { return 2 * q_.dim_z() + q_.real_form().size(); }

    /// p(w, z) restricted to Q.
    Poly restrict(const Poly& p) const;
    /// Complex conjugate of a real-parametrized function: swaps z and zbar and
    /// conjugates coefficients.
    Poly ring_conj(const Poly& p) const;

    /// F + conj_W(F) - h(G, z) - h(z, G) on Q for X = F d/dw + G d/dz;
    /// X is tangent to Q iff every component vanishes.
    std::vector<Poly> residual(const PolyVecField& x) const;
    /// Residuals of x and of i*x.
    std::pair<std::vector<Poly>, std::vector<Poly>> residual_pair(const PolyVecField& x) const;

private:
    QuadricSpec q_;
    std::vector<Poly> w_on_q_;
    std::map<Monomial, Poly> monomial_cache_;
};

/// Real-linear conditions on x = sum_j (c_j) fields_j, c_j complex, for
/// tangency to Q. Column 2j is Re c_j and column 2j+1 is Im c_j.
RealLinearSystem tangency_constraints(const TangencyContext& ctx, const std::vector<PolyVecField>& fields);

/// Real span of the solutions of a tangency system as fields.
std::vector<PolyVecField> solution_fields(const RealLinearSystem& sys, const std::vector<PolyVecField>& fields);

/// Graded real Lie algebra given by bases of g^{-2} .. g^{2}.
struct GradedLieAlgebra {
    std::size_t dim_w = 0;
    std::size_t dim_z = 0;
    std::array<std::vector<PolyVecField>, 5> levels;
    /// Dimension of the tangent fields found in grade 3 (always 0 for a
    /// standard quadric).
    std::size_t beyond_range_dim = 0;

    const std::vector<PolyVecField>& level(int k) const { return levels.at(static_cast<std::size_t>(k + 2)); }
    std::array<std::size_t, 5> dims() const;
    std::size_t total() const;
    std::vector<PolyVecField> basis() const;
    /// Grade of the i-th element of basis().
    int grade_of(std::size_t i) const;
};

/// Every field of degree <= 2 and grade k, as monomial fields.
std::vector<PolyVecField> monomial_fields_of_grade(std::size_t dim_w, std::size_t dim_z, int k);

/// hol(Q) by exact solution of the tangency system, one grade at a time.
GradedLieAlgebra compute_hol(const QuadricSpec& q);

/// Structure constants in the concatenated basis: entry (i, j) holds the
/// real coordinates of [b_i, b_j].
struct BracketTable {
    std::size_t n = 0;
    std::vector<std::vector<std::pair<std::size_t, Rational>>> entries;
    /// Pairs whose bracket is not in the span of the basis.
    std::vector<std::pair<std::size_t, std::size_t>> escapes;
    bool closed() const { return escapes.empty(); }
    const std::vector<std::pair<std::size_t, Rational>>& at(std::size_t i, std::size_t j) const {
        return entries[i * n + j];
    }
};

BracketTable bracket_table(const GradedLieAlgebra& g);

/// Named pass/fail result with an optional counterexample description.
struct CheckResult {
    std::string name;
    bool passed = true;
    std::string detail;
};

CheckResult check_grading(const GradedLieAlgebra& g);
CheckResult check_tangency(const QuadricSpec& q, const GradedLieAlgebra& g);
CheckResult check_zeta_chi(const QuadricSpec& q, const GradedLieAlgebra& g);
CheckResult check_antisymmetry(const BracketTable& t);
CheckResult check_jacobi(const BracketTable& t);
/// [g^j, g^k] lies in g^{j+k}, and vanishes when |j+k| > 2.
CheckResult check_grading_closure(const GradedLieAlgebra& g, const BracketTable& t);
/// [g^j, g^k] = g^{j+k} for all j, k with j + k != 0 and |j+k| <= 2.
CheckResult check_bracket_surjectivity(const GradedLieAlgebra& g, const BracketTable& t);

struct DerivedAlgebra {
    std::array<std::size_t, 5> dims{};
    /// Spanning coordinate vectors of d = [g, g] in the concatenated basis.
    std::vector<std::vector<Rational>> basis;
};

DerivedAlgebra derived_subalgebra(const GradedLieAlgebra& g, const BracketTable& t);
CheckResult check_derived_ideal(const BracketTable& t, const DerivedAlgebra& d);

}  // namespace crq
