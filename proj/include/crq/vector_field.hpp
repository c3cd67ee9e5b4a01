#pragma once

#include "crq/linalg.hpp"
#include "crq/poly.hpp"

#include <map>
#include <optional>
#include <vector>

namespace crq {

/// Holomorphic polynomial vector field sum_i f_i d/dx_i on E = W + Z.
/// Variables are ordered w_0..w_{dw-1}, z_0..z_{dz-1}; component i is the
/// coefficient of d/dx_i in the same order.
class PolyVecField {
public:
    PolyVecField() = default;
    PolyVecField(std::size_t dim_w, std::size_t dim_z);
    PolyVecField(std::size_t dim_w, std::size_t dim_z, std::vector<Poly> components);

    std::size_t dim_w() const { return dim_w_; }
    std::size_t dim_z() const { return dim_z_; }
    std::size_t nvars() const { return dim_w_ + dim_z_; }

    const std::vector<Poly>& components() const { return comp_; }
    const Poly& component(std::size_t i) const { return comp_[i]; }
    const Poly& w_component(std::size_t l) const { return comp_[l]; }
    const Poly& z_component(std::size_t a) const { return comp_[dim_w_ + a]; }
    void set_component(std::size_t i, Poly p);

    bool is_zero() const;
    /// Largest total degree of a component; -1 for the zero field.
    int degree() const;

    PolyVecField& operator+=(const PolyVecField& o);
    PolyVecField& operator-=(const PolyVecField& o);
    PolyVecField& operator*=(const Scalar& c);
    friend PolyVecField operator+(PolyVecField a, const PolyVecField& b) { return a += b; }
    friend PolyVecField operator-(PolyVecField a, const PolyVecField& b) { return a -= b; }
    friend PolyVecField operator*(PolyVecField a, const Scalar& c) { return a *= c; }
    friend PolyVecField operator*(const Scalar& c, PolyVecField a) { return a *= c; }
    friend bool operator==(const PolyVecField& a, const PolyVecField& b);

    template <class S>
    std::vector<S> evaluate(std::span<const S> point) const {
        std::vector<S> out;
        out.reserve(comp_.size());
        for (const auto& p : comp_) out.push_back(p.evaluate<S>(point));
        return out;
    }

private:
    void check_same_space(const PolyVecField& o) const;

    std::size_t dim_w_ = 0;
    std::size_t dim_z_ = 0;
    std::vector<Poly> comp_;
};

/// [X, Y] = X(Y) - Y(X), where X(Y)_i = sum_j X_j dY_i/dx_j.
PolyVecField bracket(const PolyVecField& x, const PolyVecField& y);

/// zeta = 2w d/dw + z d/dz
PolyVecField zeta_field(std::size_t dim_w, std::size_t dim_z);
/// chi = iz d/dz
PolyVecField chi_field(std::size_t dim_w, std::size_t dim_z);
/// Euler field (zeta - i chi)/2 = w d/dw + z d/dz
PolyVecField euler_field(std::size_t dim_w, std::size_t dim_z);

/// Weighted degree 2*(w-degree) + (z-degree) of a monomial.
int monomial_weight(const Monomial& m, std::size_t dim_w);
/// ad(zeta)-eigenvalue of the field m d/dx_component.
int term_grade(const Monomial& m, std::size_t component, std::size_t dim_w);

/// Splits a field into its ad(zeta)-eigencomponents; the parts sum to the input.
std::map<int, PolyVecField> grade_decompose(const PolyVecField& x);

/// Field with a single monomial term c * m d/dx_component.
PolyVecField monomial_field(std::size_t dim_w, std::size_t dim_z, std::size_t component, const Monomial& m,
                            const Scalar& c = Scalar(1));

// ---------------------------------------------------------------------------
// Real-span computations. Fields are realified by assigning a pair of real
// coordinates (re, im) to every (component, monomial).

class FieldCoordinates {
public:
    /// Sparse real coordinates; unseen terms get fresh indices.
    SparseRow realify(const PolyVecField& x);
    /// Sparse real coordinates, or nullopt if x has a term never seen before.
    std::optional<SparseRow> realify_known(const PolyVecField& x) const;
    std::size_t size() const { return 2 * index_.size(); }

private:
    std::map<std::pair<std::size_t, Monomial>, std::size_t> index_;
};

std::size_t real_span_dim(const std::vector<PolyVecField>& fields);
bool span_equal(const std::vector<PolyVecField>& a, const std::vector<PolyVecField>& b);
/// True when every field of `inner` lies in the real span of `outer`.
bool span_contains(const std::vector<PolyVecField>& outer, const std::vector<PolyVecField>& inner);

/// Expresses fields as real combinations of a fixed, real-linearly
/// independent basis.
class BasisCoordinates {
public:
    explicit BasisCoordinates(const std::vector<PolyVecField>& basis);

    std::size_t size() const { return n_; }
    /// Real coefficients x with sum_j x_j basis_j = field, or nullopt when the
    /// field is outside the span. The result is verified exactly.
    std::optional<std::vector<Rational>> coordinates(const PolyVecField& field) const;

private:
    std::size_t n_ = 0;
    FieldCoordinates coords_;
    // Reduced rows R_i = sum_j transform_[i][j] basis_j with pivot pivots_[i].
    std::vector<std::map<std::size_t, Rational>> reduced_;
    std::vector<std::size_t> pivots_;
    std::vector<std::vector<Rational>> transform_;
};

}  // namespace crq
