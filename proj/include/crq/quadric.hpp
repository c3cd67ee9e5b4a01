#pragma once

#include "crq/linalg.hpp"
#include "crq/star_algebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace crq {

/// Realizes W inside an associative (or alternative) envelope algebra so that
/// inverses w^{-1} and the action w*z of W on Z can be evaluated. Every W
/// element x corresponds to embed*x in the envelope; project inverts embed on
/// its image.
struct AlgebraModel {
    StarAlgebra envelope;
    ComplexMatrix embed;                // D x dim W
    ComplexMatrix project;              // dim W x D
    std::vector<ComplexMatrix> action;  // action[i] = matrix of z -> e_i z on Z
};

/// Parameters of the family EY(m, n, beta) tensored with a *-algebra A
/// (A = C for the plain matrix quadric and for hyperquadrics).
struct MatrixFamily {
    std::size_t m = 1;
    std::size_t n = 1;
    ComplexMatrix beta;
    StarAlgebra algebra;
};

struct Provenance {
    std::string family;  // ex, ey, type2, type5, tensor, product, custom
    std::string description;
};

/// Standard quadric {w + conj_W(w) = h(z,z)} in W x Z.
///
/// conj_W acts on coordinates as x -> C conj(x). h is stored as
/// form(a, b, l) = l-th W-coordinate of h(e_a, e_b); it is linear in the first
/// and conjugate-linear in the second slot.
class QuadricSpec {
public:
    QuadricSpec(std::size_t dim_w, std::size_t dim_z, ComplexMatrix conj, std::vector<Scalar> form,
                Provenance provenance);

    std::size_t dim_w() const { return dim_w_; }
    std::size_t dim_z() const { return dim_z_; }
    const ComplexMatrix& conj_matrix() const { return conj_; }
    const Scalar& form(std::size_t a, std::size_t b, std::size_t l) const { return form_[(a * dim_z_ + b) * dim_w_ + l]; }
    const std::vector<Scalar>& form_tensor() const { return form_; }
    const Provenance& provenance() const { return provenance_; }

    const std::optional<AlgebraModel>& model() const { return model_; }
    const std::optional<MatrixFamily>& matrix_family() const { return matrix_family_; }
    void set_model(AlgebraModel m) { model_ = std::move(m); }
    void set_matrix_family(MatrixFamily f) { matrix_family_ = std::move(f); }
    void set_description(std::string d) { provenance_.description = std::move(d); }

    /// h(x, y) with coefficients in T; conj_fn conjugates one coefficient.
    template <class T, class Conj>
    std::vector<T> h(std::span<const T> x, std::span<const T> y, Conj conj_fn) const;
    template <class T, class Conj>
    std::vector<T> conj_w(std::span<const T> w, Conj conj_fn) const;

    std::vector<Scalar> h(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const;
    std::vector<Scalar> conj_w(const std::vector<Scalar>& w) const;

    /// Real basis of V = {v : conj_W(v) = v}.
    const std::vector<std::vector<Scalar>>& real_form() const { return real_form_; }

private:
    std::size_t dim_w_;
    std::size_t dim_z_;
    ComplexMatrix conj_;
    std::vector<Scalar> form_;
    Provenance provenance_;
    std::vector<std::vector<Scalar>> real_form_;
    std::optional<AlgebraModel> model_;
    std::optional<MatrixFamily> matrix_family_;
};

struct QuadricPoint {
    std::vector<Scalar> w;
    std::vector<Scalar> z;
};

struct QuadricDiagnostics {
    bool conjugation_involutive = true;
    bool hermitian = true;
    bool nondegenerate = true;
    bool minimal = true;
    std::vector<std::string> messages;
    bool ok() const { return conjugation_involutive && hermitian && nondegenerate && minimal; }
};

QuadricSpec make_hyperquadric(std::size_t n, std::size_t k);
/// Throws InvalidForm when beta is not hermitian or singular.
QuadricSpec make_matrix_quadric(std::size_t m, std::size_t n, const ComplexMatrix& beta);
QuadricSpec tensor_quadric(const QuadricSpec& q, const StarAlgebra& a);
/// Throws InvalidArgument when a factor has an empty W or Z.
QuadricSpec product_quadric(const QuadricSpec& q1, const QuadricSpec& q2);
/// Throws InvalidParameter unless m is even and >= 4.
QuadricSpec make_type_II(std::size_t m);
QuadricSpec make_type_V();
/// The quadric w + w* = z z* on the *-algebra A (the Heisenberg sphere tensored with A).
QuadricSpec make_algebra_quadric(const StarAlgebra& a);

QuadricDiagnostics validate(const QuadricSpec& q);
bool contains(const QuadricSpec& q, const QuadricPoint& p);
/// w = h(z,z)/2 + t with random rational z and t in iV.
QuadricPoint random_point(const QuadricSpec& q, RationalSampler& rng);

/// Same dimensions, conjugation and structure tensor.
bool forms_equal(const QuadricSpec& a, const QuadricSpec& b);

/// Q1 and Q2 agree after relabelling coordinates: W-coordinate l of Q1 is
/// W-coordinate w_perm[l] of Q2, and likewise for Z.
bool isomorphic_by_permutation(const QuadricSpec& q1, const QuadricSpec& q2, const std::vector<std::size_t>& w_perm,
                               const std::vector<std::size_t>& z_perm);

// ---------------------------------------------------------------------------
// Model helpers; all throw SingularPoint when a required inverse is missing.

template <class S>
std::vector<S> model_embed(const AlgebraModel& m, std::span<const S> w) {
    return apply<S>(m.embed, w);
}

template <class S>
std::vector<S> model_project(const AlgebraModel& m, std::span<const S> x) {
    auto w = apply<S>(m.project, x);
    if (apply<S>(m.embed, std::span<const S>(w)) != std::vector<S>(x.begin(), x.end()))
        throw Error(ErrorKind::InvalidArgument, "envelope element does not lie in W");
    return w;
}

/// x * z for x in the envelope and z in Z.
template <class S>
std::vector<S> model_act(const AlgebraModel& m, std::span<const S> x, std::span<const S> z) {
    std::vector<S> out(z.size(), S(0));
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (is_zero(x[i])) continue;
        auto part = apply<S>(m.action[i], z);
        for (std::size_t k = 0; k < z.size(); ++k) out[k] += x[i] * part[k];
    }
    return out;
}

template <class S>
std::vector<S> model_inverse(const AlgebraModel& m, std::span<const S> x) {
    try {
        return invert<S>(m.envelope, x);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::NotInvertible) throw Error(ErrorKind::SingularPoint, "point outside the regular set");
        throw;
    }
}

template <class T, class Conj>
std::vector<T> QuadricSpec::h(std::span<const T> x, std::span<const T> y, Conj conj_fn) const {
    if (x.size() != dim_z_ || y.size() != dim_z_) throw Error(ErrorKind::InvalidArgument, "h: dimension mismatch");
    const T zero = dim_z_ == 0 ? T(0) : x[0] * Scalar(0);
    std::vector<T> out(dim_w_, zero);
    std::vector<T> yc;
    yc.reserve(dim_z_);
    for (const auto& v : y) yc.push_back(conj_fn(v));
    for (std::size_t a = 0; a < dim_z_; ++a) {
        if (is_zero(x[a])) continue;
        for (std::size_t b = 0; b < dim_z_; ++b) {
            if (is_zero(yc[b])) continue;
            const Scalar* f = &form_[(a * dim_z_ + b) * dim_w_];
            bool any = false;
            for (std::size_t l = 0; l < dim_w_; ++l) any = any || !f[l].is_zero();
            if (!any) continue;
            T xy = x[a] * yc[b];
            for (std::size_t l = 0; l < dim_w_; ++l)
                if (!f[l].is_zero()) out[l] += xy * f[l];
        }
    }
    return out;
}

template <class T, class Conj>
std::vector<T> QuadricSpec::conj_w(std::span<const T> w, Conj conj_fn) const {
    const T zero = w.empty() ? T(0) : w[0] * Scalar(0);
    std::vector<T> out(dim_w_, zero);
    for (std::size_t j = 0; j < dim_w_; ++j) {
        if (is_zero(w[j])) continue;
        T c = conj_fn(w[j]);
        for (std::size_t i = 0; i < dim_w_; ++i)
            if (!conj_(i, j).is_zero()) out[i] += c * conj_(i, j);
    }
    return out;
}

}  // namespace crq
