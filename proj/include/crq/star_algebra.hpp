#pragma once

#include "crq/linalg.hpp"
#include "crq/poly.hpp"
#include "crq/scalar.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace crq {

inline bool is_zero(const Poly& p) { return p.is_zero(); }

/// Finite-dimensional unital complex algebra with a conjugate-linear
/// involution, stored by structure constants: e_i e_j = sum_k c(i,j,k) e_k.
/// The involution acts on coordinates as x* = S conj(x).
class StarAlgebra {
public:
    using Element = std::vector<Scalar>;

    /// `mult` is indexed (i*d + j)*d + k. Throws InvalidArgument when an
    /// invariant fails (unit laws, involutivity, anti-multiplicativity, and
    /// associativity when flagged).
    StarAlgebra(std::size_t dim, const std::vector<Scalar>& mult, Element unit, ComplexMatrix star, bool associative,
                std::string name = "");

    std::size_t dim() const { return dim_; }
    const std::string& name() const { return name_; }
    bool associative() const { return associative_; }
    /// Order m when the algebra is the full matrix algebra C^{m x m}.
    std::optional<std::size_t> matrix_order() const { return matrix_order_; }

    Scalar structure_constant(std::size_t i, std::size_t j, std::size_t k) const;
    const Element& unit() const { return unit_; }
    const ComplexMatrix& star_matrix() const { return star_; }
    Element basis(std::size_t i) const;

    template <class T>
    std::vector<T> multiply(std::span<const T> a, std::span<const T> b) const;
    Element multiply(const Element& a, const Element& b) const {
        return multiply<Scalar>(std::span<const Scalar>(a), std::span<const Scalar>(b));
    }

    /// Involution on elements with coefficients of type T; `conj_fn`
    /// conjugates a single coefficient.
    template <class T, class Conj>
    std::vector<T> star(std::span<const T> a, Conj conj_fn) const;
    Element star(const Element& a) const;

    /// Matrix of x -> a x (column j is a e_j).
    template <class S>
    DenseMatrix<S> left_multiplication(std::span<const S> a) const;

    /// Human-readable list of violated invariants (empty when valid).
    std::vector<std::string> diagnose() const;

private:
    friend StarAlgebra make_matrix_algebra(std::size_t m);

    struct Entry {
        std::uint32_t k;
        Scalar c;
    };

    std::size_t dim_;
    std::vector<std::vector<Entry>> products_;  // index i*d + j
    Element unit_;
    ComplexMatrix star_;
    bool associative_;
    std::string name_;
    std::optional<std::size_t> matrix_order_;
};

/// Real basis of a real subspace of a complex coordinate space.
struct SubspaceBasis {
    std::vector<std::vector<Scalar>> vectors;
    std::size_t real_dim() const { return vectors.size(); }
};

StarAlgebra make_complex();
StarAlgebra make_matrix_algebra(std::size_t m);
StarAlgebra make_product(const StarAlgebra& a, const StarAlgebra& b);
StarAlgebra make_swap_product(const StarAlgebra& a);
StarAlgebra make_tensor(const StarAlgebra& a, const StarAlgebra& b);
/// Same product, new involution z -> alpha z* alpha^{-1}. Throws InvalidTwist
/// when alpha is not selfadjoint or not invertible.
StarAlgebra twist_involution(const StarAlgebra& a, const StarAlgebra::Element& alpha);
/// C[eps]/(eps^2) with eps* = eps.
StarAlgebra make_dual_numbers();
/// Complexified octonions from the Cayley-Dickson doubling of the
/// quaternions, with the conjugate-linear extension of the octonion
/// conjugation as involution. Not associative.
StarAlgebra make_octonions();

SubspaceBasis selfadjoint_basis(const StarAlgebra& a);
/// Real basis of {a : a* = -a}.
SubspaceBasis antiselfadjoint_basis(const StarAlgebra& a);

/// Two-sided inverse; throws NotInvertible for singular elements.
template <class S>
std::vector<S> invert(const StarAlgebra& a, std::span<const S> x);
StarAlgebra::Element invert(const StarAlgebra& a, const StarAlgebra::Element& x);

/// Real basis of der(A,*); each vector is a d x d matrix D (row-major,
/// delta(e_j) = sum_i D(i,j) e_i).
SubspaceBasis derivations(const StarAlgebra& a);
ComplexMatrix derivation_matrix(const StarAlgebra& a, const std::vector<Scalar>& flat);

/// True when g(a c*) = g(a) g(c)* on all basis pairs.
bool is_star_automorphism(const StarAlgebra& a, const ComplexMatrix& g);

// ---------------------------------------------------------------------------
// Matrices with entries in a star algebra; entry (r,c) occupies coordinates
// [(r*cols + c)*d, (r*cols + c + 1)*d).

template <class T>
struct AlgMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::size_t d = 0;
    std::vector<T> data;

    AlgMatrix() = default;
    AlgMatrix(std::size_t r, std::size_t c, std::size_t dim, const T& zero)
        : rows(r), cols(c), d(dim), data(r * c * dim, zero) {}
    AlgMatrix(std::size_t r, std::size_t c, std::size_t dim, std::vector<T> values)
        : rows(r), cols(c), d(dim), data(std::move(values)) {
        if (data.size() != r * c * dim) throw Error(ErrorKind::InvalidArgument, "AlgMatrix: size mismatch");
    }

    T& at(std::size_t r, std::size_t c, std::size_t k) { return data[(r * cols + c) * d + k]; }
    const T& at(std::size_t r, std::size_t c, std::size_t k) const { return data[(r * cols + c) * d + k]; }
    std::span<const T> entry(std::size_t r, std::size_t c) const { return {data.data() + (r * cols + c) * d, d}; }

    friend bool operator==(const AlgMatrix& x, const AlgMatrix& y) {
        return x.rows == y.rows && x.cols == y.cols && x.d == y.d && x.data == y.data;
    }
};

template <class T>
AlgMatrix<T> alg_mul(const StarAlgebra& a, const AlgMatrix<T>& x, const AlgMatrix<T>& y) {
    if (x.cols != y.rows || x.d != a.dim() || y.d != a.dim())
        throw Error(ErrorKind::InvalidArgument, "alg_mul: shape mismatch");
    const T zero = x.data.empty() ? T(0) : x.data.front() * Scalar(0);
    AlgMatrix<T> out(x.rows, y.cols, a.dim(), zero);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t j = 0; j < y.cols; ++j)
            for (std::size_t k = 0; k < x.cols; ++k) {
                auto prod = a.multiply<T>(x.entry(i, k), y.entry(k, j));
                for (std::size_t t = 0; t < a.dim(); ++t)
                    if (!is_zero(prod[t])) out.at(i, j, t) += prod[t];
            }
    return out;
}

/// Conjugate transpose with the involution applied entrywise.
template <class T, class Conj>
AlgMatrix<T> alg_adjoint(const StarAlgebra& a, const AlgMatrix<T>& x, Conj conj_fn) {
    const T zero = x.data.empty() ? T(0) : x.data.front() * Scalar(0);
    AlgMatrix<T> out(x.cols, x.rows, x.d, zero);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t j = 0; j < x.cols; ++j) {
            auto s = a.star<T>(x.entry(i, j), conj_fn);
            for (std::size_t t = 0; t < x.d; ++t) out.at(j, i, t) = std::move(s[t]);
        }
    return out;
}

template <class T>
AlgMatrix<T> alg_add(AlgMatrix<T> x, const AlgMatrix<T>& y) {
    if (x.data.size() != y.data.size()) throw Error(ErrorKind::InvalidArgument, "alg_add: shape mismatch");
    for (std::size_t i = 0; i < x.data.size(); ++i) x.data[i] += y.data[i];
    return x;
}

template <class T>
AlgMatrix<T> alg_sub(AlgMatrix<T> x, const AlgMatrix<T>& y) {
    if (x.data.size() != y.data.size()) throw Error(ErrorKind::InvalidArgument, "alg_sub: shape mismatch");
    for (std::size_t i = 0; i < x.data.size(); ++i) x.data[i] -= y.data[i];
    return x;
}

/// Embeds a complex matrix m as m (x) e with coefficients of type T.
template <class T>
AlgMatrix<T> alg_from_complex(const StarAlgebra& a, const ComplexMatrix& m, const T& one) {
    const T zero = one * Scalar(0);
    AlgMatrix<T> out(m.rows(), m.cols(), a.dim(), zero);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            for (std::size_t t = 0; t < a.dim(); ++t)
                if (!is_zero(a.unit()[t]) && !is_zero(m(i, j))) out.at(i, j, t) = one * (m(i, j) * a.unit()[t]);
    return out;
}

// ---------------------------------------------------------------------------

template <class T>
std::vector<T> StarAlgebra::multiply(std::span<const T> a, std::span<const T> b) const {
    if (a.size() != dim_ || b.size() != dim_) throw Error(ErrorKind::InvalidArgument, "multiply: dimension mismatch");
    const T zero = a[0] * Scalar(0);
    std::vector<T> out(dim_, zero);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (is_zero(a[i])) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (is_zero(b[j])) continue;
            const auto& list = products_[i * dim_ + j];
            if (list.empty()) continue;
            T ab = a[i] * b[j];
            for (const auto& e : list) out[e.k] += ab * e.c;
        }
    }
    return out;
}

template <class T, class Conj>
std::vector<T> StarAlgebra::star(std::span<const T> a, Conj conj_fn) const {
    if (a.size() != dim_) throw Error(ErrorKind::InvalidArgument, "star: dimension mismatch");
    const T zero = a[0] * Scalar(0);
    std::vector<T> out(dim_, zero);
    for (std::size_t j = 0; j < dim_; ++j) {
        if (is_zero(a[j])) continue;
        T cj = conj_fn(a[j]);
        for (std::size_t i = 0; i < dim_; ++i)
            if (!star_(i, j).is_zero()) out[i] += cj * star_(i, j);
    }
    return out;
}

template <class S>
DenseMatrix<S> StarAlgebra::left_multiplication(std::span<const S> a) const {
    DenseMatrix<S> m(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (is_zero(a[i])) continue;
        for (std::size_t j = 0; j < dim_; ++j)
            for (const auto& e : products_[i * dim_ + j]) m(e.k, j) += a[i] * e.c;
    }
    return m;
}

template <class S>
std::vector<S> invert(const StarAlgebra& a, std::span<const S> x) {
    const std::size_t d = a.dim();
    std::vector<S> e(d, S(0));
    for (std::size_t i = 0; i < d; ++i) e[i] = lift<S>(a.unit()[i]);
    auto check = [&](const std::vector<S>& y) {
        auto xy = a.multiply<S>(x, std::span<const S>(y));
        auto yx = a.multiply<S>(std::span<const S>(y), x);
        return xy == e && yx == e;
    };
    if (!a.associative()) {
        // Composition algebras: x^{-1} = x'/(x x') with x' = S x the
        // complex-linear conjugation, and x x' a multiple of the unit.
        std::vector<S> xl(d, S(0));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                if (!a.star_matrix()(i, j).is_zero()) xl[i] += x[j] * a.star_matrix()(i, j);
        auto n = a.multiply<S>(x, std::span<const S>(xl));
        std::size_t u = 0;
        while (u < d && is_zero(a.unit()[u])) ++u;
        S nu = n[u] / lift<S>(a.unit()[u]);
        bool scalar = true;
        for (std::size_t i = 0; i < d; ++i)
            if (!(n[i] == nu * lift<S>(a.unit()[i]))) scalar = false;
        if (scalar && !is_zero(nu)) {
            for (auto& v : xl) v /= nu;
            if (check(xl)) return xl;
        }
    }
    DenseMatrix<S> rhs(d, 1);
    for (std::size_t i = 0; i < d; ++i) rhs(i, 0) = e[i];
    auto res = solve_linear(a.left_multiplication<S>(x), rhs);
    if (!res.unique(d)) throw Error(ErrorKind::NotInvertible, "element has no inverse");
    std::vector<S> y(d, S(0));
    for (std::size_t i = 0; i < d; ++i) y[i] = res.solution(i, 0);
    if (!check(y)) throw Error(ErrorKind::NotInvertible, "right inverse is not a left inverse");
    return y;
}

}  // namespace crq
