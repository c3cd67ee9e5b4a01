#pragma once

#include "crq/error.hpp"
#include "crq/scalar.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace crq {

/// Row-major dense matrix over an exact field.
template <class S>
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, S(0)) {}

    static DenseMatrix identity(std::size_t n) {
        DenseMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    S& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const S& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::span<const S> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    const std::vector<S>& data() const { return data_; }

    friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<S> data_;
};

using ComplexMatrix = DenseMatrix<Scalar>;

template <class S>
DenseMatrix<S> operator*(const DenseMatrix<S>& a, const DenseMatrix<S>& b) {
    if (a.cols() != b.rows()) throw Error(ErrorKind::InvalidArgument, "matrix product shape mismatch");
    DenseMatrix<S> out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (is_zero(a(i, k))) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

/// Matrix-vector product with the matrix entries lifted into S.
template <class S, class M>
std::vector<S> apply(const DenseMatrix<M>& a, std::span<const S> x) {
    if (a.cols() != x.size()) throw Error(ErrorKind::InvalidArgument, "matrix-vector shape mismatch");
    std::vector<S> out(a.rows(), S(0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (is_zero(a(i, k)) || is_zero(x[k])) continue;
            out[i] += x[k] * a(i, k);
        }
    return out;
}

template <class S>
DenseMatrix<S> conjugate(const DenseMatrix<S>& a) {
    DenseMatrix<S> out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = conj(a(i, j));
    return out;
}

template <class S>
DenseMatrix<S> adjoint(const DenseMatrix<S>& a) {
    DenseMatrix<S> out(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = conj(a(i, j));
    return out;
}

/// Kronecker product; index (i*b.rows()+k, j*b.cols()+l).
template <class S>
DenseMatrix<S> kronecker(const DenseMatrix<S>& a, const DenseMatrix<S>& b) {
    DenseMatrix<S> out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (is_zero(a(i, j))) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return out;
}

template <class S>
struct SolveResult {
    std::size_t rank = 0;
    bool consistent = true;
    /// A particular solution (free unknowns set to zero); empty when inconsistent.
    DenseMatrix<S> solution;
    bool unique(std::size_t unknowns) const { return consistent && rank == unknowns; }
};

/// Solves a*x = b by Gauss-Jordan elimination over the exact field S.
template <class S>
SolveResult<S> solve_linear(DenseMatrix<S> a, DenseMatrix<S> b) {
    if (a.rows() != b.rows()) throw Error(ErrorKind::InvalidArgument, "solve_linear: row mismatch");
    const std::size_t m = a.rows(), n = a.cols(), k = b.cols();
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t p = r;
        while (p < m && is_zero(a(p, c))) ++p;
        if (p == m) continue;
        if (p != r) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(r, j));
            for (std::size_t j = 0; j < k; ++j) std::swap(b(p, j), b(r, j));
        }
        const S inv = S(1) / a(r, c);
        for (std::size_t j = c; j < n; ++j) a(r, j) *= inv;
        for (std::size_t j = 0; j < k; ++j) b(r, j) *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || is_zero(a(i, c))) continue;
            const S f = a(i, c);
            for (std::size_t j = c; j < n; ++j)
                if (!is_zero(a(r, j))) a(i, j) -= f * a(r, j);
            for (std::size_t j = 0; j < k; ++j)
                if (!is_zero(b(r, j))) b(i, j) -= f * b(r, j);
        }
        pivot_cols.push_back(c);
        ++r;
    }
    SolveResult<S> res;
    res.rank = r;
    for (std::size_t i = r; i < m; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (!is_zero(b(i, j))) res.consistent = false;
    if (!res.consistent) return res;
    res.solution = DenseMatrix<S>(n, k);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < k; ++j) res.solution(pivot_cols[i], j) = b(i, j);
    return res;
}

/// Inverse of a square matrix; throws NotInvertible when singular.
template <class S>
DenseMatrix<S> inverse(const DenseMatrix<S>& a) {
    if (a.rows() != a.cols()) throw Error(ErrorKind::InvalidArgument, "inverse of non-square matrix");
    auto res = solve_linear(a, DenseMatrix<S>::identity(a.rows()));
    if (!res.unique(a.cols())) throw Error(ErrorKind::NotInvertible, "singular matrix");
    return res.solution;
}

// ---------------------------------------------------------------------------
// Real (rational) sparse linear algebra.

using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

/// Homogeneous real linear system M x = 0 with labelled unknowns.
struct RealLinearSystem {
    std::vector<std::string> labels;
    std::vector<SparseRow> rows;

    RealLinearSystem() = default;
    explicit RealLinearSystem(std::vector<std::string> unknown_labels) : labels(std::move(unknown_labels)) {}

    std::size_t cols() const { return labels.size(); }
    void add_row(SparseRow row);
    /// Checks that every row only references existing columns.
    bool well_formed() const;
};

/// Incremental row echelon form over the integers (fraction-free).
///
/// Rows are reduced in insertion order; each stored row vanishes at the
/// pivots of all rows stored before it. The pivot of a new row is its entry
/// of smallest bit size, which keeps coefficient growth in check.
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t cols);

    std::size_t cols() const { return cols_; }
    std::size_t rank() const { return rows_.size(); }

    /// Inserts a row; returns false when it lies in the span of earlier rows.
    bool insert(const SparseRow& row);
    bool insert_dense(std::span<const Rational> row);
    bool contains(const SparseRow& row) const;

    /// Basis of {x : r.x = 0 for all stored rows r}; one vector per free column.
    std::vector<std::vector<Rational>> nullspace() const;
    std::vector<std::size_t> pivot_columns() const;

private:
    struct Row {
        std::vector<std::pair<std::uint32_t, mpz_class>> entries;
        std::uint32_t pivot = 0;
        mpz_class pivot_value;
    };

    class Accumulator;

    std::size_t cols_;
    std::vector<Row> rows_;
    std::vector<int> pivot_owner_;
};

std::vector<std::vector<Rational>> nullspace(const RealLinearSystem& sys);
std::size_t rank(const RealLinearSystem& sys);

SparseRow to_sparse(std::span<const Rational> dense);
/// Interleaves real and imaginary parts: (re0, im0, re1, im1, ...).
std::vector<Rational> realify(std::span<const Scalar> v);
std::vector<Scalar> complexify(std::span<const Rational> v);

/// Real rank of a family of complex vectors.
std::size_t real_rank(const std::vector<std::vector<Scalar>>& vectors);
/// Complex rank of the columns of a complex matrix.
std::size_t complex_rank(const ComplexMatrix& m);

/// Real basis of the kernel of a real-linear map given by its images of the
/// real basis (1, i) x coordinates; `images[2*j]` is the image of e_j and
/// `images[2*j+1]` the image of i*e_j. Output vectors are complex coordinates.
std::vector<std::vector<Scalar>> real_kernel(std::size_t dim, const std::vector<std::vector<Scalar>>& images);

/// Signature of a hermitian matrix by congruence diagonalization.
struct Inertia {
    std::size_t positive = 0;
    std::size_t negative = 0;
    std::size_t zero = 0;
};
/// Throws InvalidForm when m is not hermitian.
Inertia hermitian_inertia(const ComplexMatrix& m);

}  // namespace crq
