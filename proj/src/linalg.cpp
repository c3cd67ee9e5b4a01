#include "crq/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace crq {

void RealLinearSystem::add_row(SparseRow row) {
    row.erase(std::remove_if(row.begin(), row.end(), [](const auto& e) { return sgn(e.second) == 0; }), row.end());
    if (!row.empty()) rows.push_back(std::move(row));
}

bool RealLinearSystem::well_formed() const {
    for (const auto& r : rows)
        for (const auto& [c, v] : r)
            if (c >= cols()) return false;
    return true;
}

// Dense integer work vector with an explicit support list.
class EchelonBasis::Accumulator {
public:
    explicit Accumulator(std::size_t cols) : values_(cols), in_support_(cols, 0) {}

    void load(const SparseRow& row) {
        mpz_class lcm = 1;
        for (const auto& [c, q] : row) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
        for (const auto& [c, q] : row) {
            if (sgn(q) == 0) continue;
            if (c >= values_.size()) throw Error(ErrorKind::InvalidArgument, "row references column out of range");
            values_[c] += q.get_num() * (lcm / q.get_den());
            touch(static_cast<std::uint32_t>(c));
        }
    }

    const mpz_class& at(std::uint32_t c) const { return values_[c]; }

    // this := a*this - b*row
    void combine(const mpz_class& a, const mpz_class& b, const std::vector<std::pair<std::uint32_t, mpz_class>>& row) {
        if (a != 1)
            for (auto c : support_) values_[c] *= a;
        for (const auto& [c, v] : row) {
            mpz_submul(values_[c].get_mpz_t(), b.get_mpz_t(), v.get_mpz_t());
            touch(c);
        }
        normalize_content();
    }

    void normalize_content() {
        mpz_class g = 0;
        for (auto c : support_) {
            if (sgn(values_[c]) == 0) continue;
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), values_[c].get_mpz_t());
            if (g == 1) return;
        }
        if (g <= 1) return;
        for (auto c : support_)
            if (sgn(values_[c]) != 0) mpz_divexact(values_[c].get_mpz_t(), values_[c].get_mpz_t(), g.get_mpz_t());
    }

    // Moves the nonzero entries out (sorted by column) and resets the work vector.
    std::vector<std::pair<std::uint32_t, mpz_class>> extract() {
        std::sort(support_.begin(), support_.end());
        std::vector<std::pair<std::uint32_t, mpz_class>> out;
        for (auto c : support_) {
            if (sgn(values_[c]) != 0) out.emplace_back(c, std::move(values_[c]));
            values_[c] = 0;
            in_support_[c] = 0;
        }
        support_.clear();
        return out;
    }

private:
    void touch(std::uint32_t c) {
        if (!in_support_[c]) {
            in_support_[c] = 1;
            support_.push_back(c);
        }
    }

    std::vector<mpz_class> values_;
    std::vector<char> in_support_;
    std::vector<std::uint32_t> support_;
};

EchelonBasis::EchelonBasis(std::size_t cols) : cols_(cols), pivot_owner_(cols, -1) {}

bool EchelonBasis::insert(const SparseRow& row) {
    Accumulator acc(cols_);
    acc.load(row);
    for (const auto& r : rows_) {
        const mpz_class& x = acc.at(r.pivot);
        if (sgn(x) == 0) continue;
        mpz_class g = gcd(x, r.pivot_value);
        mpz_class a = r.pivot_value / g;
        mpz_class b = x / g;
        acc.combine(a, b, r.entries);
    }
    auto entries = acc.extract();
    if (entries.empty()) return false;

    std::size_t best = 0;
    std::size_t best_bits = mpz_sizeinbase(entries[0].second.get_mpz_t(), 2);
    for (std::size_t i = 1; i < entries.size(); ++i) {
        std::size_t bits = mpz_sizeinbase(entries[i].second.get_mpz_t(), 2);
        if (bits < best_bits) {
            best = i;
            best_bits = bits;
        }
    }
    if (sgn(entries[best].second) < 0)
        for (auto& e : entries) e.second = -e.second;

    Row stored;
    stored.pivot = entries[best].first;
    stored.pivot_value = entries[best].second;
    stored.entries = std::move(entries);
    pivot_owner_[stored.pivot] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(stored));
    return true;
}

bool EchelonBasis::insert_dense(std::span<const Rational> row) { return insert(to_sparse(row)); }

bool EchelonBasis::contains(const SparseRow& row) const {
    Accumulator acc(cols_);
    acc.load(row);
    for (const auto& r : rows_) {
        const mpz_class& x = acc.at(r.pivot);
        if (sgn(x) == 0) continue;
        mpz_class g = gcd(x, r.pivot_value);
        acc.combine(r.pivot_value / g, x / g, r.entries);
    }
    return acc.extract().empty();
}

std::vector<std::size_t> EchelonBasis::pivot_columns() const {
    std::vector<std::size_t> out;
    for (const auto& r : rows_) out.push_back(r.pivot);
    return out;
}

std::vector<std::vector<Rational>> EchelonBasis::nullspace() const {
    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (pivot_owner_[f] >= 0) continue;
        std::vector<Rational> x(cols_, Rational(0));
        x[f] = 1;
        // Row i only touches its pivot, pivots of later rows, and free columns.
        for (std::size_t i = rows_.size(); i-- > 0;) {
            const Row& r = rows_[i];
            Rational sum = 0;
            for (const auto& [c, v] : r.entries) {
                if (c == r.pivot || sgn(x[c]) == 0) continue;
                sum += Rational(v) * x[c];
            }
            if (sgn(sum) != 0) x[r.pivot] = -sum / Rational(r.pivot_value);
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

std::vector<std::vector<Rational>> nullspace(const RealLinearSystem& sys) {
    if (!sys.well_formed()) throw Error(ErrorKind::InvalidArgument, "malformed linear system");
    EchelonBasis eb(sys.cols());
    for (const auto& r : sys.rows) eb.insert(r);
    return eb.nullspace();
}

std::size_t rank(const RealLinearSystem& sys) {
    EchelonBasis eb(sys.cols());
    for (const auto& r : sys.rows) eb.insert(r);
    return eb.rank();
}

SparseRow to_sparse(std::span<const Rational> dense) {
    SparseRow out;
    for (std::size_t i = 0; i < dense.size(); ++i)
        if (sgn(dense[i]) != 0) out.emplace_back(i, dense[i]);
    return out;
}

std::vector<Rational> realify(std::span<const Scalar> v) {
    std::vector<Rational> out;
    out.reserve(2 * v.size());
    for (const auto& x : v) {
        out.push_back(x.re);
        out.push_back(x.im);
    }
    return out;
}

std::vector<Scalar> complexify(std::span<const Rational> v) {
    std::vector<Scalar> out;
    out.reserve(v.size() / 2);
    for (std::size_t i = 0; i + 1 < v.size(); i += 2) out.emplace_back(v[i], v[i + 1]);
    return out;
}

std::size_t real_rank(const std::vector<std::vector<Scalar>>& vectors) {
    if (vectors.empty()) return 0;
    EchelonBasis eb(2 * vectors.front().size());
    for (const auto& v : vectors) eb.insert_dense(realify(v));
    return eb.rank();
}

std::size_t complex_rank(const ComplexMatrix& m) {
    return solve_linear(m, ComplexMatrix(m.rows(), 0)).rank;
}

std::vector<std::vector<Scalar>> real_kernel(std::size_t dim, const std::vector<std::vector<Scalar>>& images) {
    if (images.size() != 2 * dim) throw Error(ErrorKind::InvalidArgument, "real_kernel: expected 2*dim images");
    const std::size_t out_dim = images.empty() ? 0 : images.front().size();
    RealLinearSystem sys;
    for (std::size_t j = 0; j < 2 * dim; ++j) sys.labels.push_back("x" + std::to_string(j));
    // Row (l, part) collects the real/imaginary part of coordinate l of every image.
    for (std::size_t l = 0; l < out_dim; ++l) {
        SparseRow re, im;
        for (std::size_t j = 0; j < 2 * dim; ++j) {
            const Scalar& v = images[j][l];
            if (sgn(v.re) != 0) re.emplace_back(j, v.re);
            if (sgn(v.im) != 0) im.emplace_back(j, v.im);
        }
        sys.add_row(std::move(re));
        sys.add_row(std::move(im));
    }
    std::vector<std::vector<Scalar>> out;
    for (const auto& x : nullspace(sys)) out.push_back(complexify(x));
    return out;
}

}  // namespace crq

namespace crq {

Inertia hermitian_inertia(const ComplexMatrix& m) {
    if (m.rows() != m.cols() || !(adjoint(m) == m)) throw Error(ErrorKind::InvalidForm, "matrix is not hermitian");
    ComplexMatrix a = m;
    std::size_t n = a.rows();
    Inertia out;
    // Invariant: a is hermitian and congruent to m on the trailing block [k, n).
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a(p, p).is_zero()) ++p;
        if (p == n) {
            // No nonzero diagonal entry: make one from an off-diagonal pair.
            std::size_t i = n, j = n;
            for (std::size_t r = k; r < n && i == n; ++r)
                for (std::size_t c = r + 1; c < n; ++c)
                    if (!a(r, c).is_zero()) {
                        i = r;
                        j = c;
                        break;
                    }
            if (i == n) {
                out.zero += n - k;
                return out;
            }
            // row_i += t row_j, col_i += conj(t) col_j with t = a_ij / |a_ij|^2 gives a_ii = 2.
            const Scalar aij = a(i, j);
            const Scalar t = aij / (aij * conj(aij));
            for (std::size_t c = 0; c < n; ++c) a(i, c) += t * a(j, c);
            for (std::size_t r = 0; r < n; ++r) a(r, i) += conj(t) * a(r, j);
            p = i;
        }
        if (p != k) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a(p, c), a(k, c));
            for (std::size_t r = 0; r < n; ++r) std::swap(a(r, p), a(r, k));
        }
        const Scalar d = a(k, k);
        if (sgn(d.re) > 0) ++out.positive;
        else ++out.negative;
        for (std::size_t r = k + 1; r < n; ++r) {
            if (a(r, k).is_zero()) continue;
            const Scalar f = a(r, k) / d;
            for (std::size_t c = k; c < n; ++c) a(r, c) -= f * a(k, c);
            for (std::size_t c = k; c < n; ++c) a(c, r) = conj(a(r, c));
        }
    }
    return out;
}

}  // namespace crq
