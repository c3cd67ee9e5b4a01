#include "crq/star_algebra.hpp"

#include <map>
#include <sstream>

namespace crq {

namespace {

std::string basis_name(std::size_t i) { return "e" + std::to_string(i); }

}  // namespace

StarAlgebra::StarAlgebra(std::size_t dim, const std::vector<Scalar>& mult, Element unit, ComplexMatrix star,
                         bool associative, std::string name)
    : dim_(dim),
      products_(dim * dim),
      unit_(std::move(unit)),
      star_(std::move(star)),
      associative_(associative),
      name_(std::move(name)) {
    if (dim_ == 0) throw Error(ErrorKind::InvalidArgument, "algebra dimension must be positive");
    if (mult.size() != dim_ * dim_ * dim_) throw Error(ErrorKind::InvalidArgument, "structure tensor has wrong size");
    if (unit_.size() != dim_) throw Error(ErrorKind::InvalidArgument, "unit has wrong size");
    if (star_.rows() != dim_ || star_.cols() != dim_) throw Error(ErrorKind::InvalidArgument, "star matrix has wrong shape");
    for (std::size_t ij = 0; ij < dim_ * dim_; ++ij)
        for (std::size_t k = 0; k < dim_; ++k)
            if (!mult[ij * dim_ + k].is_zero()) products_[ij].push_back({static_cast<std::uint32_t>(k), mult[ij * dim_ + k]});
    auto problems = diagnose();
    if (!problems.empty()) {
        std::string msg = "invalid *-algebra";
        if (!name_.empty()) msg += " '" + name_ + "'";
        for (const auto& p : problems) msg += "; " + p;
        throw Error(ErrorKind::InvalidArgument, msg);
    }
}

Scalar StarAlgebra::structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
    for (const auto& e : products_[i * dim_ + j])
        if (e.k == k) return e.c;
    return Scalar(0);
}

StarAlgebra::Element StarAlgebra::basis(std::size_t i) const {
    Element e(dim_, Scalar(0));
    e[i] = Scalar(1);
    return e;
}

StarAlgebra::Element StarAlgebra::star(const Element& a) const {
    return star<Scalar>(std::span<const Scalar>(a), [](const Scalar& x) { return x.conj(); });
}

std::vector<std::string> StarAlgebra::diagnose() const {
    std::vector<std::string> out;
    const std::size_t d = dim_;
    for (std::size_t i = 0; i < d && out.size() < 8; ++i) {
        auto ei = basis(i);
        if (multiply(unit_, ei) != ei || multiply(ei, unit_) != ei) out.push_back("unit law fails at " + basis_name(i));
        if (star(star(ei)) != ei) out.push_back("involution is not involutive at " + basis_name(i));
    }
    if (star(unit_) != unit_) out.push_back("unit is not selfadjoint");
    for (std::size_t i = 0; i < d && out.size() < 8; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            auto ei = basis(i), ej = basis(j);
            if (star(multiply(ei, ej)) != multiply(star(ej), star(ei))) {
                out.push_back("star is not anti-multiplicative at (" + basis_name(i) + "," + basis_name(j) + ")");
                break;
            }
        }
    if (associative_) {
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                auto ij = multiply(basis(i), basis(j));
                for (std::size_t k = 0; k < d; ++k) {
                    auto ek = basis(k);
                    if (multiply(ij, ek) != multiply(basis(i), multiply(basis(j), ek))) {
                        out.push_back("associativity fails at (" + basis_name(i) + "," + basis_name(j) + "," +
                                      basis_name(k) + ")");
                        return out;
                    }
                }
            }
    }
    return out;
}

StarAlgebra make_complex() {
    ComplexMatrix s = ComplexMatrix::identity(1);
    return StarAlgebra(1, {Scalar(1)}, {Scalar(1)}, s, true, "C");
}

StarAlgebra make_matrix_algebra(std::size_t m) {
    if (m == 0) throw Error(ErrorKind::InvalidParameter, "matrix order must be positive");
    const std::size_t d = m * m;
    std::vector<Scalar> mult(d * d * d, Scalar(0));
    // E_ij E_kl = delta_jk E_il
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t l = 0; l < m; ++l) mult[((i * m + j) * d + (j * m + l)) * d + (i * m + l)] = Scalar(1);
    StarAlgebra::Element unit(d, Scalar(0));
    for (std::size_t i = 0; i < m; ++i) unit[i * m + i] = Scalar(1);
    ComplexMatrix s(d, d);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) s(j * m + i, i * m + j) = Scalar(1);
    StarAlgebra a(d, mult, unit, s, true, m == 1 ? "C" : "M" + std::to_string(m));
    a.matrix_order_ = m;
    return a;
}

StarAlgebra make_product(const StarAlgebra& a, const StarAlgebra& b) {
    const std::size_t da = a.dim(), db = b.dim(), d = da + db;
    std::vector<Scalar> mult(d * d * d, Scalar(0));
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j)
            for (std::size_t k = 0; k < da; ++k) mult[(i * d + j) * d + k] = a.structure_constant(i, j, k);
    for (std::size_t i = 0; i < db; ++i)
        for (std::size_t j = 0; j < db; ++j)
            for (std::size_t k = 0; k < db; ++k)
                mult[((da + i) * d + (da + j)) * d + (da + k)] = b.structure_constant(i, j, k);
    StarAlgebra::Element unit(a.unit());
    unit.insert(unit.end(), b.unit().begin(), b.unit().end());
    ComplexMatrix s(d, d);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j) s(i, j) = a.star_matrix()(i, j);
    for (std::size_t i = 0; i < db; ++i)
        for (std::size_t j = 0; j < db; ++j) s(da + i, da + j) = b.star_matrix()(i, j);
    return StarAlgebra(d, mult, unit, s, a.associative() && b.associative(), a.name() + "x" + b.name());
}

StarAlgebra make_swap_product(const StarAlgebra& a) {
    const std::size_t da = a.dim(), d = 2 * da;
    std::vector<Scalar> mult(d * d * d, Scalar(0));
    for (std::size_t half = 0; half < 2; ++half)
        for (std::size_t i = 0; i < da; ++i)
            for (std::size_t j = 0; j < da; ++j)
                for (std::size_t k = 0; k < da; ++k)
                    mult[((half * da + i) * d + (half * da + j)) * d + half * da + k] = a.structure_constant(i, j, k);
    StarAlgebra::Element unit(a.unit());
    unit.insert(unit.end(), a.unit().begin(), a.unit().end());
    // (x, y)* = (y*, x*)
    ComplexMatrix s(d, d);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j) {
            s(i, da + j) = a.star_matrix()(i, j);
            s(da + i, j) = a.star_matrix()(i, j);
        }
    return StarAlgebra(d, mult, unit, s, a.associative(), a.name() + "x" + a.name() + "-swap");
}

StarAlgebra make_tensor(const StarAlgebra& a, const StarAlgebra& b) {
    const std::size_t da = a.dim(), db = b.dim(), d = da * db;
    std::vector<Scalar> mult(d * d * d, Scalar(0));
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j)
            for (std::size_t k = 0; k < da; ++k) {
                Scalar ca = a.structure_constant(i, j, k);
                if (ca.is_zero()) continue;
                for (std::size_t p = 0; p < db; ++p)
                    for (std::size_t q = 0; q < db; ++q)
                        for (std::size_t r = 0; r < db; ++r) {
                            Scalar cb = b.structure_constant(p, q, r);
                            if (!cb.is_zero()) mult[((i * db + p) * d + (j * db + q)) * d + k * db + r] = ca * cb;
                        }
            }
    StarAlgebra::Element unit(d, Scalar(0));
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t p = 0; p < db; ++p) unit[i * db + p] = a.unit()[i] * b.unit()[p];
    return StarAlgebra(d, mult, unit, kronecker(a.star_matrix(), b.star_matrix()), a.associative() && b.associative(),
                       a.name() + "(x)" + b.name());
}

StarAlgebra twist_involution(const StarAlgebra& a, const StarAlgebra::Element& alpha) {
    if (a.star(alpha) != alpha) throw Error(ErrorKind::InvalidTwist, "twist element is not selfadjoint");
    StarAlgebra::Element alpha_inv;
    try {
        alpha_inv = invert(a, alpha);
    } catch (const Error&) {
        throw Error(ErrorKind::InvalidTwist, "twist element is not invertible");
    }
    const std::size_t d = a.dim();
    ComplexMatrix s(d, d);
    for (std::size_t j = 0; j < d; ++j) {
        auto col = a.multiply(a.multiply(alpha, a.star(a.basis(j))), alpha_inv);
        for (std::size_t i = 0; i < d; ++i) s(i, j) = col[i];
    }
    std::vector<Scalar> mult(d * d * d, Scalar(0));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) mult[(i * d + j) * d + k] = a.structure_constant(i, j, k);
    try {
        return StarAlgebra(d, mult, a.unit(), s, a.associative(), a.name() + "-twisted");
    } catch (const Error& e) {
        throw Error(ErrorKind::InvalidTwist, e.what());
    }
}

StarAlgebra make_dual_numbers() {
    // basis (e, eps)
    std::vector<Scalar> mult(8, Scalar(0));
    mult[(0 * 2 + 0) * 2 + 0] = 1;
    mult[(0 * 2 + 1) * 2 + 1] = 1;
    mult[(1 * 2 + 0) * 2 + 1] = 1;
    return StarAlgebra(2, mult, {Scalar(1), Scalar(0)}, ComplexMatrix::identity(2), true, "C[eps]");
}

namespace {

// Cayley-Dickson product on basis elements of the 2^level-dimensional algebra
// over the reals; returns (sign, index) with e_i e_j = sign * e_index.
std::pair<int, std::size_t> cayley_dickson(std::size_t level, std::size_t i, std::size_t j) {
    if (level == 0) return {1, 0};
    const std::size_t half = std::size_t{1} << (level - 1);
    const bool bi = i >= half, bj = j >= half;
    const std::size_t a = i % half, c = j % half;
    // conj on basis elements: unit fixed, others negated
    auto cs = [](std::size_t x) { return x == 0 ? 1 : -1; };
    // (a,b)(c,d) = (ac - d* b, d a + b c*)
    if (!bi && !bj) return cayley_dickson(level - 1, a, c);
    if (!bi && bj) {
        // (a,0)(0,d) = (0, d a)
        auto [s, k] = cayley_dickson(level - 1, c, a);
        return {s, half + k};
    }
    if (bi && !bj) {
        // (0,b)(c,0) = (0, b c*)
        auto [s, k] = cayley_dickson(level - 1, a, c);
        return {s * cs(c), half + k};
    }
    // (0,b)(0,d) = (-d* b, 0)
    auto [s, k] = cayley_dickson(level - 1, c, a);
    return {-s * cs(c), k};
}

}  // namespace

StarAlgebra make_octonions() {
    const std::size_t d = 8;
    std::vector<Scalar> mult(d * d * d, Scalar(0));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            auto [s, k] = cayley_dickson(3, i, j);
            mult[(i * d + j) * d + k] = Scalar(s);
        }
    StarAlgebra::Element unit(d, Scalar(0));
    unit[0] = 1;
    ComplexMatrix s(d, d);
    s(0, 0) = 1;
    for (std::size_t i = 1; i < d; ++i) s(i, i) = -1;
    return StarAlgebra(d, mult, unit, s, false, "O");
}

namespace {

SubspaceBasis eigen_basis(const StarAlgebra& a, int sign) {
    const std::size_t d = a.dim();
    std::vector<std::vector<Scalar>> images;
    for (std::size_t j = 0; j < d; ++j) {
        for (const Scalar& c : {Scalar(1), Scalar::i()}) {
            StarAlgebra::Element x(d, Scalar(0));
            x[j] = c;
            auto s = a.star(x);
            for (std::size_t t = 0; t < d; ++t) s[t] -= x[t] * Scalar(sign);
            images.push_back(std::move(s));
        }
    }
    return {real_kernel(d, images)};
}

}  // namespace

SubspaceBasis selfadjoint_basis(const StarAlgebra& a) { return eigen_basis(a, 1); }
SubspaceBasis antiselfadjoint_basis(const StarAlgebra& a) { return eigen_basis(a, -1); }

StarAlgebra::Element invert(const StarAlgebra& a, const StarAlgebra::Element& x) {
    return invert<Scalar>(a, std::span<const Scalar>(x));
}

SubspaceBasis derivations(const StarAlgebra& a) {
    const std::size_t d = a.dim();
    // v[i][j] = e_i e_j*
    std::vector<StarAlgebra::Element> v(d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) v[i * d + j] = a.multiply(a.basis(i), a.star(a.basis(j)));

    // Unknown D(p,q) = x + iy at columns 2(p*d+q), 2(p*d+q)+1.
    // For D = c E_pq the residual at pair (i,j) is
    //   c (v_ij)_q e_p - [i==q] c v_pj - [j==q] conj(c) v_ip.
    std::map<std::size_t, SparseRow> rows;
    auto add = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t col, const Scalar& val) {
        if (val.is_zero()) return;
        std::size_t base = ((i * d + j) * d + k) * 2;
        if (sgn(val.re) != 0) rows[base].emplace_back(col, val.re);
        if (sgn(val.im) != 0) rows[base + 1].emplace_back(col, val.im);
    };
    for (std::size_t p = 0; p < d; ++p)
        for (std::size_t q = 0; q < d; ++q)
            for (int part = 0; part < 2; ++part) {
                const Scalar c = part == 0 ? Scalar(1) : Scalar::i();
                const std::size_t col = 2 * (p * d + q) + part;
                for (std::size_t i = 0; i < d; ++i)
                    for (std::size_t j = 0; j < d; ++j) {
                        add(i, j, p, col, c * v[i * d + j][q]);
                        if (i == q)
                            for (std::size_t k = 0; k < d; ++k) add(i, j, k, col, -(c * v[p * d + j][k]));
                        if (j == q)
                            for (std::size_t k = 0; k < d; ++k) add(i, j, k, col, -(c.conj() * v[i * d + p][k]));
                    }
            }
    // Entries for the same (row, column) may repeat; merge them.
    EchelonBasis eb(2 * d * d);
    for (auto& [key, row] : rows) {
        std::map<std::size_t, Rational> merged;
        for (auto& [c, q] : row) merged[c] += q;
        SparseRow clean;
        for (auto& [c, q] : merged)
            if (sgn(q) != 0) clean.emplace_back(c, q);
        if (!clean.empty()) eb.insert(clean);
    }
    SubspaceBasis out;
    for (const auto& x : eb.nullspace()) out.vectors.push_back(complexify(x));
    return out;
}

ComplexMatrix derivation_matrix(const StarAlgebra& a, const std::vector<Scalar>& flat) {
    const std::size_t d = a.dim();
    if (flat.size() != d * d) throw Error(ErrorKind::InvalidArgument, "derivation has wrong size");
    ComplexMatrix m(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m(i, j) = flat[i * d + j];
    return m;
}

bool is_star_automorphism(const StarAlgebra& a, const ComplexMatrix& g) {
    const std::size_t d = a.dim();
    if (g.rows() != d || g.cols() != d) return false;
    auto apply_g = [&](const StarAlgebra::Element& x) { return apply<Scalar>(g, std::span<const Scalar>(x)); };
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            auto lhs = apply_g(a.multiply(a.basis(i), a.star(a.basis(j))));
            auto rhs = a.multiply(apply_g(a.basis(i)), a.star(apply_g(a.basis(j))));
            if (lhs != rhs) return false;
        }
    return complex_rank(g) == d;
}

}  // namespace crq
