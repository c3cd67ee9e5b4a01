#include "crq/quadric.hpp"

#include <sstream>

namespace crq {

namespace {

Scalar conj_scalar(const Scalar& x) { return x.conj(); }

std::string matrix_text(const ComplexMatrix& m) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j);
        os << ']';
    }
    os << ']';
    return os.str();
}

ComplexMatrix block_diag(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
    return out;
}

}  // namespace

QuadricSpec::QuadricSpec(std::size_t dim_w, std::size_t dim_z, ComplexMatrix conj, std::vector<Scalar> form,
                         Provenance provenance)
    : dim_w_(dim_w), dim_z_(dim_z), conj_(std::move(conj)), form_(std::move(form)), provenance_(std::move(provenance)) {
    if (conj_.rows() != dim_w_ || conj_.cols() != dim_w_)
        throw Error(ErrorKind::InvalidArgument, "conjugation matrix has wrong shape");
    if (form_.size() != dim_z_ * dim_z_ * dim_w_) throw Error(ErrorKind::InvalidArgument, "form tensor has wrong size");
    std::vector<std::vector<Scalar>> images;
    for (std::size_t j = 0; j < dim_w_; ++j)
        for (const Scalar& c : {Scalar(1), Scalar::i()}) {
            std::vector<Scalar> x(dim_w_, Scalar(0));
            x[j] = c;
            auto y = conj_w(x);
            for (std::size_t t = 0; t < dim_w_; ++t) y[t] -= x[t];
            images.push_back(std::move(y));
        }
    real_form_ = real_kernel(dim_w_, images);
}

std::vector<Scalar> QuadricSpec::h(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const {
    return h<Scalar>(std::span<const Scalar>(x), std::span<const Scalar>(y), conj_scalar);
}

std::vector<Scalar> QuadricSpec::conj_w(const std::vector<Scalar>& w) const {
    if (w.size() != dim_w_) throw Error(ErrorKind::InvalidArgument, "conj_w: dimension mismatch");
    if (dim_w_ == 0) return {};
    return conj_w<Scalar>(std::span<const Scalar>(w), conj_scalar);
}

QuadricSpec make_matrix_quadric(std::size_t m, std::size_t n, const ComplexMatrix& beta) {
    if (m == 0 || n == 0) throw Error(ErrorKind::InvalidParameter, "matrix quadric needs m, n >= 1");
    if (beta.rows() != n || beta.cols() != n) throw Error(ErrorKind::InvalidForm, "beta must be n x n");
    if (!(adjoint(beta) == beta)) throw Error(ErrorKind::InvalidForm, "beta is not hermitian");
    if (complex_rank(beta) != n) throw Error(ErrorKind::InvalidForm, "beta is singular");

    const std::size_t dw = m * m, dz = m * n;
    ComplexMatrix conj(dw, dw);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) conj(j * m + i, i * m + j) = 1;
    // h(E_ab, E_cd) = E_ab beta E_dc = beta_bd E_ac
    std::vector<Scalar> form(dz * dz * dw, Scalar(0));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < m; ++c)
                for (std::size_t d = 0; d < n; ++d)
                    form[((a * n + b) * dz + (c * n + d)) * dw + (a * m + c)] = beta(b, d);

    std::ostringstream desc;
    desc << "EY(m=" << m << ", n=" << n << ", beta=" << matrix_text(beta) << ")";
    QuadricSpec q(dw, dz, conj, form, {"ey", desc.str()});

    AlgebraModel model{make_matrix_algebra(m), ComplexMatrix::identity(dw), ComplexMatrix::identity(dw), {}};
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            ComplexMatrix act(dz, dz);
            for (std::size_t l = 0; l < n; ++l) act(i * n + l, j * n + l) = 1;
            model.action.push_back(std::move(act));
        }
    q.set_model(std::move(model));
    q.set_matrix_family({m, n, beta, make_complex()});
    return q;
}

QuadricSpec make_hyperquadric(std::size_t n, std::size_t k) {
    if (n == 0 || k > n) throw Error(ErrorKind::InvalidParameter, "hyperquadric needs n >= 1 and 0 <= k <= n");
    ComplexMatrix beta(n, n);
    for (std::size_t j = 0; j < n; ++j) beta(j, j) = j < k ? 1 : -1;
    QuadricSpec q = make_matrix_quadric(1, n, beta);
    QuadricSpec out(q.dim_w(), q.dim_z(), q.conj_matrix(), q.form_tensor(),
                    {"ex", "EX(n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")"});
    out.set_model(*q.model());
    out.set_matrix_family(*q.matrix_family());
    return out;
}

QuadricSpec tensor_quadric(const QuadricSpec& q, const StarAlgebra& a) {
    const std::size_t d = a.dim(), dw = q.dim_w() * d, dz = q.dim_z() * d;
    ComplexMatrix conj = kronecker(q.conj_matrix(), a.star_matrix());
    // h~(e_a (x) e_alpha, e_b (x) e_beta) = h(e_a, e_b) (x) e_alpha e_beta*
    std::vector<StarAlgebra::Element> prod(d * d);
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y) prod[x * d + y] = a.multiply(a.basis(x), a.star(a.basis(y)));
    std::vector<Scalar> form(dz * dz * dw, Scalar(0));
    for (std::size_t p = 0; p < q.dim_z(); ++p)
        for (std::size_t r = 0; r < q.dim_z(); ++r)
            for (std::size_t l = 0; l < q.dim_w(); ++l) {
                const Scalar& f = q.form(p, r, l);
                if (f.is_zero()) continue;
                for (std::size_t x = 0; x < d; ++x)
                    for (std::size_t y = 0; y < d; ++y)
                        for (std::size_t g = 0; g < d; ++g) {
                            const Scalar& v = prod[x * d + y][g];
                            if (!v.is_zero()) form[((p * d + x) * dz + (r * d + y)) * dw + l * d + g] = f * v;
                        }
            }
    QuadricSpec out(dw, dz, conj, form,
                    {"tensor", q.provenance().description + " (x) " + (a.name().empty() ? "A" : a.name())});
    if (q.model()) {
        const auto& m = *q.model();
        AlgebraModel tm{make_tensor(m.envelope, a), kronecker(m.embed, ComplexMatrix::identity(d)),
                        kronecker(m.project, ComplexMatrix::identity(d)), {}};
        for (std::size_t i = 0; i < m.envelope.dim(); ++i)
            for (std::size_t x = 0; x < d; ++x) {
                auto ex = a.basis(x);
                tm.action.push_back(kronecker(m.action[i], a.left_multiplication<Scalar>(std::span<const Scalar>(ex))));
            }
        out.set_model(std::move(tm));
    }
    if (q.matrix_family()) {
        auto mf = *q.matrix_family();
        out.set_matrix_family({mf.m, mf.n, mf.beta, make_tensor(mf.algebra, a)});
    }
    return out;
}

QuadricSpec make_algebra_quadric(const StarAlgebra& a) {
    auto q = tensor_quadric(make_hyperquadric(1, 1), a);
    q.set_description("Q(" + (a.name().empty() ? std::string("A") : a.name()) + ")");
    return q;
}

QuadricSpec product_quadric(const QuadricSpec& q1, const QuadricSpec& q2) {
    for (const auto* q : {&q1, &q2})
        if (q->dim_w() == 0 || q->dim_z() == 0)
            throw Error(ErrorKind::InvalidArgument, "product factor has an empty W or Z");
    const std::size_t w1 = q1.dim_w(), z1 = q1.dim_z();
    const std::size_t dw = w1 + q2.dim_w(), dz = z1 + q2.dim_z();
    std::vector<Scalar> form(dz * dz * dw, Scalar(0));
    for (std::size_t a = 0; a < z1; ++a)
        for (std::size_t b = 0; b < z1; ++b)
            for (std::size_t l = 0; l < w1; ++l) form[(a * dz + b) * dw + l] = q1.form(a, b, l);
    for (std::size_t a = 0; a < q2.dim_z(); ++a)
        for (std::size_t b = 0; b < q2.dim_z(); ++b)
            for (std::size_t l = 0; l < q2.dim_w(); ++l)
                form[((z1 + a) * dz + (z1 + b)) * dw + w1 + l] = q2.form(a, b, l);
    QuadricSpec out(dw, dz, block_diag(q1.conj_matrix(), q2.conj_matrix()), form,
                    {"product", q1.provenance().description + " x " + q2.provenance().description});
    if (q1.model() && q2.model()) {
        const auto &m1 = *q1.model(), &m2 = *q2.model();
        AlgebraModel pm{make_product(m1.envelope, m2.envelope), block_diag(m1.embed, m2.embed),
                        block_diag(m1.project, m2.project), {}};
        for (const auto& act : m1.action) pm.action.push_back(block_diag(act, ComplexMatrix(q2.dim_z(), q2.dim_z())));
        for (const auto& act : m2.action) pm.action.push_back(block_diag(ComplexMatrix(z1, z1), act));
        out.set_model(std::move(pm));
    }
    return out;
}

QuadricSpec make_type_II(std::size_t m) {
    if (m < 4 || m % 2 != 0) throw Error(ErrorKind::InvalidParameter, "Type II needs an even m >= 4");
    const std::size_t half = m / 2, dm = m * m;
    ComplexMatrix j(m, m);
    for (std::size_t i = 0; i < half; ++i) {
        j(i, half + i) = 1;
        j(half + i, i) = -1;
    }
    // W = {w : j w' j^{-1} = w} = {u j^{-1} : u' = -u}; coordinate r of w is
    // (w j)_{pq} for the r-th pair p < q.
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = p + 1; q < m; ++q) pairs.emplace_back(p, q);
    const std::size_t dw = pairs.size();
    ComplexMatrix jinv = inverse(j);
    ComplexMatrix embed(dm, dw), project(dw, dm);
    for (std::size_t r = 0; r < dw; ++r) {
        auto [p, q] = pairs[r];
        ComplexMatrix u(m, m);
        u(p, q) = 1;
        u(q, p) = -1;
        ComplexMatrix b = u * jinv;
        for (std::size_t x = 0; x < m; ++x)
            for (std::size_t y = 0; y < m; ++y) embed(x * m + y, r) = b(x, y);
        for (std::size_t s = 0; s < m; ++s) project(r, p * m + s) = j(s, q);
    }
    AlgebraModel model{make_matrix_algebra(m), embed, project, {}};
    for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < m; ++y) {
            ComplexMatrix act(m, m);
            act(x, y) = 1;
            model.action.push_back(std::move(act));
        }
    ComplexMatrix conj = project * model.envelope.star_matrix() * conjugate(embed);

    // h(e_a, e_b) = E_ab + j E_ba j^{-1}
    std::vector<Scalar> form(m * m * dw, Scalar(0));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            ComplexMatrix eba(m, m);
            eba(b, a) = 1;
            ComplexMatrix val = j * eba * jinv;
            val(a, b) += 1;
            auto coords = model_project<Scalar>(model, std::span<const Scalar>(val.data()));
            for (std::size_t l = 0; l < dw; ++l) form[(a * m + b) * dw + l] = coords[l];
        }
    QuadricSpec out(dw, m, conj, form, {"type2", "TypeII(m=" + std::to_string(m) + ")"});
    out.set_model(std::move(model));
    return out;
}

QuadricSpec make_type_V() {
    auto q = tensor_quadric(make_hyperquadric(1, 1), make_octonions());
    QuadricSpec out(q.dim_w(), q.dim_z(), q.conj_matrix(), q.form_tensor(), {"type5", "TypeV(octonions)"});
    out.set_model(*q.model());
    out.set_matrix_family(*q.matrix_family());
    return out;
}

QuadricDiagnostics validate(const QuadricSpec& q) {
    QuadricDiagnostics d;
    const std::size_t dw = q.dim_w(), dz = q.dim_z();
    const auto& c = q.conj_matrix();
    if (!(c * conjugate(c) == ComplexMatrix::identity(dw))) {
        d.conjugation_involutive = false;
        d.messages.push_back("conjugation of W is not an involution");
    }
    std::vector<std::vector<Scalar>> polarized;
    for (std::size_t a = 0; a < dz && d.hermitian; ++a)
        for (std::size_t b = 0; b < dz; ++b) {
            std::vector<Scalar> hab(dw), hba(dw);
            for (std::size_t l = 0; l < dw; ++l) {
                hab[l] = q.form(a, b, l);
                hba[l] = q.form(b, a, l);
            }
            if (q.conj_w(hab) != hba) {
                d.hermitian = false;
                d.messages.push_back("h is not hermitian at basis pair (" + std::to_string(a) + "," +
                                     std::to_string(b) + ")");
                break;
            }
            std::vector<Scalar> sym(dw), anti(dw);
            for (std::size_t l = 0; l < dw; ++l) {
                sym[l] = hab[l] + hba[l];
                anti[l] = Scalar::i() * (hab[l] - hba[l]);
            }
            polarized.push_back(std::move(sym));
            polarized.push_back(std::move(anti));
        }
    // h(z, .) = 0 forces z = 0 iff the map z -> (h(z, e_b))_b is injective.
    ComplexMatrix m(dz * dw, dz);
    for (std::size_t a = 0; a < dz; ++a)
        for (std::size_t b = 0; b < dz; ++b)
            for (std::size_t l = 0; l < dw; ++l) m(b * dw + l, a) = q.form(a, b, l);
    if (complex_rank(m) != dz || dz == 0) {
        d.nondegenerate = false;
        d.messages.push_back("h is degenerate");
    }
    if (!d.hermitian || real_rank(polarized) != dw) {
        d.minimal = false;
        d.messages.push_back("values of h do not span V");
    }
    return d;
}

bool contains(const QuadricSpec& q, const QuadricPoint& p) {
    if (p.w.size() != q.dim_w() || p.z.size() != q.dim_z()) return false;
    auto lhs = q.conj_w(p.w);
    for (std::size_t l = 0; l < lhs.size(); ++l) lhs[l] += p.w[l];
    return lhs == q.h(p.z, p.z);
}

QuadricPoint random_point(const QuadricSpec& q, RationalSampler& rng) {
    QuadricPoint p;
    for (std::size_t a = 0; a < q.dim_z(); ++a) p.z.push_back(rng.scalar(4, 3));
    p.w = q.h(p.z, p.z);
    for (auto& v : p.w) v *= Scalar(Rational(1, 2));
    for (const auto& v : q.real_form()) {
        Scalar r = Scalar::i() * Scalar(rng.rational(4, 3));
        for (std::size_t l = 0; l < q.dim_w(); ++l) p.w[l] += r * v[l];
    }
    return p;
}

bool forms_equal(const QuadricSpec& a, const QuadricSpec& b) {
    return a.dim_w() == b.dim_w() && a.dim_z() == b.dim_z() && a.conj_matrix() == b.conj_matrix() &&
           a.form_tensor() == b.form_tensor();
}

bool isomorphic_by_permutation(const QuadricSpec& q1, const QuadricSpec& q2, const std::vector<std::size_t>& w_perm,
                               const std::vector<std::size_t>& z_perm) {
    if (q1.dim_w() != q2.dim_w() || q1.dim_z() != q2.dim_z()) return false;
    if (w_perm.size() != q1.dim_w() || z_perm.size() != q1.dim_z()) return false;
    for (std::size_t i = 0; i < q1.dim_w(); ++i)
        for (std::size_t j = 0; j < q1.dim_w(); ++j)
            if (!(q1.conj_matrix()(i, j) == q2.conj_matrix()(w_perm[i], w_perm[j]))) return false;
    for (std::size_t a = 0; a < q1.dim_z(); ++a)
        for (std::size_t b = 0; b < q1.dim_z(); ++b)
            for (std::size_t l = 0; l < q1.dim_w(); ++l)
                if (!(q1.form(a, b, l) == q2.form(z_perm[a], z_perm[b], w_perm[l]))) return false;
    return true;
}

}  // namespace crq
