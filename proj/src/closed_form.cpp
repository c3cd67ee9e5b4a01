#include "crq/closed_form.hpp"

namespace crq {

namespace {

void check_level(int k) {
    if (k < -2 || k > 2) throw Error(ErrorKind::InvalidGrading, "grade must lie in -2..2");
}

Scalar unit_coeff(std::size_t part) { return part == 0 ? Scalar(1) : Scalar::i(); }

PolyVecField constant_w_field(const QuadricSpec& q, const std::vector<Scalar>& a) {
    PolyVecField f(q.dim_w(), q.dim_z());
    const std::size_t nv = f.nvars();
    for (std::size_t l = 0; l < q.dim_w(); ++l)
        if (!a[l].is_zero()) f.set_component(l, Poly::constant(nv, a[l]));
    return f;
}

std::vector<PolyVecField> imaginary_constants(const QuadricSpec& q) {
    std::vector<PolyVecField> out;
    for (const auto& v : q.real_form()) {
        std::vector<Scalar> a;
        for (const auto& x : v) a.push_back(x * Scalar::i());
        out.push_back(constant_w_field(q, a));
    }
    return out;
}

// h(z, c) d/dw + c d/dz with c = u e_b
PolyVecField translation_field(const QuadricSpec& q, std::size_t b, const Scalar& u) {
    PolyVecField f(q.dim_w(), q.dim_z());
    const std::size_t nv = f.nvars(), dw = q.dim_w();
    const Scalar uc = conj(u);
    for (std::size_t l = 0; l < dw; ++l) {
        Poly p(nv);
        for (std::size_t a = 0; a < q.dim_z(); ++a)
            if (!q.form(a, b, l).is_zero()) p += Poly::variable(nv, dw + a, q.form(a, b, l) * uc);
        f.set_component(l, std::move(p));
    }
    f.set_component(dw + b, Poly::constant(nv, u));
    return f;
}

}  // namespace

std::vector<LinearPair> linear_pairs(const QuadricSpec& q) {
    const std::size_t dw = q.dim_w(), dz = q.dim_z();
    const std::size_t na = dw * dw, nb = dz * dz;
    const std::size_t out_dim = dw * dw + dz * dz * dw;
    const ComplexMatrix& c = q.conj_matrix();
    std::vector<std::vector<Scalar>> images;
    images.reserve(2 * (na + nb));
    // Unknown a = u E_rc: commutation a C = C conj(a), and a h(e_p, e_q) terms.
    for (std::size_t r = 0; r < dw; ++r)
        for (std::size_t col = 0; col < dw; ++col)
            for (std::size_t part = 0; part < 2; ++part) {
                const Scalar u = unit_coeff(part);
                std::vector<Scalar> img(out_dim, Scalar(0));
                for (std::size_t j = 0; j < dw; ++j) img[r * dw + j] += u * c(col, j);
                for (std::size_t i = 0; i < dw; ++i) img[i * dw + col] -= c(i, r) * conj(u);
                for (std::size_t p = 0; p < dz; ++p)
                    for (std::size_t qq = 0; qq < dz; ++qq)
                        img[na + (p * dz + qq) * dw + r] += u * q.form(p, qq, col);
                images.push_back(std::move(img));
            }
    // Unknown b = u E_ac: -h(b e_p, e_q) - h(e_p, b e_q).
    for (std::size_t a = 0; a < dz; ++a)
        for (std::size_t col = 0; col < dz; ++col)
            for (std::size_t part = 0; part < 2; ++part) {
                const Scalar u = unit_coeff(part), uc = conj(u);
                std::vector<Scalar> img(out_dim, Scalar(0));
                for (std::size_t qq = 0; qq < dz; ++qq)
                    for (std::size_t l = 0; l < dw; ++l) img[na + (col * dz + qq) * dw + l] -= u * q.form(a, qq, l);
                for (std::size_t p = 0; p < dz; ++p)
                    for (std::size_t l = 0; l < dw; ++l) img[na + (p * dz + col) * dw + l] -= uc * q.form(p, a, l);
                images.push_back(std::move(img));
            }
    std::vector<LinearPair> out;
    for (const auto& x : real_kernel(na + nb, images)) {
        LinearPair p{ComplexMatrix(dw, dw), ComplexMatrix(dz, dz)};
        for (std::size_t i = 0; i < na; ++i) p.a(i / dw, i % dw) = x[i];
        for (std::size_t i = 0; i < nb; ++i) p.b(i / dz, i % dz) = x[na + i];
        out.push_back(std::move(p));
    }
    return out;
}

PolyVecField linear_field(const QuadricSpec& q, const LinearPair& p) {
    const std::size_t dw = q.dim_w(), dz = q.dim_z();
    PolyVecField f(dw, dz);
    const std::size_t nv = f.nvars();
    for (std::size_t l = 0; l < dw; ++l) {
        Poly c(nv);
        for (std::size_t k = 0; k < dw; ++k)
            if (!p.a(l, k).is_zero()) c += Poly::variable(nv, k, p.a(l, k));
        f.set_component(l, std::move(c));
    }
    for (std::size_t a = 0; a < dz; ++a) {
        Poly c(nv);
        for (std::size_t k = 0; k < dz; ++k)
            if (!p.b(a, k).is_zero()) c += Poly::variable(nv, dw + k, p.b(a, k));
        f.set_component(dw + a, std::move(c));
    }
    return f;
}

std::vector<PolyVecField> general_closed_form(const QuadricSpec& q, int k) {
    check_level(k);
    std::vector<PolyVecField> out;
    switch (k) {
    case -2:
        return imaginary_constants(q);
    case -1:
        for (std::size_t b = 0; b < q.dim_z(); ++b)
            for (std::size_t part = 0; part < 2; ++part) out.push_back(translation_field(q, b, unit_coeff(part)));
        return out;
    case 0:
        for (const auto& p : linear_pairs(q)) out.push_back(linear_field(q, p));
        return out;
    default:
        throw Error(ErrorKind::Unsupported, "no general formula for grade " + std::to_string(k));
    }
}

bool has_algebra_form(const QuadricSpec& q) {
    const auto& mf = q.matrix_family();
    if (!mf || !mf->algebra.associative()) return false;
    const std::size_t d = mf->algebra.dim();
    return q.dim_w() == mf->m * mf->m * d && q.dim_z() == mf->m * mf->n * d;
}

namespace {

// Matrices over A with polynomial entries; W and Z coordinates coincide with
// the AlgMatrix layout ((row*cols + col)*d + t).
class AlgebraFrame {
public:
    explicit AlgebraFrame(const QuadricSpec& q)
        : q_(q), mf_(*q.matrix_family()), a_(mf_.algebra), nv_(q.dim_w() + q.dim_z()) {
        w_ = AlgMatrix<Poly>(mf_.m, mf_.m, a_.dim(), Poly(nv_));
        for (std::size_t i = 0; i < q.dim_w(); ++i) w_.data[i] = Poly::variable(nv_, i);
        z_ = AlgMatrix<Poly>(mf_.m, mf_.n, a_.dim(), Poly(nv_));
        for (std::size_t i = 0; i < q.dim_z(); ++i) z_.data[i] = Poly::variable(nv_, q.dim_w() + i);
        beta_ = alg_from_complex(a_, mf_.beta, Poly::constant(nv_, Scalar(1)));
    }

    const MatrixFamily& family() const { return mf_; }
    const StarAlgebra& algebra() const { return a_; }
    const AlgMatrix<Poly>& w() const { return w_; }
    const AlgMatrix<Poly>& z() const { return z_; }
    const AlgMatrix<Poly>& beta() const { return beta_; }

    AlgMatrix<Poly> lift(const AlgMatrix<Scalar>& c) const {
        AlgMatrix<Poly> out(c.rows, c.cols, c.d, Poly(nv_));
        for (std::size_t i = 0; i < c.data.size(); ++i)
            if (!c.data[i].is_zero()) out.data[i] = Poly::constant(nv_, c.data[i]);
        return out;
    }
    AlgMatrix<Scalar> star(const AlgMatrix<Scalar>& c) const {
        return alg_adjoint(a_, c, [](const Scalar& x) { return conj(x); });
    }
    AlgMatrix<Poly> mul(const AlgMatrix<Poly>& x, const AlgMatrix<Poly>& y) const { return alg_mul(a_, x, y); }

    PolyVecField field(const AlgMatrix<Poly>& fw, const AlgMatrix<Poly>& fz) const {
        std::vector<Poly> comps = fw.data;
        comps.insert(comps.end(), fz.data.begin(), fz.data.end());
        return PolyVecField(q_.dim_w(), q_.dim_z(), std::move(comps));
    }
    AlgMatrix<Poly> zero(std::size_t r, std::size_t c) const { return AlgMatrix<Poly>(r, c, a_.dim(), Poly(nv_)); }

    /// Real basis u e_t of A^{r x c}.
    std::vector<AlgMatrix<Scalar>> real_basis(std::size_t r, std::size_t c) const {
        std::vector<AlgMatrix<Scalar>> out;
        for (std::size_t t = 0; t < r * c * a_.dim(); ++t)
            for (std::size_t part = 0; part < 2; ++part) {
                AlgMatrix<Scalar> x(r, c, a_.dim(), Scalar(0));
                x.data[t] = unit_coeff(part);
                out.push_back(std::move(x));
            }
        return out;
    }
    /// Real basis of {a in A^{m x m} : a + a* = 0}.
    std::vector<AlgMatrix<Scalar>> antihermitian_basis() const {
        std::vector<AlgMatrix<Scalar>> out;
        for (const auto& v : q_.real_form()) {
            AlgMatrix<Scalar> x(mf_.m, mf_.m, a_.dim(), Scalar(0));
            for (std::size_t i = 0; i < v.size(); ++i) x.data[i] = v[i] * Scalar::i();
            out.push_back(std::move(x));
        }
        return out;
    }

private:
    const QuadricSpec& q_;
    const MatrixFamily& mf_;
    const StarAlgebra& a_;
    std::size_t nv_;
    AlgMatrix<Poly> w_, z_, beta_;
};

bool unit_heisenberg(const MatrixFamily& mf) {
    return mf.m == 1 && mf.n == 1 && mf.beta(0, 0) == Scalar(1);
}

}  // namespace

std::vector<PolyVecField> algebra_closed_form(const QuadricSpec& q, int k) {
    check_level(k);
    if (!has_algebra_form(q))
        throw Error(ErrorKind::Unsupported, "quadric is not a matrix quadric over an associative *-algebra");
    const AlgebraFrame fr(q);
    const auto& mf = fr.family();
    const std::size_t m = mf.m, n = mf.n;
    std::vector<PolyVecField> out;
    switch (k) {
    case -2:
        for (const auto& a : fr.antihermitian_basis()) out.push_back(fr.field(fr.lift(a), fr.zero(m, n)));
        return out;
    case -1:
        for (const auto& c : fr.real_basis(m, n)) {
            auto zbc = fr.mul(fr.mul(fr.z(), fr.beta()), fr.lift(fr.star(c)));
            out.push_back(fr.field(zbc, fr.lift(c)));
        }
        return out;
    case 0: {
        if (!unit_heisenberg(mf))
            throw Error(ErrorKind::Unsupported, "grade 0 formula needs m = n = 1 and beta = 1");
        const StarAlgebra& alg = fr.algebra();
        for (const auto& a : fr.real_basis(1, 1)) {
            auto la = fr.lift(a);
            auto fw = alg_add(fr.mul(la, fr.w()), fr.mul(fr.w(), fr.lift(fr.star(a))));
            out.push_back(fr.field(fw, fr.mul(la, fr.z())));
        }
        const std::size_t d = alg.dim(), nv = q.dim_w() + q.dim_z();
        for (const auto& flat : derivations(alg).vectors) {
            const ComplexMatrix dm = derivation_matrix(alg, flat);
            std::vector<Poly> comps(2 * d, Poly(nv));
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j) {
                    if (dm(i, j).is_zero()) continue;
                    comps[i] += Poly::variable(nv, j, dm(i, j));
                    comps[d + i] += Poly::variable(nv, d + j, dm(i, j));
                }
            out.emplace_back(q.dim_w(), q.dim_z(), std::move(comps));
        }
        return out;
    }
    case 1:
        for (const auto& c : fr.real_basis(m, n)) {
            auto zbc = fr.mul(fr.mul(fr.z(), fr.beta()), fr.lift(fr.star(c)));
            auto fw = fr.mul(zbc, fr.w());
            auto fz = alg_sub(fr.mul(zbc, fr.z()), fr.mul(fr.w(), fr.lift(c)));
            out.push_back(fr.field(fw, fz));
        }
        return out;
    case 2:
        for (const auto& a : fr.antihermitian_basis()) {
            auto wa = fr.mul(fr.w(), fr.lift(a));
            out.push_back(fr.field(fr.mul(wa, fr.w()), fr.mul(wa, fr.z())));
        }
        return out;
    }
    return out;
}

ClosedFormBasis closed_form_basis(const QuadricSpec& q) {
    ClosedFormBasis out;
    out.algebra.dim_w = q.dim_w();
    out.algebra.dim_z = q.dim_z();
    const bool alg = has_algebra_form(q);
    for (int k = -2; k <= 2; ++k) {
        auto& slot = out.algebra.levels[static_cast<std::size_t>(k + 2)];
        auto& avail = out.available[static_cast<std::size_t>(k + 2)];
        if (alg && (k != 0 || unit_heisenberg(*q.matrix_family()))) {
            slot = algebra_closed_form(q, k);
            avail = true;
        } else if (k <= 0) {
            slot = general_closed_form(q, k);
            avail = true;
        }
    }
    return out;
}

}  // namespace crq
