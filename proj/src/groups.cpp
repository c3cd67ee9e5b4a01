#include "crq/groups.hpp"

#include "crq/closed_form.hpp"

namespace crq {

namespace {

using Vec = std::vector<Scalar>;
using CSpan = std::span<const Scalar>;

Vec add(Vec a, const Vec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

Vec scale(Vec a, const Scalar& c) {
    for (auto& x : a) x *= c;
    return a;
}

bool tangent_at(const QuadricSpec& q, const QuadricPoint& p, const QuadricPoint& v) {
    return add(v.w, q.conj_w(v.w)) == add(q.h(v.z, p.z), q.h(p.z, v.z));
}

// Random element of iV.
Vec imaginary_element(const QuadricSpec& q, RationalSampler& rng) {
    Vec t(q.dim_w(), Scalar(0));
    for (const auto& v : q.real_form()) t = add(t, scale(v, Scalar(0, rng.rational(4, 3))));
    return t;
}

void require_audit(const GroupElement& g) {
    for (const auto& c : g.audit.checks)
        if (!c.passed)
            throw Error(ErrorKind::InvalidParameter, g.family + " element fails audit: " + c.name + " " + c.detail);
}

std::vector<Poly> linear_components(const QuadricSpec& q, const ComplexMatrix& f, const ComplexMatrix& g) {
    const std::size_t dw = q.dim_w(), nv = dw + q.dim_z();
    std::vector<Poly> out;
    for (std::size_t i = 0; i < dw; ++i) {
        Poly p(nv);
        for (std::size_t j = 0; j < dw; ++j)
            if (!f(i, j).is_zero()) p += Poly::variable(nv, j, f(i, j));
        out.push_back(std::move(p));
    }
    for (std::size_t i = 0; i < q.dim_z(); ++i) {
        Poly p(nv);
        for (std::size_t j = 0; j < q.dim_z(); ++j)
            if (!g(i, j).is_zero()) p += Poly::variable(nv, dw + j, g(i, j));
        out.push_back(std::move(p));
    }
    return out;
}

bool unit_heisenberg_form(const QuadricSpec& q) {
    if (!has_algebra_form(q)) return false;
    const auto& mf = *q.matrix_family();
    return mf.m == 1 && mf.n == 1 && mf.beta(0, 0) == Scalar(1);
}

}  // namespace

CheckReport audit_automorphism(const QuadricSpec& q, const BirationalMap& m, std::uint64_t seed, std::size_t samples) {
    CheckReport rep{"audit of " + m.describe(), {}, {}};
    RationalSampler rng(seed);
    CheckResult into{"maps Q into Q", true, ""};
    CheckResult tangent{"maps tangent vectors to tangent vectors", true, ""};
    std::size_t used = 0, skipped = 0;
    while (used < samples && skipped < 10 * samples) {
        const QuadricPoint p = random_point(q, rng);
        QuadricPoint v{Vec(), Vec(q.dim_z())};
        for (auto& x : v.z) x = rng.scalar(4, 3);
        v.w = add(q.h(v.z, p.z), imaginary_element(q, rng));
        std::pair<QuadricPoint, QuadricPoint> img;
        try {
            img = m.push(p, v);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::SingularPoint) throw;
            ++skipped;
            continue;
        }
        ++used;
        if (into.passed && !contains(q, img.first)) {
            into.passed = false;
            into.detail = "sample " + std::to_string(used) + " leaves Q";
        }
        if (tangent.passed && !tangent_at(q, img.first, img.second)) {
            tangent.passed = false;
            tangent.detail = "sample " + std::to_string(used) + " loses tangency";
        }
    }
    if (used < samples) {
        into.passed = false;
        into.detail += " only " + std::to_string(used) + " regular samples";
    }
    into.detail += (into.detail.empty() ? "" : "; ") + std::to_string(used) + " samples, " + std::to_string(skipped) +
                   " singular skipped";
    rep.add(into);
    rep.add(tangent);
    return rep;
}

CheckResult check_polynomial_automorphism(const QuadricSpec& q, const std::vector<Poly>& components) {
    const std::size_t dw = q.dim_w(), dz = q.dim_z();
    if (components.size() != dw + dz) throw Error(ErrorKind::InvalidArgument, "map has wrong number of components");
    const TangencyContext ctx(q);
    std::vector<Poly> w, z;
    for (std::size_t i = 0; i < dw; ++i) w.push_back(ctx.restrict(components[i]));
    for (std::size_t i = 0; i < dz; ++i) z.push_back(ctx.restrict(components[dw + i]));
    auto rc = [&](const Poly& p) { return ctx.ring_conj(p); };
    const auto wc = q.conj_w<Poly>(std::span<const Poly>(w), rc);
    const auto hzz = q.h<Poly>(std::span<const Poly>(z), std::span<const Poly>(z), rc);
    CheckResult r{"symbolic: maps Q into Q", true, ""};
    for (std::size_t l = 0; l < dw; ++l)
        if (!(w[l] + wc[l] - hzz[l]).is_zero()) {
            r.passed = false;
            r.detail = "defining equation fails in W-coordinate " + std::to_string(l);
            break;
        }
    return r;
}

GroupElement heisenberg(const QuadricSpec& q, const QuadricPoint& ab) {
    if (ab.w.size() != q.dim_w() || ab.z.size() != q.dim_z() || !contains(q, ab))
        throw Error(ErrorKind::InvalidParameter, "heisenberg parameter is not a point of Q");
    GroupElement g{"heisenberg", BirationalMap::heisenberg(q, ab), {}};
    g.audit = audit_automorphism(q, g.map);
    const std::size_t dw = q.dim_w(), nv = dw + q.dim_z();
    std::vector<Poly> comps;
    for (std::size_t l = 0; l < dw; ++l) {
        Poly p = Poly::variable(nv, l) + Poly::constant(nv, ab.w[l]);
        for (std::size_t a = 0; a < q.dim_z(); ++a)
            for (std::size_t b = 0; b < q.dim_z(); ++b)
                if (!q.form(a, b, l).is_zero()) p += Poly::variable(nv, dw + a, q.form(a, b, l) * conj(ab.z[b]));
        comps.push_back(std::move(p));
    }
    for (std::size_t a = 0; a < q.dim_z(); ++a)
        comps.push_back(Poly::variable(nv, dw + a) + Poly::constant(nv, ab.z[a]));
    g.audit.add(check_polynomial_automorphism(q, comps));
    const QuadricPoint origin{Vec(dw, Scalar(0)), Vec(q.dim_z(), Scalar(0))};
    const auto img = g.map.evaluate(origin);
    g.audit.add({"origin maps to the parameter", img.w == ab.w && img.z == ab.z, ""});
    require_audit(g);
    return g;
}

GroupElement heisenberg_between(const QuadricSpec& q, const QuadricPoint& p, const QuadricPoint& p2) {
    if (!contains(q, p) || !contains(q, p2)) throw Error(ErrorKind::InvalidParameter, "points must lie on Q");
    // z + b = z2 and w + a + h(z, b) = w2 determine (a, b) uniquely.
    Vec b = add(p2.z, scale(p.z, Scalar(-1)));
    Vec a = add(add(p2.w, scale(p.w, Scalar(-1))), scale(q.h(p.z, b), Scalar(-1)));
    GroupElement g = heisenberg(q, {a, b});
    const auto img = g.map.evaluate(p);
    if (img.w != p2.w || img.z != p2.z) throw Error(ErrorKind::InvalidArgument, "heisenberg solve failed");
    return g;
}

GroupElement gplus(const QuadricSpec& q, const QuadricPoint& ac) {
    if (ac.w.size() != q.dim_w() || ac.z.size() != q.dim_z() || !contains(q, ac))
        throw Error(ErrorKind::InvalidParameter, "gplus parameter is not a point of Q");
    GroupElement g{"gplus", BirationalMap::gplus(q, ac), {}};
    g.audit = audit_automorphism(q, g.map);
    // d at 0 is (dw, dz) -> (dw, dz + dw c): unipotent, the identity iff c = 0.
    const std::size_t dw = q.dim_w(), n = dw + q.dim_z();
    const QuadricPoint origin{Vec(dw, Scalar(0)), Vec(q.dim_z(), Scalar(0))};
    ComplexMatrix expected = ComplexMatrix::identity(n);
    const auto& model = *q.model();
    for (std::size_t j = 0; j < dw; ++j) {
        Vec e(dw, Scalar(0));
        e[j] = 1;
        const Vec col = model_act<Scalar>(model, CSpan(model_embed<Scalar>(model, CSpan(e))), CSpan(ac.z));
        for (std::size_t i = 0; i < col.size(); ++i) expected(dw + i, j) = col[i];
    }
    g.audit.add({"derivative at the origin is (dw, dz) -> (dw, dz + dw c)", g.map.jacobian(origin) == expected, ""});
    require_audit(g);
    return g;
}

GroupElement linear_element(const QuadricSpec& q, const ComplexMatrix& f, const ComplexMatrix& g) {
    const std::size_t dw = q.dim_w(), dz = q.dim_z();
    if (f.rows() != dw || f.cols() != dw || g.rows() != dz || g.cols() != dz)
        throw Error(ErrorKind::InvalidArgument, "linear element has wrong dimensions");
    if (complex_rank(f) != dw || complex_rank(g) != dz) throw Error(ErrorKind::NotInGLQ, "linear element is singular");
    if (!(f * q.conj_matrix() == q.conj_matrix() * conjugate(f)))
        throw Error(ErrorKind::NotInGLQ, "f does not preserve the real form V");
    for (std::size_t a = 0; a < dz; ++a)
        for (std::size_t b = 0; b < dz; ++b) {
            Vec ea(dz, Scalar(0)), eb(dz, Scalar(0));
            ea[a] = 1;
            eb[b] = 1;
            const Vec lhs = apply<Scalar>(f, CSpan(q.h(ea, eb)));
            const Vec rhs = q.h(apply<Scalar>(g, CSpan(ea)), apply<Scalar>(g, CSpan(eb)));
            if (lhs != rhs)
                throw Error(ErrorKind::NotInGLQ,
                            "f h(x, y) != h(gx, gy) at basis pair (" + std::to_string(a) + ", " + std::to_string(b) + ")");
        }
    GroupElement el{"linear", BirationalMap::linear(q, f, g), {}};
    el.audit = audit_automorphism(q, el.map);
    el.audit.add(check_polynomial_automorphism(q, linear_components(q, f, g)));
    require_audit(el);
    return el;
}

GroupElement dp_linear(const QuadricSpec& q, const StarAlgebra::Element& a, const ComplexMatrix& g) {
    if (!unit_heisenberg_form(q))
        throw Error(ErrorKind::Unsupported, "dp_linear needs the quadric w + w* = zz* over an associative algebra");
    const StarAlgebra& alg = q.matrix_family()->algebra;
    const std::size_t d = alg.dim();
    if (a.size() != d || g.rows() != d || g.cols() != d)
        throw Error(ErrorKind::InvalidArgument, "dp_linear parameters have wrong dimensions");
    try {
        invert(alg, a);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotInvertible) throw;
        throw Error(ErrorKind::InvalidParameter, "a is not invertible");
    }
    if (!is_star_automorphism(alg, g)) throw Error(ErrorKind::InvalidParameter, "g is not a *-automorphism");
    const Vec as = alg.star(a);
    ComplexMatrix fw(d, d), fz(d, d);
    for (std::size_t j = 0; j < d; ++j) {
        const Vec ge = apply<Scalar>(g, CSpan(alg.basis(j)));
        const Vec lz = alg.multiply(a, ge);
        const Vec lw = alg.multiply(lz, as);
        for (std::size_t i = 0; i < d; ++i) {
            fw(i, j) = lw[i];
            fz(i, j) = lz[i];
        }
    }
    return linear_element(q, fw, fz);
}

GroupElement b_element(const QuadricSpec& q, const AlgMatrix<Scalar>& a, const AlgMatrix<Scalar>& u,
                       const ComplexMatrix& g) {
    if (!has_algebra_form(q))
        throw Error(ErrorKind::Unsupported, "b_element needs a matrix quadric over an associative algebra");
    const auto& mf = *q.matrix_family();
    const StarAlgebra& alg = mf.algebra;
    const std::size_t m = mf.m, n = mf.n, d = alg.dim();
    if (a.rows != m || a.cols != m || a.d != d || u.rows != n || u.cols != n || u.d != d || g.rows() != d ||
        g.cols() != d)
        throw Error(ErrorKind::InvalidArgument, "b_element parameters have wrong dimensions");
    if (!is_star_automorphism(alg, g)) throw Error(ErrorKind::InvalidParameter, "g is not a *-automorphism");
    auto cj = [](const Scalar& x) { return conj(x); };
    const auto beta = alg_from_complex(alg, mf.beta, Scalar(1));
    if (!(alg_mul(alg, alg_mul(alg, u, beta), alg_adjoint(alg, u, cj)) == beta))
        throw Error(ErrorKind::InvalidParameter, "u beta u* != beta");
    const auto astar = alg_adjoint(alg, a, cj);
    auto apply_g = [&](AlgMatrix<Scalar> x) {
        for (std::size_t r = 0; r < x.rows; ++r)
            for (std::size_t c = 0; c < x.cols; ++c) {
                const Vec y = apply<Scalar>(g, x.entry(r, c));
                for (std::size_t t = 0; t < d; ++t) x.at(r, c, t) = y[t];
            }
        return x;
    };
    const std::size_t dw = q.dim_w(), dz = q.dim_z();
    ComplexMatrix fw(dw, dw), fz(dz, dz), la(dw, dw);
    for (std::size_t j = 0; j < dw; ++j) {
        AlgMatrix<Scalar> e(m, m, d, Scalar(0));
        e.data[j] = 1;
        const auto ag = alg_mul(alg, a, apply_g(e));
        const auto img = alg_mul(alg, ag, astar);
        const auto left = alg_mul(alg, a, e);
        for (std::size_t i = 0; i < dw; ++i) {
            fw(i, j) = img.data[i];
            la(i, j) = left.data[i];
        }
    }
    if (complex_rank(la) != dw) throw Error(ErrorKind::InvalidParameter, "a is not invertible in A^{m x m}");
    for (std::size_t j = 0; j < dz; ++j) {
        AlgMatrix<Scalar> e(m, n, d, Scalar(0));
        e.data[j] = 1;
        const auto img = alg_mul(alg, alg_mul(alg, a, apply_g(e)), u);
        for (std::size_t i = 0; i < dz; ++i) fz(i, j) = img.data[i];
    }
    return linear_element(q, fw, fz);
}

std::vector<PolyVecField> b_subgroup_fields(const QuadricSpec& q) {
    if (!has_algebra_form(q))
        throw Error(ErrorKind::Unsupported, "b_subgroup_fields needs a matrix quadric over an associative algebra");
    const auto& mf = *q.matrix_family();
    const StarAlgebra& alg = mf.algebra;
    const std::size_t m = mf.m, n = mf.n, d = alg.dim(), dw = q.dim_w(), dz = q.dim_z(), nv = dw + dz;
    auto cj = [](const Scalar& x) { return conj(x); };
    AlgMatrix<Poly> w(m, m, d, Poly(nv)), z(m, n, d, Poly(nv));
    for (std::size_t i = 0; i < dw; ++i) w.data[i] = Poly::variable(nv, i);
    for (std::size_t i = 0; i < dz; ++i) z.data[i] = Poly::variable(nv, dw + i);
    auto lift = [&](const AlgMatrix<Scalar>& c) {
        AlgMatrix<Poly> out(c.rows, c.cols, d, Poly(nv));
        for (std::size_t i = 0; i < c.data.size(); ++i)
            if (!c.data[i].is_zero()) out.data[i] = Poly::constant(nv, c.data[i]);
        return out;
    };
    auto field = [&](const AlgMatrix<Poly>& fw, const AlgMatrix<Poly>& fz) {
        std::vector<Poly> comps = fw.data;
        comps.insert(comps.end(), fz.data.begin(), fz.data.end());
        return PolyVecField(dw, dz, std::move(comps));
    };
    std::vector<PolyVecField> out;
    for (std::size_t t = 0; t < dw; ++t)
        for (const Scalar& u : {Scalar(1), Scalar::i()}) {
            AlgMatrix<Scalar> a(m, m, d, Scalar(0));
            a.data[t] = u;
            const auto la = lift(a), las = lift(alg_adjoint(alg, a, cj));
            out.push_back(field(alg_add(alg_mul(alg, la, w), alg_mul(alg, w, las)), alg_mul(alg, la, z)));
        }
    // x in A^{n x n} with x beta + beta x* = 0
    const auto beta = alg_from_complex(alg, mf.beta, Scalar(1));
    const std::size_t nx = n * n * d;
    std::vector<Vec> images;
    for (std::size_t t = 0; t < nx; ++t)
        for (const Scalar& u : {Scalar(1), Scalar::i()}) {
            AlgMatrix<Scalar> x(n, n, d, Scalar(0));
            x.data[t] = u;
            images.push_back(alg_add(alg_mul(alg, x, beta), alg_mul(alg, beta, alg_adjoint(alg, x, cj))).data);
        }
    for (const auto& xv : real_kernel(nx, images)) {
        AlgMatrix<Scalar> x(n, n, d, xv);
        AlgMatrix<Poly> zero(m, m, d, Poly(nv));
        out.push_back(field(zero, alg_mul(alg, z, lift(x))));
    }
    for (const auto& flat : derivations(alg).vectors) {
        const ComplexMatrix dm = derivation_matrix(alg, flat);
        std::vector<Poly> comps(nv, Poly(nv));
        for (std::size_t e = 0; e < nv / d; ++e)
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j)
                    if (!dm(i, j).is_zero()) comps[e * d + i] += Poly::variable(nv, e * d + j, dm(i, j));
        out.emplace_back(dw, dz, std::move(comps));
    }
    return out;
}

int nilpotent_half(const PolyVecField& x) {
    int half = 0;
    for (const auto& [k, part] : grade_decompose(x)) {
        const int h = k < 0 ? -1 : 1;
        if (k == 0 || k < -2 || k > 2 || (half != 0 && half != h))
            throw Error(ErrorKind::InvalidGrading, "field does not lie in one nilpotent half");
        half = h;
    }
    return half;
}

GroupElement exp_field(const QuadricSpec& q, const PolyVecField& x) {
    const std::size_t dw = q.dim_w(), dz = q.dim_z(), nv = dw + dz;
    if (x.dim_w() != dw || x.dim_z() != dz) throw Error(ErrorKind::InvalidArgument, "field lives on another space");
    const int half = nilpotent_half(x);
    if (half == 0) return heisenberg(q, {Vec(dw, Scalar(0)), Vec(dz, Scalar(0))});
    if (half > 0) {
        const auto gamma = BirationalMap::gamma(q);
        const GroupElement inner = exp_field(q, pushforward(gamma, x));
        const QuadricPoint& ab = inner.map.parameter();
        if (q.model()->envelope.associative()) return gplus(q, ab);
        GroupElement g{"gplus", BirationalMap::compose({gamma, inner.map, gamma}), {}};
        g.audit = audit_automorphism(q, g.map);
        require_audit(g);
        return g;
    }
    const Monomial one(nv, 0);
    Vec a(dw), b(dz);
    for (std::size_t l = 0; l < dw; ++l) a[l] = x.w_component(l).coefficient(one);
    for (std::size_t j = 0; j < dz; ++j) b[j] = x.z_component(j).coefficient(one);
    // The field must be a d/dw + h(z, b) d/dw + b d/dz with a in iV.
    PolyVecField expected(dw, dz);
    const auto hzb = [&] {
        std::vector<Poly> zs;
        for (std::size_t j = 0; j < dz; ++j) zs.push_back(Poly::variable(nv, dw + j));
        std::vector<Poly> bs;
        for (std::size_t j = 0; j < dz; ++j) bs.push_back(Poly::constant(nv, b[j]));
        return q.h<Poly>(std::span<const Poly>(zs), std::span<const Poly>(bs),
                         [](const Poly& p) { return p.conj_coefficients(); });
    }();
    for (std::size_t l = 0; l < dw; ++l) expected.set_component(l, hzb[l] + Poly::constant(nv, a[l]));
    for (std::size_t j = 0; j < dz; ++j) expected.set_component(dw + j, Poly::constant(nv, b[j]));
    if (!(expected == x) || add(a, q.conj_w(a)) != Vec(dw, Scalar(0)))
        throw Error(ErrorKind::InvalidArgument, "field is not in g^-2 + g^-1 of this quadric");
    return heisenberg(q, {add(a, scale(q.h(b, b), Scalar(Rational(1, 2)))), b});
}

PolyVecField bch2(const PolyVecField& x, const PolyVecField& y) {
    const int hx = nilpotent_half(x), hy = nilpotent_half(y);
    if (hx != 0 && hy != 0 && hx != hy) throw Error(ErrorKind::InvalidGrading, "fields lie in different halves");
    return x + y + bracket(x, y) * Scalar(Rational(1, 2));
}

}  // namespace crq
