#include "crq/cayley.hpp"

#include <map>
#include <sstream>

namespace crq {

namespace {

const auto conj2 = [](const Scalar2& c) { return conj(c); };
const auto conj1 = [](const Scalar& c) { return conj(c); };

Scalar2 sqrt2() { return Scalar2(QSqrt2::sqrt2()); }

AlgMatrix<Scalar2> scale(AlgMatrix<Scalar2> x, const Scalar2& c) {
    for (auto& v : x.data) v *= c;
    return x;
}

AlgMatrix<Scalar2> identity2(const SphereSpec& s) {
    return alg_from_complex(s.algebra, ComplexMatrix::identity(s.m), Scalar2(1));
}

AlgMatrix<Scalar2> inverse2(const SphereSpec& s, const AlgMatrix<Scalar2>& x) {
    try {
        auto inv = invert<Scalar2>(s.envelope, std::span<const Scalar2>(x.data));
        return AlgMatrix<Scalar2>(s.m, s.m, s.d(), std::move(inv));
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotInvertible) throw;
        throw Error(ErrorKind::SingularPoint, "Cayley transform is not defined at this point");
    }
}

void check_shape(const SphereSpec& s, const CayleyPoint& p) {
    if (p.x.rows != s.m || p.x.cols != s.m || p.y.rows != s.m || p.y.cols != s.n() || p.x.d != s.d() || p.y.d != s.d())
        throw Error(ErrorKind::InvalidArgument, "point has the wrong shape for this sphere");
}

// (u^{-1} a, sqrt2 u^{-1} y)
CayleyPoint transform(const SphereSpec& s, const AlgMatrix<Scalar2>& u, const AlgMatrix<Scalar2>& a,
                      const AlgMatrix<Scalar2>& y) {
    auto inv = inverse2(s, u);
    return {alg_mul(s.algebra, inv, a), scale(alg_mul(s.algebra, inv, y), sqrt2())};
}

bool is_rational(const Scalar2& c) { return sgn(c.re.sqrt2_part()) == 0 && sgn(c.im.sqrt2_part()) == 0; }

Scalar to_scalar(const Scalar2& c) { return Scalar(c.re.rational_part(), c.im.rational_part()); }

std::optional<QuadricPoint> to_quadric_point(const CayleyPoint& p) {
    QuadricPoint q;
    for (const auto& c : p.x.data) {
        if (!is_rational(c)) return std::nullopt;
        q.w.push_back(to_scalar(c));
    }
    for (const auto& c : p.y.data) {
        if (!is_rational(c)) return std::nullopt;
        q.z.push_back(to_scalar(c));
    }
    return q;
}

CheckResult result(std::string name, std::size_t failures, std::size_t total, const std::string& first) {
    CheckResult r{std::move(name), failures == 0, ""};
    std::ostringstream os;
    if (failures == 0) os << total << " samples";
    else os << failures << " of " << total << " samples failed; first: " << first;
    r.detail = os.str();
    return r;
}

std::string describe(const CayleyPoint& p) {
    std::ostringstream os;
    os << "x=(";
    for (std::size_t i = 0; i < p.x.data.size(); ++i) os << (i ? ", " : "") << p.x.data[i];
    os << ") y=(";
    for (std::size_t i = 0; i < p.y.data.size(); ++i) os << (i ? ", " : "") << p.y.data[i];
    os << ")";
    return os.str();
}

bool points_equal(const CayleyPoint& a, const CayleyPoint& b) { return a.x == b.x && a.y == b.y; }

// Polynomial ring with variables z_0.., zbar_0...
struct SphereRing {
    const SphereSpec& s;
    std::size_t n;
    std::vector<std::size_t> swap_map;
    std::vector<std::size_t> embed_map;
    AlgMatrix<Poly> z, z_star, alpha, z_alpha, alpha_z_star, one;

    explicit SphereRing(const SphereSpec& sphere) : s(sphere), n(sphere.dim()) {
        for (std::size_t j = 0; j < 2 * n; ++j) swap_map.push_back(j < n ? j + n : j - n);
        for (std::size_t j = 0; j < n; ++j) embed_map.push_back(j);
        std::vector<Poly> vars;
        for (std::size_t j = 0; j < n; ++j) vars.push_back(Poly::variable(2 * n, j));
        z = AlgMatrix<Poly>(s.m, s.r, s.d(), std::move(vars));
        z_star = alg_adjoint(s.algebra, z, [this](const Poly& p) { return ring_conj(p); });
        const Poly unit = Poly::constant(2 * n, Scalar(1));
        alpha = alg_from_complex(s.algebra, s.alpha, unit);
        one = alg_from_complex(s.algebra, ComplexMatrix::identity(s.m), unit);
        z_alpha = alg_mul(s.algebra, z, alpha);
        alpha_z_star = alg_mul(s.algebra, alpha, z_star);
    }

    Poly ring_conj(const Poly& p) const { return p.conj_coefficients().rename(swap_map, 2 * n); }
    Poly embed(const Poly& p) const {
        if (p.is_zero()) return Poly(2 * n);
        return p.rename(embed_map, 2 * n);
    }
    AlgMatrix<Poly> adjoint(const AlgMatrix<Poly>& x) const {
        return alg_adjoint(s.algebra, x, [this](const Poly& p) { return ring_conj(p); });
    }
    AlgMatrix<Poly> mul(const AlgMatrix<Poly>& a, const AlgMatrix<Poly>& b) const { return alg_mul(s.algebra, a, b); }

    AlgMatrix<Poly> field_matrix(const PolyVecField& f) const {
        if (f.dim_w() != 0 || f.dim_z() != n) throw Error(ErrorKind::InvalidArgument, "field does not live on the sphere space");
        std::vector<Poly> comps;
        for (const auto& c : f.components()) comps.push_back(embed(c));
        return AlgMatrix<Poly>(s.m, s.r, s.d(), std::move(comps));
    }

    AlgMatrix<Poly> residual(const PolyVecField& f) const {
        auto fm = field_matrix(f);
        return alg_add(mul(fm, alpha_z_star), mul(z_alpha, adjoint(fm)));
    }

    AlgMatrix<Poly> equation() const { return alg_sub(mul(z_alpha, z_star), one); }
};

// Real coordinates (k, monomial, re/im) of polynomial matrices.
class MatrixCoordinates {
public:
    SparseRow realify(const AlgMatrix<Poly>& x) {
        SparseRow row;
        for (std::size_t k = 0; k < x.data.size(); ++k)
            for (const auto& [mono, c] : x.data[k].terms()) {
                auto [it, inserted] = index_.try_emplace({k, mono}, index_.size());
                if (sgn(c.re) != 0) row.emplace_back(2 * it->second, c.re);
                if (sgn(c.im) != 0) row.emplace_back(2 * it->second + 1, c.im);
            }
        return row;
    }
    std::size_t size() const { return 2 * index_.size(); }

private:
    std::map<std::pair<std::size_t, Monomial>, std::size_t> index_;
};

// u * nu * rho_j placed at entry k, for all k, j, monomials nu of degree <= 1 and u in {1, i}.
std::vector<AlgMatrix<Poly>> ideal_generators(const SphereRing& ring) {
    const auto rho = ring.equation();
    const std::size_t entries = rho.data.size();
    std::vector<AlgMatrix<Poly>> out;
    for (std::size_t k = 0; k < entries; ++k)
        for (std::size_t j = 0; j < entries; ++j) {
            if (rho.data[j].is_zero()) continue;
            for (const auto& nu : monomials_up_to(2 * ring.n, 1))
                for (const Scalar& u : {Scalar(1), Scalar::i()}) {
                    AlgMatrix<Poly> g(rho.rows, rho.cols, rho.d, Poly(2 * ring.n));
                    g.data[k] = Poly::monomial(nu, u) * rho.data[j];
                    out.push_back(std::move(g));
                }
        }
    return out;
}

std::vector<PolyVecField> independent(const std::vector<PolyVecField>& fields) {
    FieldCoordinates fc;
    std::vector<SparseRow> rows;
    for (const auto& f : fields) rows.push_back(fc.realify(f));
    EchelonBasis eb(fc.size());
    std::vector<PolyVecField> out;
    for (std::size_t i = 0; i < fields.size(); ++i)
        if (eb.insert(rows[i])) out.push_back(fields[i]);
    return out;
}

}  // namespace

SphereSpec make_sphere(const StarAlgebra& a, std::size_t m, std::size_t r, const ComplexMatrix& alpha) {
    if (!a.associative()) throw Error(ErrorKind::Unsupported, "generalized spheres need an associative algebra");
    if (m < 1 || r <= m) throw Error(ErrorKind::InvalidParameter, "sphere needs r > m >= 1");
    if (alpha.rows() != r || alpha.cols() != r) throw Error(ErrorKind::InvalidParameter, "alpha must be r x r");
    const Inertia in = hermitian_inertia(alpha);
    if (in.zero != 0) throw Error(ErrorKind::InvalidForm, "alpha is singular");
    if (in.positive < m) throw Error(ErrorKind::InvalidForm, "alpha has fewer than m positive eigenvalues");
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            if (i >= m && j >= m) continue;
            const Scalar expected = i == j ? Scalar(1) : Scalar(0);
            if (!(alpha(i, j) == expected))
                throw Error(ErrorKind::InvalidParameter, "alpha must have the block form 1_m x beta");
        }
    SphereSpec s{a, m, r, alpha, ComplexMatrix(r - m, r - m), make_tensor(make_matrix_algebra(m), a)};
    for (std::size_t i = m; i < r; ++i)
        for (std::size_t j = m; j < r; ++j) s.beta(i - m, j - m) = alpha(i, j);
    return s;
}

QuadricSpec sphere_quadric(const SphereSpec& s) {
    QuadricSpec q = tensor_quadric(make_matrix_quadric(s.m, s.n(), s.beta), s.algebra);
    auto mf = *q.matrix_family();
    mf.algebra = make_tensor(make_complex(), s.algebra);
    q.set_matrix_family(std::move(mf));
    return q;
}

SphereSpec sphere_of(const QuadricSpec& q) {
    const auto& mf = q.matrix_family();
    if (!mf || !mf->algebra.associative() || q.dim_w() != mf->m * mf->m * mf->algebra.dim() ||
        q.dim_z() != mf->m * mf->n * mf->algebra.dim())
        throw Error(ErrorKind::Unsupported, "quadric has no associative matrix-family form");
    const std::size_t m = mf->m, r = mf->m + mf->n;
    ComplexMatrix alpha(r, r);
    for (std::size_t i = 0; i < m; ++i) alpha(i, i) = 1;
    for (std::size_t i = 0; i < mf->n; ++i)
        for (std::size_t j = 0; j < mf->n; ++j) alpha(m + i, m + j) = mf->beta(i, j);
    return make_sphere(mf->algebra, m, r, alpha);
}

CayleyPoint split_point(const SphereSpec& s, const AlgMatrix<Scalar2>& z) {
    if (z.rows != s.m || z.cols != s.r || z.d != s.d()) throw Error(ErrorKind::InvalidArgument, "sphere point has the wrong shape");
    CayleyPoint p{AlgMatrix<Scalar2>(s.m, s.m, s.d(), Scalar2(0)), AlgMatrix<Scalar2>(s.m, s.n(), s.d(), Scalar2(0))};
    for (std::size_t i = 0; i < s.m; ++i)
        for (std::size_t j = 0; j < s.r; ++j)
            for (std::size_t t = 0; t < s.d(); ++t)
                (j < s.m ? p.x.at(i, j, t) : p.y.at(i, j - s.m, t)) = z.at(i, j, t);
    return p;
}

AlgMatrix<Scalar2> join_point(const SphereSpec& s, const CayleyPoint& p) {
    check_shape(s, p);
    AlgMatrix<Scalar2> z(s.m, s.r, s.d(), Scalar2(0));
    for (std::size_t i = 0; i < s.m; ++i)
        for (std::size_t j = 0; j < s.r; ++j)
            for (std::size_t t = 0; t < s.d(); ++t) z.at(i, j, t) = j < s.m ? p.x.at(i, j, t) : p.y.at(i, j - s.m, t);
    return z;
}

CayleyPoint lift_point(const SphereSpec& s, const QuadricPoint& p) {
    std::vector<Scalar2> x, y;
    for (const auto& c : p.w) x.push_back(lift<Scalar2>(c));
    for (const auto& c : p.z) y.push_back(lift<Scalar2>(c));
    return {AlgMatrix<Scalar2>(s.m, s.m, s.d(), std::move(x)), AlgMatrix<Scalar2>(s.m, s.n(), s.d(), std::move(y))};
}

CayleyPoint cayley(const SphereSpec& s, const CayleyPoint& p) {
    check_shape(s, p);
    const auto one = identity2(s);
    return transform(s, alg_sub(one, p.x), alg_add(one, p.x), p.y);
}

CayleyPoint cayley_inverse(const SphereSpec& s, const CayleyPoint& p) {
    check_shape(s, p);
    const auto one = identity2(s);
    return transform(s, alg_add(p.x, one), alg_sub(p.x, one), p.y);
}

bool sphere_contains(const SphereSpec& s, const AlgMatrix<Scalar2>& z) {
    const auto alpha = alg_from_complex(s.algebra, s.alpha, Scalar2(1));
    const auto lhs = alg_mul(s.algebra, alg_mul(s.algebra, z, alpha), alg_adjoint(s.algebra, z, conj2));
    return lhs == identity2(s);
}

bool sphere_contains(const SphereSpec& s, const CayleyPoint& p) { return sphere_contains(s, join_point(s, p)); }

bool cayley_quadric_contains(const SphereSpec& s, const CayleyPoint& p) {
    check_shape(s, p);
    const auto beta = alg_from_complex(s.algebra, s.beta, Scalar2(1));
    const auto rhs = alg_mul(s.algebra, alg_mul(s.algebra, p.y, beta), alg_adjoint(s.algebra, p.y, conj2));
    return alg_add(p.x, alg_adjoint(s.algebra, p.x, conj2)) == rhs;
}

std::vector<CayleyPoint> sphere_samples(const SphereSpec& s, std::size_t count, std::uint64_t seed) {
    // Rational points of the unit circle from Pythagorean triples.
    const std::vector<Scalar> phases = {Scalar(1), Scalar(Rational(3, 5), Rational(4, 5)),
                                        Scalar(Rational(5, 13), Rational(-12, 13)),
                                        Scalar(Rational(-8, 17), Rational(15, 17))};
    const QuadricSpec q = sphere_quadric(s);
    RationalSampler rng(seed);
    std::vector<CayleyPoint> out;
    std::size_t attempts = 0;
    while (out.size() < count) {
        if (++attempts > 20 * count + 100) throw Error(ErrorKind::SingularPoint, "could not sample regular sphere points");
        CayleyPoint p;
        try {
            p = cayley_inverse(s, lift_point(s, random_point(q, rng)));
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::SingularPoint) throw;
            continue;
        }
        const Scalar2 u = lift<Scalar2>(phases[out.size() % phases.size()]);
        p.x = scale(std::move(p.x), u);
        p.y = scale(std::move(p.y), u);
        out.push_back(std::move(p));
    }
    return out;
}

CheckReport sphere_to_quadric_check(const SphereSpec& s, std::uint64_t seed, std::size_t samples) {
    CheckReport rep;
    rep.subject = "sphere m=" + std::to_string(s.m) + " r=" + std::to_string(s.r) + " over " +
                  (s.algebra.name().empty() ? std::string("A") : s.algebra.name());
    const QuadricSpec q = sphere_quadric(s);

    // Sphere samples with 1 - x invertible.
    std::vector<CayleyPoint> sphere_pts, images;
    for (const auto& p : sphere_samples(s, 2 * samples, seed)) {
        if (sphere_pts.size() == samples) break;
        try {
            images.push_back(cayley(s, p));
            sphere_pts.push_back(p);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::SingularPoint) throw;
        }
    }
    std::size_t on_sphere = 0, in_quadric = 0, rational = 0, back = 0;
    std::string f1, f2, f3, f4;
    for (std::size_t i = 0; i < sphere_pts.size(); ++i) {
        if (!sphere_contains(s, sphere_pts[i]) && on_sphere++ == 0) f1 = describe(sphere_pts[i]);
        if (!cayley_quadric_contains(s, images[i]) && in_quadric++ == 0) f2 = describe(images[i]);
        auto qp = to_quadric_point(images[i]);
        if ((!qp || !contains(q, *qp)) && rational++ == 0) f3 = describe(images[i]);
        if (!points_equal(cayley_inverse(s, images[i]), sphere_pts[i]) && back++ == 0) f4 = describe(sphere_pts[i]);
    }
    if (sphere_pts.size() < samples) {
        rep.add({"regular sphere samples", false,
                 std::to_string(sphere_pts.size()) + " of " + std::to_string(samples) + " found"});
    }
    rep.add(result("samples lie on the sphere", on_sphere, sphere_pts.size(), f1));
    rep.add(result("kappa maps the sphere into the quadric", in_quadric, sphere_pts.size(), f2));
    rep.add(result("kappa images are Q(i)-points of the tensor quadric", rational, sphere_pts.size(), f3));
    rep.add(result("kappa^-1 o kappa = id on the sphere", back, sphere_pts.size(), f4));

    RationalSampler rng(seed + 7919);
    std::size_t taken = 0, attempts = 0, to_sphere = 0, forth = 0;
    std::string g1, g2;
    while (taken < samples && attempts++ < 20 * samples) {
        const CayleyPoint p = lift_point(s, random_point(q, rng));
        CayleyPoint z;
        try {
            z = cayley_inverse(s, p);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::SingularPoint) throw;
            continue;
        }
        ++taken;
        if (!sphere_contains(s, z) && to_sphere++ == 0) g1 = describe(p);
        if (!points_equal(cayley(s, z), p) && forth++ == 0) g2 = describe(p);
    }
    rep.add(result("kappa^-1 maps the quadric into the sphere", to_sphere + (samples - taken), samples, g1));
    rep.add(result("kappa o kappa^-1 = id on the quadric", forth + (samples - taken), samples, g2));
    return rep;
}

CheckReport sigma_identity_check(const QuadricSpec& q, std::uint64_t seed, std::size_t samples) {
    const SphereSpec s = sphere_of(q);
    const BirationalMap sigma = BirationalMap::sigma(q);
    CheckReport rep;
    rep.subject = "kappa o (-id) o kappa^-1 on " + q.provenance().description;

    auto compare = [&](const QuadricPoint& p) -> std::optional<bool> {
        CayleyPoint lhs;
        QuadricPoint rhs;
        try {
            CayleyPoint u = cayley_inverse(s, lift_point(s, p));
            u.x = scale(std::move(u.x), Scalar2(-1));
            u.y = scale(std::move(u.y), Scalar2(-1));
            lhs = cayley(s, u);
            rhs = sigma.evaluate(p);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::SingularPoint) throw;
            return std::nullopt;
        }
        return points_equal(lhs, lift_point(s, rhs));
    };

    auto unit_point = [&](long c) {
        QuadricPoint p{std::vector<Scalar>(q.dim_w(), Scalar(0)), std::vector<Scalar>(q.dim_z(), Scalar(0))};
        auto e = alg_from_complex(s.algebra, ComplexMatrix::identity(s.m), Scalar(c));
        p.w = e.data;
        return p;
    };
    for (long c : {1L, 2L}) {
        auto ok = compare(unit_point(c));
        rep.add({"agreement at (" + std::to_string(c) + ", 0)", ok.value_or(false), ok ? "" : "singular"});
    }

    RationalSampler rng(seed);
    std::size_t taken = 0, attempts = 0, failures = 0;
    std::string first;
    while (taken < samples && attempts++ < 20 * samples) {
        QuadricPoint p;
        for (std::size_t i = 0; i < q.dim_w(); ++i) p.w.push_back(rng.scalar(4, 3));
        for (std::size_t i = 0; i < q.dim_z(); ++i) p.z.push_back(rng.scalar(4, 3));
        auto ok = compare(p);
        if (!ok) continue;
        ++taken;
        if (!*ok && failures++ == 0) first = describe(lift_point(s, p));
    }
    rep.add(result("agreement at random regular points", failures + (samples - taken), samples, first));
    return rep;
}

AlgMatrix<Poly> sphere_residual(const SphereSpec& s, const PolyVecField& f) { return SphereRing(s).residual(f); }

AlgMatrix<Poly> sphere_equation(const SphereSpec& s) { return SphereRing(s).equation(); }

bool in_sphere_ideal(const SphereSpec& s, const AlgMatrix<Poly>& residual) {
    const SphereRing ring(s);
    MatrixCoordinates mc;
    std::vector<SparseRow> rows;
    for (const auto& g : ideal_generators(ring)) rows.push_back(mc.realify(g));
    const SparseRow target = mc.realify(residual);
    EchelonBasis eb(mc.size());
    for (const auto& r : rows) eb.insert(r);
    return eb.contains(target);
}

std::vector<PolyVecField> sphere_hol(const SphereSpec& s) {
    const SphereRing ring(s);
    const std::size_t n = ring.n;
    const auto monos = monomials_up_to(n, 2);

    // Columns: field terms u z^mu d/dz_i, then ideal generators.
    std::vector<PolyVecField> field_cols;
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& mu : monos)
            for (const Scalar& u : {Scalar(1), Scalar::i()}) field_cols.push_back(monomial_field(0, n, i, mu, u));
    std::vector<AlgMatrix<Poly>> exprs;
    for (const auto& f : field_cols) exprs.push_back(ring.residual(f));
    for (auto& g : ideal_generators(ring)) exprs.push_back(std::move(g));

    MatrixCoordinates mc;
    std::map<std::size_t, SparseRow> by_row;
    for (std::size_t col = 0; col < exprs.size(); ++col)
        for (const auto& [r, v] : mc.realify(exprs[col])) by_row[r].emplace_back(col, v);
    RealLinearSystem sys(std::vector<std::string>(exprs.size(), ""));
    for (auto& [r, row] : by_row) sys.add_row(std::move(row));

    std::vector<PolyVecField> fields;
    for (const auto& x : nullspace(sys)) {
        PolyVecField f(0, n);
        for (std::size_t c = 0; c < field_cols.size(); ++c)
            if (sgn(x[c]) != 0) f += field_cols[c] * Scalar(x[c]);
        if (!f.is_zero()) fields.push_back(std::move(f));
    }
    return independent(fields);
}

PolyVecField p_field(const SphereSpec& s, const AlgMatrix<Scalar>& a) {
    if (a.rows != s.m || a.cols != s.r || a.d != s.d()) throw Error(ErrorKind::InvalidArgument, "a must lie in A^{m x r}");
    const std::size_t n = s.dim();
    std::vector<Poly> vars;
    for (std::size_t j = 0; j < n; ++j) vars.push_back(Poly::variable(n, j));
    const AlgMatrix<Poly> z(s.m, s.r, s.d(), std::move(vars));
    const Poly unit = Poly::constant(n, Scalar(1));
    auto constant = [&](const AlgMatrix<Scalar>& c) {
        std::vector<Poly> data;
        for (const auto& v : c.data) data.push_back(unit * v);
        return AlgMatrix<Poly>(c.rows, c.cols, c.d, std::move(data));
    };
    const auto alpha_a_star = constant(alg_mul(s.algebra, alg_from_complex(s.algebra, s.alpha, Scalar(1)),
                                               alg_adjoint(s.algebra, a, conj1)));
    const auto quad = alg_mul(s.algebra, alg_mul(s.algebra, z, alpha_a_star), z);
    return PolyVecField(0, n, alg_sub(constant(a), quad).data);
}

AlgMatrix<Poly> p_field_factorization(const SphereSpec& s, const AlgMatrix<Scalar>& a) {
    const SphereRing ring(s);
    const Poly unit = Poly::constant(2 * ring.n, Scalar(1));
    std::vector<Poly> av, asv;
    for (const auto& v : a.data) av.push_back(unit * v);
    const auto a_star = alg_adjoint(s.algebra, a, conj1);
    for (const auto& v : a_star.data) asv.push_back(unit * v);
    const AlgMatrix<Poly> ap(a.rows, a.cols, a.d, std::move(av)), asp(a_star.rows, a_star.cols, a_star.d, std::move(asv));
    const auto complement = alg_sub(ring.one, ring.mul(ring.z_alpha, ring.z_star));
    return alg_add(ring.mul(ring.mul(complement, ap), ring.alpha_z_star),
                   ring.mul(ring.mul(ring.z_alpha, asp), complement));
}

std::vector<PolyVecField> p_fields(const SphereSpec& s) {
    std::vector<PolyVecField> out;
    for (std::size_t k = 0; k < s.dim(); ++k)
        for (const Scalar& u : {Scalar(1), Scalar::i()}) {
            AlgMatrix<Scalar> a(s.m, s.r, s.d(), Scalar(0));
            a.data[k] = u;
            out.push_back(p_field(s, a));
        }
    return out;
}

PolyVecField sphere_delta(const SphereSpec& s) { return chi_field(0, s.dim()); }

KPDecomposition k_p_decompose(const SphereSpec& s, const std::vector<PolyVecField>& fields) {
    const PolyVecField delta = sphere_delta(s);
    auto ad2 = [&](const PolyVecField& x) { return bracket(delta, bracket(delta, x)); };
    std::vector<PolyVecField> k, p;
    for (const auto& x : fields) {
        const PolyVecField a = ad2(x);
        PolyVecField kp = x + a, pp = a * Scalar(-1);
        if (!ad2(kp).is_zero() || !(ad2(pp) == pp * Scalar(-1)))
            throw Error(ErrorKind::InvalidGrading, "(ad delta)^2 has eigenvalues other than 0 and -1 on the span");
        k.push_back(std::move(kp));
        p.push_back(std::move(pp));
    }
    KPDecomposition out{independent(k), independent(p)};
    if (!span_contains(fields, out.k) || !span_contains(fields, out.p))
        throw Error(ErrorKind::InvalidGrading, "span is not invariant under (ad delta)^2");
    return out;
}

CheckReport check_sphere_algebra(const SphereSpec& s, const std::vector<PolyVecField>& hol) {
    CheckReport rep;
    rep.subject = "sphere algebra m=" + std::to_string(s.m) + " r=" + std::to_string(s.r);
    const std::size_t n = s.dim();

    rep.add({"delta lies in the algebra", span_contains(hol, {sphere_delta(s)}), ""});

    KPDecomposition kp;
    try {
        kp = k_p_decompose(s, hol);
    } catch (const Error& e) {
        rep.add({"(ad delta)^2 splits the algebra", false, e.what()});
        return rep;
    }
    rep.add({"(ad delta)^2 splits the algebra", kp.k.size() + kp.p.size() == hol.size(),
             "dim k=" + std::to_string(kp.k.size()) + " dim p=" + std::to_string(kp.p.size())});

    bool linear = true;
    for (const auto& x : kp.k)
        for (const auto& c : x.components())
            if (!(c.homogeneous_part(1) == c)) linear = false;
    rep.add({"k consists of linear fields", linear, ""});

    const auto pf = p_fields(s);
    rep.add({"p is spanned by the p-fields", span_equal(kp.p, pf), ""});

    std::size_t factor_fail = 0, ideal_fail = 0;
    for (std::size_t k = 0; k < n; ++k)
        for (const Scalar& u : {Scalar(1), Scalar::i()}) {
            AlgMatrix<Scalar> a(s.m, s.r, s.d(), Scalar(0));
            a.data[k] = u;
            const auto res = sphere_residual(s, p_field(s, a));
            if (!(res == p_field_factorization(s, a))) ++factor_fail;
            if (!in_sphere_ideal(s, res)) ++ideal_fail;
        }
    rep.add({"p-field residuals match the factorization", factor_fail == 0, std::to_string(factor_fail) + " failures"});
    rep.add({"p-field residuals lie in the sphere ideal", ideal_fail == 0, std::to_string(ideal_fail) + " failures"});

    std::vector<std::vector<Scalar>> values;
    const std::vector<Scalar> origin(n, Scalar(0));
    for (const auto& x : kp.p) values.push_back(x.evaluate<Scalar>(std::span<const Scalar>(origin)));
    const std::size_t rk = real_rank(values);
    rep.add({"evaluation at the origin maps p onto E", rk == 2 * n && kp.p.size() == 2 * n,
             "rank " + std::to_string(rk) + " of " + std::to_string(2 * n)});
    return rep;
}

}  // namespace crq
