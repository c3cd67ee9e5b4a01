#include "crq/symmetry.hpp"

#include <sstream>

namespace crq {

namespace {

using Vec = std::vector<Scalar>;
using CSpan = std::span<const Scalar>;

const AlgebraModel& require_model(const QuadricSpec& q, const char* what) {
    if (!q.model()) throw Error(ErrorKind::Unsupported, std::string(what) + " needs an algebra model of the quadric");
    return *q.model();
}

Vec add(Vec a, const Vec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

Vec scale(Vec a, const Scalar& c) {
    for (auto& x : a) x *= c;
    return a;
}

Vec env_mul(const AlgebraModel& m, const Vec& x, const Vec& y) { return m.envelope.multiply(x, y); }
Vec embed(const AlgebraModel& m, const Vec& w) { return model_embed<Scalar>(m, w); }
Vec project(const AlgebraModel& m, const Vec& x) { return model_project<Scalar>(m, x); }
Vec act(const AlgebraModel& m, const Vec& x, const Vec& z) { return model_act<Scalar>(m, x, z); }
Vec env_inverse(const AlgebraModel& m, const Vec& x) { return model_inverse<Scalar>(m, x); }

// d(x^-1)(dx) = -x^-1 dx x^-1 (valid in alternative algebras by flexibility)
Vec inverse_differential(const AlgebraModel& m, const Vec& xi, const Vec& dx) {
    return scale(env_mul(m, xi, env_mul(m, dx, xi)), Scalar(-1));
}

std::string matrix_text(const ComplexMatrix& a) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < a.rows(); ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < a.cols(); ++j) os << (j ? " " : "") << a(i, j);
    }
    os << "]";
    return os.str();
}

std::string vec_text(const Vec& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    os << ")";
    return os.str();
}

}  // namespace

BirationalMap BirationalMap::identity(const QuadricSpec& q) {
    return BirationalMap(Kind::Identity, std::make_shared<const QuadricSpec>(q));
}

BirationalMap BirationalMap::gamma(const QuadricSpec& q) {
    require_model(q, "gamma");
    return BirationalMap(Kind::Gamma, std::make_shared<const QuadricSpec>(q));
}

BirationalMap BirationalMap::sigma(const QuadricSpec& q) {
    require_model(q, "sigma");
    return BirationalMap(Kind::Sigma, std::make_shared<const QuadricSpec>(q));
}

BirationalMap BirationalMap::heisenberg(const QuadricSpec& q, QuadricPoint ab) {
    if (ab.w.size() != q.dim_w() || ab.z.size() != q.dim_z())
        throw Error(ErrorKind::InvalidArgument, "heisenberg parameter has wrong dimensions");
    BirationalMap m(Kind::Heisenberg, std::make_shared<const QuadricSpec>(q));
    m.param_ = std::move(ab);
    return m;
}

BirationalMap BirationalMap::gplus(const QuadricSpec& q, QuadricPoint ac) {
    const auto& model = require_model(q, "gplus");
    if (!model.envelope.associative()) throw Error(ErrorKind::Unsupported, "gplus needs an associative envelope");
    if (ac.w.size() != q.dim_w() || ac.z.size() != q.dim_z())
        throw Error(ErrorKind::InvalidArgument, "gplus parameter has wrong dimensions");
    BirationalMap m(Kind::GPlus, std::make_shared<const QuadricSpec>(q));
    m.param_ = std::move(ac);
    return m;
}

BirationalMap BirationalMap::linear(const QuadricSpec& q, ComplexMatrix f, ComplexMatrix g) {
    if (f.rows() != q.dim_w() || f.cols() != q.dim_w() || g.rows() != q.dim_z() || g.cols() != q.dim_z())
        throw Error(ErrorKind::InvalidArgument, "linear map has wrong dimensions");
    BirationalMap m(Kind::Linear, std::make_shared<const QuadricSpec>(q));
    m.f_ = std::move(f);
    m.g_ = std::move(g);
    return m;
}

BirationalMap BirationalMap::compose(std::vector<BirationalMap> maps) {
    if (maps.empty()) throw Error(ErrorKind::InvalidArgument, "empty composition");
    for (const auto& x : maps)
        if (x.quadric().dim_w() != maps[0].quadric().dim_w() || x.quadric().dim_z() != maps[0].quadric().dim_z())
            throw Error(ErrorKind::InvalidArgument, "composed maps act on different spaces");
    BirationalMap m(Kind::Composite, maps[0].q_);
    m.parts_ = std::move(maps);
    return m;
}

std::string BirationalMap::describe() const {
    switch (kind_) {
    case Kind::Identity: return "identity";
    case Kind::Gamma: return "gamma";
    case Kind::Sigma: return "sigma";
    case Kind::Heisenberg: return "heisenberg(a=" + vec_text(param_.w) + ", b=" + vec_text(param_.z) + ")";
    case Kind::GPlus: return "gplus(a=" + vec_text(param_.w) + ", c=" + vec_text(param_.z) + ")";
    case Kind::Linear: return "linear(f=" + matrix_text(f_) + ", g=" + matrix_text(g_) + ")";
    case Kind::Composite: {
        std::string s;
        for (const auto& p : parts_) s += (s.empty() ? "" : " o ") + p.describe();
        return s;
    }
    }
    return "";
}

QuadricPoint BirationalMap::evaluate(const QuadricPoint& p) const {
    const QuadricSpec& q = *q_;
    switch (kind_) {
    case Kind::Identity: return p;
    case Kind::Gamma:
    case Kind::Sigma: {
        const auto& m = *q.model();
        Vec xi = env_inverse(m, embed(m, p.w));
        Vec z = act(m, xi, p.z);
        return {project(m, xi), kind_ == Kind::Sigma ? scale(z, Scalar(-1)) : z};
    }
    case Kind::Heisenberg:
        return {add(add(p.w, param_.w), q.h(p.z, param_.z)), add(p.z, param_.z)};
    case Kind::GPlus: {
        const auto& m = *q.model();
        Vec x = embed(m, p.w);
        Vec u = add(add(m.envelope.unit(), env_mul(m, x, embed(m, param_.w))), embed(m, q.h(p.z, param_.z)));
        Vec ui = env_inverse(m, u);
        return {project(m, env_mul(m, ui, x)), act(m, ui, add(p.z, act(m, x, param_.z)))};
    }
    case Kind::Linear:
        return {apply<Scalar>(f_, CSpan(p.w)), apply<Scalar>(g_, CSpan(p.z))};
    case Kind::Composite: {
        QuadricPoint x = p;
        for (auto it = parts_.rbegin(); it != parts_.rend(); ++it) x = it->evaluate(x);
        return x;
    }
    }
    return p;
}

std::pair<QuadricPoint, QuadricPoint> BirationalMap::push(const QuadricPoint& p, const QuadricPoint& v) const {
    const QuadricSpec& q = *q_;
    switch (kind_) {
    case Kind::Identity: return {p, v};
    case Kind::Gamma:
    case Kind::Sigma: {
        const auto& m = *q.model();
        Vec xi = env_inverse(m, embed(m, p.w));
        Vec dxi = inverse_differential(m, xi, embed(m, v.w));
        Vec z = act(m, xi, p.z);
        Vec dz = add(act(m, dxi, p.z), act(m, xi, v.z));
        if (kind_ == Kind::Sigma) {
            z = scale(z, Scalar(-1));
            dz = scale(dz, Scalar(-1));
        }
        return {{project(m, xi), z}, {project(m, dxi), dz}};
    }
    case Kind::Heisenberg:
        return {evaluate(p), {add(v.w, q.h(v.z, param_.z)), v.z}};
    case Kind::GPlus: {
        const auto& m = *q.model();
        Vec x = embed(m, p.w), dx = embed(m, v.w);
        Vec a = embed(m, param_.w);
        Vec u = add(add(m.envelope.unit(), env_mul(m, x, a)), embed(m, q.h(p.z, param_.z)));
        Vec du = add(env_mul(m, dx, a), embed(m, q.h(v.z, param_.z)));
        Vec ui = env_inverse(m, u);
        Vec dui = inverse_differential(m, ui, du);
        Vec zc = add(p.z, act(m, x, param_.z));
        Vec dzc = add(v.z, act(m, dx, param_.z));
        QuadricPoint image{project(m, env_mul(m, ui, x)), act(m, ui, zc)};
        QuadricPoint tangent{project(m, add(env_mul(m, dui, x), env_mul(m, ui, dx))),
                             add(act(m, dui, zc), act(m, ui, dzc))};
        return {image, tangent};
    }
    case Kind::Linear:
        return {evaluate(p), {apply<Scalar>(f_, CSpan(v.w)), apply<Scalar>(g_, CSpan(v.z))}};
    case Kind::Composite: {
        std::pair<QuadricPoint, QuadricPoint> x{p, v};
        for (auto it = parts_.rbegin(); it != parts_.rend(); ++it) x = it->push(x.first, x.second);
        return x;
    }
    }
    return {p, v};
}

ComplexMatrix BirationalMap::jacobian(const QuadricPoint& p) const {
    const std::size_t dw = q_->dim_w(), n = dw + q_->dim_z();
    ComplexMatrix jac(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        Vec e(n, Scalar(0));
        e[j] = 1;
        auto col = flatten(push(p, unflatten(*q_, e)).second);
        for (std::size_t i = 0; i < n; ++i) jac(i, j) = col[i];
    }
    return jac;
}

BirationalMap BirationalMap::inverse() const {
    const QuadricSpec& q = *q_;
    switch (kind_) {
    case Kind::Identity:
    case Kind::Gamma:
    case Kind::Sigma: return *this;
    case Kind::Heisenberg:
    case Kind::GPlus: {
        // heisenberg(a, b)^-1 = heisenberg(h(b, b) - a, -b)
        QuadricPoint inv{add(scale(param_.w, Scalar(-1)), q.h(param_.z, param_.z)), scale(param_.z, Scalar(-1))};
        BirationalMap m(kind_, q_);
        m.param_ = std::move(inv);
        return m;
    }
    case Kind::Linear: {
        BirationalMap m(kind_, q_);
        try {
            m.f_ = crq::inverse(f_);
            m.g_ = crq::inverse(g_);
        } catch (const Error&) {
            throw Error(ErrorKind::NotInvertible, "linear map is singular");
        }
        return m;
    }
    case Kind::Composite: {
        std::vector<BirationalMap> inv;
        for (auto it = parts_.rbegin(); it != parts_.rend(); ++it) inv.push_back(it->inverse());
        return compose(std::move(inv));
    }
    }
    return *this;
}

std::vector<Scalar> flatten(const QuadricPoint& p) {
    Vec x = p.w;
    x.insert(x.end(), p.z.begin(), p.z.end());
    return x;
}

QuadricPoint unflatten(const QuadricSpec& q, std::span<const Scalar> x) {
    if (x.size() != q.dim_w() + q.dim_z()) throw Error(ErrorKind::InvalidArgument, "point has wrong dimension");
    return {Vec(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(q.dim_w())),
            Vec(x.begin() + static_cast<std::ptrdiff_t>(q.dim_w()), x.end())};
}

QuadricPoint regular_sample(const BirationalMap& m, RationalSampler& rng) {
    const QuadricSpec& q = m.quadric();
    for (int attempt = 0; attempt < 200; ++attempt) {
        QuadricPoint p{Vec(q.dim_w()), Vec(q.dim_z())};
        for (auto& x : p.w) x = rng.scalar(4, 3);
        for (auto& x : p.z) x = rng.scalar(4, 3);
        try {
            m.evaluate(p);
            return p;
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::SingularPoint) throw;
        }
    }
    throw Error(ErrorKind::SingularPoint, "no regular sample found for " + m.describe());
}

namespace {

// Values of all monomials of degree <= 2 at x, in monomials_up_to order.
Vec monomial_values(const std::vector<Monomial>& monos, const Vec& x) {
    Vec out;
    out.reserve(monos.size());
    for (const auto& m : monos) {
        Scalar v(1);
        for (std::size_t i = 0; i < m.size(); ++i)
            for (int e = 0; e < m[i]; ++e) v *= x[i];
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace

std::vector<PolyVecField> pushforward(const BirationalMap& m, const std::vector<PolyVecField>& fields,
                                      std::uint64_t seed) {
    const QuadricSpec& q = m.quadric();
    const std::size_t dw = q.dim_w(), dz = q.dim_z(), n = dw + dz;
    for (const auto& f : fields)
        if (f.dim_w() != dw || f.dim_z() != dz) throw Error(ErrorKind::InvalidArgument, "field lives on another space");
    if (fields.empty()) return {};
    const BirationalMap inv = m.inverse();
    const std::size_t ncomp = fields.size() * n;
    RationalSampler rng(seed);

    // dm(p) xi(p) for every field at p = m^-1(x), or nullopt off the regular set.
    auto values_at = [&](const Vec& x) -> std::optional<Vec> {
        QuadricPoint p;
        ComplexMatrix jac;
        try {
            p = inv.evaluate(unflatten(q, x));
            if (flatten(m.evaluate(p)) != x)
                throw Error(ErrorKind::InvalidArgument, "inverse of " + m.describe() + " is inconsistent");
            jac = m.jacobian(p);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::SingularPoint) throw;
            return std::nullopt;
        }
        const Vec pf = flatten(p);
        Vec out;
        out.reserve(ncomp);
        for (const auto& f : fields) {
            auto t = apply<Scalar>(jac, CSpan(f.evaluate<Scalar>(CSpan(pf))));
            out.insert(out.end(), t.begin(), t.end());
        }
        return out;
    };
    auto random_target = [&] {
        Vec x(n);
        for (auto& c : x) c = rng.scalar(4, 3);
        return x;
    };

    // Fit on the stencil x0, x0 +- e_i, x0 + e_i + e_j around a regular x0:
    // with y = x - x0, P = c + sum b_i y_i + sum_{i<=j} a_ij y_i y_j.
    std::vector<Vec> coeff;  // per component, in the order c, b_i, a_ii, a_ij (i<j)
    for (int attempt = 0; attempt < 50 && coeff.empty(); ++attempt) {
        const Vec x0 = random_target();
        auto shifted = [&](std::size_t i, int si, std::size_t j, int sj) {
            Vec x = x0;
            if (si) x[i] += Scalar(si);
            if (sj) x[j] += Scalar(sj);
            return values_at(x);
        };
        auto v0 = values_at(x0);
        if (!v0) continue;
        std::vector<Vec> plus(n), minus(n);
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            auto a = shifted(i, 1, i, 0), b = shifted(i, -1, i, 0);
            if (!a || !b) ok = false;
            else {
                plus[i] = std::move(*a);
                minus[i] = std::move(*b);
            }
        }
        std::vector<Vec> mixed;
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = i + 1; j < n && ok; ++j) {
                auto a = shifted(i, 1, j, 1);
                if (!a) ok = false;
                else mixed.push_back(std::move(*a));
            }
        if (!ok) continue;
        const Rational half(1, 2);
        coeff.assign(ncomp, Vec());
        for (std::size_t c = 0; c < ncomp; ++c) {
            Vec& k = coeff[c];
            const Scalar& c0 = (*v0)[c];
            Vec b(n), aii(n);
            for (std::size_t i = 0; i < n; ++i) {
                b[i] = (plus[i][c] - minus[i][c]) * Scalar(half);
                aii[i] = (plus[i][c] + minus[i][c]) * Scalar(half) - c0;
            }
            k.push_back(c0);
            k.insert(k.end(), b.begin(), b.end());
            k.insert(k.end(), aii.begin(), aii.end());
            std::size_t idx = 0;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    k.push_back(mixed[idx++][c] - c0 - b[i] - b[j] - aii[i] - aii[j]);
        }
        // Expand in x = x0 + y.
        std::vector<Poly> polys(ncomp, Poly(n));
        for (std::size_t c = 0; c < ncomp; ++c) {
            const Vec& k = coeff[c];
            const Scalar* b = &k[1];
            const Scalar* aii = &k[1 + n];
            const Scalar* aij = &k[1 + 2 * n];
            Scalar constant = k[0];
            Vec lin(n);
            for (std::size_t i = 0; i < n; ++i) {
                lin[i] = b[i] - Scalar(2) * aii[i] * x0[i];
                constant += aii[i] * x0[i] * x0[i] - b[i] * x0[i];
            }
            Poly& p = polys[c];
            std::size_t idx = 0;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j, ++idx) {
                    const Scalar& a = aij[idx];
                    if (a.is_zero()) continue;
                    lin[i] -= a * x0[j];
                    lin[j] -= a * x0[i];
                    constant += a * x0[i] * x0[j];
                    Monomial mono(n, 0);
                    mono[i] = mono[j] = 1;
                    p.add_term(mono, a);
                }
            for (std::size_t i = 0; i < n; ++i) {
                Monomial mono(n, 0);
                mono[i] = 2;
                if (!aii[i].is_zero()) p.add_term(mono, aii[i]);
                mono[i] = 1;
                if (!lin[i].is_zero()) p.add_term(mono, lin[i]);
            }
            if (!constant.is_zero()) p.add_term(Monomial(n, 0), constant);
        }
        coeff.clear();
        coeff.emplace_back();  // marks success

        // Held-out check at twice as many random points as the stencil has.
        const auto monos = monomials_up_to(n, 2);
        std::vector<std::vector<std::pair<std::size_t, Scalar>>> dense(ncomp);
        std::map<Monomial, std::size_t> pos;
        for (std::size_t i = 0; i < monos.size(); ++i) pos[monos[i]] = i;
        for (std::size_t c = 0; c < ncomp; ++c)
            for (const auto& [mono, v] : polys[c].terms()) dense[c].emplace_back(pos.at(mono), v);
        std::size_t checked = 0;
        for (std::size_t s = 0; checked < 2 * monos.size() && s < 20 * monos.size(); ++s) {
            const Vec x = random_target();
            auto v = values_at(x);
            if (!v) continue;
            ++checked;
            const Vec mv = monomial_values(monos, x);
            for (std::size_t c = 0; c < ncomp; ++c) {
                Scalar acc(0);
                for (const auto& [i, a] : dense[c]) acc += a * mv[i];
                if (acc != (*v)[c])
                    throw Error(ErrorKind::NotPolynomialDeg2,
                                "pushforward by " + m.describe() + " is not a polynomial field of degree <= 2");
            }
        }
        if (checked < 2 * monos.size()) throw Error(ErrorKind::SingularPoint, "too few regular check points");

        std::vector<PolyVecField> out;
        for (std::size_t k = 0; k < fields.size(); ++k)
            out.emplace_back(dw, dz, std::vector<Poly>(polys.begin() + static_cast<std::ptrdiff_t>(k * n),
                                                       polys.begin() + static_cast<std::ptrdiff_t>((k + 1) * n)));
        return out;
    }
    throw Error(ErrorKind::SingularPoint, "no regular interpolation stencil for " + m.describe());
}

PolyVecField pushforward(const BirationalMap& m, const PolyVecField& field, std::uint64_t seed) {
    return pushforward(m, std::vector<PolyVecField>{field}, seed).front();
}

bool CheckReport::passed() const {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

namespace {

// Pushforward with the failure turned into a check result.
std::optional<std::vector<PolyVecField>> try_push(const BirationalMap& m, const std::vector<PolyVecField>& f,
                                                  std::uint64_t seed, CheckResult& r) {
    try {
        return pushforward(m, f, seed);
    } catch (const Error& e) {
        r.passed = false;
        r.detail = e.what();
        return std::nullopt;
    }
}

}  // namespace

CheckReport check_property_S(const QuadricSpec& q, const BirationalMap& m, std::uint64_t seed, std::size_t samples) {
    CheckReport rep{"property S for " + m.describe() + " on " + q.provenance().description, {}, {}};
    RationalSampler rng(seed);

    CheckResult preserves{"maps Q into Q", true, ""};
    std::size_t used = 0;
    for (std::size_t s = 0; s < 10 * samples && used < samples; ++s) {
        const QuadricPoint p = random_point(q, rng);
        QuadricPoint img;
        try {
            img = m.evaluate(p);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::SingularPoint) throw;
            continue;
        }
        ++used;
        if (!contains(q, img)) {
            preserves.passed = false;
            preserves.detail = "image of w=" + vec_text(p.w) + " z=" + vec_text(p.z) + " leaves Q";
            break;
        }
    }
    if (preserves.passed && used < samples) {
        preserves.passed = false;
        preserves.detail = "only " + std::to_string(used) + " regular samples";
    }
    rep.add(preserves);

    CheckResult involution{"involutive", true, ""};
    for (std::size_t s = 0; s < samples; ++s) {
        const QuadricPoint p = regular_sample(m, rng);
        QuadricPoint back;
        try {
            back = m.evaluate(m.evaluate(p));
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::SingularPoint) throw;
            continue;
        }
        if (back.w != p.w || back.z != p.z) {
            involution.passed = false;
            involution.detail = "m(m(p)) != p at w=" + vec_text(p.w) + " z=" + vec_text(p.z);
            break;
        }
    }
    rep.add(involution);

    CheckResult zeta{"Ad(m) zeta = -zeta", true, ""};
    const auto z = zeta_field(q.dim_w(), q.dim_z());
    if (auto pushed = try_push(m, {z}, seed + 1, zeta); pushed && !((*pushed)[0] == z * Scalar(-1))) {
        zeta.passed = false;
        zeta.detail = "Ad(m) zeta differs from -zeta";
    }
    rep.add(zeta);
    return rep;
}

CheckReport check_DM(const GradedLieAlgebra& g, const BirationalMap& m, std::uint64_t seed) {
    CheckReport rep{"grade reversal for " + m.describe(), {}, {}};
    const auto basis = g.basis();
    CheckResult fit{"pushforward is polynomial of degree <= 2", true, ""};
    const auto pushed = try_push(m, basis, seed, fit);
    rep.add(fit);
    if (!pushed) return rep;

    CheckResult dims{"dim g^k = dim g^-k", true, ""};
    for (int k = 1; k <= 2; ++k)
        if (g.level(k).size() != g.level(-k).size()) {
            dims.passed = false;
            dims.detail += "grade " + std::to_string(k) + " ";
        }
    rep.add(dims);

    CheckResult flip{"Ad(m) maps g^k into grade -k", true, ""};
    CheckResult spans{"Ad(m) g^k = g^-k", true, ""};
    std::size_t offset = 0;
    for (int k = -2; k <= 2; ++k) {
        const std::size_t len = g.level(k).size();
        std::vector<PolyVecField> image(pushed->begin() + static_cast<std::ptrdiff_t>(offset),
                                        pushed->begin() + static_cast<std::ptrdiff_t>(offset + len));
        offset += len;
        for (const auto& f : image) {
            auto parts = grade_decompose(f);
            if (!(parts.empty() || (parts.size() == 1 && parts.begin()->first == -k))) {
                flip.passed = false;
                flip.detail += "grade " + std::to_string(k) + " ";
                break;
            }
        }
        if (!span_equal(image, g.level(-k))) {
            spans.passed = false;
            spans.detail += "grade " + std::to_string(k) + " ";
        }
    }
    rep.add(flip);
    rep.add(spans);

    CheckResult top{"[g^1, g^1] = g^2", true, ""};
    std::vector<PolyVecField> br;
    const auto& g1 = g.level(1);
    for (std::size_t i = 0; i < g1.size(); ++i)
        for (std::size_t j = i + 1; j < g1.size(); ++j) br.push_back(bracket(g1[i], g1[j]));
    if (!span_equal(br, g.level(2))) {
        top.passed = false;
        top.detail = "span of brackets has dimension " + std::to_string(real_span_dim(br));
    }
    rep.add(top);

    // Ad(m)[b_i, b_j] = sum_k c_k Ad(m) b_k from the bracket table.
    CheckResult hom{"Ad(m) preserves brackets", true, ""};
    const auto table = bracket_table(g);
    if (!table.closed()) {
        hom.passed = false;
        hom.detail = "bracket table is not closed";
    }
    for (std::size_t i = 0; i < basis.size() && hom.passed; ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            PolyVecField lhs(g.dim_w, g.dim_z);
            for (const auto& [k, c] : table.at(i, j)) lhs += (*pushed)[k] * Scalar(c);
            if (!(lhs == bracket((*pushed)[i], (*pushed)[j]))) {
                hom.passed = false;
                hom.detail = "basis pair (" + std::to_string(i) + ", " + std::to_string(j) + ")";
                break;
            }
        }
    rep.add(hom);
    return rep;
}

}  // namespace crq
