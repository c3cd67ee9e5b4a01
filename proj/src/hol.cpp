#include "crq/hol.hpp"

#include <sstream>

namespace crq {

TangencyContext::TangencyContext(const QuadricSpec& q) : q_(q) {
    const std::size_t dz = q_.dim_z(), dw = q_.dim_w(), nr = ring_vars();
    std::vector<Poly> z, zb;
    for (std::size_t a = 0; a < dz; ++a) {
        z.push_back(Poly::variable(nr, a));
        zb.push_back(Poly::variable(nr, dz + a));
    }
    // h(z, z) with the conjugate slot realized by zbar
    w_on_q_.assign(dw, Poly(nr));
    for (std::size_t a = 0; a < dz; ++a)
        for (std::size_t b = 0; b < dz; ++b) {
            Poly zz = z[a] * zb[b];
            for (std::size_t l = 0; l < dw; ++l)
                if (!q_.form(a, b, l).is_zero()) w_on_q_[l] += zz * (q_.form(a, b, l) * Scalar(Rational(1, 2)));
        }
    const auto& v = q_.real_form();
    for (std::size_t j = 0; j < v.size(); ++j) {
        Poly s = Poly::variable(nr, 2 * dz + j);
        for (std::size_t l = 0; l < dw; ++l)
            if (!v[j][l].is_zero()) w_on_q_[l] += s * (Scalar::i() * v[j][l]);
    }
    for (const auto& m : monomials_up_to(dw + dz, 2)) {
        Poly p = Poly::constant(nr, Scalar(1));
        for (std::size_t i = 0; i < m.size(); ++i)
            for (int e = 0; e < m[i]; ++e) p = p * (i < dw ? w_on_q_[i] : z[i - dw]);
        monomial_cache_.emplace(m, std::move(p));
    }
}

Poly TangencyContext::restrict(const Poly& p) const {
    const std::size_t dw = q_.dim_w(), nr = ring_vars();
    Poly out(nr);
    for (const auto& [m, c] : p.terms()) {
        auto it = monomial_cache_.find(m);
        if (it != monomial_cache_.end()) {
            out += it->second * c;
            continue;
        }
        Poly t = Poly::constant(nr, c);
        for (std::size_t i = 0; i < m.size(); ++i)
            for (int e = 0; e < m[i]; ++e) t = t * (i < dw ? w_on_q_[i] : Poly::variable(nr, i - dw));
        out += t;
    }
    return out;
}

Poly TangencyContext::ring_conj(const Poly& p) const {
    const std::size_t dz = q_.dim_z(), nr = ring_vars();
    std::vector<std::size_t> swap(nr);
    for (std::size_t i = 0; i < nr; ++i) swap[i] = i;
    for (std::size_t a = 0; a < dz; ++a) {
        swap[a] = dz + a;
        swap[dz + a] = a;
    }
    return p.rename(swap, nr).conj_coefficients();
}

std::pair<std::vector<Poly>, std::vector<Poly>> TangencyContext::residual_pair(const PolyVecField& x) const {
    const std::size_t dw = q_.dim_w(), dz = q_.dim_z(), nr = ring_vars();
    if (x.dim_w() != dw || x.dim_z() != dz) throw Error(ErrorKind::InvalidArgument, "field does not live on E");
    // R(x) = P1 + P2 - P3 - P4 and R(ix) = i(P1 - P2 - P3 + P4) with
    // P1 = F, P2 = conj_W(F), P3 = h(G, z), P4 = h(z, G).
    std::vector<Poly> f(dw, Poly(nr)), fc(dw, Poly(nr)), g(dz, Poly(nr)), gc(dz, Poly(nr));
    for (std::size_t l = 0; l < dw; ++l)
        if (!x.w_component(l).is_zero()) {
            f[l] = restrict(x.w_component(l));
            fc[l] = ring_conj(f[l]);
        }
    for (std::size_t a = 0; a < dz; ++a)
        if (!x.z_component(a).is_zero()) {
            g[a] = restrict(x.z_component(a));
            gc[a] = ring_conj(g[a]);
        }
    std::vector<Poly> p1 = f, p2(dw, Poly(nr)), p3(dw, Poly(nr)), p4(dw, Poly(nr));
    const auto& c = q_.conj_matrix();
    for (std::size_t k = 0; k < dw; ++k) {
        if (fc[k].is_zero()) continue;
        for (std::size_t l = 0; l < dw; ++l)
            if (!c(l, k).is_zero()) p2[l] += fc[k] * c(l, k);
    }
    for (std::size_t a = 0; a < dz; ++a)
        for (std::size_t b = 0; b < dz; ++b) {
            Poly left = g[a].is_zero() ? Poly(nr) : g[a] * Poly::variable(nr, dz + b);
            Poly right = gc[b].is_zero() ? Poly(nr) : Poly::variable(nr, a) * gc[b];
            if (left.is_zero() && right.is_zero()) continue;
            for (std::size_t l = 0; l < dw; ++l) {
                const Scalar& h = q_.form(a, b, l);
                if (h.is_zero()) continue;
                if (!left.is_zero()) p3[l] += left * h;
                if (!right.is_zero()) p4[l] += right * h;
            }
        }
    std::vector<Poly> re(dw, Poly(nr)), im(dw, Poly(nr));
    for (std::size_t l = 0; l < dw; ++l) {
        re[l] = p1[l] + p2[l] - p3[l] - p4[l];
        im[l] = (p1[l] - p2[l] - p3[l] + p4[l]) * Scalar::i();
    }
    return {std::move(re), std::move(im)};
}

std::vector<Poly> TangencyContext::residual(const PolyVecField& x) const { return residual_pair(x).first; }

RealLinearSystem tangency_constraints(const TangencyContext& ctx, const std::vector<PolyVecField>& fields) {
    RealLinearSystem sys;
    for (std::size_t j = 0; j < fields.size(); ++j) {
        sys.labels.push_back("re c" + std::to_string(j));
        sys.labels.push_back("im c" + std::to_string(j));
    }
    // One row per (W-coordinate, monomial, real/imaginary part).
    std::map<std::pair<std::size_t, Monomial>, std::pair<SparseRow, SparseRow>> rows;
    for (std::size_t j = 0; j < fields.size(); ++j) {
        auto [re, im] = ctx.residual_pair(fields[j]);
        for (int part = 0; part < 2; ++part) {
            const auto& res = part == 0 ? re : im;
            const std::size_t col = 2 * j + part;
            for (std::size_t l = 0; l < res.size(); ++l)
                for (const auto& [m, c] : res[l].terms()) {
                    auto& slot = rows[{l, m}];
                    if (sgn(c.re) != 0) slot.first.emplace_back(col, c.re);
                    if (sgn(c.im) != 0) slot.second.emplace_back(col, c.im);
                }
        }
    }
    for (auto& [key, pr] : rows) {
        sys.add_row(std::move(pr.first));
        sys.add_row(std::move(pr.second));
    }
    return sys;
}

std::vector<PolyVecField> solution_fields(const RealLinearSystem& sys, const std::vector<PolyVecField>& fields) {
    std::vector<PolyVecField> out;
    if (fields.empty()) return out;
    for (const auto& x : nullspace(sys)) {
        PolyVecField f(fields.front().dim_w(), fields.front().dim_z());
        for (std::size_t j = 0; j < fields.size(); ++j) {
            Scalar c(x[2 * j], x[2 * j + 1]);
            if (!c.is_zero()) f += fields[j] * c;
        }
        out.push_back(std::move(f));
    }
    return out;
}

std::array<std::size_t, 5> GradedLieAlgebra::dims() const {
    std::array<std::size_t, 5> d{};
    for (std::size_t i = 0; i < 5; ++i) d[i] = levels[i].size();
    return d;
}

std::size_t GradedLieAlgebra::total() const {
    std::size_t t = 0;
    for (const auto& l : levels) t += l.size();
    return t;
}

std::vector<PolyVecField> GradedLieAlgebra::basis() const {
    std::vector<PolyVecField> out;
    for (const auto& l : levels) out.insert(out.end(), l.begin(), l.end());
    return out;
}

int GradedLieAlgebra::grade_of(std::size_t i) const {
    for (int k = -2; k <= 2; ++k) {
        const auto& l = level(k);
        if (i < l.size()) return k;
        i -= l.size();
    }
    throw Error(ErrorKind::InvalidArgument, "basis index out of range");
}

std::vector<PolyVecField> monomial_fields_of_grade(std::size_t dim_w, std::size_t dim_z, int k) {
    std::vector<PolyVecField> out;
    const auto monos = monomials_up_to(dim_w + dim_z, 2);
    for (std::size_t i = 0; i < dim_w + dim_z; ++i)
        for (const auto& m : monos)
            if (term_grade(m, i, dim_w) == k) out.push_back(monomial_field(dim_w, dim_z, i, m));
    return out;
}

GradedLieAlgebra compute_hol(const QuadricSpec& q) {
    TangencyContext ctx(q);
    GradedLieAlgebra g;
    g.dim_w = q.dim_w();
    g.dim_z = q.dim_z();
    // The system is block diagonal: a grade-k field restricts to a residual
    // of weighted degree k + 2 (z, zbar weight 1; s weight 2).
    for (int k = -2; k <= 3; ++k) {
        auto fields = monomial_fields_of_grade(q.dim_w(), q.dim_z(), k);
        auto sol = solution_fields(tangency_constraints(ctx, fields), fields);
        if (k <= 2) g.levels[static_cast<std::size_t>(k + 2)] = std::move(sol);
        else g.beyond_range_dim = sol.size();
    }
    return g;
}

BracketTable bracket_table(const GradedLieAlgebra& g) {
    const auto basis = g.basis();
    BasisCoordinates coords(basis);
    BracketTable t;
    t.n = basis.size();
    t.entries.resize(t.n * t.n);
    for (std::size_t i = 0; i < t.n; ++i)
        for (std::size_t j = 0; j < t.n; ++j) {
            if (i == j) continue;
            auto x = coords.coordinates(bracket(basis[i], basis[j]));
            if (!x) {
                t.escapes.emplace_back(i, j);
                continue;
            }
            for (std::size_t k = 0; k < t.n; ++k)
                if (sgn((*x)[k]) != 0) t.entries[i * t.n + j].emplace_back(k, (*x)[k]);
        }
    return t;
}

namespace {

using SparseCoords = std::vector<std::pair<std::size_t, Rational>>;

std::string pair_text(std::size_t i, std::size_t j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

void accumulate(std::vector<Rational>& acc, const SparseCoords& v, const Rational& f) {
    for (const auto& [k, c] : v) acc[k] += f * c;
}

}  // namespace

CheckResult check_grading(const GradedLieAlgebra& g) {
    CheckResult r{"grading [zeta, x] = k x", true, ""};
    const auto zeta = zeta_field(g.dim_w, g.dim_z);
    for (int k = -2; k <= 2; ++k)
        for (std::size_t i = 0; i < g.level(k).size(); ++i) {
            const auto& x = g.level(k)[i];
            if (!(bracket(zeta, x) == x * Scalar(k))) {
                r.passed = false;
                r.detail = "grade " + std::to_string(k) + " basis element " + std::to_string(i);
                return r;
            }
        }
    if (g.beyond_range_dim != 0) {
        r.passed = false;
        r.detail = "tangent fields of grade 3 found";
    }
    return r;
}

CheckResult check_tangency(const QuadricSpec& q, const GradedLieAlgebra& g) {
    CheckResult r{"tangency of every basis field", true, ""};
    TangencyContext ctx(q);
    for (int k = -2; k <= 2; ++k)
        for (std::size_t i = 0; i < g.level(k).size(); ++i)
            for (const auto& p : ctx.residual(g.level(k)[i]))
                if (!p.is_zero()) {
                    r.passed = false;
                    r.detail = "grade " + std::to_string(k) + " basis element " + std::to_string(i);
                    return r;
                }
    return r;
}

CheckResult check_zeta_chi(const QuadricSpec& q, const GradedLieAlgebra& g) {
    CheckResult r{"zeta and chi lie in g^0 and commute", true, ""};
    const auto zeta = zeta_field(q.dim_w(), q.dim_z()), chi = chi_field(q.dim_w(), q.dim_z());
    if (!span_contains(g.level(0), {zeta, chi})) {
        r.passed = false;
        r.detail = "zeta or chi outside g^0";
    } else if (!bracket(zeta, chi).is_zero()) {
        r.passed = false;
        r.detail = "[zeta, chi] != 0";
    }
    return r;
}

CheckResult check_antisymmetry(const BracketTable& t) {
    CheckResult r{"bracket antisymmetry", true, ""};
    if (!t.closed()) {
        r.passed = false;
        r.detail = "bracket table is not closed";
        return r;
    }
    for (std::size_t i = 0; i < t.n; ++i)
        for (std::size_t j = i + 1; j < t.n; ++j) {
            std::vector<Rational> s(t.n, Rational(0));
            accumulate(s, t.at(i, j), 1);
            accumulate(s, t.at(j, i), 1);
            for (const auto& v : s)
                if (sgn(v) != 0) {
                    r.passed = false;
                    r.detail = "pair " + pair_text(i, j);
                    return r;
                }
        }
    return r;
}

CheckResult check_jacobi(const BracketTable& t) {
    CheckResult r{"Jacobi identity", true, ""};
    if (!t.closed()) {
        r.passed = false;
        r.detail = "bracket table is not closed";
        return r;
    }
    std::vector<Rational> s(t.n);
    for (std::size_t i = 0; i < t.n; ++i)
        for (std::size_t j = i + 1; j < t.n; ++j)
            for (std::size_t k = j + 1; k < t.n; ++k) {
                for (auto& v : s) v = 0;
                // [[i,j],k] + [[j,k],i] + [[k,i],j]
                for (const auto& [m, c] : t.at(i, j)) accumulate(s, t.at(m, k), c);
                for (const auto& [m, c] : t.at(j, k)) accumulate(s, t.at(m, i), c);
                for (const auto& [m, c] : t.at(k, i)) accumulate(s, t.at(m, j), c);
                for (const auto& v : s)
                    if (sgn(v) != 0) {
                        r.passed = false;
                        r.detail = "triple (" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
                        return r;
                    }
            }
    return r;
}

CheckResult check_grading_closure(const GradedLieAlgebra& g, const BracketTable& t) {
    CheckResult r{"grading closure [g^j, g^k] in g^(j+k)", true, ""};
    if (!t.closed()) {
        r.passed = false;
        auto [i, j] = t.escapes.front();
        r.detail = "bracket of " + pair_text(i, j) + " leaves the algebra";
        return r;
    }
    for (std::size_t i = 0; i < t.n; ++i)
        for (std::size_t j = 0; j < t.n; ++j) {
            const int k = g.grade_of(i) + g.grade_of(j);
            for (const auto& [m, c] : t.at(i, j))
                if (g.grade_of(m) != k) {
                    r.passed = false;
                    r.detail = "bracket of " + pair_text(i, j) + " has a component of grade " +
                               std::to_string(g.grade_of(m));
                    return r;
                }
        }
    return r;
}

namespace {

std::vector<std::vector<Rational>> dense_brackets(const GradedLieAlgebra& g, const BracketTable& t, int gi, int gj) {
    std::vector<std::vector<Rational>> out;
    for (std::size_t i = 0; i < t.n; ++i) {
        if (g.grade_of(i) != gi) continue;
        for (std::size_t j = 0; j < t.n; ++j) {
            if (g.grade_of(j) != gj) continue;
            std::vector<Rational> v(t.n, Rational(0));
            accumulate(v, t.at(i, j), 1);
            out.push_back(std::move(v));
        }
    }
    return out;
}

}  // namespace

CheckResult check_bracket_surjectivity(const GradedLieAlgebra& g, const BracketTable& t) {
    CheckResult r{"[g^j, g^k] = g^(j+k) for j+k != 0", true, ""};
    if (!t.closed()) {
        r.passed = false;
        r.detail = "bracket table is not closed";
        return r;
    }
    for (int j = -2; j <= 2; ++j)
        for (int k = j; k <= 2; ++k) {
            if (j + k == 0) continue;
            const std::size_t expected = std::abs(j + k) > 2 ? 0 : g.level(j + k).size();
            EchelonBasis eb(t.n);
            for (const auto& v : dense_brackets(g, t, j, k)) eb.insert_dense(v);
            if (eb.rank() != expected) {
                r.passed = false;
                std::ostringstream os;
                os << "[g^" << j << ", g^" << k << "] has dimension " << eb.rank() << ", expected " << expected;
                r.detail = os.str();
                return r;
            }
        }
    return r;
}

DerivedAlgebra derived_subalgebra(const GradedLieAlgebra& g, const BracketTable& t) {
    if (!t.closed()) throw Error(ErrorKind::InvalidArgument, "bracket table is not closed");
    DerivedAlgebra d;
    for (int k = -2; k <= 2; ++k) {
        EchelonBasis eb(t.n);
        for (int j = -2; j <= 2; ++j) {
            const int l = k - j;
            if (l < -2 || l > 2) continue;
            for (auto& v : dense_brackets(g, t, j, l))
                if (eb.insert_dense(v)) d.basis.push_back(std::move(v));
        }
        d.dims[static_cast<std::size_t>(k + 2)] = eb.rank();
    }
    return d;
}

CheckResult check_derived_ideal(const BracketTable& t, const DerivedAlgebra& d) {
    CheckResult r{"derived algebra is an ideal", true, ""};
    EchelonBasis eb(t.n);
    for (const auto& v : d.basis) eb.insert_dense(v);
    for (std::size_t i = 0; i < t.n; ++i)
        for (std::size_t b = 0; b < d.basis.size(); ++b) {
            std::vector<Rational> s(t.n, Rational(0));
            for (std::size_t m = 0; m < t.n; ++m)
                if (sgn(d.basis[b][m]) != 0) accumulate(s, t.at(i, m), d.basis[b][m]);
            if (!eb.contains(to_sparse(s))) {
                r.passed = false;
                r.detail = "[b_" + std::to_string(i) + ", d_" + std::to_string(b) + "] outside d";
                return r;
            }
        }
    return r;
}

}  // namespace crq
