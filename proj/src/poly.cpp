#include "crq/poly.hpp"

#include "crq/linalg.hpp"

#include <algorithm>
#include <functional>

namespace crq {

int total_degree(const Monomial& m) {
    int d = 0;
    for (auto e : m) d += e;
    return d;
}

std::vector<Monomial> monomials_up_to(std::size_t nvars, int max_degree) {
    std::vector<Monomial> out;
    Monomial cur(nvars, 0);
    // Distributes exactly `remaining` among variables var..nvars-1.
    std::function<void(std::size_t, int)> rec = [&](std::size_t var, int remaining) {
        if (var + 1 == nvars) {
            cur[var] = static_cast<std::uint8_t>(remaining);
            out.push_back(cur);
            cur[var] = 0;
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            cur[var] = static_cast<std::uint8_t>(e);
            rec(var + 1, remaining - e);
        }
        cur[var] = 0;
    };
    for (int d = 0; d <= max_degree; ++d) {
        if (nvars == 0) {
            if (d == 0) out.emplace_back();
            continue;
        }
        rec(0, d);
    }
    return out;
}

Poly Poly::constant(std::size_t nvars, const Scalar& c) {
    Poly p(nvars);
    p.add_term(Monomial(nvars, 0), c);
    return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t index, const Scalar& coeff) {
    if (index >= nvars) throw Error(ErrorKind::InvalidArgument, "variable index out of range");
    Monomial m(nvars, 0);
    m[index] = 1;
    Poly p(nvars);
    p.add_term(m, coeff);
    return p;
}

Poly Poly::monomial(const Monomial& m, const Scalar& c) {
    Poly p(m.size());
    p.add_term(m, c);
    return p;
}

int Poly::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
    return d;
}

Scalar Poly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void Poly::add_term(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    if (m.size() != nvars_) {
        if (nvars_ == 0 && terms_.empty()) nvars_ = m.size();
        else throw Error(ErrorKind::InvalidArgument, "add_term: monomial arity mismatch");
    }
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

// A zero-variable polynomial is a constant and can join any ring.
void Poly::promote(std::size_t nvars) {
    if (nvars_ == nvars) return;
    if (nvars_ != 0) throw Error(ErrorKind::InvalidArgument, "polynomial ring mismatch");
    std::map<Monomial, Scalar> t;
    for (auto& [m, c] : terms_) t.emplace(Monomial(nvars, 0), c);
    terms_ = std::move(t);
    nvars_ = nvars;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.nvars_ != nvars_) {
        if (o.nvars_ == 0) {
            Poly tmp = o;
            tmp.promote(nvars_);
            return *this += tmp;
        }
        promote(o.nvars_);
    }
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly& Poly::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

Poly Poly::operator-() const {
    Poly p = *this;
    for (auto& [m, v] : p.terms_) v = -v;
    return p;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly(std::max(a.nvars_, b.nvars_));
    Poly x = a, y = b;
    if (x.nvars_ != y.nvars_) {
        if (x.nvars_ == 0) x.promote(y.nvars_);
        else y.promote(x.nvars_);
    }
    Poly out(x.nvars_);
    Monomial m(x.nvars_);
    for (const auto& [ma, ca] : x.terms_)
        for (const auto& [mb, cb] : y.terms_) {
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = static_cast<std::uint8_t>(ma[i] + mb[i]);
            out.add_term(m, ca * cb);
        }
    return out;
}

bool operator==(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) return true;
    if (a.nvars_ != b.nvars_) {
        Poly x = a, y = b;
        if (x.nvars_ == 0) x.promote(y.nvars_);
        else if (y.nvars_ == 0) y.promote(x.nvars_);
        else return false;
        return x.terms_ == y.terms_;
    }
    return a.terms_ == b.terms_;
}

Poly Poly::derivative(std::size_t var) const {
    Poly out(nvars_);
    for (const auto& [m, c] : terms_) {
        if (m[var] == 0) continue;
        Monomial d = m;
        --d[var];
        out.add_term(d, c * Scalar(static_cast<long>(m[var])));
    }
    return out;
}

Poly Poly::conj_coefficients() const {
    Poly out = *this;
    for (auto& [m, c] : out.terms_) c = c.conj();
    return out;
}

Poly Poly::rename(std::span<const std::size_t> var_map, std::size_t new_nvars) const {
    if (var_map.size() != nvars_) throw Error(ErrorKind::InvalidArgument, "rename: map size mismatch");
    Poly out(new_nvars);
    for (const auto& [m, c] : terms_) {
        Monomial r(new_nvars, 0);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i]) r[var_map[i]] = static_cast<std::uint8_t>(r[var_map[i]] + m[i]);
        out.add_term(r, c);
    }
    return out;
}

Poly Poly::homogeneous_part(int degree) const {
    Poly out(nvars_);
    for (const auto& [m, c] : terms_)
        if (total_degree(m) == degree) out.add_term(m, c);
    return out;
}

Poly substitute(const Poly& p, const std::map<std::size_t, Poly>& assignment, std::size_t target_nvars) {
    Poly out(target_nvars);
    std::map<std::pair<std::size_t, int>, Poly> powers;
    auto power = [&](std::size_t var, int e) -> const Poly& {
        auto key = std::make_pair(var, e);
        auto it = powers.find(key);
        if (it != powers.end()) return it->second;
        auto a = assignment.find(var);
        if (a == assignment.end())
            throw Error(ErrorKind::MissingAssignment, "variable " + std::to_string(var) + " has no assignment");
        Poly r = Poly::constant(target_nvars, Scalar(1));
        for (int i = 0; i < e; ++i) r = r * a->second;
        return powers.emplace(key, std::move(r)).first->second;
    };
    for (const auto& [m, c] : p.terms()) {
        Poly term = Poly::constant(target_nvars, c);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i]) term = term * power(i, m[i]);
        out += term;
    }
    return out;
}

std::vector<Poly> interpolate_deg2(const std::vector<std::vector<Scalar>>& points,
                                   const std::vector<std::vector<Scalar>>& values) {
    if (points.empty()) throw Error(ErrorKind::NeedMoreSamples, "no samples");
    if (values.size() != points.size()) throw Error(ErrorKind::InvalidArgument, "sample/value count mismatch");
    const std::size_t nvars = points.front().size();
    const std::size_t ncomp = values.front().size();
    const auto monos = monomials_up_to(nvars, 2);

    ComplexMatrix vander(points.size(), monos.size());
    ComplexMatrix rhs(points.size(), ncomp);
    for (std::size_t s = 0; s < points.size(); ++s) {
        if (points[s].size() != nvars || values[s].size() != ncomp)
            throw Error(ErrorKind::InvalidArgument, "ragged sample data");
        for (std::size_t j = 0; j < monos.size(); ++j)
            vander(s, j) = Poly::monomial(monos[j], Scalar(1)).evaluate<Scalar>(points[s]);
        for (std::size_t c = 0; c < ncomp; ++c) rhs(s, c) = values[s][c];
    }
    auto res = solve_linear(vander, rhs);
    if (!res.consistent) throw Error(ErrorKind::NotPolynomialDeg2, "samples admit no polynomial fit of degree <= 2");
    if (res.rank < monos.size())
        throw Error(ErrorKind::NeedMoreSamples,
                    "sample set determines only " + std::to_string(res.rank) + " of " + std::to_string(monos.size()) +
                        " coefficients");
    std::vector<Poly> out(ncomp, Poly(nvars));
    for (std::size_t c = 0; c < ncomp; ++c)
        for (std::size_t j = 0; j < monos.size(); ++j) out[c].add_term(monos[j], res.solution(j, c));
    return out;
}

Poly interpolate_deg2(const std::vector<std::vector<Scalar>>& points, const std::vector<Scalar>& values) {
    std::vector<std::vector<Scalar>> v;
    v.reserve(values.size());
    for (const auto& x : values) v.push_back({x});
    return interpolate_deg2(points, v).front();
}

}  // namespace crq
