#include "crq/vector_field.hpp"

namespace crq {

PolyVecField::PolyVecField(std::size_t dim_w, std::size_t dim_z)
    : dim_w_(dim_w), dim_z_(dim_z), comp_(dim_w + dim_z, Poly(dim_w + dim_z)) {}

PolyVecField::PolyVecField(std::size_t dim_w, std::size_t dim_z, std::vector<Poly> components)
    : dim_w_(dim_w), dim_z_(dim_z), comp_(std::move(components)) {
    if (comp_.size() != nvars()) throw Error(ErrorKind::InvalidArgument, "field has wrong number of components");
    for (auto& p : comp_) {
        if (p.is_zero()) p = Poly(nvars());
        else if (p.nvars() != nvars()) p = Poly(nvars()) + p;
    }
}

void PolyVecField::set_component(std::size_t i, Poly p) {
    if (p.is_zero()) p = Poly(nvars());
    else if (p.nvars() != nvars()) p = Poly(nvars()) + p;
    comp_.at(i) = std::move(p);
}

bool PolyVecField::is_zero() const {
    for (const auto& p : comp_)
        if (!p.is_zero()) return false;
    return true;
}

int PolyVecField::degree() const {
    int d = -1;
    for (const auto& p : comp_) d = std::max(d, p.degree());
    return d;
}

void PolyVecField::check_same_space(const PolyVecField& o) const {
    if (dim_w_ != o.dim_w_ || dim_z_ != o.dim_z_) throw Error(ErrorKind::InvalidArgument, "fields live on different spaces");
}

PolyVecField& PolyVecField::operator+=(const PolyVecField& o) {
    check_same_space(o);
    for (std::size_t i = 0; i < comp_.size(); ++i) comp_[i] += o.comp_[i];
    return *this;
}

PolyVecField& PolyVecField::operator-=(const PolyVecField& o) {
    check_same_space(o);
    for (std::size_t i = 0; i < comp_.size(); ++i) comp_[i] -= o.comp_[i];
    return *this;
}

PolyVecField& PolyVecField::operator*=(const Scalar& c) {
    for (auto& p : comp_) p *= c;
    return *this;
}

bool operator==(const PolyVecField& a, const PolyVecField& b) {
    return a.dim_w_ == b.dim_w_ && a.dim_z_ == b.dim_z_ && a.comp_ == b.comp_;
}

namespace {

// X(p) = sum_j X_j dp/dx_j
Poly apply_field(const PolyVecField& x, const Poly& p) {
    Poly out(x.nvars());
    if (p.is_zero()) return out;
    for (std::size_t j = 0; j < x.nvars(); ++j) {
        if (x.component(j).is_zero()) continue;
        Poly d = p.derivative(j);
        if (!d.is_zero()) out += x.component(j) * d;
    }
    return out;
}

}  // namespace

PolyVecField bracket(const PolyVecField& x, const PolyVecField& y) {
    if (x.dim_w() != y.dim_w() || x.dim_z() != y.dim_z())
        throw Error(ErrorKind::InvalidArgument, "bracket of fields on different spaces");
    std::vector<Poly> comps;
    comps.reserve(x.nvars());
    for (std::size_t i = 0; i < x.nvars(); ++i)
        comps.push_back(apply_field(x, y.component(i)) - apply_field(y, x.component(i)));
    return PolyVecField(x.dim_w(), x.dim_z(), std::move(comps));
}

PolyVecField zeta_field(std::size_t dim_w, std::size_t dim_z) {
    PolyVecField f(dim_w, dim_z);
    const std::size_t n = dim_w + dim_z;
    for (std::size_t i = 0; i < n; ++i) f.set_component(i, Poly::variable(n, i, Scalar(i < dim_w ? 2 : 1)));
    return f;
}

PolyVecField chi_field(std::size_t dim_w, std::size_t dim_z) {
    PolyVecField f(dim_w, dim_z);
    const std::size_t n = dim_w + dim_z;
    for (std::size_t i = dim_w; i < n; ++i) f.set_component(i, Poly::variable(n, i, Scalar::i()));
    return f;
}

PolyVecField euler_field(std::size_t dim_w, std::size_t dim_z) {
    PolyVecField f(dim_w, dim_z);
    const std::size_t n = dim_w + dim_z;
    for (std::size_t i = 0; i < n; ++i) f.set_component(i, Poly::variable(n, i));
    return f;
}

int monomial_weight(const Monomial& m, std::size_t dim_w) {
    int wt = 0;
    for (std::size_t i = 0; i < m.size(); ++i) wt += (i < dim_w ? 2 : 1) * m[i];
    return wt;
}

int term_grade(const Monomial& m, std::size_t component, std::size_t dim_w) {
    return monomial_weight(m, dim_w) - (component < dim_w ? 2 : 1);
}

std::map<int, PolyVecField> grade_decompose(const PolyVecField& x) {
    std::map<int, PolyVecField> out;
    for (std::size_t i = 0; i < x.nvars(); ++i)
        for (const auto& [m, c] : x.component(i).terms()) {
            int k = term_grade(m, i, x.dim_w());
            auto it = out.try_emplace(k, x.dim_w(), x.dim_z()).first;
            Poly p = it->second.component(i);
            p.add_term(m, c);
            it->second.set_component(i, std::move(p));
        }
    return out;
}

PolyVecField monomial_field(std::size_t dim_w, std::size_t dim_z, std::size_t component, const Monomial& m,
                            const Scalar& c) {
    PolyVecField f(dim_w, dim_z);
    f.set_component(component, Poly::monomial(m, c));
    return f;
}

SparseRow FieldCoordinates::realify(const PolyVecField& x) {
    SparseRow row;
    for (std::size_t i = 0; i < x.nvars(); ++i)
        for (const auto& [m, c] : x.component(i).terms()) {
            auto [it, inserted] = index_.try_emplace({i, m}, index_.size());
            const std::size_t col = 2 * it->second;
            if (sgn(c.re) != 0) row.emplace_back(col, c.re);
            if (sgn(c.im) != 0) row.emplace_back(col + 1, c.im);
        }
    return row;
}

std::optional<SparseRow> FieldCoordinates::realify_known(const PolyVecField& x) const {
    SparseRow row;
    for (std::size_t i = 0; i < x.nvars(); ++i)
        for (const auto& [m, c] : x.component(i).terms()) {
            auto it = index_.find({i, m});
            if (it == index_.end()) return std::nullopt;
            const std::size_t col = 2 * it->second;
            if (sgn(c.re) != 0) row.emplace_back(col, c.re);
            if (sgn(c.im) != 0) row.emplace_back(col + 1, c.im);
        }
    return row;
}

namespace {

std::size_t rank_of(const std::vector<SparseRow>& rows, std::size_t cols) {
    EchelonBasis eb(cols);
    for (const auto& r : rows) eb.insert(r);
    return eb.rank();
}

}  // namespace

std::size_t real_span_dim(const std::vector<PolyVecField>& fields) {
    FieldCoordinates fc;
    std::vector<SparseRow> rows;
    for (const auto& f : fields) rows.push_back(fc.realify(f));
    return rank_of(rows, fc.size());
}

bool span_equal(const std::vector<PolyVecField>& a, const std::vector<PolyVecField>& b) {
    FieldCoordinates fc;
    std::vector<SparseRow> ra, rb;
    for (const auto& f : a) ra.push_back(fc.realify(f));
    for (const auto& f : b) rb.push_back(fc.realify(f));
    const std::size_t rank_a = rank_of(ra, fc.size()), rank_b = rank_of(rb, fc.size());
    if (rank_a != rank_b) return false;
    ra.insert(ra.end(), rb.begin(), rb.end());
    return rank_of(ra, fc.size()) == rank_a;
}

bool span_contains(const std::vector<PolyVecField>& outer, const std::vector<PolyVecField>& inner) {
    FieldCoordinates fc;
    std::vector<SparseRow> ro, ri;
    for (const auto& f : outer) ro.push_back(fc.realify(f));
    for (const auto& f : inner) ri.push_back(fc.realify(f));
    EchelonBasis eb(fc.size());
    for (const auto& r : ro) eb.insert(r);
    for (const auto& r : ri)
        if (!eb.contains(r)) return false;
    return true;
}

BasisCoordinates::BasisCoordinates(const std::vector<PolyVecField>& basis) : n_(basis.size()) {
    for (std::size_t i = 0; i < n_; ++i) {
        std::map<std::size_t, Rational> row;
        for (auto& [c, v] : coords_.realify(basis[i])) row[c] += v;
        std::vector<Rational> t(n_, Rational(0));
        t[i] = 1;
        for (std::size_t j = 0; j < reduced_.size(); ++j) {
            auto it = row.find(pivots_[j]);
            if (it == row.end()) continue;
            const Rational f = it->second;
            for (const auto& [c, v] : reduced_[j]) {
                Rational& x = row[c];
                x -= f * v;
                if (sgn(x) == 0) row.erase(c);
            }
            for (std::size_t k = 0; k < n_; ++k)
                if (sgn(transform_[j][k]) != 0) t[k] -= f * transform_[j][k];
        }
        if (row.empty()) throw Error(ErrorKind::InvalidArgument, "basis fields are linearly dependent over R");
        const std::size_t pivot = row.begin()->first;
        const Rational inv = 1 / row.begin()->second;
        for (auto& [c, v] : row) v *= inv;
        for (auto& v : t) v *= inv;
        // Keep the rows fully reduced.
        for (std::size_t j = 0; j < reduced_.size(); ++j) {
            auto it = reduced_[j].find(pivot);
            if (it == reduced_[j].end()) continue;
            const Rational f = it->second;
            for (const auto& [c, v] : row) {
                Rational& x = reduced_[j][c];
                x -= f * v;
                if (sgn(x) == 0) reduced_[j].erase(c);
            }
            for (std::size_t k = 0; k < n_; ++k)
                if (sgn(t[k]) != 0) transform_[j][k] -= f * t[k];
        }
        reduced_.push_back(std::move(row));
        pivots_.push_back(pivot);
        transform_.push_back(std::move(t));
    }
}

std::optional<std::vector<Rational>> BasisCoordinates::coordinates(const PolyVecField& field) const {
    auto sparse = coords_.realify_known(field);
    if (!sparse) return std::nullopt;
    std::map<std::size_t, Rational> v;
    for (auto& [c, x] : *sparse) v[c] += x;
    std::vector<Rational> y(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        auto it = v.find(pivots_[i]);
        y[i] = it == v.end() ? Rational(0) : it->second;
    }
    for (std::size_t i = 0; i < n_; ++i) {
        if (sgn(y[i]) == 0) continue;
        for (const auto& [c, r] : reduced_[i]) {
            Rational& x = v[c];
            x -= y[i] * r;
            if (sgn(x) == 0) v.erase(c);
        }
    }
    if (!v.empty()) return std::nullopt;
    std::vector<Rational> out(n_, Rational(0));
    for (std::size_t i = 0; i < n_; ++i) {
        if (sgn(y[i]) == 0) continue;
        for (std::size_t k = 0; k < n_; ++k)
            if (sgn(transform_[i][k]) != 0) out[k] += y[i] * transform_[i][k];
    }
    return out;
}

}  // namespace crq
