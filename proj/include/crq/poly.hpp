#pragma once

#include "crq/error.hpp"
#include "crq/scalar.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace crq {

/// Exponent multi-index; entry i is the power of variable i.
using Monomial = std::vector<std::uint8_t>;

int total_degree(const Monomial& m);
/// All monomials of total degree <= max_degree, ordered by degree then reverse-lex.
std::vector<Monomial> monomials_up_to(std::size_t nvars, int max_degree);

/// Multivariate polynomial with Q(i) coefficients in a fixed number of variables.
/// Zero coefficients are never stored; terms are ordered by exponent vector.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::size_t nvars) : nvars_(nvars) {}

    static Poly constant(std::size_t nvars, const Scalar& c);
    static Poly variable(std::size_t nvars, std::size_t index, const Scalar& coeff = Scalar(1));
    static Poly monomial(const Monomial& m, const Scalar& c);

    std::size_t nvars() const { return nvars_; }
    const std::map<Monomial, Scalar>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    Scalar coefficient(const Monomial& m) const;

    void add_term(const Monomial& m, const Scalar& c);

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Scalar& c);
    Poly operator-() const;

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Scalar& c) { return a *= c; }
    friend Poly operator*(const Scalar& c, Poly a) { return a *= c; }
    friend bool operator==(const Poly& a, const Poly& b);

    template <class S>
    S evaluate(std::span<const S> point) const;

    Poly derivative(std::size_t var) const;
    Poly conj_coefficients() const;
    /// Renames variable i to var_map[i] in a ring with new_nvars variables.
    Poly rename(std::span<const std::size_t> var_map, std::size_t new_nvars) const;
    Poly homogeneous_part(int degree) const;

private:
    void promote(std::size_t nvars);

    std::size_t nvars_ = 0;
    std::map<Monomial, Scalar> terms_;
};

/// Composes p with polynomials for its variables; every variable occurring
/// in p must be assigned, otherwise MissingAssignment is thrown.
Poly substitute(const Poly& p, const std::map<std::size_t, Poly>& assignment, std::size_t target_nvars);

/// Unique polynomial of degree <= 2 through the samples.
/// Throws NotPolynomialDeg2 when no such polynomial exists and
/// NeedMoreSamples when the sample set does not determine it.
Poly interpolate_deg2(const std::vector<std::vector<Scalar>>& points, const std::vector<Scalar>& values);

/// Vector-valued variant: values[s][c] is component c at sample s.
std::vector<Poly> interpolate_deg2(const std::vector<std::vector<Scalar>>& points,
                                   const std::vector<std::vector<Scalar>>& values);

template <class S>
S Poly::evaluate(std::span<const S> point) const {
    if (point.size() != nvars_ && !(nvars_ == 0)) throw Error(ErrorKind::InvalidArgument, "evaluate: dimension mismatch");
    S total(0);
    for (const auto& [m, c] : terms_) {
        S term = lift<S>(c);
        for (std::size_t i = 0; i < m.size(); ++i)
            for (int e = 0; e < m[i]; ++e) term *= point[i];
        total += term;
    }
    return total;
}

}  // namespace crq
