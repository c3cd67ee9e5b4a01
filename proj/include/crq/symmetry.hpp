#pragma once

#include "crq/hol.hpp"

#include <cstdint>
#include <memory>

namespace crq {

/// Holomorphic birational self-map of E = W x Z. Maps built from the
/// quadric's algebra model (gamma, sigma, gplus) evaluate inverses in the
/// model's envelope and throw SingularPoint outside their regular set.
class BirationalMap {
public:
    enum class Kind { Identity, Gamma, Sigma, Heisenberg, GPlus, Linear, Composite };

    static BirationalMap identity(const QuadricSpec& q);
    /// (w, z) -> (w^-1, w^-1 z); needs an algebra model.
    static BirationalMap gamma(const QuadricSpec& q);
    /// (w, z) -> (w^-1, -w^-1 z); needs an algebra model.
    static BirationalMap sigma(const QuadricSpec& q);
    /// (w, z) -> (w + a + h(z, b), z + b); parameters are not validated here.
    static BirationalMap heisenberg(const QuadricSpec& q, QuadricPoint ab);
    /// (w, z) -> (e + wa + h(z, c))^-1 (w, z + wc); needs an associative model.
    static BirationalMap gplus(const QuadricSpec& q, QuadricPoint ac);
    /// (w, z) -> (f w, g z)
    static BirationalMap linear(const QuadricSpec& q, ComplexMatrix f, ComplexMatrix g);
    /// maps[0] o maps[1] o ... (the last map is applied first).
    static BirationalMap compose(std::vector<BirationalMap> maps);

    Kind kind() const { return kind_; }
    const QuadricSpec& quadric() const { return *q_; }
    const QuadricPoint& parameter() const { return param_; }
    const ComplexMatrix& linear_w() const { return f_; }
    const ComplexMatrix& linear_z() const { return g_; }
    const std::vector<BirationalMap>& factors() const { return parts_; }
    std::string describe() const;

    QuadricPoint evaluate(const QuadricPoint& p) const;
    /// (m(p), dm(p) v)
    std::pair<QuadricPoint, QuadricPoint> push(const QuadricPoint& p, const QuadricPoint& v) const;
    /// Matrix of dm(p) in the coordinates (w, z).
    ComplexMatrix jacobian(const QuadricPoint& p) const;
    /// Inverse birational map; gplus(a, c)^-1 = gplus of the inverse
    /// Heisenberg parameter since gplus(a, c) = gamma o heisenberg(a, c) o gamma.
    BirationalMap inverse() const;

private:
    BirationalMap(Kind k, std::shared_ptr<const QuadricSpec> q) : kind_(k), q_(std::move(q)) {}

    Kind kind_;
    std::shared_ptr<const QuadricSpec> q_;
    QuadricPoint param_;
    ComplexMatrix f_, g_;
    std::vector<BirationalMap> parts_;
};

/// Flattens a point to coordinates (w, z) and back.
std::vector<Scalar> flatten(const QuadricPoint& p);
QuadricPoint unflatten(const QuadricSpec& q, std::span<const Scalar> x);

/// Random point of E in the regular set of m.
QuadricPoint regular_sample(const BirationalMap& m, RationalSampler& rng);

/// Ad(m) on fields: the unique degree <= 2 fields eta with
/// eta(m(p)) = dm(p) xi(p). Target points q = m(p) are drawn with small
/// height and pulled back through m^-1; eta is fitted on C(dim E + 2, 2) of
/// them and checked on twice as many further points. Throws NotPolynomialDeg2
/// when the check fails.
std::vector<PolyVecField> pushforward(const BirationalMap& m, const std::vector<PolyVecField>& fields,
                                      std::uint64_t seed = 1);
PolyVecField pushforward(const BirationalMap& m, const PolyVecField& field, std::uint64_t seed = 1);

struct CheckReport {
    std::string subject;
    std::vector<CheckResult> checks;
    /// Checks that could not run, with the reason.
    std::vector<std::string> skipped;
    bool passed() const;
    void add(CheckResult r) { checks.push_back(std::move(r)); }
    void skip(std::string reason) { skipped.push_back(std::move(reason)); }
    void merge(const CheckReport& o) {
        checks.insert(checks.end(), o.checks.begin(), o.checks.end());
        skipped.insert(skipped.end(), o.skipped.begin(), o.skipped.end());
    }
};

/// m maps Q into Q, m o m = id, and Ad(m) zeta = -zeta.
CheckReport check_property_S(const QuadricSpec& q, const BirationalMap& m, std::uint64_t seed = 1,
                             std::size_t samples = 20);
/// Ad(m) g^k = g^-k (spans, dims, pure grades), [g^1, g^1] = g^2, and Ad(m)
/// preserves all basis brackets.
CheckReport check_DM(const GradedLieAlgebra& g, const BirationalMap& m, std::uint64_t seed = 1);

}  // namespace crq
