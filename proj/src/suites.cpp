#include "crq/suites.hpp"

#include <sstream>

namespace crq {

namespace {

using Vec = std::vector<Scalar>;

bool same(const QuadricPoint& a, const QuadricPoint& b) { return a.w == b.w && a.z == b.z; }

QuadricPoint origin(const QuadricSpec& q) { return {Vec(q.dim_w(), Scalar(0)), Vec(q.dim_z(), Scalar(0))}; }

PolyVecField random_combination(const std::vector<PolyVecField>& basis, const QuadricSpec& q, RationalSampler& rng) {
    PolyVecField out(q.dim_w(), q.dim_z());
    for (const auto& b : basis) out += b * Scalar(rng.rational(3, 2));
    return out;
}

// Compares f and g at `samples` points of E regular for both; at most 10x as many attempts.
CheckResult compare_maps(std::string name, const BirationalMap& f, const BirationalMap& g, RationalSampler& rng,
                         std::size_t samples) {
    std::size_t compared = 0, failures = 0;
    std::string first;
    for (std::size_t s = 0; s < 10 * samples && compared < samples; ++s) {
        QuadricPoint x, fx, gx;
        try {
            x = regular_sample(f, rng);
            fx = f.evaluate(x);
            gx = g.evaluate(x);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::SingularPoint) throw;
            continue;
        }
        ++compared;
        if (!same(fx, gx) && failures++ == 0) {
            std::ostringstream os;
            os << "at w=(";
            for (std::size_t i = 0; i < x.w.size(); ++i) os << (i ? ", " : "") << x.w[i];
            os << ") z=(";
            for (std::size_t i = 0; i < x.z.size(); ++i) os << (i ? ", " : "") << x.z[i];
            os << ")";
            first = os.str();
        }
    }
    std::ostringstream os;
    os << compared << " samples";
    if (failures) os << ", " << failures << " mismatches, first " << first;
    return {std::move(name), compared == samples && failures == 0, os.str()};
}

}  // namespace

CheckReport validation_suite(const QuadricSpec& q) {
    CheckReport rep;
    rep.subject = q.provenance().description;
    const auto d = validate(q);
    std::string all;
    for (const auto& m : d.messages) all += (all.empty() ? "" : "; ") + m;
    rep.add({"conjugation is an involution", d.conjugation_involutive, d.conjugation_involutive ? "" : all});
    rep.add({"form is hermitian", d.hermitian, d.hermitian ? "" : all});
    rep.add({"form is non-degenerate", d.nondegenerate, d.nondegenerate ? "" : all});
    rep.add({"form is minimal", d.minimal, d.minimal ? "" : all});
    return rep;
}

CheckReport property_suite(const QuadricSpec& q, const GradedLieAlgebra& g) {
    CheckReport rep;
    rep.subject = q.provenance().description;
    const auto t = bracket_table(g);
    rep.add(check_grading(g));
    rep.add(check_tangency(q, g));
    rep.add(check_zeta_chi(q, g));
    rep.add(check_antisymmetry(t));
    rep.add(check_jacobi(t));
    rep.add(check_grading_closure(g, t));
    rep.add(check_bracket_surjectivity(g, t));
    rep.add(check_derived_ideal(t, derived_subalgebra(g, t)));
    return rep;
}

CheckReport closed_form_suite(const QuadricSpec& q, const GradedLieAlgebra& g) {
    CheckReport rep;
    rep.subject = q.provenance().description;
    const auto cf = closed_form_basis(q);
    const std::string source = has_algebra_form(q) ? "algebra" : "general";
    for (int k = -2; k <= 2; ++k) {
        const auto& fields = cf.algebra.level(k);
        if (!cf.available[static_cast<std::size_t>(k + 2)]) {
            rep.skip("closed form of grade " + std::to_string(k) + ": not available for this quadric");
            continue;
        }
        const bool ok = span_equal(fields, g.level(k));
        rep.add({"closed form of grade " + std::to_string(k) + " (" + source + ") spans g^" + std::to_string(k), ok,
                 "closed form dim " + std::to_string(real_span_dim(fields)) + ", solver dim " +
                     std::to_string(g.level(k).size())});
    }
    return rep;
}

BirationalMap default_symmetry(const QuadricSpec& q) {
    return q.provenance().family == "type2" ? BirationalMap::sigma(q) : BirationalMap::gamma(q);
}

CheckReport symmetry_suite(const QuadricSpec& q, const GradedLieAlgebra& g, std::uint64_t seed) {
    CheckReport rep;
    rep.subject = q.provenance().description;
    std::optional<BirationalMap> sym;
    try {
        sym = default_symmetry(q);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::Unsupported) throw;
        rep.skip(std::string("symmetry suite: ") + e.what());
        return rep;
    }
    const BirationalMap& m = *sym;
    const std::string label = m.kind() == BirationalMap::Kind::Sigma ? "sigma" : "gamma";
    for (auto r : check_property_S(q, m, seed).checks) {
        r.name = label + ": " + r.name;
        rep.add(std::move(r));
    }
    for (auto r : check_DM(g, m, seed).checks) {
        r.name = label + ": " + r.name;
        rep.add(std::move(r));
    }
    return rep;
}

CheckReport group_suite(const QuadricSpec& q, const GradedLieAlgebra& g, std::uint64_t seed, bool symbolic) {
    CheckReport rep;
    rep.subject = q.provenance().description;
    RationalSampler rng(seed);

    {
        std::size_t failures = 0;
        for (int s = 0; s < 25; ++s) {
            const auto p = random_point(q, rng), p2 = random_point(q, rng);
            const auto h = heisenberg_between(q, p, p2);
            if (!same(h.map.evaluate(p), p2) || !same(h.map.evaluate(origin(q)), h.map.parameter()) ||
                !h.audit.passed())
                ++failures;
        }
        rep.add({"Heisenberg group acts simply transitively", failures == 0,
                 "25 pairs, " + std::to_string(failures) + " failures"});
    }

    std::optional<BirationalMap> gamma;
    try {
        gamma = BirationalMap::gamma(q);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::Unsupported) throw;
        rep.skip(std::string("gamma-based group checks: ") + e.what());
    }

    if (gamma) {
        try {
            const auto ac = random_point(q, rng);
            const auto gp = gplus(q, ac);
            const auto conj = BirationalMap::compose({*gamma, BirationalMap::heisenberg(q, ac), *gamma});
            rep.add({"gplus element passes its audit", gp.audit.passed(), ""});
            rep.add(compare_maps("gplus = gamma o heisenberg o gamma", gp.map, conj, rng, 20));
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::Unsupported) throw;
            rep.skip(std::string("gplus: ") + e.what());
        }
    }

    for (int half : {-1, 1}) {
        if (half == 1 && !gamma) continue;
        std::vector<PolyVecField> basis = g.level(half);
        basis.insert(basis.end(), g.level(2 * half).begin(), g.level(2 * half).end());
        const auto x = random_combination(basis, q, rng), y = random_combination(basis, q, rng);
        const auto ex = exp_field(q, x), ey = exp_field(q, y), exy = exp_field(q, bch2(x, y));
        rep.add(compare_maps(std::string("exp(y) o exp(x) = exp(x + y + [x,y]/2) in the ") +
                                 (half < 0 ? "negative" : "positive") + " half",
                             BirationalMap::compose({ey.map, ex.map}), exy.map, rng, 20));
    }

    if (symbolic) {
        try {
            const auto b = b_subgroup_fields(q);
            rep.add({"Lie algebra of the b subgroup equals g^0", span_equal(b, g.level(0)),
                     "dim " + std::to_string(real_span_dim(b)) + " vs " + std::to_string(g.level(0).size())});
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::Unsupported) throw;
            rep.skip(std::string("b subgroup: ") + e.what());
        }
    }
    return rep;
}

CheckReport cayley_suite(const SphereSpec& s, std::uint64_t seed) {
    CheckReport rep = sphere_to_quadric_check(s, seed);
    const QuadricSpec q = sphere_quadric(s);
    rep.merge(sigma_identity_check(q, seed));
    const auto hol = sphere_hol(s);
    rep.merge(check_sphere_algebra(s, hol));
    const std::size_t quadric_dim = compute_hol(q).total();
    rep.add({"dim of the sphere algebra equals dim hol of the quadric", hol.size() == quadric_dim,
             std::to_string(hol.size()) + " vs " + std::to_string(quadric_dim)});
    return rep;
}

}  // namespace crq
