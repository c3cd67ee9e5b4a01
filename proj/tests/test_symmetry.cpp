#include <doctest.h>

#include "crq/symmetry.hpp"

using namespace crq;

namespace {

Poly var(std::size_t nv, std::size_t i, Scalar c = Scalar(1)) { return Poly::variable(nv, i, c); }

void require_report(const CheckReport& rep) {
    for (const auto& c : rep.checks) {
        INFO(rep.subject << ": " << c.name << " " << c.detail);
        CHECK(c.passed);
    }
}

}  // namespace

TEST_CASE("gamma on the Heisenberg sphere") {
    const auto q = make_hyperquadric(1, 1);
    const auto g = BirationalMap::gamma(q);
    auto p = g.evaluate({{Scalar(1)}, {Scalar(1)}});
    CHECK(p.w == std::vector<Scalar>{Scalar(1)});
    CHECK(p.z == std::vector<Scalar>{Scalar(1)});
    CHECK(contains(q, {{Scalar(Rational(1, 2))}, {Scalar(1)}}));

    try {
        g.evaluate({{Scalar(0)}, {Scalar(1)}});
        FAIL("expected SingularPoint");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SingularPoint);
    }

    // d gamma at (w, z) = [[-1/w^2, 0], [-z/w^2, 1/w]]
    const Scalar w(2, 1), z(3, -1);
    auto jac = g.jacobian({{w}, {z}});
    CHECK(jac(0, 0) == Scalar(-1) / (w * w));
    CHECK(jac(0, 1) == Scalar(0));
    CHECK(jac(1, 0) == Scalar(-1) * z / (w * w));
    CHECK(jac(1, 1) == Scalar(1) / w);
}

TEST_CASE("gamma is an involution at random points") {
    RationalSampler rng(3);
    for (const auto& q : {make_hyperquadric(2, 1), make_matrix_quadric(2, 2, ComplexMatrix::identity(2)),
                          make_algebra_quadric(make_dual_numbers()), make_type_V()}) {
        const auto g = BirationalMap::gamma(q);
        for (int s = 0; s < 20; ++s) {
            const auto p = regular_sample(g, rng);
            const auto back = g.evaluate(g.evaluate(p));
            CHECK(back.w == p.w);
            CHECK(back.z == p.z);
        }
    }
}

TEST_CASE("differential matches the chain rule for compositions") {
    const auto q = make_matrix_quadric(2, 1, ComplexMatrix::identity(1));
    RationalSampler rng(11);
    const auto pt = random_point(q, rng);
    const auto h = BirationalMap::heisenberg(q, pt);
    const auto g = BirationalMap::gamma(q);
    const auto c = BirationalMap::compose({g, h, g});
    const auto p = regular_sample(c, rng);
    const auto inner = g.evaluate(p);
    const auto mid = h.evaluate(inner);
    CHECK(c.jacobian(p) == g.jacobian(mid) * h.jacobian(inner) * g.jacobian(p));
}

TEST_CASE("pushforward basics") {
    const auto q = make_algebra_quadric(make_complex());
    const std::size_t nv = 2;
    const auto zeta = zeta_field(1, 1);
    CHECK(pushforward(BirationalMap::identity(q), zeta) == zeta);
    CHECK(pushforward(BirationalMap::gamma(q), zeta) == zeta * Scalar(-1));

    // Ad(gamma)(i d/dw) = -(i w^2 d/dw + i wz d/dz), spanning g^2
    PolyVecField shift(1, 1), top(1, 1);
    shift.set_component(0, Poly::constant(nv, Scalar::i()));
    top.set_component(0, var(nv, 0) * var(nv, 0) * Scalar(0, -1));
    top.set_component(1, var(nv, 0) * var(nv, 1) * Scalar(0, -1));
    CHECK(pushforward(BirationalMap::gamma(q), shift) == top);

    // Ad(gamma) of a field outside hol(Q) is not polynomial.
    PolyVecField wild(1, 1);
    wild.set_component(1, var(nv, 1) * var(nv, 1));
    try {
        pushforward(BirationalMap::gamma(q), wild);
        FAIL("expected NotPolynomialDeg2");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotPolynomialDeg2);
    }
}

TEST_CASE("pushforward of the top level on Q(M2)") {
    const auto a = make_matrix_algebra(2);
    const auto q = make_algebra_quadric(a);
    const auto g = BirationalMap::gamma(q);
    const auto nv = q.dim_w() + q.dim_z();
    // a = i E_00: Ad(gamma)(a d/dw) = -(w a w d/dw + w a z d/dz)
    AlgMatrix<Scalar> el(1, 1, 4, Scalar(0));
    el.data[0] = Scalar::i();
    PolyVecField shift(4, 4);
    shift.set_component(0, Poly::constant(nv, Scalar::i()));
    AlgMatrix<Poly> w(1, 1, 4, Poly(nv)), z(1, 1, 4, Poly(nv)), ap(1, 1, 4, Poly(nv));
    for (std::size_t i = 0; i < 4; ++i) {
        w.data[i] = var(nv, i);
        z.data[i] = var(nv, 4 + i);
    }
    ap.data[0] = Poly::constant(nv, Scalar::i());
    auto wa = alg_mul(a, w, ap);
    auto fw = alg_mul(a, wa, w), fz = alg_mul(a, wa, z);
    std::vector<Poly> comps;
    for (auto& p : fw.data) comps.push_back(p * Scalar(-1));
    for (auto& p : fz.data) comps.push_back(p * Scalar(-1));
    CHECK(pushforward(g, shift) == PolyVecField(4, 4, comps));
}

TEST_CASE("property S and grade reversal") {
    struct Case {
        QuadricSpec q;
        bool use_sigma;
    };
    std::vector<Case> cases{{make_hyperquadric(2, 1), false},
                            {make_matrix_quadric(2, 2, ComplexMatrix::identity(2)), false},
                            {make_algebra_quadric(make_dual_numbers()), false},
                            {make_type_II(4), true}};
    for (const auto& [q, use_sigma] : cases) {
        const auto m = use_sigma ? BirationalMap::sigma(q) : BirationalMap::gamma(q);
        require_report(check_property_S(q, m));
        const auto g = compute_hol(q);
        const auto rep = check_DM(g, m);
        CHECK(rep.checks.size() == 6);
        require_report(rep);
    }
}

TEST_CASE("Ad(gamma) is an involution on hol(Q)") {
    const auto q = make_hyperquadric(2, 1);
    const auto g = compute_hol(q).basis();
    const auto m = BirationalMap::gamma(q);
    CHECK(pushforward(m, pushforward(m, g), 5) == g);
}

TEST_CASE("conjugates of gamma by linear automorphisms are symmetries") {
    const auto q = make_hyperquadric(2, 1);
    ComplexMatrix f(1, 1), fi(1, 1), g(2, 2), gi(2, 2);
    f(0, 0) = 4;
    fi(0, 0) = Scalar(Rational(1, 4));
    g(0, 0) = 2;
    g(1, 1) = Scalar(0, 2);
    gi(0, 0) = Scalar(Rational(1, 2));
    gi(1, 1) = Scalar(0, Rational(-1, 2));
    const auto conj = BirationalMap::compose(
        {BirationalMap::linear(q, f, g), BirationalMap::gamma(q), BirationalMap::linear(q, fi, gi)});
    require_report(check_property_S(q, conj));
    require_report(check_DM(compute_hol(q), conj));
}

TEST_CASE("gamma needs an algebra model") {
    const auto q = product_quadric(make_hyperquadric(1, 1), make_hyperquadric(1, 1));
    CHECK_NOTHROW(BirationalMap::gamma(q));
    const auto custom = QuadricSpec(q.dim_w(), q.dim_z(), q.conj_matrix(), q.form_tensor(), {"custom", "copy"});
    try {
        BirationalMap::gamma(custom);
        FAIL("expected Unsupported");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Unsupported);
    }
}
