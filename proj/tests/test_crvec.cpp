#include <doctest.h>

#include "crq/closed_form.hpp"
#include "crq/hol.hpp"

using namespace crq;

namespace {

using Profile = std::array<std::size_t, 5>;

Poly var(std::size_t nv, std::size_t i, Scalar c = Scalar(1)) { return Poly::variable(nv, i, c); }

// (n+2)^2 - 1 split as (1, 2n, n^2+1, 2n, 1)
Profile hyperquadric_profile(std::size_t n) { return {1, 2 * n, n * n + 1, 2 * n, 1}; }

// Tensored Heisenberg: (d, 2d, 2d + dim der, 2d, d)
Profile algebra_profile(const StarAlgebra& a) {
    const std::size_t d = a.dim(), der = derivations(a).real_dim();
    return {d, 2 * d, 2 * d + der, 2 * d, d};
}

void require_all_checks(const QuadricSpec& q, const GradedLieAlgebra& g, bool surjective = true) {
    const auto t = bracket_table(g);
    std::vector<CheckResult> checks{check_grading(g),         check_tangency(q, g),           check_zeta_chi(q, g),
                                    check_antisymmetry(t),    check_jacobi(t),                check_grading_closure(g, t),
                                    check_derived_ideal(t, derived_subalgebra(g, t))};
    if (surjective) checks.push_back(check_bracket_surjectivity(g, t));
    for (const auto& c : checks) {
        INFO(q.provenance().description << ": " << c.name << " " << c.detail);
        CHECK(c.passed);
    }
}

}  // namespace

TEST_CASE("bracket of simple fields") {
    const std::size_t nv = 2;
    PolyVecField dw(1, 1), zdw(1, 1), dz(1, 1);
    dw.set_component(0, Poly::constant(nv, Scalar(3)));
    zdw.set_component(0, var(nv, 1));
    dz.set_component(1, Poly::constant(nv, Scalar(1)));
    const auto zeta = zeta_field(1, 1);

    CHECK(bracket(zeta, dw) == dw * Scalar(-2));
    CHECK(bracket(zeta, zdw) == zdw * Scalar(-1));
    CHECK(bracket(dz, zdw) == dw * Scalar(Rational(1, 3)));
    CHECK(bracket(zeta, zeta).is_zero());
    CHECK(bracket(zeta, chi_field(1, 1)).is_zero());
}

TEST_CASE("grade decomposition") {
    const std::size_t nv = 2;
    PolyVecField x(1, 1);
    x.set_component(0, Poly::constant(nv, Scalar(1)) + var(nv, 0) * var(nv, 0));  // d/dw + w^2 d/dw
    x.set_component(1, var(nv, 0) * var(nv, 1) + var(nv, 1));                   // wz d/dz + z d/dz
    const auto parts = grade_decompose(x);
    REQUIRE(parts.size() == 3);
    CHECK(parts.count(-2) == 1);
    CHECK(parts.count(0) == 1);
    CHECK(parts.count(2) == 1);
    PolyVecField sum(1, 1);
    const auto zeta = zeta_field(1, 1);
    for (const auto& [k, p] : parts) {
        sum += p;
        CHECK(bracket(zeta, p) == p * Scalar(k));
    }
    CHECK(sum == x);
}

TEST_CASE("grade decomposition of random fields") {
    RationalSampler rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t dw = 1 + trial % 2, dz = 1 + trial % 3, nv = dw + dz;
        PolyVecField x(dw, dz);
        for (std::size_t i = 0; i < nv; ++i) {
            Poly p(nv);
            for (const auto& m : monomials_up_to(nv, 2))
                if (rng.next() % 3 == 0) p.add_term(m, rng.scalar(5, 3));
            x.set_component(i, p);
        }
        PolyVecField sum(dw, dz);
        const auto zeta = zeta_field(dw, dz);
        for (const auto& [k, p] : grade_decompose(x)) {
            sum += p;
            CHECK(bracket(zeta, p) == p * Scalar(k));
        }
        CHECK(sum == x);
    }
}

TEST_CASE("tangency of elementary fields") {
    const auto q = make_hyperquadric(1, 1);
    const TangencyContext ctx(q);
    auto tangent = [&](const PolyVecField& x) {
        for (const auto& r : ctx.residual(x))
            if (!r.is_zero()) return false;
        return true;
    };
    const std::size_t nv = 2;
    PolyVecField real_shift(1, 1), imag_shift(1, 1), heis(1, 1);
    real_shift.set_component(0, Poly::constant(nv, Scalar(1)));
    imag_shift.set_component(0, Poly::constant(nv, Scalar::i()));
    heis.set_component(0, var(nv, 1));
    heis.set_component(1, Poly::constant(nv, Scalar(1)));
    CHECK(tangent(zeta_field(1, 1)));
    CHECK(tangent(chi_field(1, 1)));
    CHECK(tangent(imag_shift));
    CHECK_FALSE(tangent(real_shift));
    CHECK(tangent(heis));
    CHECK_FALSE(tangent(euler_field(1, 1)));
}

TEST_CASE("span comparison") {
    const std::size_t nv = 2;
    PolyVecField a(1, 1), b(1, 1);
    a.set_component(0, var(nv, 0));
    b.set_component(1, var(nv, 1));
    CHECK(span_equal({a, b}, {a + b, a - b}));
    CHECK_FALSE(span_equal({a, b}, {a + b}));
    CHECK_FALSE(span_equal({a}, {a * Scalar::i()}));
    CHECK(span_contains({a, b}, {a * Scalar(5)}));
    CHECK(real_span_dim({a, a * Scalar::i(), a * Scalar(2, 3)}) == 2);

    BasisCoordinates bc({a, b});
    auto x = bc.coordinates(a * Scalar(2) - b);
    REQUIRE(x);
    CHECK((*x)[0] == 2);
    CHECK((*x)[1] == -1);
    CHECK_FALSE(bc.coordinates(a * Scalar::i()));
}

TEST_CASE("hyperquadric dimensions") {
    for (auto [n, k] : std::vector<std::pair<std::size_t, std::size_t>>{{1, 1}, {2, 1}, {2, 0}, {3, 2}}) {
        const auto q = make_hyperquadric(n, k);
        const auto g = compute_hol(q);
        INFO("n=" << n << " k=" << k);
        CHECK(g.dims() == hyperquadric_profile(n));
        CHECK(g.total() == (n + 2) * (n + 2) - 1);
        require_all_checks(q, g);
    }
}

TEST_CASE("matrix quadric dimensions") {
    const auto ey = make_matrix_quadric(2, 2, ComplexMatrix::identity(2));
    const auto g = compute_hol(ey);
    CHECK(g.dims() == Profile{4, 8, 11, 8, 4});
    CHECK(g.total() == 35);
    require_all_checks(ey, g);

    const auto m2 = make_matrix_algebra(2);
    const auto g2 = compute_hol(make_algebra_quadric(m2));
    CHECK(g2.dims() == algebra_profile(m2));
    CHECK(g2.dims() == g.dims());
}

TEST_CASE("tensored Heisenberg dimensions") {
    for (const auto& a : {make_complex(), make_product(make_complex(), make_complex()),
                          make_swap_product(make_complex()), make_dual_numbers()}) {
        const auto q = make_algebra_quadric(a);
        const auto g = compute_hol(q);
        INFO(a.name());
        CHECK(g.dims() == algebra_profile(a));
        require_all_checks(q, g);
    }
}

TEST_CASE("type II dimension") {
    const auto q = make_type_II(4);
    const auto g = compute_hol(q);
    CHECK(g.total() == 5 * 9);  // (m+1)(2m+1)
    CHECK(g.level(-2).size() == 6);
    CHECK(g.level(-1).size() == 8);
    require_all_checks(q, g);
}

TEST_CASE("derived algebra of a simple algebra is everything") {
    const auto g = compute_hol(make_hyperquadric(1, 1));
    const auto t = bracket_table(g);
    const auto d = derived_subalgebra(g, t);
    CHECK(d.dims == g.dims());
    CHECK(check_derived_ideal(t, d).passed);
}

TEST_CASE("closed forms: explicit members") {
    const auto q = make_hyperquadric(1, 1);
    const std::size_t nv = 2;
    PolyVecField heis(1, 1);
    heis.set_component(0, var(nv, 1));
    heis.set_component(1, Poly::constant(nv, Scalar(1)));
    CHECK(span_contains(general_closed_form(q, -1), {heis}));
    CHECK(span_contains(algebra_closed_form(q, -1), {heis}));

    const auto qc = make_algebra_quadric(make_complex());
    PolyVecField top(1, 1);  // i w^2 d/dw + i wz d/dz
    top.set_component(0, var(nv, 0) * var(nv, 0) * Scalar::i());
    top.set_component(1, var(nv, 0) * var(nv, 1) * Scalar::i());
    const auto g2 = algebra_closed_form(qc, 2);
    REQUIRE(g2.size() == 1);
    CHECK(span_equal(g2, {top}));
    CHECK(span_equal(g2, compute_hol(qc).level(2)));
}

TEST_CASE("closed forms agree with the solver: general levels") {
    std::vector<QuadricSpec> qs{make_hyperquadric(2, 1),
                                make_matrix_quadric(2, 2, ComplexMatrix::identity(2)),
                                make_algebra_quadric(make_dual_numbers()),
                                make_algebra_quadric(make_swap_product(make_complex())),
                                product_quadric(make_hyperquadric(1, 1), make_hyperquadric(1, 0)),
                                make_type_II(4)};
    for (const auto& q : qs) {
        const auto g = compute_hol(q);
        for (int k = -2; k <= 0; ++k) {
            INFO(q.provenance().description << " grade " << k);
            CHECK(span_equal(general_closed_form(q, k), g.level(k)));
        }
    }
}

TEST_CASE("closed forms agree with the solver: algebra formulas") {
    for (const auto& a : {make_complex(), make_product(make_complex(), make_complex()),
                          make_swap_product(make_complex()), make_matrix_algebra(2), make_dual_numbers()}) {
        const auto q = make_algebra_quadric(a);
        const auto g = compute_hol(q);
        const auto cf = closed_form_basis(q);
        for (int k = -2; k <= 2; ++k) {
            INFO(a.name() << " grade " << k);
            REQUIRE(cf.available[static_cast<std::size_t>(k + 2)]);
            CHECK(span_equal(algebra_closed_form(q, k), g.level(k)));
            CHECK(span_equal(cf.algebra.level(k), g.level(k)));
        }
    }
    const auto ey = make_matrix_quadric(2, 1, ComplexMatrix::identity(1));
    const auto g = compute_hol(ey);
    for (int k : {-2, -1, 1, 2}) CHECK(span_equal(algebra_closed_form(ey, k), g.level(k)));
}

TEST_CASE("closed forms: unsupported cases") {
    auto kind_of = [](auto&& f) {
        try {
            f();
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::Parse;
    };
    CHECK(kind_of([] { algebra_closed_form(make_type_II(4), 1); }) == ErrorKind::Unsupported);
    CHECK(kind_of([] { algebra_closed_form(make_type_V(), 1); }) == ErrorKind::Unsupported);
    CHECK(kind_of([] { general_closed_form(make_hyperquadric(1, 1), 1); }) == ErrorKind::Unsupported);
    CHECK(kind_of([] { general_closed_form(make_hyperquadric(1, 1), 3); }) == ErrorKind::InvalidGrading);
    const auto cf = closed_form_basis(make_type_II(4));
    CHECK(cf.available == std::array<bool, 5>{true, true, true, false, false});
}

TEST_CASE("grade one needs the minus sign on the w c term") {
    const auto q = make_algebra_quadric(make_complex());
    const TangencyContext ctx(q);
    const std::size_t nv = 2;
    auto z = var(nv, 1), w = var(nv, 0);
    PolyVecField plus(1, 1), minus(1, 1);  // c = 1
    plus.set_component(0, z * w);
    plus.set_component(1, z * z + w);
    minus.set_component(0, z * w);
    minus.set_component(1, z * z - w);
    auto tangent = [&](const PolyVecField& x) {
        for (const auto& r : ctx.residual(x))
            if (!r.is_zero()) return false;
        return true;
    };
    CHECK_FALSE(tangent(plus));
    CHECK(tangent(minus));
    CHECK(span_contains(algebra_closed_form(q, 1), {minus}));
}
