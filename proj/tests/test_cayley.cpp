#include "crq/cayley.hpp"
#include "crq/hol.hpp"

#include <doctest.h>

using namespace crq;

namespace {

ComplexMatrix diag(std::initializer_list<long> v) {
    ComplexMatrix m(v.size(), v.size());
    std::size_t i = 0;
    for (long x : v) m(i, i) = x, ++i;
    return m;
}

SphereSpec three_sphere() { return make_sphere(make_complex(), 1, 2, diag({1, 1})); }

CayleyPoint scalar_point(const SphereSpec& s, const Scalar2& x, const Scalar2& y) {
    return {AlgMatrix<Scalar2>(1, 1, 1, std::vector<Scalar2>{x}), AlgMatrix<Scalar2>(1, 1, 1, std::vector<Scalar2>{y})};
}

void require_report(const CheckReport& r) {
    for (const auto& c : r.checks) {
        INFO(r.subject << ": " << c.name << " " << c.detail);
        CHECK(c.passed);
    }
}

}  // namespace

TEST_CASE("sphere validation") {
    CHECK_NOTHROW(three_sphere());
    CHECK_THROWS_AS(make_sphere(make_complex(), 1, 1, diag({1})), Error);
    try {
        make_sphere(make_complex(), 1, 2, diag({1, 0}));
        FAIL("singular alpha accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidForm);
    }
    try {
        make_sphere(make_complex(), 2, 3, diag({1, -1, 1}));
        FAIL("alpha with one positive block entry accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidParameter);
    }
    try {
        make_sphere(make_complex(), 2, 3, diag({-1, -1, 1}));
        FAIL("too few positive eigenvalues accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidForm);
    }
    try {
        make_sphere(make_octonions(), 1, 2, diag({1, 1}));
        FAIL("octonion sphere accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Unsupported);
    }
    ComplexMatrix nonherm = diag({1, 1});
    nonherm(0, 1) = Scalar(0, 1);
    CHECK_THROWS_AS(make_sphere(make_complex(), 1, 2, nonherm), Error);
}

TEST_CASE("hermitian inertia") {
    auto in = hermitian_inertia(diag({1, -1, 1}));
    CHECK(in.positive == 2);
    CHECK(in.negative == 1);
    ComplexMatrix off(2, 2);
    off(0, 1) = Scalar(0, 1);
    off(1, 0) = Scalar(0, -1);
    in = hermitian_inertia(off);
    CHECK(in.positive == 1);
    CHECK(in.negative == 1);
    ComplexMatrix degenerate(3, 3);
    degenerate(0, 0) = 1;
    degenerate(0, 1) = 1;
    degenerate(1, 0) = 1;
    degenerate(1, 1) = 1;
    in = hermitian_inertia(degenerate);
    CHECK(in.positive == 1);
    CHECK(in.zero == 2);
}

TEST_CASE("cayley transform on the three-sphere") {
    const auto s = three_sphere();
    auto at0 = cayley(s, scalar_point(s, Scalar2(0), Scalar2(0)));
    CHECK(at0.x.data[0] == Scalar2(1));
    CHECK(at0.y.data[0] == Scalar2(0));
    try {
        cayley(s, scalar_point(s, Scalar2(1), Scalar2(0)));
        FAIL("kappa defined at x = 1");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SingularPoint);
    }

    auto on = scalar_point(s, Scalar2(1), Scalar2(0));
    CHECK(sphere_contains(s, on));
    CHECK_FALSE(sphere_contains(s, scalar_point(s, Scalar2(0), Scalar2(0))));

    // kappa(0, 1) = (1, sqrt2) and 1 + 1 = |sqrt2|^2.
    auto p = scalar_point(s, Scalar2(0), Scalar2(1));
    CHECK(sphere_contains(s, p));
    auto img = cayley(s, p);
    CHECK(img.x.data[0] == Scalar2(1));
    CHECK(img.y.data[0] == Scalar2(QSqrt2::sqrt2()));
    CHECK(cayley_quadric_contains(s, img));

    RationalSampler rng(5);
    std::size_t n = 0;
    while (n < 20) {
        auto q = scalar_point(s, lift<Scalar2>(rng.scalar(4, 3)), lift<Scalar2>(rng.scalar(4, 3)));
        try {
            auto k = cayley(s, q);
            CHECK(cayley_inverse(s, k).x == q.x);
            CHECK(cayley_inverse(s, k).y == q.y);
            ++n;
        } catch (const Error&) {
        }
    }
}

TEST_CASE("cayley transform agrees with the scalar formula") {
    // kappa(x, y) = ((1 + x)/(1 - x), sqrt2 y/(1 - x)) over C.
    const auto s = three_sphere();
    RationalSampler rng(11);
    for (int i = 0; i < 10; ++i) {
        const Scalar x = rng.scalar(4, 3), y = rng.scalar(4, 3);
        if (x == Scalar(1)) continue;
        auto k = cayley(s, scalar_point(s, lift<Scalar2>(x), lift<Scalar2>(y)));
        CHECK(k.x.data[0] == lift<Scalar2>((Scalar(1) + x) / (Scalar(1) - x)));
        CHECK(k.y.data[0] == Scalar2(QSqrt2::sqrt2()) * lift<Scalar2>(y / (Scalar(1) - x)));
    }
}

TEST_CASE("sphere and quadric exchange under kappa") {
    require_report(sphere_to_quadric_check(three_sphere()));
    require_report(sphere_to_quadric_check(make_sphere(make_complex(), 1, 3, diag({1, 1, -1})), 2));
    require_report(sphere_to_quadric_check(make_sphere(make_complex(), 2, 3, diag({1, 1, 1})), 3, 20));
    require_report(sphere_to_quadric_check(make_sphere(make_matrix_algebra(2), 1, 2, diag({1, 1})), 4, 20));
    require_report(sphere_to_quadric_check(make_sphere(make_dual_numbers(), 1, 2, diag({1, -1})), 5, 20));
}

TEST_CASE("sigma is the Cayley conjugate of -id") {
    require_report(sigma_identity_check(make_hyperquadric(1, 1)));
    require_report(sigma_identity_check(make_matrix_quadric(2, 1, diag({1})), 2, 20));
    require_report(sigma_identity_check(make_algebra_quadric(make_matrix_algebra(2)), 3, 20));
    CHECK_THROWS_AS(sigma_identity_check(make_type_II(4)), Error);
}

TEST_CASE("p-fields") {
    const auto s = three_sphere();
    AlgMatrix<Scalar> zero(1, 2, 1, Scalar(0));
    CHECK(p_field(s, zero).is_zero());

    // a = (1, 0): (1 - z1^2) d/dz1 - z1 z2 d/dz2.
    AlgMatrix<Scalar> a(1, 2, 1, Scalar(0));
    a.data[0] = 1;
    auto f = p_field(s, a);
    Monomial z1{1, 0}, z1sq{2, 0}, z1z2{1, 1}, one{0, 0};
    CHECK(f.component(0).coefficient(one) == Scalar(1));
    CHECK(f.component(0).coefficient(z1sq) == Scalar(-1));
    CHECK(f.component(1).coefficient(z1z2) == Scalar(-1));
    CHECK(f.component(0).size() == 2);
    CHECK(f.component(1).size() == 1);

    for (const auto& sp : {three_sphere(), make_sphere(make_complex(), 1, 3, diag({1, 1, -1})),
                           make_sphere(make_matrix_algebra(2), 1, 2, diag({1, 1}))}) {
        for (std::size_t k = 0; k < sp.dim(); ++k) {
            AlgMatrix<Scalar> b(sp.m, sp.r, sp.d(), Scalar(0));
            b.data[k] = Scalar(1, 2);
            const auto res = sphere_residual(sp, p_field(sp, b));
            CHECK(res == p_field_factorization(sp, b));
            CHECK(in_sphere_ideal(sp, res));
        }
    }
    // A non-tangent field: d/dz1 has residual z1bar + z1.
    PolyVecField shift(0, 2);
    shift.set_component(0, Poly::constant(2, Scalar(1)));
    CHECK_FALSE(in_sphere_ideal(s, sphere_residual(s, shift)));
}

TEST_CASE("sphere algebra of the three-sphere matches hol of the Heisenberg sphere") {
    const auto s = three_sphere();
    const auto hol = sphere_hol(s);
    CHECK(hol.size() == 8);
    CHECK(compute_hol(make_hyperquadric(1, 1)).total() == 8);
    CHECK(compute_hol(sphere_quadric(s)).total() == hol.size());
    require_report(check_sphere_algebra(s, hol));
    auto kp = k_p_decompose(s, hol);
    CHECK(kp.k.size() == 4);
    CHECK(kp.p.size() == 4);
}

TEST_CASE("sphere algebras of larger spheres") {
    // hol(EX(n, k)) has dimension (n + 2)^2 - 1.
    const auto s = make_sphere(make_complex(), 1, 3, diag({1, 1, -1}));
    const auto hol = sphere_hol(s);
    CHECK(hol.size() == 15);
    CHECK(compute_hol(sphere_quadric(s)).total() == 15);
    require_report(check_sphere_algebra(s, hol));

    const auto s2 = make_sphere(make_complex(), 2, 3, diag({1, 1, 1}));
    const auto hol2 = sphere_hol(s2);
    CHECK(hol2.size() == compute_hol(sphere_quadric(s2)).total());
    require_report(check_sphere_algebra(s2, hol2));
}

TEST_CASE("sphere algebra over M2") {
    const auto s = make_sphere(make_matrix_algebra(2), 1, 2, diag({1, 1}));
    const auto hol = sphere_hol(s);
    CHECK(hol.size() == 35);
    require_report(check_sphere_algebra(s, hol));
}
