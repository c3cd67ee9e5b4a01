#include <doctest.h>

#include "crq/linalg.hpp"
#include "crq/poly.hpp"

using namespace crq;

TEST_CASE("nullspace of a single row") {
    RealLinearSystem sys({"x", "y"});
    sys.add_row({{0, Rational(1)}, {1, Rational(1)}});
    auto ns = nullspace(sys);
    REQUIRE(ns.size() == 1);
    CHECK(ns[0][0] == -ns[0][1]);
    CHECK(ns[0][0] != 0);
}

TEST_CASE("nullspace of identity and zero matrices") {
    RealLinearSystem id({"a", "b", "c"});
    for (std::size_t i = 0; i < 3; ++i) id.add_row({{i, Rational(1)}});
    CHECK(nullspace(id).empty());

    RealLinearSystem zero({"a", "b", "c", "d"});
    zero.add_row({});
    zero.add_row({{2, Rational(0)}});
    CHECK(nullspace(zero).size() == 4);
}

TEST_CASE("nullspace vectors annihilate random systems") {
    RationalSampler rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t rows = 1 + rng.next() % 6, cols = 1 + rng.next() % 8;
        RealLinearSystem sys(std::vector<std::string>(cols, "x"));
        std::vector<std::vector<Rational>> dense;
        for (std::size_t r = 0; r < rows; ++r) {
            std::vector<Rational> row(cols);
            for (auto& v : row) v = rng.next() % 3 == 0 ? Rational(0) : rng.rational();
            // Repeat rows occasionally to force rank deficiency.
            if (r > 0 && rng.next() % 4 == 0) row = dense.back();
            dense.push_back(row);
            sys.add_row(to_sparse(row));
        }
        auto ns = nullspace(sys);
        for (const auto& v : ns)
            for (const auto& row : dense) {
                Rational s = 0;
                for (std::size_t c = 0; c < cols; ++c) s += row[c] * v[c];
                CHECK(s == 0);
            }
        CHECK(ns.size() + rank(sys) == cols);
        EchelonBasis eb(cols);
        for (const auto& v : ns) CHECK(eb.insert_dense(v));
    }
}

TEST_CASE("scalar field axioms on random triples") {
    RationalSampler rng(11);
    for (int t = 0; t < 200; ++t) {
        Scalar a = rng.scalar(), b = rng.scalar(), c = rng.scalar();
        CHECK((a * b) * c == a * (b * c));
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(conj(a * b) == conj(a) * conj(b));
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
    QSqrt2 r2 = QSqrt2::sqrt2();
    CHECK(r2 * r2 == QSqrt2(2));
    CHECK(QSqrt2(3, 1) * QSqrt2(3, 1).inverse() == QSqrt2(1));
}

TEST_CASE("rational parsing") {
    CHECK(parse_rational("-6/4") == Rational(-3, 2));
    CHECK(parse_rational("5") == 5);
    CHECK_THROWS_AS(parse_rational("x"), Error);
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
}

TEST_CASE("substitution") {
    // ring (w, z)
    Poly w = Poly::variable(2, 0), z = Poly::variable(2, 1);
    auto r = substitute(w, {{0, z * z}}, 2);
    CHECK(r == z * z);

    Poly c = Poly::constant(2, Scalar(Rational(3, 2), Rational(1)));
    CHECK(substitute(c, {}, 2) == c);

    CHECK_THROWS_AS(substitute(w + z, {{0, z}}, 2), Error);

    // w + wbar with both replaced by (1/2)|z|^2 +- t in the ring (z, zb, t)
    Poly zz = Poly::variable(3, 0), zb = Poly::variable(3, 1), t = Poly::variable(3, 2);
    Poly half = Poly::constant(3, Scalar(Rational(1, 2)));
    Poly p = Poly::variable(2, 0) + Poly::variable(2, 1);
    auto q = substitute(p, {{0, half * zz * zb + t}, {1, half * zz * zb - t}}, 3);
    CHECK(q == zz * zb);
}

TEST_CASE("polynomial arithmetic identities") {
    RationalSampler rng(3);
    auto random_poly = [&]() {
        Poly p(3);
        for (const auto& m : monomials_up_to(3, 2))
            if (rng.next() % 2) p.add_term(m, rng.scalar());
        return p;
    };
    for (int t = 0; t < 20; ++t) {
        Poly a = random_poly(), b = random_poly(), c = random_poly();
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        std::vector<Scalar> pt{rng.scalar(), rng.scalar(), rng.scalar()};
        CHECK((a * b).evaluate<Scalar>(pt) == a.evaluate<Scalar>(pt) * b.evaluate<Scalar>(pt));
        // product rule
        CHECK((a * b).derivative(1) == a.derivative(1) * b + a * b.derivative(1));
    }
}

TEST_CASE("monomial enumeration") {
    CHECK(monomials_up_to(2, 2).size() == 6);
    CHECK(monomials_up_to(4, 2).size() == 15);
    CHECK(monomials_up_to(0, 2).size() == 1);
    CHECK(total_degree(monomials_up_to(3, 2).back()) == 2);
}

TEST_CASE("degree-2 interpolation") {
    Poly x2 = Poly::monomial({2}, Scalar(1));
    std::vector<std::vector<Scalar>> pts;
    std::vector<Scalar> vals, cubes;
    for (int i = -2; i <= 3; ++i) {
        pts.push_back({Scalar(i)});
        vals.push_back(Scalar(i * i));
        cubes.push_back(Scalar(i * i * i));
    }
    CHECK(interpolate_deg2(pts, vals) == x2);
    CHECK_THROWS_WITH_AS(interpolate_deg2(pts, cubes), doctest::Contains("no polynomial"), Error);
    try {
        interpolate_deg2(pts, cubes);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotPolynomialDeg2);
    }
    try {
        interpolate_deg2({{Scalar(1), Scalar(2)}}, std::vector<Scalar>{Scalar(5)});
        FAIL("expected NeedMoreSamples");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NeedMoreSamples);
    }
}

TEST_CASE("interpolation reproduces random quadratics") {
    RationalSampler rng(5);
    for (int t = 0; t < 5; ++t) {
        Poly p(3);
        for (const auto& m : monomials_up_to(3, 2)) p.add_term(m, rng.scalar());
        std::vector<std::vector<Scalar>> pts;
        std::vector<Scalar> vals;
        for (int s = 0; s < 25; ++s) {
            std::vector<Scalar> pt{rng.scalar(), rng.scalar(), rng.scalar()};
            vals.push_back(p.evaluate<Scalar>(pt));
            pts.push_back(std::move(pt));
        }
        Poly q = interpolate_deg2(pts, vals);
        CHECK(q == p);
        for (std::size_t s = 0; s < pts.size(); ++s) CHECK(q.evaluate<Scalar>(pts[s]) == vals[s]);
    }
}

TEST_CASE("dense solve and inverse") {
    ComplexMatrix a(2, 2);
    a(0, 0) = 2;
    a(0, 1) = Scalar::i();
    a(1, 0) = 1;
    a(1, 1) = 3;
    auto inv = inverse(a);
    CHECK(a * inv == ComplexMatrix::identity(2));
    ComplexMatrix s(2, 2);
    s(0, 0) = 1;
    s(0, 1) = 2;
    s(1, 0) = 2;
    s(1, 1) = 4;
    CHECK_THROWS_AS(inverse(s), Error);
}

TEST_CASE("real kernel of conjugation fixed points") {
    // x -> conj(x) - x on C^1 has kernel R.
    std::vector<std::vector<Scalar>> images{{Scalar(0)}, {Scalar(0, -2)}};
    auto k = real_kernel(1, images);
    REQUIRE(k.size() == 1);
    CHECK(k[0][0].is_real());
}
