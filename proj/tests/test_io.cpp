#include "crq/job.hpp"

#include <doctest.h>

using namespace crq;

namespace {

template <class F>
ErrorKind kind_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::InvalidArgument;
}

Json ex11() { return {{"family", "ex"}, {"params", {{"n", 1}, {"k", 1}}}}; }

bool same_algebra(const StarAlgebra& a, const StarAlgebra& b) {
    if (a.dim() != b.dim() || a.associative() != b.associative() || !(a.unit() == b.unit()) ||
        !(a.star_matrix() == b.star_matrix()))
        return false;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            for (std::size_t k = 0; k < a.dim(); ++k)
                if (!(a.structure_constant(i, j, k) == b.structure_constant(i, j, k))) return false;
    return true;
}

}  // namespace

TEST_CASE("scalars") {
    CHECK(parse_scalar(Json(3)) == Scalar(3));
    CHECK(parse_scalar(Json("-3/4")) == Scalar(Rational(-3, 4)));
    CHECK(parse_scalar(Json("6/8")) == Scalar(Rational(3, 4)));
    CHECK(parse_scalar(Json::array({"1/2", -1})) == Scalar(Rational(1, 2), Rational(-1)));
    CHECK(scalar_to_json(Scalar(Rational(1, 2), Rational(-1))) == Json::array({"1/2", "-1"}));
    for (const Json& bad : {Json("x"), Json("1/0"), Json(1.5), Json::array({1}), Json(nullptr)})
        CHECK(kind_of([&] { parse_scalar(bad); }) == ErrorKind::Parse);
}

TEST_CASE("algebras") {
    for (const auto& a : {make_complex(), make_matrix_algebra(2), make_dual_numbers(), make_octonions(),
                          make_swap_product(make_complex())})
        CHECK(same_algebra(parse_algebra(algebra_to_json(a)), a));
    CHECK(same_algebra(parse_algebra(Json{{"builtin", "matrix"}, {"m", 2}}), make_matrix_algebra(2)));
    CHECK(same_algebra(parse_algebra(Json{{"builtin", "product"}, {"factors", {"complex", "dual"}}}),
                       make_product(make_complex(), make_dual_numbers())));
    CHECK(same_algebra(parse_algebra(Json{{"builtin", "tensor"}, {"factors", {"complex", {{"builtin", "matrix"}, {"m", 2}}}}}),
                       make_tensor(make_complex(), make_matrix_algebra(2))));
    CHECK(kind_of([] { parse_algebra(Json{{"builtin", "quaternions"}}); }) == ErrorKind::Parse);

    // A unit that is not a unit is rejected by the algebra itself.
    Json broken = algebra_to_json(make_complex());
    broken["unit"] = Json::array({"2"});
    CHECK(kind_of([&] { parse_algebra(broken); }) == ErrorKind::InvalidArgument);
    Json truncated = algebra_to_json(make_matrix_algebra(2));
    truncated["mult"].erase(0);
    CHECK(kind_of([&] { parse_algebra(truncated); }) == ErrorKind::Parse);
}

TEST_CASE("quadric descriptors") {
    CHECK(parse_quadric(ex11()).dim_w() == 1);
    auto ey = parse_quadric(Json{{"family", "ey"}, {"params", {{"m", 2}, {"n", 1}, {"beta", {{"-1"}}}}}});
    CHECK(ey.dim_w() == 4);
    CHECK(ey.dim_z() == 2);
    CHECK(parse_quadric(Json{{"family", "type2"}, {"params", {{"m", 4}}}}).dim_w() == 6);
    CHECK(parse_quadric(Json{{"family", "type5"}}).dim_z() == 8);
    auto t = parse_quadric(Json{{"family", "tensor"}, {"params", {{"quadric", ex11()}, {"algebra", "dual"}}}});
    CHECK(forms_equal(t, make_algebra_quadric(make_dual_numbers())));
    auto p = parse_quadric(Json{{"family", "product"}, {"params", {{"factors", {ex11(), ex11()}}}}});
    CHECK(forms_equal(p, product_quadric(make_hyperquadric(1, 1), make_hyperquadric(1, 1))));

    for (const auto& q : {make_hyperquadric(2, 1), make_type_II(4), make_algebra_quadric(make_matrix_algebra(2))}) {
        const auto back = parse_quadric(quadric_to_json(q));
        CHECK(forms_equal(back, q));
        CHECK(back.provenance().family == "custom");
    }

    CHECK(kind_of([] { parse_quadric(Json{{"family", "ex"}}); }) == ErrorKind::Parse);
    CHECK(kind_of([] { parse_quadric(Json{{"family", "ez"}}); }) == ErrorKind::Parse);
    CHECK(kind_of([] { parse_quadric(Json{{"family", "ex"}, {"params", {{"n", -1}, {"k", 0}}}}); }) ==
          ErrorKind::Parse);
    CHECK(kind_of([] { parse_quadric(Json{{"family", "type2"}, {"params", {{"m", 3}}}}); }) ==
          ErrorKind::InvalidParameter);
}

TEST_CASE("spheres and fields") {
    auto s = parse_sphere(Json{{"algebra", "complex"}, {"m", 1}, {"r", 3}, {"alpha", {{1, 0, 0}, {0, 1, 0}, {0, 0, -1}}}});
    CHECK(s.n() == 2);
    CHECK(s.beta(1, 1) == Scalar(-1));
    CHECK(parse_sphere(sphere_to_json(s)).alpha == s.alpha);
    CHECK(kind_of([] { parse_sphere(Json{{"algebra", "complex"}, {"m", 2}, {"r", 2}}); }) ==
          ErrorKind::InvalidParameter);

    const auto g = compute_hol(make_hyperquadric(1, 1));
    for (const auto& f : g.basis()) CHECK(parse_field(field_to_json(f)) == f);
    Json deg3 = {{"dim_w", 1}, {"dim_z", 1}, {"terms", {{{"component", 0}, {"exponents", {2, 1}}, {"re", 1}, {"im", 0}}}}};
    CHECK(kind_of([&] { parse_field(deg3); }) == ErrorKind::Parse);
}

TEST_CASE("job configs") {
    auto c = parse_job(Json{{"quadric", ex11()}, {"analyses", {"hol", "symmetry"}}, {"seed", 9}});
    CHECK(c.analyses.size() == 2);
    CHECK(c.seed == 9);
    CHECK(kind_of([] { parse_job(Json{{"analyses", {"hol"}}}); }) == ErrorKind::Parse);
    CHECK(kind_of([] { parse_job(Json{{"quadric", ex11()}, {"analyses", {"plots"}}}); }) == ErrorKind::Parse);
    CHECK(kind_of([] { parse_job(Json{{"quadric", ex11()}, {"seed", -1}}); }) == ErrorKind::Parse);
    CHECK(kind_of([] { parse_job(Json::array()); }) == ErrorKind::Parse);
}

TEST_CASE("analyze reports hol dimensions") {
    auto res = run_job(parse_job(Json{{"quadric", ex11()}}), Suite::None);
    CHECK(res.passed);
    CHECK(res.report["hol"]["total"] == 8);
    CHECK(res.report["hol"]["graded_dims"]["0"] == 2);
    CHECK(res.report["suites"].contains("validation"));
    CHECK_FALSE(res.report["suites"].contains("symmetry"));
}

TEST_CASE("verify is deterministic and complete") {
    const Json job{{"quadric", {{"family", "ex"}, {"params", {{"n", 2}, {"k", 1}}}}}, {"seed", 4}};
    const auto a = run_job(parse_job(job), Suite::Full), b = run_job(parse_job(job), Suite::Full);
    CHECK(a.report.dump() == b.report.dump());
    CHECK(a.passed);
    for (const auto& name : known_analyses())
        if (name != "hol") CHECK(a.report["suites"].contains(name));
    CHECK(summarize(a.report).find("result: PASS") != std::string::npos);
}

TEST_CASE("failures are recorded, not thrown") {
    // h(z, z) = |z1|^2 e with z2 unused: degenerate.
    Json form = Json::array();
    for (int a = 0; a < 2; ++a) {
        Json fa = Json::array();
        for (int b = 0; b < 2; ++b) fa.push_back(Json::array({a == 0 && b == 0 ? "1" : "0"}));
        form.push_back(fa);
    }
    const Json custom{{"family", "custom"}, {"params", {{"dim_w", 1}, {"dim_z", 2}, {"conj", {{"1"}}}, {"form", form}}}};
    auto res = run_job(parse_job(Json{{"quadric", custom}}), Suite::Full);
    CHECK_FALSE(res.passed);
    CHECK(res.report["passed"] == false);
    CHECK(res.report["skipped"].size() == 1);
    CHECK(summarize(res.report).find("[FAIL] validation: form is non-degenerate") != std::string::npos);
}

TEST_CASE("fast suite skips Type V") {
    auto res = run_job(parse_job(Json{{"quadric", {{"family", "type5"}}}}), Suite::Fast);
    CHECK(res.passed);
    CHECK_FALSE(res.report.contains("hol"));
    CHECK(res.report["skipped"].size() == 1);
}

TEST_CASE("unsupported analyses are skipped") {
    // Octonion tensor quadric: no associative matrix form, so the sphere check cannot run.
    const Json q{{"family", "tensor"}, {"params", {{"quadric", ex11()}, {"algebra", "octonions"}}}};
    auto res = run_job(parse_job(Json{{"quadric", q}, {"analyses", {"cayley"}}}), Suite::Full);
    CHECK(res.passed);
    CHECK(res.report["skipped"].size() == 1);
}
