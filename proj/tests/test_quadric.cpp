#include <doctest.h>

#include "crq/quadric.hpp"

using namespace crq;

namespace {

ComplexMatrix diag(std::initializer_list<long> d) {
    ComplexMatrix m(d.size(), d.size());
    std::size_t i = 0;
    for (long v : d) {
        m(i, i) = v;
        ++i;
    }
    return m;
}

template <class F>
ErrorKind kind_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error thrown");
    return ErrorKind::InvalidArgument;
}

// Embeds x in X (x) A as x (x) e.
std::vector<Scalar> tensor_unit(const std::vector<Scalar>& x, const StarAlgebra& a) {
    std::vector<Scalar> out;
    for (const auto& v : x)
        for (const auto& u : a.unit()) out.push_back(v * u);
    return out;
}

// Coordinate permutation taking Q(A x B) to Q(A) x Q(B) for a base with
// dim W = dw and dim Z = dz: index (l, kappa) of the tensor goes to the
// first factor when kappa < dA, else to the second factor.
std::vector<std::size_t> product_perm(std::size_t dim, std::size_t da, std::size_t db) {
    std::vector<std::size_t> p;
    for (std::size_t l = 0; l < dim; ++l)
        for (std::size_t k = 0; k < da + db; ++k) p.push_back(k < da ? l * da + k : dim * da + l * db + (k - da));
    return p;
}

std::vector<std::size_t> identity_perm(std::size_t n) {
    std::vector<std::size_t> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = i;
    return p;
}

}  // namespace

TEST_CASE("hyperquadrics") {
    auto heis = make_hyperquadric(1, 1);
    CHECK(heis.dim_w() == 1);
    CHECK(heis.dim_z() == 1);
    CHECK(heis.h({Scalar(2, 1)}, {Scalar(2, 1)}) == std::vector<Scalar>{Scalar(5)});
    CHECK(validate(heis).ok());

    auto neg = make_hyperquadric(2, 0);
    CHECK(neg.form(0, 0, 0) == Scalar(-1));
    CHECK(neg.form(1, 1, 0) == Scalar(-1));

    auto sig = make_hyperquadric(3, 2);
    CHECK(sig.form(0, 0, 0) == Scalar(1));
    CHECK(sig.form(1, 1, 0) == Scalar(1));
    CHECK(sig.form(2, 2, 0) == Scalar(-1));
    CHECK(validate(make_hyperquadric(2, 1)).ok());
    CHECK(kind_of([] { make_hyperquadric(2, 3); }) == ErrorKind::InvalidParameter);
}

TEST_CASE("matrix quadrics") {
    auto ey11 = make_matrix_quadric(1, 1, diag({1}));
    CHECK(forms_equal(ey11, make_hyperquadric(1, 1)));
    auto ey22 = make_matrix_quadric(2, 2, diag({1, 1}));
    CHECK(ey22.dim_w() == 4);
    CHECK(ey22.real_form().size() == 4);
    CHECK(validate(ey22).ok());
    CHECK(forms_equal(make_matrix_quadric(1, 2, diag({1, -1})), make_hyperquadric(2, 1)));

    CHECK(kind_of([] { make_matrix_quadric(1, 2, diag({1, 0})); }) == ErrorKind::InvalidForm);
    ComplexMatrix nh(2, 2);
    nh(0, 1) = 1;
    nh(1, 0) = 2;
    CHECK(kind_of([&] { make_matrix_quadric(1, 2, nh); }) == ErrorKind::InvalidForm);
}

TEST_CASE("tensor quadrics") {
    auto heis = make_hyperquadric(1, 1);
    CHECK(forms_equal(tensor_quadric(heis, make_complex()), heis));

    auto qm2 = make_algebra_quadric(make_matrix_algebra(2));
    auto ey = make_matrix_quadric(2, 2, diag({1, 1}));
    CHECK(isomorphic_by_permutation(qm2, ey, identity_perm(4), identity_perm(4)));
    CHECK(validate(qm2).ok());
}

TEST_CASE("functoriality of the tensor construction") {
    std::vector<StarAlgebra> algebras{make_complex(), make_matrix_algebra(2)};
    for (const auto& base : {make_hyperquadric(1, 1), make_hyperquadric(2, 1)})
        for (const auto& a : algebras)
            for (const auto& b : algebras) {
                auto lhs = tensor_quadric(base, make_product(a, b));
                auto rhs = product_quadric(tensor_quadric(base, a), tensor_quadric(base, b));
                CHECK(isomorphic_by_permutation(lhs, rhs, product_perm(base.dim_w(), a.dim(), b.dim()),
                                                product_perm(base.dim_z(), a.dim(), b.dim())));
                auto nested = tensor_quadric(tensor_quadric(base, a), b);
                auto flat = tensor_quadric(base, make_tensor(a, b));
                CHECK(forms_equal(nested, flat));
            }
}

TEST_CASE("products") {
    auto heis = make_hyperquadric(1, 1);
    auto p = product_quadric(heis, heis);
    CHECK(p.real_form().size() == 2);
    CHECK(p.dim_z() == 2);
    CHECK(validate(p).ok());
    auto cc = make_algebra_quadric(make_product(make_complex(), make_complex()));
    CHECK(forms_equal(cc, p));

    QuadricSpec empty(1, 0, ComplexMatrix::identity(1), {}, {"custom", "empty"});
    CHECK(kind_of([&] { product_quadric(heis, empty); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("type II") {
    auto q = make_type_II(4);
    CHECK(q.dim_w() == 6);
    CHECK(q.dim_z() == 4);
    CHECK(validate(q).ok());
    // The identity matrix lies in W.
    auto id = ComplexMatrix::identity(4);
    CHECK_NOTHROW(model_project<Scalar>(*q.model(), std::span<const Scalar>(id.data())));
    CHECK(kind_of([] { make_type_II(5); }) == ErrorKind::InvalidParameter);
    CHECK(validate(make_type_II(6)).ok());
}

TEST_CASE("type V") {
    auto q = make_type_V();
    CHECK(q.dim_w() == 8);
    CHECK(q.dim_z() == 8);
    CHECK(q.real_form().size() == 8);
    CHECK(validate(q).ok());
    std::vector<Scalar> e(8, Scalar(0));
    e[0] = 1;
    CHECK(q.h(e, e) == e);
}

TEST_CASE("validation failures are reported separately") {
    QuadricSpec zero(1, 1, ComplexMatrix::identity(1), {Scalar(0)}, {"custom", "zero form"});
    auto d = validate(zero);
    CHECK(d.hermitian);
    CHECK_FALSE(d.nondegenerate);
    CHECK_FALSE(d.minimal);

    QuadricSpec first(2, 1, ComplexMatrix::identity(2), {Scalar(1), Scalar(0)}, {"custom", "first coordinate"});
    auto f = validate(first);
    CHECK(f.nondegenerate);
    CHECK_FALSE(f.minimal);

    QuadricSpec skew(1, 1, ComplexMatrix::identity(1), {Scalar::i()}, {"custom", "skew"});
    CHECK_FALSE(validate(skew).hermitian);
}

TEST_CASE("points") {
    RationalSampler rng(1);
    std::vector<QuadricSpec> family{make_hyperquadric(2, 1), make_matrix_quadric(2, 2, diag({1, -1})), make_type_II(4),
                                    make_algebra_quadric(make_dual_numbers()), make_type_V()};
    for (const auto& q : family) {
        CHECK(contains(q, {std::vector<Scalar>(q.dim_w(), Scalar(0)), std::vector<Scalar>(q.dim_z(), Scalar(0))}));
        for (int t = 0; t < 10; ++t) {
            auto p = random_point(q, rng);
            CHECK(contains(q, p));
            p.w[0] += Scalar(1);
            CHECK_FALSE(contains(q, p));
        }
    }
}

TEST_CASE("Q embeds in Q(A) through the unit") {
    RationalSampler rng(2);
    auto base = make_hyperquadric(2, 1);
    for (const auto& a : {make_matrix_algebra(2), make_dual_numbers(), make_swap_product(make_complex())}) {
        auto qa = tensor_quadric(base, a);
        for (int t = 0; t < 5; ++t) {
            auto p = random_point(base, rng);
            CHECK(contains(qa, {tensor_unit(p.w, a), tensor_unit(p.z, a)}));
        }
    }
}
