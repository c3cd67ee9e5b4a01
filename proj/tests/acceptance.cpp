#include "crq/suites.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

using namespace crq;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Failure notes of the criterion under evaluation.
std::vector<std::string> notes;

bool expect(bool ok, const std::string& what) {
    if (!ok) notes.push_back(what);
    return ok;
}

bool expect_report(const CheckReport& r, const std::string& context) {
    for (const auto& c : r.checks)
        if (!c.passed) notes.push_back(context + ": " + c.name + (c.detail.empty() ? "" : " (" + c.detail + ")"));
    return r.passed();
}

std::string profile_text(const std::array<std::size_t, 5>& d) {
    std::ostringstream os;
    os << "(" << d[0] << "," << d[1] << "," << d[2] << "," << d[3] << "," << d[4] << ")";
    return os.str();
}

struct Entry {
    QuadricSpec q;
    GradedLieAlgebra g;
    double seconds;
};

// hol results keyed by a display name; each quadric is solved once.
std::map<std::string, Entry> cache;

const Entry& solved(const std::string& name, const std::function<QuadricSpec()>& make) {
    auto it = cache.find(name);
    if (it != cache.end()) return it->second;
    QuadricSpec q = make();
    const auto t0 = Clock::now();
    GradedLieAlgebra g = compute_hol(q);
    return cache.emplace(name, Entry{std::move(q), std::move(g), seconds_since(t0)}).first->second;
}

const Entry& ex(std::size_t n, std::size_t k) {
    return solved("EX(" + std::to_string(n) + "," + std::to_string(k) + ")", [=] { return make_hyperquadric(n, k); });
}
const Entry& ey22() {
    return solved("EY(2,2,I)", [] { return make_matrix_quadric(2, 2, ComplexMatrix::identity(2)); });
}
const Entry& type2() {
    return solved("Type II(4)", [] { return make_type_II(4); });
}
const Entry& type5() {
    return solved("Type V", [] { return make_type_V(); });
}

struct NamedAlgebra {
    std::string name;
    StarAlgebra a;
};

std::vector<NamedAlgebra> closed_form_algebras() {
    return {{"C", make_complex()},
            {"CxC", make_product(make_complex(), make_complex())},
            {"swap", make_swap_product(make_complex())},
            {"M2", make_matrix_algebra(2)},
            {"dual", make_dual_numbers()}};
}

const Entry& algebra_entry(const NamedAlgebra& na) {
    return solved("Q(" + na.name + ")", [&] { return make_algebra_quadric(na.a); });
}

const std::vector<std::pair<std::size_t, std::size_t>> ex_params{{1, 1}, {2, 1}, {2, 0}, {3, 2}};

bool hyperquadric_dims() {
    bool ok = true;
    for (auto [n, k] : ex_params) {
        const auto& e = ex(n, k);
        const std::array<std::size_t, 5> want{1, 2 * n, n * n + 1, 2 * n, 1};
        const std::string name = "EX(" + std::to_string(n) + "," + std::to_string(k) + ")";
        ok &= expect(e.g.total() == (n + 2) * (n + 2) - 1, name + " total " + std::to_string(e.g.total()));
        ok &= expect(e.g.dims() == want, name + " profile " + profile_text(e.g.dims()));
        ok &= expect(e.seconds < 10.0, name + " took " + std::to_string(e.seconds) + " s");
    }
    return ok;
}

bool matrix_quadric_dims() {
    const std::array<std::size_t, 5> want{4, 8, 11, 8, 4};
    const auto& e = ey22();
    const auto& t = solved("Q(M2)", [] { return make_algebra_quadric(make_matrix_algebra(2)); });
    bool ok = expect(e.g.total() == 35, "EY(2,2,I) total " + std::to_string(e.g.total()));
    ok &= expect(e.g.dims() == want, "EY(2,2,I) profile " + profile_text(e.g.dims()));
    ok &= expect(t.g.dims() == want, "Q(M2) profile " + profile_text(t.g.dims()));
    return ok;
}

bool closed_forms() {
    bool ok = true;
    auto general = [&](const std::string& name, const Entry& e) {
        for (int k = -2; k <= 0; ++k) {
            const auto cf = general_closed_form(e.q, k);
            ok &= expect(span_equal(cf, e.g.level(k)), name + " level " + std::to_string(k));
        }
    };
    for (auto [n, k] : ex_params) general("EX(" + std::to_string(n) + "," + std::to_string(k) + ")", ex(n, k));
    general("EY(2,2,I)", ey22());
    general("Type II(4)", type2());
    general("Type V", type5());
    for (const auto& na : closed_form_algebras()) {
        const auto& e = algebra_entry(na);
        general("Q(" + na.name + ")", e);
        for (int k = -2; k <= 2; ++k)
            ok &= expect(span_equal(algebra_closed_form(e.q, k), e.g.level(k)),
                         "Q(" + na.name + ") algebra form level " + std::to_string(k));
    }
    return ok;
}

bool symmetries() {
    bool ok = true;
    const std::vector<std::pair<std::string, const Entry*>> subjects{
        {"EX(2,1)", &ex(2, 1)},
        {"EY(2,2,I)", &ey22()},
        {"Q(dual)", &algebra_entry({"dual", make_dual_numbers()})},
        {"Type II(4)", &type2()}};
    for (const auto& [name, e] : subjects) {
        const auto r = symmetry_suite(e->q, e->g, 1);
        ok &= expect(r.skipped.empty(), name + " symmetry skipped");
        ok &= expect(!r.checks.empty(), name + " ran no symmetry checks");
        ok &= expect_report(r, name);
    }
    return ok;
}

bool type2_dim() { return expect(type2().g.total() == 45, "Type II(4) total " + std::to_string(type2().g.total())); }

bool type5_dim() { return expect(type5().g.total() == 78, "Type V total " + std::to_string(type5().g.total())); }

bool group_identities() {
    bool ok = true;
    for (const auto* e : {&ex(1, 1), &ex(2, 1), &ey22()}) {
        const auto r = group_suite(e->q, e->g, 1, false);
        ok &= expect(r.skipped.empty(), e->q.provenance().description + " group checks skipped");
        ok &= expect_report(r, e->q.provenance().description);
    }
    return ok;
}

bool cayley_transform() {
    const auto s = make_sphere(make_complex(), 1, 2, ComplexMatrix::identity(2));
    const auto r = cayley_suite(s, 1);
    bool ok = expect_report(r, "three-sphere");
    ok &= expect(r.skipped.empty(), "three-sphere checks skipped");
    const auto hol = sphere_hol(s);
    ok &= expect(hol.size() == 8, "dim s = " + std::to_string(hol.size()));
    ok &= expect(compute_hol(sphere_quadric(s)).total() == 8, "dim hol of the sphere's quadric");
    for (const auto& f : p_fields(s)) ok &= expect(in_sphere_ideal(s, sphere_residual(s, f)), "p-field not tangent");
    return ok;
}

// Index (l, kappa) of the tensor coordinates goes to the first factor when
// kappa < da, else to the second factor.
std::vector<std::size_t> product_perm(std::size_t dim, std::size_t da, std::size_t db) {
    std::vector<std::size_t> p;
    for (std::size_t l = 0; l < dim; ++l)
        for (std::size_t k = 0; k < da + db; ++k) p.push_back(k < da ? l * da + k : dim * da + l * db + (k - da));
    return p;
}

bool functoriality() {
    bool ok = true;
    const std::vector<NamedAlgebra> algebras{{"C", make_complex()}, {"M2", make_matrix_algebra(2)}};
    for (const auto& base : {make_hyperquadric(1, 1), make_hyperquadric(2, 1)})
        for (const auto& a : algebras)
            for (const auto& b : algebras) {
                const std::string tag = base.provenance().description + " with " + a.name + ", " + b.name;
                const auto lhs = tensor_quadric(base, make_product(a.a, b.a));
                const auto rhs = product_quadric(tensor_quadric(base, a.a), tensor_quadric(base, b.a));
                ok &= expect(isomorphic_by_permutation(lhs, rhs, product_perm(base.dim_w(), a.a.dim(), b.a.dim()),
                                                       product_perm(base.dim_z(), a.a.dim(), b.a.dim())),
                             tag + ": product");
                ok &= expect(forms_equal(tensor_quadric(tensor_quadric(base, a.a), b.a),
                                         tensor_quadric(base, make_tensor(a.a, b.a))),
                             tag + ": tensor");
            }
    return ok;
}

bool property_suites() {
    bool ok = true;
    for (auto [n, k] : ex_params) ex(n, k);
    ey22();
    type2();
    type5();
    for (const auto& na : closed_form_algebras()) algebra_entry(na);
    for (const auto& [name, e] : cache) {
        ok &= expect_report(validation_suite(e.q), name);
        ok &= expect_report(property_suite(e.q, e.g), name);
    }
    return ok;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<bool()>>> criteria{
        {"hyperquadric dimensions and profiles", hyperquadric_dims},
        {"matrix quadric dimensions", matrix_quadric_dims},
        {"closed-form agreement", closed_forms},
        {"symmetry properties", symmetries},
        {"Type II(4) dimension", type2_dim},
        {"Type V dimension", type5_dim},
        {"group identities", group_identities},
        {"Cayley transform", cayley_transform},
        {"functoriality", functoriality},
        {"property suites", property_suites}};
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        notes.clear();
        const auto t0 = Clock::now();
        bool ok = false;
        try {
            ok = criteria[i].second();
        } catch (const std::exception& e) {
            notes.push_back(std::string("error: ") + e.what());
        }
        std::printf("criterion %zu %s: %s (%.1f s)\n", i + 1, criteria[i].first.c_str(), ok ? "PASS" : "FAIL",
                    seconds_since(t0));
        for (const auto& n : notes) std::printf("    %s\n", n.c_str());
        if (!ok) ++failed;
    }
    std::printf("%d of %zu criteria failed\n", failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
