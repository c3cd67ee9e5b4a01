#include "crq/io.hpp"

namespace crq {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw Error(ErrorKind::Parse, msg); }

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) fail(std::string("missing key '") + key + "'");
    return j.at(key);
}

std::size_t parse_size(const Json& j, const char* what) {
    if (!j.is_number_integer() || j.get<long long>() < 0) fail(std::string(what) + " must be a non-negative integer");
    return j.get<std::size_t>();
}

std::size_t size_field(const Json& j, const char* key) { return parse_size(field(j, key), key); }

std::size_t size_field(const Json& j, const char* key, std::size_t fallback) {
    return j.contains(key) ? parse_size(j.at(key), key) : fallback;
}

Rational parse_rational(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) fail("rational must be an integer or a \"p/q\" string");
    const std::string s = j.get<std::string>();
    Rational q;
    if (s.empty() || q.set_str(s, 10) != 0 || (s.find('/') != std::string::npos && sgn(q.get_den()) == 0))
        fail("invalid rational \"" + s + "\"");
    q.canonicalize();
    return q;
}

std::string rational_text(const Rational& q) { return q.get_str(); }

std::vector<Scalar> parse_vector(const Json& j, std::size_t n, const char* what) {
    if (!j.is_array() || j.size() != n) fail(std::string(what) + " must be an array of length " + std::to_string(n));
    std::vector<Scalar> out;
    for (const auto& x : j) out.push_back(parse_scalar(x));
    return out;
}

Json vector_to_json(const std::vector<Scalar>& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(scalar_to_json(x));
    return out;
}

}  // namespace

Scalar parse_scalar(const Json& j) {
    if (j.is_array()) {
        if (j.size() != 2) fail("complex scalar must be [re, im]");
        return Scalar(parse_rational(j[0]), parse_rational(j[1]));
    }
    return Scalar(parse_rational(j));
}

Json scalar_to_json(const Scalar& x) { return Json::array({rational_text(x.re), rational_text(x.im)}); }

ComplexMatrix parse_matrix(const Json& j) {
    if (!j.is_array() || j.empty() || !j[0].is_array()) fail("matrix must be a non-empty array of rows");
    const std::size_t rows = j.size(), cols = j[0].size();
    ComplexMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        auto row = parse_vector(j[r], cols, "matrix row");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c];
    }
    return m;
}

Json matrix_to_json(const ComplexMatrix& m) {
    Json out = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m(r, c)));
        out.push_back(std::move(row));
    }
    return out;
}

StarAlgebra parse_algebra(const Json& j) {
    if (j.is_string()) return parse_algebra(Json{{"builtin", j}});
    if (!j.is_object()) fail("algebra descriptor must be an object or a builtin name");
    if (j.contains("builtin")) {
        const auto& b = j.at("builtin");
        if (!b.is_string()) fail("builtin must be a string");
        const std::string name = b.get<std::string>();
        if (name == "complex") return make_complex();
        if (name == "matrix") return make_matrix_algebra(size_field(j, "m"));
        if (name == "dual") return make_dual_numbers();
        if (name == "octonions") return make_octonions();
        if (name == "product" || name == "tensor") {
            const auto& f = field(j, "factors");
            if (!f.is_array() || f.size() != 2) fail(name + " needs two factors");
            const auto a = parse_algebra(f[0]), c = parse_algebra(f[1]);
            return name == "product" ? make_product(a, c) : make_tensor(a, c);
        }
        if (name == "swap") return make_swap_product(parse_algebra(field(j, "of")));
        if (name == "twist") {
            const auto a = parse_algebra(field(j, "of"));
            return twist_involution(a, parse_vector(field(j, "alpha"), a.dim(), "alpha"));
        }
        fail("unknown builtin algebra '" + name + "'");
    }
    const std::size_t d = size_field(j, "dim");
    if (d == 0) fail("algebra dimension must be positive");
    const auto unit = parse_vector(field(j, "unit"), d, "unit");
    const auto& mj = field(j, "mult");
    std::vector<Scalar> mult;
    mult.reserve(d * d * d);
    if (!mj.is_array() || mj.size() != d) fail("mult must have d entries at every level");
    for (const auto& mi : mj) {
        if (!mi.is_array() || mi.size() != d) fail("mult must have d entries at every level");
        for (const auto& mij : mi) {
            auto v = parse_vector(mij, d, "mult entry");
            mult.insert(mult.end(), v.begin(), v.end());
        }
    }
    const ComplexMatrix star = parse_matrix(field(j, "star"));
    const auto& assoc = field(j, "associative");
    if (!assoc.is_boolean()) fail("associative must be a boolean");
    const std::string name = j.contains("name") && j.at("name").is_string() ? j.at("name").get<std::string>() : "";
    return StarAlgebra(d, mult, unit, star, assoc.get<bool>(), name);
}

Json algebra_to_json(const StarAlgebra& a) {
    const std::size_t d = a.dim();
    Json mult = Json::array();
    for (std::size_t i = 0; i < d; ++i) {
        Json mi = Json::array();
        for (std::size_t k = 0; k < d; ++k) {
            Json mij = Json::array();
            for (std::size_t l = 0; l < d; ++l) mij.push_back(scalar_to_json(a.structure_constant(i, k, l)));
            mi.push_back(std::move(mij));
        }
        mult.push_back(std::move(mi));
    }
    return Json{{"dim", d},
                {"unit", vector_to_json(a.unit())},
                {"mult", std::move(mult)},
                {"star", matrix_to_json(a.star_matrix())},
                {"associative", a.associative()},
                {"name", a.name()}};
}

QuadricSpec parse_quadric(const Json& j) {
    const auto& fam = field(j, "family");
    if (!fam.is_string()) fail("family must be a string");
    const std::string family = fam.get<std::string>();
    const Json params = j.contains("params") ? j.at("params") : Json::object();
    if (!params.is_object()) fail("params must be an object");
    if (family == "ex") return make_hyperquadric(size_field(params, "n"), size_field(params, "k"));
    if (family == "ey") {
        const std::size_t m = size_field(params, "m"), n = size_field(params, "n");
        const ComplexMatrix beta = params.contains("beta") ? parse_matrix(params.at("beta")) : ComplexMatrix::identity(n);
        return make_matrix_quadric(m, n, beta);
    }
    if (family == "type2") return make_type_II(size_field(params, "m"));
    if (family == "type5") return make_type_V();
    if (family == "tensor") return tensor_quadric(parse_quadric(field(params, "quadric")), parse_algebra(field(params, "algebra")));
    if (family == "product") {
        const auto& f = field(params, "factors");
        if (!f.is_array() || f.size() != 2) fail("product needs two factors");
        return product_quadric(parse_quadric(f[0]), parse_quadric(f[1]));
    }
    if (family == "custom") {
        const std::size_t dw = size_field(params, "dim_w"), dz = size_field(params, "dim_z");
        const ComplexMatrix conj = parse_matrix(field(params, "conj"));
        if (conj.rows() != dw || conj.cols() != dw) fail("conj must be dim_w x dim_w");
        const auto& fj = field(params, "form");
        if (!fj.is_array() || fj.size() != dz) fail("form must be indexed [a][b][l]");
        std::vector<Scalar> form;
        for (const auto& fa : fj) {
            if (!fa.is_array() || fa.size() != dz) fail("form must be indexed [a][b][l]");
            for (const auto& fab : fa) {
                auto v = parse_vector(fab, dw, "form entry");
                form.insert(form.end(), v.begin(), v.end());
            }
        }
        const std::string desc =
            params.contains("name") && params.at("name").is_string() ? params.at("name").get<std::string>() : "custom";
        return QuadricSpec(dw, dz, conj, form, {"custom", desc});
    }
    fail("unknown quadric family '" + family + "'");
}

Json quadric_to_json(const QuadricSpec& q) {
    Json form = Json::array();
    for (std::size_t a = 0; a < q.dim_z(); ++a) {
        Json fa = Json::array();
        for (std::size_t b = 0; b < q.dim_z(); ++b) {
            Json fab = Json::array();
            for (std::size_t l = 0; l < q.dim_w(); ++l) fab.push_back(scalar_to_json(q.form(a, b, l)));
            fa.push_back(std::move(fab));
        }
        form.push_back(std::move(fa));
    }
    return Json{{"family", "custom"},
                {"params",
                 {{"dim_w", q.dim_w()},
                  {"dim_z", q.dim_z()},
                  {"conj", matrix_to_json(q.conj_matrix())},
                  {"form", std::move(form)},
                  {"name", q.provenance().description}}}};
}

SphereSpec parse_sphere(const Json& j) {
    const auto a = parse_algebra(field(j, "algebra"));
    const std::size_t m = size_field(j, "m"), r = size_field(j, "r");
    const ComplexMatrix alpha = j.contains("alpha") ? parse_matrix(j.at("alpha")) : ComplexMatrix::identity(r);
    return make_sphere(a, m, r, alpha);
}

Json sphere_to_json(const SphereSpec& s) {
    return Json{{"algebra", algebra_to_json(s.algebra)}, {"m", s.m}, {"r", s.r}, {"alpha", matrix_to_json(s.alpha)}};
}

PolyVecField parse_field(const Json& j) {
    const std::size_t dw = size_field(j, "dim_w"), dz = size_field(j, "dim_z", 0);
    const std::size_t n = dw + dz;
    std::vector<Poly> comps(n, Poly(n));
    const auto& terms = field(j, "terms");
    if (!terms.is_array()) fail("terms must be an array");
    for (const auto& t : terms) {
        const std::size_t c = size_field(t, "component");
        if (c >= n) fail("term component out of range");
        const auto& ej = field(t, "exponents");
        if (!ej.is_array() || ej.size() != n) fail("exponents must have one entry per variable");
        Monomial mono;
        for (const auto& e : ej) {
            const std::size_t p = parse_size(e, "exponent");
            if (p > 2) fail("exponents above 2 are outside degree <= 2 fields");
            mono.push_back(static_cast<std::uint8_t>(p));
        }
        if (total_degree(mono) > 2) fail("term of degree above 2");
        comps[c].add_term(mono, Scalar(parse_rational(field(t, "re")), parse_rational(field(t, "im"))));
    }
    return PolyVecField(dw, dz, std::move(comps));
}

Json field_to_json(const PolyVecField& f) {
    Json terms = Json::array();
    for (std::size_t c = 0; c < f.nvars(); ++c)
        for (const auto& [mono, coeff] : f.component(c).terms()) {
            Json ex = Json::array();
            for (auto e : mono) ex.push_back(static_cast<int>(e));
            terms.push_back({{"component", c}, {"exponents", std::move(ex)}, {"re", rational_text(coeff.re)},
                             {"im", rational_text(coeff.im)}});
        }
    return Json{{"dim_w", f.dim_w()}, {"dim_z", f.dim_z()}, {"terms", std::move(terms)}};
}

}  // namespace crq
