#include "crq/job.hpp"

#include <gmp.h>

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

namespace crq {

namespace {

Json report_json(const CheckReport& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    return Json{{"subject", r.subject}, {"checks", std::move(checks)}, {"skipped", r.skipped}, {"passed", r.passed()}};
}

const char* suite_name(Suite s) {
    switch (s) {
        case Suite::None: return "none";
        case Suite::Fast: return "fast";
        case Suite::Full: return "full";
    }
    return "none";
}

}  // namespace

const std::vector<std::string>& known_analyses() {
    static const std::vector<std::string> names{"hol", "properties", "closed_form", "symmetry", "groups", "cayley"};
    return names;
}

JobConfig parse_job(const Json& j) {
    if (!j.is_object()) throw Error(ErrorKind::Parse, "job config must be a JSON object");
    if (!j.contains("quadric")) throw Error(ErrorKind::Parse, "job config needs a 'quadric' descriptor");
    JobConfig c;
    c.quadric_descriptor = j.at("quadric");
    c.quadric = parse_quadric(c.quadric_descriptor);
    if (j.contains("analyses")) {
        const auto& a = j.at("analyses");
        if (!a.is_array()) throw Error(ErrorKind::Parse, "analyses must be an array of names");
        for (const auto& x : a) {
            if (!x.is_string()) throw Error(ErrorKind::Parse, "analysis names must be strings");
            const auto name = x.get<std::string>();
            const auto& known = known_analyses();
            if (std::find(known.begin(), known.end(), name) == known.end())
                throw Error(ErrorKind::Parse, "unknown analysis '" + name + "'");
            c.analyses.push_back(name);
        }
    }
    if (j.contains("seed")) {
        const auto& sj = j.at("seed");
        if (!sj.is_number_integer() || (!sj.is_number_unsigned() && sj.get<long long>() < 0))
            throw Error(ErrorKind::Parse, "seed must be a non-negative integer");
        c.seed = j.at("seed").get<std::uint64_t>();
    }
    if (j.contains("output")) {
        if (!j.at("output").is_string()) throw Error(ErrorKind::Parse, "output must be a path string");
        c.output = j.at("output").get<std::string>();
    }
    if (j.contains("sphere")) c.sphere = parse_sphere(j.at("sphere"));
    return c;
}

JobResult run_job(const JobConfig& config, Suite suite) {
    if (!config.quadric) throw Error(ErrorKind::InvalidArgument, "job has no quadric");
    const QuadricSpec& q = *config.quadric;
    JobResult res;

    std::set<std::string> want(config.analyses.begin(), config.analyses.end());
    if (want.empty()) {
        if (suite == Suite::None) want = {"hol"};
        else want.insert(known_analyses().begin(), known_analyses().end());
    }
    Json analyses = Json::array();
    for (const auto& a : known_analyses())
        if (want.count(a)) analyses.push_back(a);

    Json& rep = res.report;
    rep["config"] = {{"analyses", analyses}, {"seed", config.seed}, {"suite", suite_name(suite)}};
    rep["quadric"] = {{"family", q.provenance().family},
                      {"description", q.provenance().description},
                      {"dim_w", q.dim_w()},
                      {"dim_z", q.dim_z()}};
    rep["versions"] = {{"crq", CRQ_VERSION}, {"gmp", gmp_version}};
    rep["suites"] = Json::object();
    rep["skipped"] = Json::array();

    auto record = [&](const std::string& name, const CheckReport& r) {
        rep["suites"][name] = report_json(r);
        if (!r.passed()) res.passed = false;
    };
    auto timed = [&](const std::string& stage, auto&& fn) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        res.timing.emplace_back(stage, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    };
    // Runs one analysis; Unsupported becomes a skip, other errors a failed check.
    auto guarded = [&](const std::string& name, auto&& fn) {
        timed(name, [&] {
            try {
                record(name, fn());
            } catch (const Error& e) {
                if (e.kind() == ErrorKind::Unsupported) {
                    rep["skipped"].push_back(name + ": " + e.what());
                    return;
                }
                CheckReport r;
                r.subject = q.provenance().description;
                r.add({name + " completed", false, e.what()});
                record(name, r);
            }
        });
    };

    guarded("validation", [&] { return validation_suite(q); });
    if (!rep["suites"]["validation"]["passed"].get<bool>()) {
        rep["skipped"].push_back("all analyses: the quadric failed validation");
        rep["passed"] = res.passed;
        return res;
    }
    if (suite == Suite::Fast && q.provenance().family == "type5") {
        rep["skipped"].push_back("all analyses: Type V quadrics run only in the full suite");
        rep["passed"] = res.passed;
        return res;
    }

    const bool needs_hol = want.count("hol") || want.count("properties") || want.count("closed_form") ||
                           want.count("symmetry") || want.count("groups");
    std::optional<GradedLieAlgebra> g;
    if (needs_hol) {
        timed("hol", [&] {
            try {
                g = compute_hol(q);
            } catch (const Error& e) {
                CheckReport r;
                r.subject = q.provenance().description;
                r.add({"hol completed", false, e.what()});
                record("hol", r);
            }
        });
    }
    if (g) {
        Json dims = Json::object();
        const auto d = g->dims();
        for (int k = -2; k <= 2; ++k) dims[std::to_string(k)] = d[static_cast<std::size_t>(k + 2)];
        rep["hol"] = {{"graded_dims", dims},
                      {"profile", d},
                      {"total", g->total()},
                      {"grade_three_dim", g->beyond_range_dim}};
        if (want.count("properties")) guarded("properties", [&] { return property_suite(q, *g); });
        if (want.count("closed_form")) guarded("closed_form", [&] { return closed_form_suite(q, *g); });
        if (want.count("symmetry")) guarded("symmetry", [&] { return symmetry_suite(q, *g, config.seed); });
        if (want.count("groups"))
            guarded("groups", [&] { return group_suite(q, *g, config.seed, suite != Suite::Fast); });
    }
    if (want.count("cayley")) {
        guarded("cayley", [&] {
            const SphereSpec s = config.sphere ? *config.sphere : sphere_of(q);
            return cayley_suite(s, config.seed);
        });
    }
    rep["passed"] = res.passed;
    return res;
}

std::string summarize(const Json& report) {
    std::ostringstream os;
    const auto& q = report.at("quadric");
    os << "quadric: " << q.at("description").get<std::string>() << " (dim W = " << q.at("dim_w").get<std::size_t>()
       << ", dim Z = " << q.at("dim_z").get<std::size_t>() << ")\n";
    if (report.contains("hol")) {
        const auto& h = report.at("hol");
        os << "hol: graded dims (-2..2) =";
        for (const auto& d : h.at("profile")) os << " " << d.get<std::size_t>();
        os << ", total " << h.at("total").get<std::size_t>() << "\n";
    }
    std::size_t total = 0, failed = 0;
    for (const auto& [suite, r] : report.at("suites").items()) {
        for (const auto& c : r.at("checks")) {
            ++total;
            const bool ok = c.at("passed").get<bool>();
            if (!ok) ++failed;
            os << (ok ? "[PASS] " : "[FAIL] ") << suite << ": " << c.at("name").get<std::string>();
            const auto detail = c.at("detail").get<std::string>();
            if (!detail.empty()) os << " (" << detail << ")";
            os << "\n";
        }
        for (const auto& s : r.at("skipped")) os << "[SKIP] " << suite << ": " << s.get<std::string>() << "\n";
    }
    for (const auto& s : report.at("skipped")) os << "[SKIP] " << s.get<std::string>() << "\n";
    if (failed == 0) os << "result: PASS (" << total << " checks)\n";
    else os << "result: FAIL (" << failed << " of " << total << " checks failed)\n";
    return os.str();
}

}  // namespace crq
