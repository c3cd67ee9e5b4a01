#include "crq/job.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailure = 1;
constexpr int kUsage = 2;

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep))
        if (!item.empty()) out.push_back(item);
    return out;
}

crq::Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw crq::Error(crq::ErrorKind::Parse, "cannot open " + path);
    try {
        return crq::Json::parse(in);
    } catch (const crq::Json::parse_error& e) {
        throw crq::Error(crq::ErrorKind::Parse, path + ": " + e.what());
    }
}

crq::Json builtin_algebra(const std::string& name) {
    if (name == "complex" || name == "dual" || name == "octonions") return {{"builtin", name}};
    if (name.size() >= 2 && name[0] == 'm') {
        try {
            return {{"builtin", "matrix"}, {"m", std::stoul(name.substr(1))}};
        } catch (const std::exception&) {
        }
    }
    if (name == "cxc") return {{"builtin", "product"}, {"factors", {"complex", "complex"}}};
    if (name == "swap") return {{"builtin", "swap"}, {"of", "complex"}};
    throw crq::Error(crq::ErrorKind::Parse, "unknown algebra '" + name + "'");
}

struct BuiltinArgs {
    std::string family;
    std::size_t n = 1, k = 1, m = 1;
    std::string beta;
    std::string algebra;
};

crq::Json builtin_descriptor(const BuiltinArgs& a) {
    crq::Json q;
    if (a.family == "ex") q = {{"family", "ex"}, {"params", {{"n", a.n}, {"k", a.k}}}};
    else if (a.family == "heisenberg") q = {{"family", "ex"}, {"params", {{"n", 1}, {"k", 1}}}};
    else if (a.family == "ey") {
        crq::Json params = {{"m", a.m}, {"n", a.n}};
        if (!a.beta.empty()) {
            const auto entries = split(a.beta, ',');
            if (entries.size() != a.n) throw crq::Error(crq::ErrorKind::Parse, "--beta needs n diagonal entries");
            crq::Json beta = crq::Json::array();
            for (std::size_t i = 0; i < entries.size(); ++i) {
                crq::Json row = crq::Json::array();
                for (std::size_t j = 0; j < entries.size(); ++j) row.push_back(i == j ? entries[i] : "0");
                beta.push_back(std::move(row));
            }
            params["beta"] = std::move(beta);
        }
        q = {{"family", "ey"}, {"params", std::move(params)}};
    } else if (a.family == "type2") q = {{"family", "type2"}, {"params", {{"m", a.m}}}};
    else if (a.family == "type5") q = {{"family", "type5"}};
    else throw crq::Error(crq::ErrorKind::Parse, "unknown builtin family '" + a.family + "'");
    if (!a.algebra.empty())
        q = {{"family", "tensor"}, {"params", {{"quadric", q}, {"algebra", builtin_algebra(a.algebra)}}}};
    return q;
}

crq::Suite parse_suite(const std::string& s) {
    if (s.empty()) return crq::Suite::None;
    if (s == "fast") return crq::Suite::Fast;
    if (s == "full") return crq::Suite::Full;
    throw crq::Error(crq::ErrorKind::Parse, "suite must be fast or full");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Infinitesimal automorphisms of standard quadrics: exact computation and verification"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string json_out;
    std::uint64_t seed = 0;
    bool timing = false;
    app.add_option("--json", json_out, "Write the JSON report to this path ('-' for stdout)");
    auto* seed_opt = app.add_option("--seed", seed, "Random seed for sampled checks (overrides the config)");
    app.add_flag("--timing", timing, "Print stage timings to stderr");

    std::string config_path, suite_name, analyses;
    auto* analyze = app.add_subcommand("analyze", "Run the analyses requested by a job config (default: hol)");
    analyze->add_option("config", config_path, "Job config JSON")->required();

    auto* verify = app.add_subcommand("verify", "Run a verification suite on a job config");
    verify->add_option("config", config_path, "Job config JSON")->required();
    verify->add_option("--suite", suite_name, "fast or full")->required()->check(CLI::IsMember({"fast", "full"}));

    BuiltinArgs b;
    auto* builtin = app.add_subcommand("builtin", "Analyze a built-in family");
    builtin->add_option("family", b.family, "ex, ey, heisenberg, type2 or type5")
        ->required()
        ->check(CLI::IsMember({"ex", "ey", "heisenberg", "type2", "type5"}));
    builtin->add_option("--n", b.n, "n (ex, ey)");
    builtin->add_option("--k", b.k, "k (ex)");
    builtin->add_option("--m", b.m, "m (ey, type2)");
    builtin->add_option("--beta", b.beta, "Comma-separated diagonal of beta (ey)");
    builtin->add_option("--algebra", b.algebra, "Tensor with complex, m<k>, cxc, swap, dual or octonions");
    builtin->add_option("--analyses", analyses, "Comma-separated analyses");
    builtin->add_option("--suite", suite_name, "fast or full")->check(CLI::IsMember({"fast", "full"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kUsage;
    }

    crq::JobConfig config;
    crq::Suite suite = crq::Suite::None;
    try {
        crq::Json job;
        if (*builtin) {
            job = {{"quadric", builtin_descriptor(b)}};
            if (!analyses.empty()) job["analyses"] = split(analyses, ',');
        } else {
            job = read_json_file(config_path);
        }
        config = crq::parse_job(job);
        suite = parse_suite(suite_name);
    } catch (const crq::Error& e) {
        std::cerr << "crq: " << e.what() << "\n";
        return kUsage;
    }
    if (*seed_opt) config.seed = seed;
    if (json_out.empty() && config.output) json_out = *config.output;

    crq::JobResult res;
    try {
        res = crq::run_job(config, suite);
    } catch (const std::exception& e) {
        std::cerr << "crq: internal error: " << e.what() << "\n";
        return kCheckFailure;
    }

    const std::string text = res.report.dump(2) + "\n";
    if (json_out == "-") {
        std::cout << text;
    } else {
        std::cout << crq::summarize(res.report);
        if (!json_out.empty()) {
            std::ofstream out(json_out);
            if (!out) {
                std::cerr << "crq: cannot write " << json_out << "\n";
                return kUsage;
            }
            out << text;
        }
    }
    if (timing)
        for (const auto& [stage, seconds] : res.timing) std::fprintf(stderr, "timing %s %.3f s\n", stage.c_str(), seconds);
    return res.passed ? kOk : kCheckFailure;
}
