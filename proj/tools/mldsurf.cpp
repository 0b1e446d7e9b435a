#include <CLI11.hpp>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "mldsurf/classifier.hpp"
#include "mldsurf/spec_io.hpp"
#include "mldsurf/verify.hpp"

namespace fs = std::filesystem;
using namespace mldsurf;

namespace {

std::vector<fs::path> input_files(const std::string& input) {
    fs::path p(input);
    if (fs::is_directory(p)) {
        std::vector<fs::path> files;
        for (const auto& e : fs::directory_iterator(p))
            if (e.is_regular_file() && e.path().extension() == ".germ") files.push_back(e.path());
        std::sort(files.begin(), files.end());
        if (files.empty()) throw GermError("no .germ files in directory: " + input);
        return files;
    }
    return {p};
}

// "F1^F2", "F1^b0", "b0", "node:F1", or "x" (first point of a smooth germ)
PointSpec parse_point(const BlowupTower& t, const std::string& token) {
    PointSpec p;
    if (token == "x") return p;
    if (token.rfind("node:", 0) == 0) {
        std::string id = token.substr(5);
        for (size_t i = 0; i < t.curve_count(); ++i)
            if (t.curve(i).id == id) {
                p.node_of = static_cast<int>(i);
                return p;
            }
        throw GermError("unknown curve in blow-up script: " + id);
    }
    std::stringstream ss(token);
    std::string part;
    while (std::getline(ss, part, '^')) {
        if (part.empty()) throw GermError("malformed blow-up point: " + token);
        if (part[0] == 'b') {
            p.branches.push_back(static_cast<size_t>(std::stoll(part.substr(1))));
            continue;
        }
        bool found = false;
        for (size_t i = 0; i < t.curve_count(); ++i)
            if (t.curve(i).id == part) {
                p.curves.push_back(static_cast<int>(i));
                found = true;
            }
        if (!found) throw GermError("unknown curve in blow-up script: " + part);
    }
    return p;
}

int cmd_discrepancies(const std::string& input) {
    for (const fs::path& f : input_files(input)) {
        if (fs::is_directory(input)) std::cout << "== " << f.filename().string() << " ==\n";
        GermModel g = load_spec_file(f.string());
        if (g.is_smooth_germ()) {
            std::cout << "smooth germ: no exceptional curves on the base\n";
            continue;
        }
        DiscrepancyVector d = solve_discrepancies(g);
        for (size_t i = 0; i < d.a.size(); ++i)
            std::cout << g.graph().vertices[i].id << " a=" << to_string(d.a[i]) << "\n";
    }
    return 0;
}

int cmd_classify(const std::string& input, int depth) {
    bool consistent = true;
    for (const fs::path& f : input_files(input)) {
        if (fs::is_directory(input)) std::cout << "== " << f.filename().string() << " ==\n";
        ClassificationReport r = classify(load_spec_file(f.string()), depth);
        std::cout << render_report(r);
        if (!r.consistency) consistent = false;
    }
    return consistent ? 0 : 2;
}

int cmd_verify(const std::string& suite, uint64_t seed, int cases, int depth) {
    bool pass = true;
    auto show = [&](const SuiteResult& s) {
        std::cout << s.name << ": " << (s.pass() ? "pass" : "FAIL") << " (" << s.cases
                  << " cases, " << s.failures << " failures)\n";
        for (const auto& m : s.messages) std::cout << "counterexample:\n" << m << "\n";
        if (!s.pass()) pass = false;
    };
    if (suite == "lemmas" || suite == "all")
        for (const SuiteResult& s : run_lemma_suites(seed, cases)) show(s);
    if (suite == "theorem14" || suite == "all") show(run_theorem14_suite(seed, cases, depth));
    return pass ? 0 : 1;
}

int cmd_graph(const std::string& input, const std::string& blow_up) {
    for (const fs::path& f : input_files(input)) {
        if (fs::is_directory(input)) std::cout << "== " << f.filename().string() << " ==\n";
        GermModel g = load_spec_file(f.string());
        if (blow_up.empty() && !g.has_boundary()) {
            std::cout << to_dot(g.graph());
            continue;
        }
        BlowupTower t(g);
        std::stringstream ss(blow_up);
        std::string token;
        while (std::getline(ss, token, ','))
            if (!token.empty()) t = t.blow_up(parse_point(t, token));
        std::cout << to_dot(t.dual_graph(true));
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact log discrepancies and mld-computing divisors on lc surface germs"};
    app.require_subcommand(1);

    std::string input, suite = "all", blow_up;
    int depth = 6, cases = 200;
    uint64_t seed = 1;

    auto* disc = app.add_subcommand("discrepancies", "log discrepancies per exceptional curve");
    disc->add_option("input", input, "germ-spec file or directory")->required();

    auto* cls = app.add_subcommand("classify", "classification report per the mld theorem");
    cls->add_option("input", input, "germ-spec file or directory")->required();
    cls->add_option("--depth", depth, "blow-up search depth");

    auto* ver = app.add_subcommand("verify", "randomized lemma and theorem suites");
    ver->add_option("--suite", suite, "lemmas|theorem14|all")
        ->check(CLI::IsMember({"lemmas", "theorem14", "all"}));
    ver->add_option("--seed", seed, "rng seed");
    ver->add_option("--cases", cases, "cases per suite");
    ver->add_option("--depth", depth, "classification search depth");

    auto* gra = app.add_subcommand("graph", "DOT output of the dual graph");
    gra->add_option("input", input, "germ-spec file or directory")->required();
    gra->add_flag("--dot", "emit DOT (default and only format)");
    gra->add_option("--blow-up", blow_up, "comma-separated blow-up script, e.g. F1^F2,E1");

    CLI11_PARSE(app, argc, argv);

    try {
        if (disc->parsed()) return cmd_discrepancies(input);
        if (cls->parsed()) return cmd_classify(input, depth);
        if (ver->parsed()) return cmd_verify(suite, seed, cases, depth);
        if (gra->parsed()) return cmd_graph(input, blow_up);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
