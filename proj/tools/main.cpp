// Command-line front end: parses an instance file and runs resolutions,
// Betti tables, theorem checks, or Dutta sequences over it.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "gradedres/checks.hpp"
#include "gradedres/homology.hpp"
#include "gradedres/report.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_check_failed = 1;
constexpr int exit_input_error = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw gradedres::algebra_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct Options {
    std::string file;
    std::string format = "text";
    std::optional<int> emax;
    std::optional<int> cap;
    bool oracle = false;
};

void add_common(CLI::App* cmd, Options& opt) {
    cmd->add_option("file", opt.file, "instance file")->required();
    cmd->add_option("--emax", opt.emax, "Frobenius iterations for dutta checks");
    cmd->add_option("--cap", opt.cap, "resolution length cap");
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "machine"}));
    cmd->add_flag("--oracle", opt.oracle,
                  "cross-check homology lengths by graded-slice linear algebra");
}

int run_resolutions(const Options& opt, bool with_matrices) {
    using namespace gradedres;
    ProblemInstance inst = parse_instance(read_file(opt.file));
    const int cap = opt.cap.value_or(default_resolution_cap(*inst.ring));
    nlohmann::ordered_json doc;
    doc["ring"] = inst.ring->description();
    doc["modules"] = nlohmann::ordered_json::array();
    bool failed = false;
    std::ostringstream text;
    text << "ring " << inst.ring->description() << "\n";
    for (const auto& [name, module] : inst.modules) {
        try {
            Resolution res = minimal_free_resolution(module, cap);
            nlohmann::ordered_json entry;
            entry["module"] = name;
            entry["projective_dimension"] = res.projective_dimension;
            nlohmann::ordered_json betti = nlohmann::ordered_json::array();
            for (long b : res.betti.row_sums()) betti.push_back(b);
            entry["betti"] = std::move(betti);
            entry["total"] = res.betti.total();
            text << "\nmodule " << name << "  (pd " << res.projective_dimension
                 << ", total " << res.betti.total() << ")\n"
                 << res.betti.render_grid();
            if (with_matrices) {
                nlohmann::ordered_json diffs = nlohmann::ordered_json::array();
                for (int i = res.complex.lo() + 1; i <= res.complex.hi(); ++i) {
                    const GradedMap& d = res.complex.diff(i);
                    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
                    text << "d" << i << ":\n";
                    for (int r = 0; r < d.target().rank(); ++r) {
                        nlohmann::ordered_json row = nlohmann::ordered_json::array();
                        text << "  [";
                        for (int c = 0; c < d.source().rank(); ++c) {
                            row.push_back(d.entry(r, c).to_string());
                            text << (c ? ", " : "") << d.entry(r, c).to_string();
                        }
                        text << "]\n";
                        rows.push_back(std::move(row));
                    }
                    diffs.push_back(std::move(rows));
                }
                entry["differentials"] = std::move(diffs);
            }
            doc["modules"].push_back(std::move(entry));
        } catch (const algebra_error& e) {
            text << "\nmodule " << name << "  error: " << e.what() << "\n";
            doc["modules"].push_back({{"module", name}, {"error", e.what()}});
            failed = true;
        }
    }
    if (opt.format == "machine")
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << text.str();
    return failed ? exit_check_failed : exit_ok;
}

int run_checks(const Options& opt, bool dutta_only) {
    using namespace gradedres;
    ProblemInstance inst = parse_instance(read_file(opt.file));
    if (dutta_only) {
        // one dutta check per complex; fall back to resolving each module
        inst.checks.clear();
        for (const auto& [name, c] : inst.koszul_complexes)
            inst.checks.push_back({"dutta", name, std::nullopt, std::nullopt, 0});
        for (const auto& [name, m] : inst.resolve_complexes)
            inst.checks.push_back({"dutta", name, std::nullopt, std::nullopt, 0});
        if (inst.checks.empty())
            for (const auto& [name, m] : inst.modules)
                inst.checks.push_back({"dutta", name, std::nullopt, std::nullopt, 0});
    }
    RunOptions ropts;
    ropts.emax = opt.emax;
    ropts.cap = opt.cap;
    ropts.oracle = opt.oracle;
    VerificationReport report = run(inst, ropts);
    std::cout << (opt.format == "machine" ? render_machine(report)
                                          : render_text(report));
    return report.all_clear() ? exit_ok : exit_check_failed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graded free resolutions and total Betti number checks"};
    app.require_subcommand(1);

    Options opt;
    CLI::App* resolve = app.add_subcommand(
        "resolve", "minimal free resolutions with differentials");
    CLI::App* betti = app.add_subcommand("betti", "Betti tables only");
    CLI::App* check = app.add_subcommand("check", "run the instance's checks");
    CLI::App* dutta = app.add_subcommand("dutta", "Dutta sequences per complex");
    for (CLI::App* cmd : {resolve, betti, check, dutta}) add_common(cmd, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_input_error;
    }

    try {
        if (resolve->parsed()) return run_resolutions(opt, true);
        if (betti->parsed()) return run_resolutions(opt, false);
        if (check->parsed()) return run_checks(opt, false);
        return run_checks(opt, true);
    } catch (const gradedres::algebra_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input_error;
    }
}
