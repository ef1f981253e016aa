#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "logtoric/scenario.hpp"
#include "logtoric/verify.hpp"

namespace {

// Exit codes: 0 success, 1 parse/config error, 2 mathematical-precondition
// error (and failing built-in checks).
constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitMath = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw logtoric::ParseError("cannot read scenario file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void print_report(const logtoric::Report& report, bool as_json) {
    if (as_json) {
        std::cout << report.data.dump(2) << "\n";
    } else {
        std::cout << report.text;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "logtoric: exact combinatorial computations for cones, monoids, and "
        "graded section gluing on subdivisions"};
    app.require_subcommand(1);

    logtoric::ScenarioOptions flags;
    std::string convention = "strict";
    auto* degree_opt =
        app.add_option("--degree-bound", flags.degree_bound,
                       "Largest graded degree the pushforward table covers")
            ->capture_default_str()
            ->check(CLI::Range(0, 1000));
    auto* convention_opt =
        app.add_option("--convention", convention,
                       "Whether a zero facet pairing counts as saturated")
            ->capture_default_str()
            ->check(CLI::IsMember({"strict", "permissive"}));
    app.add_flag("--json", flags.json, "Emit the JSON mirror of the report");
    auto* window_opt =
        app.add_option("--window", flags.window,
                       "Exponent l1-norm cap for graded computations (default: "
                       "degree bound + 4)")
            ->check(CLI::Range(1, 1000));

    struct SubcommandSpec {
        std::string name;
        std::string description;
    };
    const std::vector<SubcommandSpec> file_subcommands = {
        {"saturated", "Test whether an element of a monoid's group is saturated"},
        {"root-order", "Least root order making an element saturated"},
        {"subdivide", "List the maximal cones of a subdivision"},
        {"pl-sections", "Basis of the piecewise-linear sections of a subdivision"},
        {"pic", "Piecewise-linear functions modulo linear ones"},
        {"fiber", "Units and nilpotents of a chart's fiber over the origin"},
        {"pushforward", "Degree-by-degree section comparison for a blowup cover"},
    };
    std::string scenario_path;
    for (const SubcommandSpec& spec : file_subcommands) {
        CLI::App* sub = app.add_subcommand(spec.name, spec.description);
        sub->add_option("scenario", scenario_path, "Scenario file")->required();
        sub->fallthrough();
    }
    CLI::App* verify =
        app.add_subcommand("verify-paper", "Run the built-in verification suite");
    verify->fallthrough();

    CLI11_PARSE(app, argc, argv);

    flags.convention = convention == "strict" ? logtoric::PairingConvention::strict
                                              : logtoric::PairingConvention::permissive;

    try {
        if (verify->parsed()) {
            logtoric::VerifyResult result = logtoric::verify_paper_suite(flags);
            print_report(result.report, flags.json);
            return result.failed == 0 ? kExitOk : kExitMath;
        }
        for (const SubcommandSpec& spec : file_subcommands) {
            CLI::App* sub = app.get_subcommand(spec.name);
            if (!sub->parsed()) {
                continue;
            }
            logtoric::Scenario scenario =
                logtoric::parse_scenario(read_file(scenario_path), spec.name);
            logtoric::ScenarioOptions merged = logtoric::merge_options(
                flags, scenario.file_options, degree_opt->count() > 0,
                convention_opt->count() > 0, window_opt->count() > 0);
            merged.json = flags.json;
            logtoric::Report report = logtoric::run_scenario(scenario, merged);
            print_report(report, merged.json);
            return kExitOk;
        }
        std::cerr << "error: no subcommand selected\n";
        return kExitParse;
    } catch (const logtoric::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const logtoric::MathError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMath;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMath;
    }
}
