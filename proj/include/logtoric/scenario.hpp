#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "logtoric/integers.hpp"
#include "logtoric/saturation.hpp"

namespace logtoric {

// The scenario kinds the command-line front end can run.  Names use hyphens
// to match the subcommand spellings.
enum class ScenarioKind {
    saturated,
    root_order,
    subdivide,
    pl_sections,
    pic,
    fiber,
    pushforward,
};

std::string kind_name(ScenarioKind k);
std::optional<ScenarioKind> kind_from_name(const std::string& name);

// Execution options, normally populated from command-line flags.  A scenario
// file may carry its own values for these (see Scenario::file_options); the
// front end merges them with explicit flags taking precedence.
struct ScenarioOptions {
    unsigned degree_bound = 8;
    PairingConvention convention = PairingConvention::strict;
    bool json = false;
    // Exponent l1-norm cap for graded computations; 0 means degree_bound + 4.
    unsigned window = 0;

    Int effective_window() const {
        return Int(window != 0 ? window : degree_bound + 4);
    }
};

// Option values read from a scenario file itself.
struct FileOptions {
    std::optional<unsigned> degree_bound;
    std::optional<PairingConvention> convention;
    std::optional<unsigned> window;
};

// A parsed scenario file: which computation to run and its payload.  The
// line-oriented format is `key = value` with `#` comments; vector values are
// whitespace-separated integers, matrix values use `;` between rows, and
// polynomial lists use `;` between polynomials.
//
// Keys by kind (parenthesized keys are optional):
//   saturated:    monoid, alpha, (vars)
//   root-order:   monoid, alpha, (vars)
//   subdivide:    center or cuts, (cone), (vars)
//   pl-sections:  (center or cuts), (cone), (vars)
//   pic:          (center or cuts), (cone), (vars)
//   fiber:        tau, origin, (center or cuts), (cone), (vars)
//   pushforward:  vars, ideal, center or cuts, (cone), (weights), (section)
// Every kind also accepts `kind` plus the option keys `degree_bound`,
// `convention`, and `window`.
struct Scenario {
    ScenarioKind kind = ScenarioKind::saturated;
    std::vector<std::string> vars;
    std::optional<IntVec> weights;
    std::vector<IntVec> cone_rays;  // empty: the nonnegative orthant
    std::vector<IntVec> monoid_gens;
    std::optional<IntVec> alpha;
    std::optional<IntVec> center;
    std::vector<IntVec> cuts;
    std::vector<IntVec> tau_rays;
    std::vector<IntVec> origin_gens;
    std::vector<std::string> ideal_texts;
    std::vector<std::string> section_texts;
    FileOptions file_options;
};

// A scenario result: a human-readable rendering and a JSON mirror with the
// same content.  Identical scenarios and options produce byte-identical
// output in both forms.
struct Report {
    std::string text;
    nlohmann::ordered_json data;
};

// Parses scenario file content.  `expected_kind` is the subcommand name; the
// file's `kind` key, when present, must agree.  Throws ParseError on
// malformed or inconsistent input.
Scenario parse_scenario(const std::string& content, const std::string& expected_kind);

// Merges file-level options into flag-level ones.  A field is taken from the
// file only when the corresponding flag was not set explicitly.
ScenarioOptions merge_options(const ScenarioOptions& flags, const FileOptions& file,
                              bool degree_bound_set, bool convention_set, bool window_set);

// Runs the scenario and renders the report.  Throws ParseError for
// configuration problems and MathError for mathematical-precondition
// failures.
Report run_scenario(const Scenario& s, const ScenarioOptions& opt);

}  // namespace logtoric
