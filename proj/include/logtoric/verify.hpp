#pragma once

#include <cstddef>

#include "logtoric/scenario.hpp"

namespace logtoric {

// Outcome of the built-in verification suite: the rendered report plus
// verdict counts.  The suite never throws for a failing check — failures are
// verdicts, not errors.
struct VerifyResult {
    Report report;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t skipped = 0;
};

// Runs the built-in example checks through the same scenario pipeline the
// file-driven subcommands use, one verdict line per check.  Checks whose
// required degree exceeds opt.degree_bound are skipped (a skip is not a
// failure).  Under the permissive convention the built-in saturated-element
// examples are re-run and differences from the strict verdicts are reported.
VerifyResult verify_paper_suite(const ScenarioOptions& opt);

}  // namespace logtoric
