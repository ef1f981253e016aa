#include "logtoric/verify.hpp"

#include <functional>
#include <sstream>

#include "logtoric/chart.hpp"
#include "logtoric/graded.hpp"
#include "logtoric/parser.hpp"
#include "logtoric/subdivision.hpp"

namespace logtoric {

using json = nlohmann::ordered_json;

namespace {

struct CheckOutcome {
    std::string status;  // "PASS", "FAIL", or "SKIP"
    std::string detail;
};

Report run_text(const std::string& text, const std::string& kind, const ScenarioOptions& opt) {
    Scenario s = parse_scenario(text, kind);
    return run_scenario(s, opt);
}

// The squares configuration: quotient by (x^2, y^2), corner blowup of the
// quadrant.  The only degree-2 monomial surviving in the base is x*y, and it
// restricts to zero on both charts.
CheckOutcome check_squares_kernel(const ScenarioOptions& opt) {
    if (opt.degree_bound < 2) {
        return {"SKIP", "needs degree bound 2, have " + std::to_string(opt.degree_bound)};
    }
    ScenarioOptions local = opt;
    local.degree_bound = 2;
    Report r = run_text(
        "kind = pushforward\n"
        "vars = x y\n"
        "ideal = x^2; y^2\n"
        "center = 1 1\n",
        "pushforward", local);
    const json& deg2 = r.data.at("degrees").at(2);
    const json& kernel = deg2.at("kernel");
    if (kernel.size() != 1) {
        return {"FAIL", "expected one degree-2 kernel element, found " +
                            std::to_string(kernel.size())};
    }
    if (kernel.at(0).at("polynomial") != "x*y") {
        return {"FAIL", "expected kernel element x*y, found " +
                            kernel.at(0).at("polynomial").get<std::string>()};
    }
    if (kernel.at(0).at("nilpotency_order") != 2) {
        return {"FAIL", "kernel element x*y is not nilpotent of order 2"};
    }
    return {"PASS", "kernel = x*y, dimension 1, nilpotency order 2"};
}

// The weighted-edge chart: subdivide the quadrant along 2a = 3b and look at
// the chart of the cut ray.  Its fiber over the origin is one unit direction
// and one nilpotent of order exactly 2.
CheckOutcome check_weighted_chart_fiber(const ScenarioOptions& opt) {
    Report r = run_text(
        "kind = fiber\n"
        "vars = x y\n"
        "cuts = 2 -3\n"
        "tau = 3 2\n"
        "origin = 1 0; 0 1\n",
        "fiber", opt);
    if (r.data.at("unit_rank") != 1) {
        return {"FAIL", "expected unit rank 1"};
    }
    const json& nil = r.data.at("nilpotent_generators");
    if (nil.size() != 1 || nil.at(0).at("order") != 2 ||
        nil.at(0).at("exponent") != json::array({1, -1})) {
        return {"FAIL", "expected exactly one nilpotent (1, -1) of order 2"};
    }
    if (!r.data.at("non_nilpotent_generators").empty()) {
        return {"FAIL", "unexpected non-nilpotent generators"};
    }
    return {"PASS", "unit rank 1, nilpotent x*y^(-1) of order 2"};
}

// The product of two weighted-edge charts: two independent order-2
// nilpotents; the two exponent directions generate a square-zero pair whose
// product spans the degree-2 kernel of the corner-blowup comparison.
CheckOutcome check_product_chart(const ScenarioOptions& opt) {
    if (opt.degree_bound < 2) {
        return {"SKIP", "needs degree bound 2, have " + std::to_string(opt.degree_bound)};
    }
    // Part 1: the product chart's fiber.
    Report fiber = run_text(
        "kind = fiber\n"
        "cuts = 2 -3 0 0; 0 0 2 -3\n"
        "tau = 3 2 0 0; 0 0 3 2\n"
        "origin = 1 0 0 0; 0 1 0 0; 0 0 1 0; 0 0 0 1\n",
        "fiber", opt);
    if (fiber.data.at("unit_rank") != 2) {
        return {"FAIL", "expected unit rank 2 on the product chart"};
    }
    const json& nil = fiber.data.at("nilpotent_generators");
    if (nil.size() != 2 || nil.at(0).at("order") != 2 || nil.at(1).at("order") != 2) {
        return {"FAIL", "expected two order-2 nilpotents on the product chart"};
    }
    json e1 = json::array({1, -1, 0, 0});
    json e2 = json::array({0, 0, 1, -1});
    bool exponents_match =
        (nil.at(0).at("exponent") == e1 && nil.at(1).at("exponent") == e2) ||
        (nil.at(0).at("exponent") == e2 && nil.at(1).at("exponent") == e1);
    if (!exponents_match || !fiber.data.at("non_nilpotent_generators").empty()) {
        return {"FAIL", "nilpotent directions differ from the two cut ratios"};
    }

    // Part 2: the square-zero pair presents the squares configuration, whose
    // degree-2 kernel is the product of the two directions.
    ScenarioOptions local = opt;
    local.degree_bound = 2;
    Report push = run_text(
        "kind = pushforward\n"
        "vars = e1 e2\n"
        "ideal = e1^2; e2^2\n"
        "center = 1 1\n",
        "pushforward", local);
    const json& kernel = push.data.at("degrees").at(2).at("kernel");
    if (kernel.size() != 1 || kernel.at(0).at("polynomial") != "e1*e2" ||
        kernel.at(0).at("nilpotency_order").is_null()) {
        return {"FAIL", "expected degree-2 kernel e1*e2"};
    }

    // Part 3: substituting the chart directions for e1, e2 identifies the
    // kernel element with a product-chart monomial that is nonzero there but
    // has square in the pulled-back ideal.
    std::vector<std::string> evars{"e1", "e2"};
    std::vector<IntVec> images = {IntVec{1, -1, 0, 0}, IntVec{0, 0, 1, -1}};
    LaurentPolynomial kernel_poly = parse_polynomial("e1*e2", evars);
    LaurentPolynomial restricted = substitute_monomial_map(kernel_poly, images);
    IntVec expected{1, -1, 1, -1};
    if (restricted != LaurentPolynomial::monomial(expected)) {
        return {"FAIL", "kernel element does not restrict to the expected chart monomial"};
    }
    Cone tau = Cone::from_generators({IntVec{3, 2, 0, 0}, IntVec{0, 0, 3, 2}}, 4);
    ChartMonoid chart = chart_monoid_of_cone(tau);
    std::vector<IntVec> pulled = {IntVec{2, -2, 0, 0}, IntVec{0, 0, 2, -2}};
    if (monomial_ideal_member(chart, pulled, expected)) {
        return {"FAIL", "restricted kernel element vanishes on the chart"};
    }
    if (!monomial_ideal_member(chart, pulled, Int(2) * expected)) {
        return {"FAIL", "square of the restricted kernel element is not in the ideal"};
    }
    return {"PASS", "two order-2 nilpotents; kernel e1*e2 restricts to a square-zero monomial"};
}

// The corner blowup of the quotient by three binomials: the tuple
// (x^4, y^4, z^4) glues but has no preimage, so the degree-4 sections map is
// not surjective; the overlap identity behind the gluing is certified in the
// overlap quotient.
CheckOutcome check_missing_section(const ScenarioOptions& opt) {
    if (opt.degree_bound < 4) {
        return {"SKIP", "needs degree bound 4, have " + std::to_string(opt.degree_bound)};
    }
    ScenarioOptions local = opt;
    local.degree_bound = 4;
    Report r = run_text(
        "kind = pushforward\n"
        "vars = x y z\n"
        "ideal = x^3*z - x*y^2*z; x*y^3 - x*y*z^2; y*z^3 - x^2*y*z\n"
        "center = 1 1 1\n"
        "section = x^4; y^4; z^4\n",
        "pushforward", local);
    const json& section = r.data.at("section");
    if (section.at("glues") != true) {
        return {"FAIL", "section tuple (x^4, y^4, z^4) does not glue"};
    }
    if (section.at("preimage_exists") != false) {
        return {"FAIL", "section tuple unexpectedly has a preimage"};
    }
    const json& deg4 = r.data.at("degrees").at(4);
    if (deg4.at("cokernel_dim").get<long long>() < 1) {
        return {"FAIL", "degree-4 cokernel is zero"};
    }

    // Certify the overlap identity used by the gluing: on the chart where
    // both x/y and its inverse are monomials, x^4 - x^2*y^2 equals an
    // explicit combination of the ideal generators.
    std::vector<std::string> vars{"x", "y", "z"};
    std::vector<LaurentPolynomial> gens = {
        parse_polynomial("x^3*z - x*y^2*z", vars),
        parse_polynomial("x*y^3 - x*y*z^2", vars),
        parse_polynomial("y*z^3 - x^2*y*z", vars),
    };
    IntVec weights{1, 1, 1};
    Subdivision fan = star_subdivision(Cone::orthant(3), IntVec{1, 1, 1});
    BlowupConfig config = build_blowup_config(vars, weights, gens, fan);
    bool identity = false;
    bool found_overlap = false;
    for (const auto& [pair_idx, overlap] : config.overlaps) {
        if (pair_idx.first == 0 && pair_idx.second == 1) {
            found_overlap = true;
            QuotientPiece piece(overlap.monoid, gens, weights, Int(4),
                                local.effective_window());
            LaurentPolynomial lhs = parse_polynomial("x^4 - x^2*y^2", vars);
            LaurentPolynomial rhs = parse_polynomial(
                "(x*y^(-1))^3*(x*y^3 - x*y*z^2) + (x*y^(-1))*(z*y^(-1))*(x^3*z - x*y^2*z)",
                vars);
            identity = equal_in_quotient(piece, lhs, rhs);
        }
    }
    if (!found_overlap || !identity) {
        return {"FAIL", "overlap identity for x^4 - x^2*y^2 is not certified"};
    }
    return {"PASS",
            "tuple glues, no preimage, degree-4 cokernel " +
                std::to_string(deg4.at("cokernel_dim").get<long long>()) +
                ", overlap identity certified"};
}

// Quotients by monomial toric ideals — the torus-invariant primes, generated
// by subsets of the variables: the sections map is surjective in every
// degree, so all cokernels vanish.  (General monomial ideals can fail this;
// see the unit tests for an explicit cokernel-1 example.)
CheckOutcome check_monomial_surjectivity(const ScenarioOptions& opt) {
    unsigned top = opt.degree_bound < 6 ? opt.degree_bound : 6;
    ScenarioOptions local = opt;
    local.degree_bound = top;
    const std::vector<std::string> ideals = {
        "x", "y", "z", "x; y", "x; z", "y; z", "x; y; z",
    };
    for (const std::string& ideal : ideals) {
        Report r = run_text(
            "kind = pushforward\n"
            "vars = x y z\n"
            "ideal = " + ideal + "\n" +
            "center = 1 1 1\n",
            "pushforward", local);
        for (unsigned d = 0; d <= top; ++d) {
            const json& entry = r.data.at("degrees").at(d);
            if (entry.at("cokernel_dim") != 0) {
                return {"FAIL", "ideal (" + ideal + ") has nonzero cokernel in degree " +
                                    std::to_string(d)};
            }
            for (const json& k : entry.at("kernel")) {
                if (k.at("nilpotency_order").is_null()) {
                    return {"FAIL", "ideal (" + ideal + ") has a non-nilpotent kernel element"};
                }
            }
        }
    }
    return {"PASS", std::to_string(ideals.size()) + " monomial ideals, degrees 0.." +
                        std::to_string(top) + ", all cokernels 0, kernels nilpotent"};
}

}  // namespace

VerifyResult verify_paper_suite(const ScenarioOptions& opt) {
    struct NamedCheck {
        std::string name;
        std::function<CheckOutcome(const ScenarioOptions&)> run;
    };
    const std::vector<NamedCheck> checks = {
        {"squares blowup degree-2 kernel", check_squares_kernel},
        {"weighted chart fiber", check_weighted_chart_fiber},
        {"product chart nilpotents and kernel", check_product_chart},
        {"missing global section", check_missing_section},
        {"monomial quotients surjective", check_monomial_surjectivity},
    };

    VerifyResult result;
    std::ostringstream out;
    json data;
    data["kind"] = "verify-paper";
    out << "built-in verification suite\n";
    out << "options: degree_bound=" << opt.degree_bound << " window="
        << opt.effective_window().get_str()
        << " convention=" << (opt.convention == PairingConvention::strict ? "strict" : "permissive")
        << "\n";
    data["options"] = {
        {"degree_bound", opt.degree_bound},
        {"window", static_cast<long long>(opt.effective_window().get_si())},
        {"convention", opt.convention == PairingConvention::strict ? "strict" : "permissive"}};

    json checks_json = json::array();
    for (std::size_t i = 0; i < checks.size(); ++i) {
        CheckOutcome outcome;
        try {
            outcome = checks[i].run(opt);
        } catch (const std::exception& e) {
            outcome = {"FAIL", std::string("error: ") + e.what()};
        }
        if (outcome.status == "PASS") {
            ++result.passed;
        } else if (outcome.status == "SKIP") {
            ++result.skipped;
        } else {
            ++result.failed;
        }
        out << "[check " << (i + 1) << "] " << checks[i].name << ": " << outcome.status << " ("
            << outcome.detail << ")\n";
        checks_json.push_back({{"check", i + 1},
                               {"name", checks[i].name},
                               {"status", outcome.status},
                               {"detail", outcome.detail}});
    }
    data["checks"] = checks_json;

    // Under the permissive convention, re-run the built-in saturated-element
    // examples and report where the verdict changes.
    if (opt.convention == PairingConvention::permissive) {
        const std::vector<std::string> alphas = {"1 1", "1 0"};
        out << "convention comparison (strict vs permissive):\n";
        json comparison = json::array();
        for (const std::string& alpha : alphas) {
            std::string text =
                "kind = saturated\n"
                "monoid = 1 0; 0 1\n"
                "alpha = " + alpha + "\n";
            ScenarioOptions strict_opt = opt;
            strict_opt.convention = PairingConvention::strict;
            bool strict_verdict = run_text(text, "saturated", strict_opt)
                                      .data.at("saturated")
                                      .get<bool>();
            bool permissive_verdict =
                run_text(text, "saturated", opt).data.at("saturated").get<bool>();
            out << "  alpha = (" << alpha << "): strict="
                << (strict_verdict ? "true" : "false")
                << " permissive=" << (permissive_verdict ? "true" : "false")
                << (strict_verdict == permissive_verdict ? " (same)" : " (differs)") << "\n";
            comparison.push_back({{"alpha", alpha},
                                  {"strict", strict_verdict},
                                  {"permissive", permissive_verdict},
                                  {"differs", strict_verdict != permissive_verdict}});
        }
        data["convention_comparison"] = comparison;
    }

    out << "result: " << result.passed << " passed, " << result.failed << " failed, "
        << result.skipped << " skipped\n";
    data["passed"] = result.passed;
    data["failed"] = result.failed;
    data["skipped"] = result.skipped;
    result.report = Report{out.str(), std::move(data)};
    return result;
}

}  // namespace logtoric
