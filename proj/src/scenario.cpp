#include "logtoric/scenario.hpp"

#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "logtoric/chart.hpp"
#include "logtoric/cone.hpp"
#include "logtoric/graded.hpp"
#include "logtoric/monoid.hpp"
#include "logtoric/parser.hpp"
#include "logtoric/pl.hpp"
#include "logtoric/subdivision.hpp"

namespace logtoric {

using json = nlohmann::ordered_json;

std::string kind_name(ScenarioKind k) {
    switch (k) {
        case ScenarioKind::saturated: return "saturated";
        case ScenarioKind::root_order: return "root-order";
        case ScenarioKind::subdivide: return "subdivide";
        case ScenarioKind::pl_sections: return "pl-sections";
        case ScenarioKind::pic: return "pic";
        case ScenarioKind::fiber: return "fiber";
        case ScenarioKind::pushforward: return "pushforward";
    }
    throw MathError("unknown scenario kind");
}

std::optional<ScenarioKind> kind_from_name(const std::string& name) {
    static const std::map<std::string, ScenarioKind> table = {
        {"saturated", ScenarioKind::saturated},
        {"root-order", ScenarioKind::root_order},
        {"subdivide", ScenarioKind::subdivide},
        {"pl-sections", ScenarioKind::pl_sections},
        {"pic", ScenarioKind::pic},
        {"fiber", ScenarioKind::fiber},
        {"pushforward", ScenarioKind::pushforward},
    };
    auto it = table.find(name);
    if (it == table.end()) {
        return std::nullopt;
    }
    return it->second;
}

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0;
    std::size_t b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<std::string> whitespace_tokens(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) {
        out.push_back(tok);
    }
    return out;
}

bool is_integer_token(const std::string& tok) {
    if (tok.empty()) {
        return false;
    }
    std::size_t i = tok[0] == '-' ? 1 : 0;
    if (i == tok.size()) {
        return false;
    }
    for (; i < tok.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(tok[i]))) {
            return false;
        }
    }
    return true;
}

bool is_identifier(const std::string& tok) {
    if (tok.empty()) {
        return false;
    }
    if (!std::isalpha(static_cast<unsigned char>(tok[0])) && tok[0] != '_') {
        return false;
    }
    for (char c : tok) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') {
            return false;
        }
    }
    return true;
}

struct RawEntry {
    std::string value;
    std::size_t line;
};

[[noreturn]] void fail_line(std::size_t line, const std::string& msg) {
    throw ParseError("line " + std::to_string(line) + ": " + msg);
}

IntVec parse_vector(const std::string& value, const std::string& key, std::size_t line) {
    std::vector<std::string> toks = whitespace_tokens(value);
    if (toks.empty()) {
        fail_line(line, "empty vector in value for '" + key + "'");
    }
    IntVec v(toks.size());
    for (std::size_t i = 0; i < toks.size(); ++i) {
        if (!is_integer_token(toks[i])) {
            fail_line(line, "invalid integer '" + toks[i] + "' in value for '" + key + "'");
        }
        v[i] = Int(toks[i]);
    }
    return v;
}

std::vector<IntVec> parse_rows(const std::string& value, const std::string& key,
                               std::size_t line) {
    std::vector<IntVec> rows;
    for (const std::string& part : split(value, ';')) {
        std::string row = trim(part);
        if (row.empty()) {
            fail_line(line, "empty row in value for '" + key + "'");
        }
        rows.push_back(parse_vector(row, key, line));
    }
    return rows;
}

unsigned parse_bounded_unsigned(const std::string& value, const std::string& key,
                                std::size_t line) {
    std::string v = trim(value);
    if (!is_integer_token(v) || v[0] == '-') {
        fail_line(line, "value for '" + key + "' must be a nonnegative integer");
    }
    Int n(v);
    if (n > 1000) {
        fail_line(line, "value for '" + key + "' is too large");
    }
    return static_cast<unsigned>(n.get_ui());
}

const std::set<std::string>& universal_keys() {
    static const std::set<std::string> keys = {"kind", "vars", "degree_bound", "convention",
                                               "window"};
    return keys;
}

const std::set<std::string>& payload_keys_for(ScenarioKind kind) {
    static const std::set<std::string> saturated = {"monoid", "alpha"};
    static const std::set<std::string> fan_only = {"cone", "center", "cuts"};
    static const std::set<std::string> fiber = {"cone", "center", "cuts", "tau", "origin"};
    static const std::set<std::string> pushforward = {"cone",    "center", "cuts",
                                                      "weights", "ideal",  "section"};
    switch (kind) {
        case ScenarioKind::saturated:
        case ScenarioKind::root_order: return saturated;
        case ScenarioKind::subdivide:
        case ScenarioKind::pl_sections:
        case ScenarioKind::pic: return fan_only;
        case ScenarioKind::fiber: return fiber;
        case ScenarioKind::pushforward: return pushforward;
    }
    throw MathError("unknown scenario kind");
}

void require_key(const std::map<std::string, RawEntry>& entries, const std::string& key,
                 ScenarioKind kind) {
    if (!entries.count(key)) {
        throw ParseError("a " + kind_name(kind) + " scenario requires the key '" + key + "'");
    }
}

std::vector<std::string> parse_polynomial_list(const std::string& value) {
    std::vector<std::string> texts;
    for (const std::string& part : split(value, ';')) {
        std::string p = trim(part);
        if (p.empty()) {
            throw ParseError("empty polynomial in list");
        }
        texts.push_back(p);
    }
    return texts;
}

json int_json(const Int& v) {
    if (v.fits_slong_p()) {
        return static_cast<long long>(v.get_si());
    }
    return v.get_str();
}

json vec_json(const IntVec& v) {
    json a = json::array();
    for (std::size_t i = 0; i < v.size(); ++i) {
        a.push_back(int_json(v[i]));
    }
    return a;
}

json rows_json(const std::vector<IntVec>& rows) {
    json a = json::array();
    for (const IntVec& r : rows) {
        a.push_back(vec_json(r));
    }
    return a;
}

std::string rays_text(const std::vector<IntVec>& rays) {
    std::string s;
    for (std::size_t i = 0; i < rays.size(); ++i) {
        if (i) s += " ";
        s += rays[i].str();
    }
    return s.empty() ? "none" : s;
}

std::string convention_name(PairingConvention c) {
    return c == PairingConvention::strict ? "strict" : "permissive";
}

}  // namespace

ScenarioOptions merge_options(const ScenarioOptions& flags, const FileOptions& file,
                              bool degree_bound_set, bool convention_set, bool window_set) {
    ScenarioOptions out = flags;
    if (!degree_bound_set && file.degree_bound) {
        out.degree_bound = *file.degree_bound;
    }
    if (!convention_set && file.convention) {
        out.convention = *file.convention;
    }
    if (!window_set && file.window) {
        out.window = *file.window;
    }
    return out;
}

Scenario parse_scenario(const std::string& content, const std::string& expected_kind) {
    std::optional<ScenarioKind> expected = kind_from_name(expected_kind);
    if (!expected) {
        throw ParseError("unknown scenario kind '" + expected_kind + "'");
    }

    std::map<std::string, RawEntry> entries;
    std::vector<std::string> lines = split(content, '\n');
    for (std::size_t i = 0; i < lines.size(); ++i) {
        std::string line = lines[i];
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        std::size_t eq = line.find('=');
        if (eq == std::string::npos) {
            fail_line(i + 1, "expected 'key = value'");
        }
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty()) {
            fail_line(i + 1, "missing key before '='");
        }
        if (value.empty()) {
            fail_line(i + 1, "missing value for '" + key + "'");
        }
        if (entries.count(key)) {
            fail_line(i + 1, "duplicate key '" + key + "'");
        }
        entries[key] = RawEntry{value, i + 1};
    }

    Scenario s;
    s.kind = *expected;
    if (entries.count("kind")) {
        const RawEntry& e = entries.at("kind");
        std::optional<ScenarioKind> file_kind = kind_from_name(e.value);
        if (!file_kind) {
            fail_line(e.line, "unknown scenario kind '" + e.value + "'");
        }
        if (*file_kind != *expected) {
            fail_line(e.line, "scenario kind '" + e.value + "' does not match subcommand '" +
                                  expected_kind + "'");
        }
    }

    const std::set<std::string>& payload = payload_keys_for(s.kind);
    for (const auto& [key, entry] : entries) {
        if (!universal_keys().count(key) && !payload.count(key)) {
            fail_line(entry.line,
                      "key '" + key + "' is not used by a " + kind_name(s.kind) + " scenario");
        }
    }

    // Option keys.
    if (entries.count("degree_bound")) {
        const RawEntry& e = entries.at("degree_bound");
        s.file_options.degree_bound = parse_bounded_unsigned(e.value, "degree_bound", e.line);
    }
    if (entries.count("window")) {
        const RawEntry& e = entries.at("window");
        unsigned w = parse_bounded_unsigned(e.value, "window", e.line);
        if (w == 0) {
            fail_line(e.line, "value for 'window' must be positive");
        }
        s.file_options.window = w;
    }
    if (entries.count("convention")) {
        const RawEntry& e = entries.at("convention");
        std::string v = trim(e.value);
        if (v == "strict") {
            s.file_options.convention = PairingConvention::strict;
        } else if (v == "permissive") {
            s.file_options.convention = PairingConvention::permissive;
        } else {
            fail_line(e.line, "value for 'convention' must be 'strict' or 'permissive'");
        }
    }

    // Payload keys.
    if (entries.count("vars")) {
        const RawEntry& e = entries.at("vars");
        std::set<std::string> seen;
        for (const std::string& name : whitespace_tokens(e.value)) {
            if (!is_identifier(name)) {
                fail_line(e.line, "invalid variable name '" + name + "'");
            }
            if (!seen.insert(name).second) {
                fail_line(e.line, "duplicate variable name '" + name + "'");
            }
            s.vars.push_back(name);
        }
    }
    if (entries.count("weights")) {
        const RawEntry& e = entries.at("weights");
        s.weights = parse_vector(e.value, "weights", e.line);
    }
    if (entries.count("cone")) {
        const RawEntry& e = entries.at("cone");
        s.cone_rays = parse_rows(e.value, "cone", e.line);
    }
    if (entries.count("monoid")) {
        const RawEntry& e = entries.at("monoid");
        s.monoid_gens = parse_rows(e.value, "monoid", e.line);
    }
    if (entries.count("alpha")) {
        const RawEntry& e = entries.at("alpha");
        s.alpha = parse_vector(e.value, "alpha", e.line);
    }
    if (entries.count("center")) {
        const RawEntry& e = entries.at("center");
        s.center = parse_vector(e.value, "center", e.line);
    }
    if (entries.count("cuts")) {
        const RawEntry& e = entries.at("cuts");
        s.cuts = parse_rows(e.value, "cuts", e.line);
    }
    if (entries.count("tau")) {
        const RawEntry& e = entries.at("tau");
        s.tau_rays = parse_rows(e.value, "tau", e.line);
    }
    if (entries.count("origin")) {
        const RawEntry& e = entries.at("origin");
        s.origin_gens = parse_rows(e.value, "origin", e.line);
    }
    if (entries.count("ideal")) {
        const RawEntry& e = entries.at("ideal");
        s.ideal_texts = parse_polynomial_list(e.value);
    }
    if (entries.count("section")) {
        const RawEntry& e = entries.at("section");
        s.section_texts = parse_polynomial_list(e.value);
    }

    // Requirements per kind.
    switch (s.kind) {
        case ScenarioKind::saturated:
        case ScenarioKind::root_order:
            require_key(entries, "monoid", s.kind);
            require_key(entries, "alpha", s.kind);
            break;
        case ScenarioKind::subdivide:
            if (!s.center && s.cuts.empty()) {
                throw ParseError("a subdivide scenario requires 'center' or 'cuts'");
            }
            break;
        case ScenarioKind::pl_sections:
        case ScenarioKind::pic:
            break;
        case ScenarioKind::fiber:
            require_key(entries, "tau", s.kind);
            require_key(entries, "origin", s.kind);
            break;
        case ScenarioKind::pushforward:
            require_key(entries, "vars", s.kind);
            require_key(entries, "ideal", s.kind);
            if (!s.center && s.cuts.empty()) {
                throw ParseError("a pushforward scenario requires 'center' or 'cuts'");
            }
            break;
    }
    if (s.center && !s.cuts.empty()) {
        throw ParseError("'center' and 'cuts' cannot both be present");
    }

    // Ambient rank: from vars when given, otherwise from the first vector.
    std::size_t rank = 0;
    if (!s.vars.empty()) {
        rank = s.vars.size();
    } else {
        std::vector<const IntVec*> firsts;
        if (s.weights) firsts.push_back(&*s.weights);
        if (s.alpha) firsts.push_back(&*s.alpha);
        if (s.center) firsts.push_back(&*s.center);
        for (const auto* rows : {&s.cone_rays, &s.monoid_gens, &s.cuts, &s.tau_rays,
                                 &s.origin_gens}) {
            if (!rows->empty()) firsts.push_back(&rows->front());
        }
        if (firsts.empty()) {
            throw ParseError("cannot determine the ambient rank: provide 'vars' or a vector key");
        }
        rank = firsts.front()->size();
    }

    auto check_vec = [&](const IntVec& v, const std::string& key) {
        if (v.size() != rank) {
            throw ParseError("value for '" + key + "' has " + std::to_string(v.size()) +
                             " entries, expected " + std::to_string(rank));
        }
    };
    if (s.weights) check_vec(*s.weights, "weights");
    if (s.alpha) check_vec(*s.alpha, "alpha");
    if (s.center) check_vec(*s.center, "center");
    for (const IntVec& v : s.cone_rays) check_vec(v, "cone");
    for (const IntVec& v : s.monoid_gens) check_vec(v, "monoid");
    for (const IntVec& v : s.cuts) check_vec(v, "cuts");
    for (const IntVec& v : s.tau_rays) check_vec(v, "tau");
    for (const IntVec& v : s.origin_gens) check_vec(v, "origin");

    return s;
}

namespace {

std::size_t scenario_rank(const Scenario& s) {
    if (!s.vars.empty()) return s.vars.size();
    if (s.weights) return s.weights->size();
    if (s.alpha) return s.alpha->size();
    if (s.center) return s.center->size();
    for (const auto* rows : {&s.cone_rays, &s.monoid_gens, &s.cuts, &s.tau_rays,
                             &s.origin_gens}) {
        if (!rows->empty()) return rows->front().size();
    }
    throw ParseError("cannot determine the ambient rank");
}

Cone scenario_base_cone(const Scenario& s, std::size_t rank) {
    if (s.cone_rays.empty()) {
        return Cone::orthant(rank);
    }
    return Cone::from_generators(s.cone_rays, rank);
}

Subdivision scenario_subdivision(const Scenario& s, const Cone& base) {
    if (s.center) {
        return star_subdivision(base, *s.center);
    }
    Subdivision delta = Subdivision::trivial(base);
    for (const IntVec& cut : s.cuts) {
        delta = refine_by_hyperplane(delta, cut);
    }
    return delta;
}

void append_options(std::ostringstream& out, json& data, const ScenarioOptions& opt) {
    out << "options: degree_bound=" << opt.degree_bound << " window="
        << opt.effective_window().get_str() << " convention=" << convention_name(opt.convention)
        << "\n";
    data["options"] = {{"degree_bound", opt.degree_bound},
                       {"window", int_json(opt.effective_window())},
                       {"convention", convention_name(opt.convention)}};
}

// Renders an exponent vector as a named monomial when variable names are
// available, otherwise as the bare vector.
std::string exponent_text(const IntVec& e, const std::vector<std::string>& vars) {
    if (vars.size() == e.size()) {
        return polynomial_str(LaurentPolynomial::monomial(e), vars);
    }
    return e.str();
}

Report run_saturated(const Scenario& s, const ScenarioOptions& opt) {
    AffineMonoid m = AffineMonoid::saturate(s.monoid_gens, scenario_rank(s));
    bool verdict = is_saturated_element(m, *s.alpha, opt.convention);

    std::ostringstream out;
    json data;
    data["kind"] = kind_name(s.kind);
    out << "scenario: " << kind_name(s.kind) << "\n";
    append_options(out, data, opt);
    out << "monoid generators: " << rays_text(s.monoid_gens) << "\n";
    out << "alpha: " << s.alpha->str() << "\n";
    data["monoid"] = rows_json(s.monoid_gens);
    data["alpha"] = vec_json(*s.alpha);
    std::vector<IntVec> hb = m.hilbert_basis();
    out << "saturation hilbert basis: " << rays_text(hb) << "\n";
    data["hilbert_basis"] = rows_json(hb);
    out << "saturated: " << (verdict ? "true" : "false") << "\n";
    data["saturated"] = verdict;
    return Report{out.str(), std::move(data)};
}

Report run_root_order(const Scenario& s, const ScenarioOptions& opt) {
    AffineMonoid m = AffineMonoid::saturate(s.monoid_gens, scenario_rank(s));
    RootResult root = minimal_saturating_root(m, *s.alpha);

    std::ostringstream out;
    json data;
    data["kind"] = kind_name(s.kind);
    out << "scenario: " << kind_name(s.kind) << "\n";
    append_options(out, data, opt);
    out << "monoid generators: " << rays_text(s.monoid_gens) << "\n";
    out << "alpha: " << s.alpha->str() << "\n";
    data["monoid"] = rows_json(s.monoid_gens);
    data["alpha"] = vec_json(*s.alpha);
    out << "minimal root order: " << root.n.get_str() << "\n";
    out << "lattice extension index: " << root.extension.index.get_str() << "\n";
    data["root_order"] = int_json(root.n);
    data["extension_index"] = int_json(root.extension.index);
    return Report{out.str(), std::move(data)};
}

Report run_subdivide(const Scenario& s, const ScenarioOptions& opt) {
    std::size_t rank = scenario_rank(s);
    Cone base = scenario_base_cone(s, rank);
    Subdivision delta = scenario_subdivision(s, base);

    std::ostringstream out;
    json data;
    data["kind"] = kind_name(s.kind);
    out << "scenario: " << kind_name(s.kind) << "\n";
    append_options(out, data, opt);
    out << "base cone rays: " << rays_text(base.rays()) << "\n";
    data["base_rays"] = rows_json(base.rays());
    out << "maximal cones: " << delta.size() << "\n";
    json cones = json::array();
    for (std::size_t i = 0; i < delta.size(); ++i) {
        const Cone& c = delta.maximal_cones()[i];
        out << "cone " << (i + 1) << " rays: " << rays_text(c.rays()) << "\n";
        cones.push_back(rows_json(c.rays()));
    }
    data["maximal_cones"] = cones;
    return Report{out.str(), std::move(data)};
}

Report run_pl_sections(const Scenario& s, const ScenarioOptions& opt) {
    std::size_t rank = scenario_rank(s);
    Cone base = scenario_base_cone(s, rank);
    Subdivision delta = scenario_subdivision(s, base);
    PLSections sections(delta);
    IntMat linear = sections.linear_sublattice();

    std::ostringstream out;
    json data;
    data["kind"] = kind_name(s.kind);
    out << "scenario: " << kind_name(s.kind) << "\n";
    append_options(out, data, opt);
    out << "base cone rays: " << rays_text(base.rays()) << "\n";
    data["base_rays"] = rows_json(base.rays());
    out << "maximal cones: " << delta.size() << "\n";
    data["maximal_cones"] = delta.size();
    out << "sections rank: " << sections.rank() << "\n";
    out << "linear rank: " << linear.cols() << "\n";
    data["sections_rank"] = sections.rank();
    data["linear_rank"] = linear.cols();
    json basis = json::array();
    for (std::size_t i = 0; i < sections.rank(); ++i) {
        const PLFunction& f = sections.basis()[i];
        json parts = json::array();
        std::string text;
        for (std::size_t j = 0; j < f.parts().size(); ++j) {
            if (j) text += " ";
            text += f.part(j).str();
            parts.push_back(vec_json(f.part(j)));
        }
        out << "basis function " << (i + 1) << " parts: " << text << "\n";
        basis.push_back(parts);
    }
    data["basis_parts"] = basis;
    return Report{out.str(), std::move(data)};
}

Report run_pic(const Scenario& s, const ScenarioOptions& opt) {
    std::size_t rank = scenario_rank(s);
    Cone base = scenario_base_cone(s, rank);
    Subdivision delta = scenario_subdivision(s, base);
    std::vector<Int> factors = pic_of_subdivision(delta);
    std::size_t free_rank = 0;
    for (const Int& f : factors) {
        if (f == 0) ++free_rank;
    }

    std::ostringstream out;
    json data;
    data["kind"] = kind_name(s.kind);
    out << "scenario: " << kind_name(s.kind) << "\n";
    append_options(out, data, opt);
    out << "base cone rays: " << rays_text(base.rays()) << "\n";
    data["base_rays"] = rows_json(base.rays());
    out << "maximal cones: " << delta.size() << "\n";
    data["maximal_cones"] = delta.size();
    std::string factor_text;
    json factor_json = json::array();
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) factor_text += " ";
        factor_text += factors[i].get_str();
        factor_json.push_back(int_json(factors[i]));
    }
    out << "invariant factors: " << (factors.empty() ? "none" : factor_text) << "\n";
    out << "free rank: " << free_rank << "\n";
    out << "torsion: none\n";
    data["invariant_factors"] = factor_json;
    data["free_rank"] = free_rank;
    data["torsion_free"] = true;
    return Report{out.str(), std::move(data)};
}

Report run_fiber(const Scenario& s, const ScenarioOptions& opt) {
    std::size_t rank = scenario_rank(s);
    Cone tau = Cone::from_generators(s.tau_rays, rank);
    ChartMonoid chart;
    if (s.center || !s.cuts.empty()) {
        Cone base = scenario_base_cone(s, rank);
        Subdivision delta = scenario_subdivision(s, base);
        chart = chart_monoid(delta, tau);
    } else {
        chart = chart_monoid_of_cone(tau);
    }
    FiberRing fib = fiber_ring(chart, s.origin_gens);

    std::ostringstream out;
    json data;
    data["kind"] = kind_name(s.kind);
    out << "scenario: " << kind_name(s.kind) << "\n";
    append_options(out, data, opt);
    out << "chart cone rays: " << rays_text(chart.tau.rays()) << "\n";
    data["chart_rays"] = rows_json(chart.tau.rays());
    out << "origin ideal generators: " << rays_text(s.origin_gens) << "\n";
    data["origin"] = rows_json(s.origin_gens);
    out << "unit rank: " << fib.unit_rank << "\n";
    data["unit_rank"] = fib.unit_rank;
    json nilpotents = json::array();
    if (fib.nilpotent_generators.empty()) {
        out << "nilpotent generators: none\n";
    } else {
        out << "nilpotent generators:\n";
        for (const auto& [e, order] : fib.nilpotent_generators) {
            out << "  " << exponent_text(e, s.vars) << " : order " << order.get_str() << "\n";
            json entry;
            entry["exponent"] = vec_json(e);
            if (s.vars.size() == e.size()) {
                entry["monomial"] = exponent_text(e, s.vars);
            }
            entry["order"] = int_json(order);
            nilpotents.push_back(entry);
        }
    }
    data["nilpotent_generators"] = nilpotents;
    json others = json::array();
    if (fib.non_nilpotent_generators.empty()) {
        out << "non-nilpotent generators: none\n";
    } else {
        out << "non-nilpotent generators:\n";
        for (const IntVec& e : fib.non_nilpotent_generators) {
            out << "  " << exponent_text(e, s.vars) << "\n";
            others.push_back(vec_json(e));
        }
    }
    data["non_nilpotent_generators"] = others;
    return Report{out.str(), std::move(data)};
}

Report run_pushforward(const Scenario& s, const ScenarioOptions& opt) {
    std::size_t rank = scenario_rank(s);
    IntVec weights(rank);
    if (s.weights) {
        weights = *s.weights;
    } else {
        for (std::size_t i = 0; i < rank; ++i) {
            weights[i] = 1;
        }
    }
    Cone base = scenario_base_cone(s, rank);
    Subdivision fan = scenario_subdivision(s, base);
    std::vector<LaurentPolynomial> gens;
    for (const std::string& text : s.ideal_texts) {
        gens.push_back(parse_polynomial(text, s.vars));
    }
    BlowupConfig config = build_blowup_config(s.vars, weights, gens, fan);
    Int window = opt.effective_window();

    std::ostringstream out;
    json data;
    data["kind"] = kind_name(s.kind);
    out << "scenario: " << kind_name(s.kind) << "\n";
    append_options(out, data, opt);
    std::string vars_text;
    for (std::size_t i = 0; i < s.vars.size(); ++i) {
        if (i) vars_text += " ";
        vars_text += s.vars[i];
    }
    out << "variables: " << vars_text << "\n";
    data["vars"] = s.vars;
    out << "weights: " << weights.str() << "\n";
    data["weights"] = vec_json(weights);
    out << "ideal generators:\n";
    json ideal_json = json::array();
    for (const LaurentPolynomial& g : gens) {
        std::string text = polynomial_str(g, s.vars);
        out << "  " << text << "\n";
        ideal_json.push_back(text);
    }
    data["ideal"] = ideal_json;
    out << "fan: " << fan.size() << " maximal cones\n";
    json charts_json = json::array();
    for (std::size_t i = 0; i < config.charts.size(); ++i) {
        const std::vector<IntVec> rays = config.charts[i].tau.rays();
        out << "chart " << (i + 1) << " rays: " << rays_text(rays) << "\n";
        charts_json.push_back(rows_json(rays));
    }
    data["charts"] = charts_json;

    // Sections, if given: parse and find their common degree.
    std::vector<LaurentPolynomial> sections;
    std::optional<Int> section_degree;
    if (!s.section_texts.empty()) {
        if (s.section_texts.size() != config.charts.size()) {
            throw ParseError("section list has " + std::to_string(s.section_texts.size()) +
                             " polynomials, expected one per chart (" +
                             std::to_string(config.charts.size()) + ")");
        }
        for (const std::string& text : s.section_texts) {
            sections.push_back(parse_polynomial(text, s.vars));
        }
        for (const LaurentPolynomial& p : sections) {
            if (p.is_zero()) {
                continue;
            }
            std::optional<Int> d = p.homogeneous_degree(weights);
            if (!d) {
                throw ParseError("section polynomial is not homogeneous");
            }
            if (section_degree && *section_degree != *d) {
                throw ParseError("section polynomials have mixed degrees");
            }
            section_degree = d;
        }
        if (!section_degree) {
            section_degree = Int(0);
        }
    }

    json degrees_json = json::array();
    for (unsigned d = 0; d <= opt.degree_bound; ++d) {
        SectionComputation comp(config, Int(d), window);
        out << "degree " << d << ": base " << comp.base_dim() << ", sections "
            << comp.gamma_dim() << ", image " << comp.image_rank() << ", cokernel "
            << comp.cokernel_dim() << ", kernel " << comp.kernel_basis().size() << "\n";
        json entry;
        entry["degree"] = d;
        entry["base_dim"] = comp.base_dim();
        entry["sections_dim"] = comp.gamma_dim();
        entry["image_rank"] = comp.image_rank();
        entry["cokernel_dim"] = comp.cokernel_dim();
        json kernel_json = json::array();
        for (const LaurentPolynomial& p : comp.kernel_basis()) {
            std::string text = polynomial_str(p, s.vars);
            std::optional<unsigned> order = nilpotency_order_in(
                config.base_monoid, gens, weights, p, opt.degree_bound, window);
            out << "  kernel: " << text << " ; nilpotency order "
                << (order ? std::to_string(*order) : std::string("none within bound")) << "\n";
            json k;
            k["polynomial"] = text;
            if (order) {
                k["nilpotency_order"] = *order;
            } else {
                k["nilpotency_order"] = nullptr;
            }
            kernel_json.push_back(k);
        }
        entry["kernel"] = kernel_json;
        degrees_json.push_back(entry);
    }
    data["degrees"] = degrees_json;

    if (!sections.empty()) {
        SectionComputation comp(config, *section_degree, window);
        bool glues = comp.glue_test(sections);
        bool preimage = glues && comp.preimage_exists(sections);
        out << "section tuple (degree " << section_degree->get_str() << "):\n";
        json section_json;
        section_json["degree"] = int_json(*section_degree);
        json texts = json::array();
        for (const LaurentPolynomial& p : sections) {
            std::string text = polynomial_str(p, s.vars);
            out << "  " << text << "\n";
            texts.push_back(text);
        }
        section_json["polynomials"] = texts;
        out << "glues on overlaps: " << (glues ? "true" : "false") << "\n";
        out << "preimage exists: " << (preimage ? "true" : "false") << "\n";
        section_json["glues"] = glues;
        section_json["preimage_exists"] = preimage;
        data["section"] = section_json;
    }
    return Report{out.str(), std::move(data)};
}

}  // namespace

Report run_scenario(const Scenario& s, const ScenarioOptions& opt) {
    switch (s.kind) {
        case ScenarioKind::saturated: return run_saturated(s, opt);
        case ScenarioKind::root_order: return run_root_order(s, opt);
        case ScenarioKind::subdivide: return run_subdivide(s, opt);
        case ScenarioKind::pl_sections: return run_pl_sections(s, opt);
        case ScenarioKind::pic: return run_pic(s, opt);
        case ScenarioKind::fiber: return run_fiber(s, opt);
        case ScenarioKind::pushforward: return run_pushforward(s, opt);
    }
    throw MathError("unknown scenario kind");
}

}  // namespace logtoric
