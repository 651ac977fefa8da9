#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "hurwitz/hurwitz.hpp"

namespace hurwitz::cli {

namespace {

using report::Json;

enum class Format { Markdown, Json };

struct RunConfig {
    Format format = Format::Markdown;
    unsigned jobs = 1;
    std::optional<std::uint64_t> guard_nodes;
    std::size_t guard_terms = kDefaultTermLimit;
};

struct Output {
    std::string text;
    int code = kSuccess;
};

std::string render(const Json& j) { return j.dump(2) + "\n"; }

void merge(Json& into, const Json& from) {
    for (const auto& [key, value] : from.items()) into[key] = value;
}

std::uint64_t node_guard(const RunConfig& cfg) {
    if (cfg.guard_nodes) return *cfg.guard_nodes;
    if (const char* env = std::getenv("HURWITZ_GUARD_NODES")) {
        std::uint64_t value = 0;
        const std::string_view text(env);
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc() || ptr != text.data() + text.size() || value == 0)
            throw InvalidInput("HURWITZ_GUARD_NODES must be a positive integer, got '" + std::string(text) + "'");
        return value;
    }
    return kDefaultNodeLimit;
}

IntRange parse_range(const std::string& text) {
    auto number = [&](std::string_view part) {
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (part.empty() || ec != std::errc() || ptr != part.data() + part.size())
            throw InvalidInput("bad range '" + text + "' (expected N or LO..HI)");
        return v;
    };
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const auto v = number(text);
        return {v, v};
    }
    return {number(std::string_view(text).substr(0, dots)), number(std::string_view(text).substr(dots + 2))};
}

std::vector<unsigned> parse_exponents(const std::string& text) {
    std::vector<unsigned> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char ch) { return std::isspace(ch); }), item.end());
        unsigned v = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
            throw InvalidInput("bad exponent '" + item + "'");
        out.push_back(v);
    }
    return out;
}

// ---------------------------------------------------------------------------

struct MonodromyArgs {
    std::optional<int> degree;
    std::string profiles;
    std::string spec;
    std::string problem;
};

MonodromyProblem load_problem(const MonodromyArgs& a) {
    const int sources = (a.degree || !a.profiles.empty() ? 1 : 0) + (a.spec.empty() ? 0 : 1) +
                        (a.problem.empty() ? 0 : 1);
    if (sources != 1)
        throw InvalidInput("give exactly one of --degree/--profiles, --spec or --problem");
    if (!a.spec.empty()) return MonodromyProblem::parse(a.spec);
    if (!a.problem.empty()) {
        std::string text = a.problem;
        if (text.front() == '@') {
            std::ifstream in(text.substr(1));
            if (!in) throw InvalidInput("cannot read problem file '" + text.substr(1) + "'");
            std::stringstream buf;
            buf << in.rdbuf();
            text = buf.str();
        }
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw InvalidInput(std::string("problem is not valid JSON: ") + e.what());
        }
        return report::problem_from_json(doc);
    }
    if (!a.degree || a.profiles.empty()) throw InvalidInput("--degree and --profiles go together");
    return MonodromyProblem{*a.degree, parse_profiles(a.profiles)};
}

Output cmd_monodromy(const RunConfig& cfg, const MonodromyArgs& args) {
    const MonodromyProblem problem = load_problem(args);
    problem.validate();
    const auto genus = expected_genus(problem);
    const EnumerationResult result =
        enumerate_classes(problem, EnumerationOptions{.node_limit = node_guard(cfg), .jobs = cfg.jobs});

    Output o;
    if (cfg.format == Format::Json) {
        Json j = report::envelope("monodromy");
        j["problem"] = report::to_json(problem);
        j["genus"] = genus ? Json(*genus) : Json(nullptr);
        if (!genus) j["note"] = "riemann-hurwitz impossible";
        merge(j, report::to_json(result));
        o.text = render(j);
    } else {
        o.text = report::markdown(problem, result);
        o.text += genus ? "- genus: " + std::to_string(*genus) + "\n" : "- note: riemann-hurwitz impossible\n";
    }
    return o;
}

// ---------------------------------------------------------------------------

struct FormulaArgs {
    std::string name;
    std::int64_t r = 2;
    std::optional<std::int64_t> g, d, h0, a, b, g_source, g_target, degree;
    std::string profile, profiles;
};

std::int64_t need(const std::optional<std::int64_t>& v, const char* flag) {
    if (!v) throw InvalidInput(std::string("missing required option ") + flag);
    return *v;
}

Output cmd_formula(const RunConfig& cfg, const FormulaArgs& f) {
    Json inputs;
    Json values;
    std::vector<std::pair<std::string, std::string>> lines;
    int code = kSuccess;

    if (f.name == "plucker") {
        const auto g = need(f.g, "--g"), d = need(f.d, "--d");
        inputs = {{"r", f.r}, {"g", g}, {"d", d}};
        const auto v = plucker(f.r, d, g);
        values["value"] = v;
        lines.emplace_back("value", std::to_string(v));
    } else if (f.name == "dejonquieres") {
        const auto g = need(f.g, "--g"), d = need(f.d, "--d");
        inputs = {{"r", f.r}, {"g", g}, {"d", d}};
        const BigInt closed = de_jonquieres_closed(g, d);
        const BigInt expanded = de_jonquieres_expand(g, d, f.r);
        const bool agree = closed == expanded;
        values["closed"] = report::integer(closed);
        values["expanded"] = report::integer(expanded);
        values["agree"] = agree;
        lines.emplace_back("closed", closed.get_str());
        lines.emplace_back("expanded", expanded.get_str());
        lines.emplace_back("agree", agree ? "agree" : "DISAGREE");
        if (!agree) code = kVerificationFailed;
    } else if (f.name == "rh") {
        const auto d = need(f.degree ? f.degree : f.d, "--degree");
        if (f.profiles.empty()) throw InvalidInput("missing required option --profiles");
        const auto profiles = parse_profiles(f.profiles);
        inputs = {{"degree", d}, {"profiles", f.profiles}};
        const auto g = riemann_hurwitz_genus(d, profiles);
        values["genus"] = g ? Json(*g) : Json(nullptr);
        lines.emplace_back("genus", g ? std::to_string(*g) : "impossible");
    } else if (f.name == "ramification") {
        const auto gs = need(f.g_source, "--g-source"), gt = need(f.g_target, "--g-target");
        const auto d = need(f.d, "--d");
        inputs = {{"g_source", gs}, {"g_target", gt}, {"d", d}};
        const auto v = ramification_count(gs, gt, d);
        values["value"] = v;
        lines.emplace_back("value", std::to_string(v));
    } else if (f.name == "adjunction") {
        const auto a = need(f.a, "--a"), b = need(f.b, "--b");
        inputs = {{"a", a}, {"b", b}};
        const auto v = adjunction_genus_quadric(a, b);
        values["genus"] = v;
        lines.emplace_back("genus", std::to_string(v));
    } else if (f.name == "branchcount") {
        if (f.profile.empty()) throw InvalidInput("missing required option --profile");
        const Partition p = Partition::parse(f.profile);
        inputs = {{"profile", report::to_json(p)}};
        const BigRational branches = branch_count(p);
        const BigInt order = ram_order(p);
        values["branches"] = report::rational(branches);
        values["ram_order"] = report::integer(order);
        lines.emplace_back("branches", report::rational(branches));
        lines.emplace_back("ram-order", order.get_str());
    } else if (f.name == "fibredim") {
        const auto g = need(f.g, "--g"), d = need(f.d, "--d");
        const auto h0 = f.h0.value_or(0);
        inputs = {{"g", g}, {"d", d}, {"h0", h0}};
        const auto v = fibre_dimension(g, d, h0);
        values["value"] = v;
        lines.emplace_back("value", std::to_string(v));
    } else if (f.name == "multiplier") {
        const auto g = need(f.g, "--g"), d = need(f.d, "--d");
        inputs = {{"g", g}, {"d", d}};
        const auto v = forgetful_multiplier(g, d);
        values["value"] = v;
        lines.emplace_back("value", std::to_string(v));
    } else {
        throw InvalidInput("unknown formula '" + f.name + "'");
    }

    Output o;
    o.code = code;
    if (cfg.format == Format::Json) {
        Json j = report::envelope("formula");
        j["formula"] = f.name;
        j["inputs"] = inputs;
        merge(j, values);
        o.text = render(j);
    } else {
        std::ostringstream out;
        out << "## Formula " << f.name << "\n\n";
        for (const auto& [key, value] : lines) out << "- " << key << ": " << value << "\n";
        o.text = out.str();
    }
    return o;
}

// ---------------------------------------------------------------------------

struct PolyArgs {
    std::string expr;
    std::string coeff;
};

Output cmd_poly(const RunConfig& cfg, const PolyArgs& p) {
    const SparsePoly poly = parse_polynomial(p.expr, {}, cfg.guard_terms);
    std::optional<BigInt> coefficient;
    if (!p.coeff.empty()) coefficient = poly.coefficient(parse_exponents(p.coeff));

    Output o;
    if (cfg.format == Format::Json) {
        Json j = report::envelope("poly");
        j["expression"] = p.expr;
        j["variables"] = poly.variables();
        j["terms"] = poly.term_count();
        j["expanded"] = poly.to_string();
        if (coefficient) {
            j["exponents"] = parse_exponents(p.coeff);
            j["coefficient"] = report::integer(*coefficient);
        }
        o.text = render(j);
    } else {
        std::ostringstream out;
        out << "## Polynomial\n\n- expression: " << p.expr << "\n- terms: " << poly.term_count()
            << "\n- expanded: " << poly.to_string() << "\n";
        if (coefficient) out << "- coefficient [" << p.coeff << "]: " << coefficient->get_str() << "\n";
        o.text = out.str();
    }
    return o;
}

// ---------------------------------------------------------------------------

struct MatrixArgs {
    std::string action;
    std::string g;
    std::string d;
    std::string d_offset;
};

Output cmd_matrix(const RunConfig& cfg, const MatrixArgs& m) {
    Output o;
    const bool json = cfg.format == Format::Json;
    if (m.action == "scan") {
        if (m.g.empty() || m.d_offset.empty()) throw InvalidInput("matrix scan needs --g LO..HI and --d-offset LO..HI");
        const ScanReport r = scan_independence(parse_range(m.g), parse_range(m.d_offset), cfg.jobs);
        if (json) {
            Json j = report::envelope("matrix-scan");
            merge(j, report::to_json(r));
            o.text = render(j);
        } else {
            o.text = report::markdown(r);
        }
        o.code = r.all_pass ? kSuccess : kVerificationFailed;
        return o;
    }

    if (m.g.empty() || m.d.empty()) throw InvalidInput("matrix " + m.action + " needs --g and --d");
    const IntRange g = parse_range(m.g), d = parse_range(m.d);
    if (g.lo != g.hi || d.lo != d.hi) throw InvalidInput("matrix " + m.action + " takes single values for --g and --d");

    if (m.action == "show") {
        const IntersectionMatrix mat = build_M(g.lo, d.lo);
        if (json) {
            Json j = report::envelope("matrix");
            merge(j, report::to_json(mat));
            o.text = render(j);
        } else {
            o.text = report::markdown(mat);
        }
    } else if (m.action == "verify") {
        const MatrixVerdict v = verify_M(g.lo, d.lo);
        if (json) {
            Json j = report::envelope("matrix-verify");
            merge(j, report::to_json(v));
            o.text = render(j);
        } else {
            o.text = report::markdown(v);
        }
        o.code = v.passed() ? kSuccess : kVerificationFailed;
    } else {
        throw InvalidInput("unknown matrix action '" + m.action + "'");
    }
    return o;
}

// ---------------------------------------------------------------------------

struct CurveArgs {
    std::string name;
    std::optional<std::int64_t> g, d, h;
};

Output cmd_curve(const RunConfig& cfg, const CurveArgs& c) {
    DivisorVector v;
    if (c.name == "F") {
        v = curve_F(need(c.g, "--g"), need(c.d, "--d"));
    } else if (c.name == "G3") {
        v = curve_G3(c.g.value_or(3), c.d.value_or(4));
    } else if (c.name == "G12") {
        v = curve_G12(c.g.value_or(3), c.d.value_or(4));
    } else if (c.name == "A") {
        v = curve_A(need(c.g, "--g"), need(c.d, "--d"), need(c.h, "--h"));
    } else if (c.name == "B") {
        v = curve_B(need(c.g, "--g"), need(c.d, "--d"), need(c.h, "--h"));
    } else {
        throw InvalidInput("unknown curve '" + c.name + "'");
    }
    const PushforwardVector push = pushforward_to_base(v);

    Output o;
    if (cfg.format == Format::Json) {
        Json j = report::envelope("curve");
        merge(j, report::to_json(v));
        j["pushforward"] = report::to_json(push);
        o.text = render(j);
    } else {
        o.text = report::markdown(v, push);
    }
    return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact enumerative and intersection-number checks for Hurwitz spaces", "hurwitz"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    std::string format = "md";
    std::uint64_t guard_nodes = 0;
    app.add_option("--format", format, "Report format")->check(CLI::IsMember({"md", "json"}));
    app.add_option("--jobs,-j", cfg.jobs, "Worker threads for monodromy and matrix scan")
        ->check(CLI::PositiveNumber);
    auto* guard_opt = app.add_option("--guard-nodes", guard_nodes,
                                     "Monodromy search node limit (default 1e8, env HURWITZ_GUARD_NODES)")
                          ->check(CLI::PositiveNumber);
    app.add_option("--guard-terms", cfg.guard_terms, "Polynomial term limit")->check(CLI::PositiveNumber);

    MonodromyArgs mono;
    auto* mono_cmd = app.add_subcommand("monodromy", "Enumerate monodromy classes up to conjugation");
    mono_cmd->add_option("--degree,-d", mono.degree, "Cover degree");
    mono_cmd->add_option("--profiles,-p", mono.profiles, "Profiles, e.g. \"2,1;2,1\" or \"2,1x4\"");
    mono_cmd->add_option("--spec", mono.spec, "Inline problem, e.g. \"d=3 profiles=2,1x4\"");
    mono_cmd->add_option("--problem", mono.problem, "JSON problem text, or @file");

    FormulaArgs formula;
    auto* formula_cmd = app.add_subcommand("formula", "Evaluate an enumerative formula");
    formula_cmd->add_option("name", formula.name, "Formula name")
        ->required()
        ->check(CLI::IsMember({"plucker", "dejonquieres", "rh", "ramification", "adjunction",
                               "branchcount", "fibredim", "multiplier"}));
    formula_cmd->add_option("--r", formula.r, "Projective dimension of the series");
    formula_cmd->add_option("--g", formula.g, "Genus");
    formula_cmd->add_option("--d", formula.d, "Degree");
    formula_cmd->add_option("--degree", formula.degree, "Cover degree (rh)");
    formula_cmd->add_option("--h0", formula.h0, "Twisted h^0 (fibredim)");
    formula_cmd->add_option("--a", formula.a, "First bidegree (adjunction)");
    formula_cmd->add_option("--b", formula.b, "Second bidegree (adjunction)");
    formula_cmd->add_option("--g-source", formula.g_source, "Source genus (ramification)");
    formula_cmd->add_option("--g-target", formula.g_target, "Target genus (ramification)");
    formula_cmd->add_option("--profile", formula.profile, "Partition, e.g. 2,2,1,1 (branchcount)");
    formula_cmd->add_option("--profiles", formula.profiles, "Profiles (rh)");

    PolyArgs poly;
    auto* poly_cmd = app.add_subcommand("poly", "Expand a polynomial expression");
    poly_cmd->add_option("--expr,-e", poly.expr, "Expression, e.g. \"(1+4x+y)^3*(1+2x+y)^2\"")->required();
    poly_cmd->add_option("--coeff", poly.coeff, "Exponent vector to extract, e.g. 2,1");

    MatrixArgs matrix;
    auto* matrix_cmd = app.add_subcommand("matrix", "Build, verify or scan the relation matrix M");
    matrix_cmd->add_option("action", matrix.action, "show | verify | scan")
        ->required()
        ->check(CLI::IsMember({"show", "verify", "scan"}));
    matrix_cmd->add_option("--g", matrix.g, "Genus, or LO..HI for scan");
    matrix_cmd->add_option("--d", matrix.d, "Degree");
    matrix_cmd->add_option("--d-offset", matrix.d_offset, "d - g range LO..HI for scan");

    CurveArgs curve;
    auto* curve_cmd = app.add_subcommand("curve", "Intersection vector of a test curve");
    curve_cmd->set_help_flag("--help", "Print this help message and exit");
    curve_cmd->add_option("name", curve.name, "F | G3 | G12 | A | B")
        ->required()
        ->check(CLI::IsMember({"F", "G3", "G12", "A", "B"}));
    curve_cmd->add_option("--g", curve.g, "Genus");
    curve_cmd->add_option("--d", curve.d, "Degree");
    curve_cmd->add_option("--h", curve.h, "Genus of the glued cover (A, B)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        // Help requests print to `out` and succeed; real parse errors are invalid input.
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kInvalidInput;
    }

    cfg.format = format == "json" ? Format::Json : Format::Markdown;
    if (guard_opt->count() > 0) cfg.guard_nodes = guard_nodes;

    try {
        Output o;
        if (mono_cmd->parsed()) {
            o = cmd_monodromy(cfg, mono);
        } else if (formula_cmd->parsed()) {
            o = cmd_formula(cfg, formula);
        } else if (poly_cmd->parsed()) {
            o = cmd_poly(cfg, poly);
        } else if (matrix_cmd->parsed()) {
            o = cmd_matrix(cfg, matrix);
        } else if (curve_cmd->parsed()) {
            o = cmd_curve(cfg, curve);
        }
        out << o.text;
        if (o.code == kVerificationFailed) err << "verification failed\n";
        return o.code;
    } catch (const ResourceLimit& e) {
        err << "resource guard: " << e.what() << "\n";
        return kResourceGuard;
    } catch (const InvalidInput& e) {
        err << "invalid input: " << e.what() << "\n";
        return kInvalidInput;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << "\n";
        return kInvalidInput;
    }
}

}  // namespace hurwitz::cli
