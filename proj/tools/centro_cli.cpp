// Command line front end: enumeration, counts, generating functions, roots,
// grid-class checks, witness searches, golden verifications and scans.

#include "centro/harness.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <iostream>
#include <sstream>

namespace {

using namespace centro;

struct Globals {
    std::string format = "text";
    std::string seed_order = "lex";
    unsigned jobs = 1;
    bool force = false;

    EnumOptions opts() const { return {jobs}; }
};

int emit(const Report& r, const Globals& g) {
    if (g.format == "json")
        std::cout << r.to_json().dump(2) << "\n";
    else if (g.format == "csv")
        std::cout << r.to_csv();
    else
        std::cout << r.to_text();
    return r.passed() ? 0 : 1;
}

Json perms_json(const std::vector<Permutation>& ps) {
    Json out = Json::array();
    for (const auto& p : ps) out.push_back(p.size() <= 9 ? p.to_compact_string() : p.to_string());
    return out;
}

void add_warnings(Report& r, const ClassSpec& spec) {
    for (const auto& w : spec.warnings()) r.info("warning", w);
}

std::string fixed(long double v, int digits = 12) {
    std::ostringstream s;
    s << std::setprecision(digits) << static_cast<double>(v);
    return s.str();
}

Report run_enumerate(const std::string& cls, std::size_t n, bool centro, const Globals& g) {
    if (centro)
        guard(n, SizeGuards::centro_size, "centrosymmetric size", g.force);
    else
        guard(n, SizeGuards::class_size, "class size", g.force);
    const ClassSpec spec = parse_class_spec(cls);
    Report r{"enumerate", {{"class", spec.to_string()}, {"n", n}, {"centro", centro}}, {}};
    add_warnings(r, spec);
    ClassEnumerator en(spec, g.opts());
    const auto& members = centro ? en.centro_level(n) : en.level(n);
    r.info("members", std::to_string(members.size()) + (centro ? " centrosymmetric" : "") + " members of size " + std::to_string(n),
           {{"count", members.size()}, {"members", perms_json(members)}});
    return r;
}

Report run_counts(const std::string& cls, std::size_t max_n, const Globals& g) {
    guard(max_n, SizeGuards::class_size, "class size", g.force);
    const ClassSpec spec = parse_class_spec(cls);
    Report r{"counts", {{"class", spec.to_string()}, {"max_n", max_n}}, {}};
    add_warnings(r, spec);
    const CountTable t = count_table(spec, max_n / 2, g.opts());
    r.info("counts", "a and c for sizes 0.." + std::to_string(2 * (max_n / 2)) + ", b_even and d for sizes 2n <= " +
                         std::to_string(max_n) + ", b_odd for sizes 2n+1",
           {{"a", t.a}, {"b_even", t.b_even}, {"b_odd", t.b_odd}, {"c", t.c}, {"d", t.d}});
    if (syntactically_rc_invariant(spec)) {
        const auto bad = bound_violation(t);
        r.exact("bounds", !bad, bad ? "violated at n=" + std::to_string(*bad) : "b_n <= a_2n and b_n <= 2^n a_n");
    }
    return r;
}

Report run_gf(const std::string& expr, std::size_t terms) {
    const RationalGF gf = parse_gf(expr);
    Report r{"gf", {{"expr", expr}, {"terms", terms}}, {}};
    const Series s = expand(gf, terms);
    Json coeffs = Json::array();
    for (const auto& q : s.coeffs()) coeffs.push_back(q.str());
    Json data = {{"numerator", gf.num().to_string()}, {"denominator", gf.den().to_string()}, {"coefficients", coeffs}};
    const GrowthRate gr = growth_rate_rational(gf);
    if (gr.kind == GrowthRate::Kind::exponential) {
        data["growth"] = fixed(gr.value);
        data["dominant_root"] = fixed(*gr.dominant_root);
    } else {
        data["growth"] = "subexponential";
    }
    r.info("series", gf.to_string(), data);
    return r;
}

Report run_root(const std::string& poly) {
    const Polynomial p = parse_polynomial(poly);
    Report r{"root", {{"polynomial", p.to_string()}}, {}};
    const long double root = positive_root(p);
    const double residual = std::abs(static_cast<double>(p.eval(root)));
    r.exact("positive-root", residual < 1e-7, fixed(root),
            {{"root", static_cast<double>(root)}, {"residual", residual}, {"residual_tolerance", 1e-7}});
    return r;
}

Report run_grid(const std::string& matrix, const std::string& check, std::size_t n, const Globals& g) {
    guard(n, SizeGuards::grid_size, "grid size", g.force);
    const GridMatrix a = GridMatrix::parse(matrix);
    if (check == "centro" || check == "thm34")
        guard_grid_words(check == "thm34" ? rc_component_pairing(a).checked : a, 2 * n, g.force);
    else if (check == "geom")
        guard_grid_words(a, n, g.force);
    if (check == "graph") return grid_graph_report(a);
    if (check == "thm34") return grid_split_report(a, n);
    if (check == "geom") return grid_geom_report(a, n);
    return grid_centro_report(a, n);
}

void add_witness(Report& r, const std::string& name, const WitnessReport& w) {
    Json data = {{"sigma", w.sigma.to_string()}, {"bound", w.bound}, {"method", to_string(w.method)}};
    if (w.found()) {
        data["witness"] = w.witness->to_string();
        r.exact(name, true, "found " + w.witness->to_string(), data);
    } else {
        r.info(name, "none up to size " + std::to_string(w.bound), data);
    }
}

Report run_atomic(const std::string& cls, const std::string& sigma, std::size_t bound, std::size_t max_sigma,
                  const Globals& g) {
    guard(bound, SizeGuards::class_size, "search bound", g.force);
    const ClassSpec spec = parse_class_spec(cls);
    Report r{"atomic", {{"class", spec.to_string()}, {"bound", bound}}, {}};
    add_warnings(r, spec);
    const bool rc_inv = syntactically_rc_invariant(spec);
    if (!sigma.empty()) {
        const Permutation s = parse_permutation(sigma);
        r.inputs["sigma"] = s.to_string();
        ClassEnumerator en(spec, g.opts());
        add_witness(r, "rc-witness", rc_witness(en, s, bound));
        if (rc_inv) add_witness(r, "centro-witness", centro_witness(en, s, bound));
        return r;
    }
    r.inputs["max_sigma"] = max_sigma;
    const auto atomic = is_rc_atomic_up_to(spec, max_sigma, bound, g.opts());
    for (const auto& w : atomic.results) add_witness(r, "rc-witness/" + w.sigma.to_string(), w);
    r.info("rc-witness", atomic.summary());
    const auto gen = generated_by_centro_up_to(spec, max_sigma, bound, g.opts());
    for (const auto& w : gen.results) add_witness(r, "centro-witness/" + w.sigma.to_string(), w);
    r.info("centro-witness", gen.summary());
    return r;
}

Report run_verify(const std::string& target, std::optional<std::size_t> max, const Globals& g) {
    if (target == "table1") return verify_table1(max.value_or(11), g.opts(), g.force);
    if (target == "table2") return verify_table2(max.value_or(10), g.opts(), g.force);
    if (target == "table3") return verify_table3(max.value_or(10), g.opts(), g.force);
    if (target == "section5") {
        guard(max.value_or(10), SizeGuards::class_size, "class size", g.force);
        return verify_sum_closures(8, max.value_or(10), g.opts());
    }
    Report all{"verify all", Json::object(), {}};
    all.append(verify_table1(11, g.opts()), "table1");
    all.append(verify_table2(10, g.opts()), "table2");
    all.append(verify_table3(10, g.opts()), "table3");
    all.append(verify_sum_closures(8, 10, g.opts()), "section5");
    return all;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Enumerate permutation classes and their centrosymmetric members"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--seed-order", g.seed_order, "Enumeration order (only lex is supported)")
        ->check(CLI::IsMember({"lex"}));
    app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::PositiveNumber);
    app.add_flag("--force", g.force, "Run past the default size limits");

    std::string cls, expr, matrix, check = "centro", sigma, target;
    std::size_t n = 0, max_n = 0, terms = 10, bound = 8, max_sigma = 3;
    std::optional<std::size_t> max;
    bool centro = false;

    auto* enumerate = app.add_subcommand("enumerate", "List the members of one size");
    enumerate->add_option("--class", cls, "Class description")->required();
    enumerate->add_option("--n", n, "Size")->required();
    enumerate->add_flag("--centro", centro, "Only centrosymmetric members");

    auto* counts = app.add_subcommand("counts", "Count table up to a size");
    counts->add_option("--class", cls, "Class description")->required();
    counts->add_option("--max-n", max_n, "Largest size")->required();

    auto* gf = app.add_subcommand("gf", "Expand a rational generating function");
    gf->add_option("expr", expr, "Expression such as (1-x)^2/(1-3x+2x^2-x^3)")->required();
    gf->add_option("--terms", terms, "Number of coefficients")->check(CLI::PositiveNumber);

    auto* root = app.add_subcommand("root", "Unique positive root of a polynomial");
    root->add_option("poly", expr, "Polynomial such as x^5-2x^4-x^2-x-1")->required();

    auto* grid = app.add_subcommand("grid", "Geometric grid class checks");
    grid->add_option("--matrix", matrix, "Rows separated by ';', entries by ','")->required();
    grid->add_option("--check", check, "Which check")->check(CLI::IsMember({"graph", "thm34", "geom", "centro"}));
    grid->add_option("--n", n, "Size (half-size for centro and thm34)")->required();

    auto* atomic = app.add_subcommand("atomic", "Bounded witness searches");
    atomic->add_option("--class", cls, "Class description")->required();
    atomic->add_option("--sigma", sigma, "Single pattern to test");
    atomic->add_option("--bound", bound, "Largest witness size")->required();
    atomic->add_option("--max-sigma", max_sigma, "Largest pattern size when --sigma is absent");

    auto* verify = app.add_subcommand("verify", "Golden verifications");
    verify->add_option("--target", target, "What to verify")
        ->required()
        ->check(CLI::IsMember({"table1", "table2", "table3", "section5", "all"}));
    verify->add_option("--max", max, "Largest size");

    auto* scan = app.add_subcommand("scan", "Bounds, growth diagnostics and indecomposable counts");
    scan->add_option("--class", cls, "Class description")->required();
    scan->add_option("--max-n", max_n, "Largest size")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        Report r;
        if (enumerate->parsed())
            r = run_enumerate(cls, n, centro, g);
        else if (counts->parsed())
            r = run_counts(cls, max_n, g);
        else if (gf->parsed())
            r = run_gf(expr, terms);
        else if (root->parsed())
            r = run_root(expr);
        else if (grid->parsed())
            r = run_grid(matrix, check, n, g);
        else if (atomic->parsed())
            r = run_atomic(cls, sigma, bound, max_sigma, g);
        else if (verify->parsed())
            r = run_verify(target, max, g);
        else
            r = conjecture_scan(parse_class_spec(cls), max_n, g.opts(), g.force);
        return emit(r, g);
    } catch (const SizeGuardError& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 2;
    } catch (const FormatError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const CapabilityError& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
