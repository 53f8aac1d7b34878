#pragma once

/**
 * @file harness.hpp
 * @brief Built-in catalog of classes, golden verifications, conjecture scans,
 *        and the serializable report type shared with the command line tool.
 *
 * Reports keep two kinds of entries apart: exact checks, which pass or fail,
 * and diagnostics, which carry numbers (ratios, n-th roots) but never a
 * verdict about limits.
 */

#include "centro/atomicity.hpp"
#include "centro/class_spec.hpp"
#include "centro/enumerate.hpp"
#include "centro/error.hpp"
#include "centro/grid.hpp"
#include "centro/series.hpp"

#include <json.hpp>

#include <cmath>
#include <functional>
#include <iomanip>
#include <optional>
#include <regex>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <string>
#include <vector>

namespace centro {

using Json = nlohmann::json;

// ---------------------------------------------------------------------------
// Report

struct Check {
    enum class Status { pass, fail, info };
    std::string name;
    Status status = Status::info;
    std::string message;
    Json data = Json::object();

    friend bool operator==(const Check&, const Check&) = default;
};

inline const char* to_string(Check::Status s) {
    switch (s) {
        case Check::Status::pass: return "pass";
        case Check::Status::fail: return "fail";
        default: return "info";
    }
}

inline Check::Status parse_status(const std::string& s) {
    if (s == "pass") return Check::Status::pass;
    if (s == "fail") return Check::Status::fail;
    if (s == "info") return Check::Status::info;
    throw FormatError("unknown check status '" + s + "'");
}

struct Report {
    std::string command;
    Json inputs = Json::object();
    std::vector<Check> checks;

    friend bool operator==(const Report&, const Report&) = default;

    bool passed() const {
        return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == Check::Status::fail; });
    }
    std::size_t count(Check::Status s) const {
        return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [&](const Check& c) { return c.status == s; }));
    }

    Check& exact(std::string name, bool ok, std::string message, Json data = Json::object()) {
        checks.push_back({std::move(name), ok ? Check::Status::pass : Check::Status::fail, std::move(message), std::move(data)});
        return checks.back();
    }
    Check& info(std::string name, std::string message, Json data = Json::object()) {
        checks.push_back({std::move(name), Check::Status::info, std::move(message), std::move(data)});
        return checks.back();
    }
    void append(const Report& other, const std::string& prefix = {}) {
        for (Check c : other.checks) {
            if (!prefix.empty()) c.name = prefix + "/" + c.name;
            checks.push_back(std::move(c));
        }
    }

    Json to_json() const {
        Json out;
        out["command"] = command;
        out["inputs"] = inputs;
        out["passed"] = passed();
        Json arr = Json::array();
        for (const auto& c : checks)
            arr.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"message", c.message}, {"data", c.data}});
        out["checks"] = std::move(arr);
        return out;
    }

    static Report from_json(const Json& j) {
        Report r;
        try {
            r.command = j.at("command").get<std::string>();
            r.inputs = j.at("inputs");
            for (const auto& c : j.at("checks"))
                r.checks.push_back({c.at("name").get<std::string>(), parse_status(c.at("status").get<std::string>()),
                                    c.at("message").get<std::string>(), c.at("data")});
        } catch (const Json::exception& e) {
            throw FormatError(std::string("malformed report: ") + e.what());
        }
        return r;
    }

    std::string to_text() const {
        std::ostringstream out;
        out << command;
        if (!inputs.empty()) out << " " << inputs.dump();
        out << "\n";
        for (const auto& c : checks) {
            out << "  [" << to_string(c.status) << "] " << c.name;
            if (!c.message.empty()) out << ": " << c.message;
            out << "\n";
            for (const auto& [key, v] : c.data.items()) {
                out << "      " << key << ": ";
                if (v.is_array()) {
                    for (std::size_t i = 0; i < v.size(); ++i)
                        out << (i ? ", " : "") << (v[i].is_string() ? v[i].get<std::string>() : v[i].dump());
                } else {
                    out << (v.is_string() ? v.get<std::string>() : v.dump());
                }
                out << "\n";
            }
        }
        out << (passed() ? "PASSED" : "FAILED") << " (" << count(Check::Status::pass) << " pass, "
            << count(Check::Status::fail) << " fail, " << count(Check::Status::info) << " info)\n";
        return out.str();
    }

    // One row per scalar; arrays are flattened with their index.
    std::string to_csv() const {
        std::ostringstream out;
        out << "check,status,field,index,value\n";
        auto cell = [](std::string s) {
            if (s.find_first_of(",\"\n") == std::string::npos) return s;
            std::string q = "\"";
            for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
            return q + "\"";
        };
        auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
        for (const auto& c : checks) {
            const std::string head = cell(c.name) + "," + to_string(c.status) + ",";
            if (c.data.empty()) {
                out << head << ",," << cell(c.message) << "\n";
                continue;
            }
            for (const auto& [key, v] : c.data.items()) {
                if (v.is_array()) {
                    for (std::size_t i = 0; i < v.size(); ++i)
                        out << head << cell(key) << "," << i << "," << cell(scalar(v[i])) << "\n";
                } else {
                    out << head << cell(key) << ",," << cell(scalar(v)) << "\n";
                }
            }
        }
        return out.str();
    }
};

// ---------------------------------------------------------------------------
// Reference sequences

// f_1 = f_2 = 1, and f_{-1} = 1 by extending the recurrence backwards.
inline std::uint64_t fibonacci(long n) {
    if (n == -1) return 1;
    if (n < -1) throw DomainError("fibonacci index below -1");
    std::uint64_t a = 0, b = 1;
    for (long i = 0; i < n; ++i) a = std::exchange(b, a + b);
    return a;
}

inline std::uint64_t central_binomial(std::size_t k) { return binomial(2 * k, k).convert_to<std::uint64_t>(); }
inline std::uint64_t catalan(std::size_t k) { return central_binomial(k) / (k + 1); }

struct ClaimedGrowth {
    std::string exact;
    double value = 0;
};

struct CatalogEntry {
    std::string id;
    std::string group;      // table1, table2, table3, sum-closure, grid, finite
    std::string spec_text;  // canonical class description
    std::string base_text;  // D for unions D u rc(D)
    std::optional<bool> sum_closed;
    std::optional<bool> rc_growth_equal;
    std::optional<ClaimedGrowth> growth;
    std::optional<ClaimedGrowth> rc_growth;
    std::function<std::uint64_t(std::size_t)> centro_reference;  // |C^rc_m| by closed form
    std::string gf;      // generating function of the class, if known
    std::string ind_gf;  // generating function of its indecomposables, if known

    ClassSpec spec() const { return parse_class_spec(spec_text); }
};

namespace detail {

inline ClaimedGrowth claim(std::string exact, double value) { return {std::move(exact), value}; }

inline std::vector<CatalogEntry> build_catalog() {
    const auto phi2 = claim("(3+sqrt5)/2", (3 + std::sqrt(5.0)) / 2);
    std::vector<CatalogEntry> c;
    auto add = [&](CatalogEntry e) { c.push_back(std::move(e)); };

    add({"Av(321)", "table1", "av:321", "", true, true, claim("4", 4), claim("4", 4),
         [](std::size_t m) { return m % 2 == 0 ? central_binomial(m / 2) : catalan(m / 2); }, "", ""});
    // Even sizes f_{2k+1}, odd sizes f_{2k-1} with f_1 = f_2 = 1.
    add({"Av(321,3412)", "table1", "av:321,3412", "", true, true, phi2, phi2,
         [](std::size_t m) {
             const long k = static_cast<long>(m / 2);
             return m % 2 == 0 ? fibonacci(2 * k + 1) : fibonacci(2 * k - 1);
         },
         "", ""});
    add({"Av(231,312)", "table1", "av:231,312", "", true, true, claim("2", 2), claim("2", 2),
         [](std::size_t m) { return std::uint64_t{1} << (m / 2); }, "(1-x)/(1-2x)", "x/(1-x)"});
    add({"Av(231,312,321)", "table1", "av:231,312,321", "", true, true, claim("(1+sqrt5)/2", (1 + std::sqrt(5.0)) / 2),
         claim("(1+sqrt5)/2", (1 + std::sqrt(5.0)) / 2),
         [](std::size_t m) {
             const long k = static_cast<long>(m / 2);
             return m % 2 == 0 ? fibonacci(k + 2) : fibonacci(k + 1);
         },
         "", ""});

    auto row = [&](std::string basis, bool sum_closed, bool equal, ClaimedGrowth g, ClaimedGrowth grc) {
        add({"Av(" + basis + ")", "table2", "av:" + basis, "", sum_closed, equal, std::move(g), std::move(grc), {}, "", ""});
    };
    row("321", true, true, claim("4", 4), claim("4", 4));
    row("4321", true, true, claim("9", 9), claim("9", 9));
    row("231,312", true, true, claim("2", 2), claim("2", 2));
    row("321,3412", true, true, phi2, phi2);
    row("321,3142", true, true, phi2, phi2);
    row("231,312,321", true, true, claim("(1+sqrt5)/2", (1 + std::sqrt(5.0)) / 2),
        claim("(1+sqrt5)/2", (1 + std::sqrt(5.0)) / 2));
    row("2413,3142", true, true, claim("3+2sqrt2", 3 + 2 * std::sqrt(2.0)), claim("3+2sqrt2", 3 + 2 * std::sqrt(2.0)));
    row("3412,4321", true, true, claim("4", 4), claim("4", 4));
    row("3142,4321", true, true, claim("2+sqrt3", 2 + std::sqrt(3.0)), claim("2+sqrt3", 2 + std::sqrt(3.0)));
    row("2143,321", false, true, claim("2", 2), claim("2", 2));
    row("2143,3412", false, true, claim("4", 4), claim("4", 4));
    row("1324,4231", false, false, claim("2+sqrt2", 2 + std::sqrt(2.0)), claim("2", 2));
    row("2143,4321", false, false, phi2, claim("2", 2));

    auto union_row = [&](std::string d, ClaimedGrowth g, ClaimedGrowth grc) {
        add({"Av(" + d + ") u rc", "table3", "union(av:" + d + ",rc(av:" + d + "))", "av:" + d, false, false,
             std::move(g), std::move(grc), {}, "", ""});
    };
    union_row("312", claim("4", 4), claim("2", 2));
    union_row("4123", claim("9", 9), claim("4", 4));
    union_row("4312", claim("9", 9), claim("2+sqrt5", 2 + std::sqrt(5.0)));

    add({"Av(2413,3142,321)", "sum-closure", "av:2413,3142,321", "", true, std::nullopt,
         claim("root of x^3-3x^2+2x-1", 2.324717957244746), std::nullopt, {}, "(1-x)^2/(1-3x+2x^2-x^3)",
         "(x-x^2+x^3)/(1-x)^2"});
    add({"Av(312,3421,4321)", "sum-closure", "av:312,3421,4321", "", true, std::nullopt,
         claim("1+sqrt2", 1 + std::sqrt(2.0)), std::nullopt, {}, "(1-x-x^2)/(1-2x-x^2)", "x/(1-x-x^2)"});
    add({"sum closure of monotone skew monotone", "sum-closure", "sumclosure:monotone-skew-monotone", "", true,
         std::nullopt, claim("root of x^3-3x^2+2x-1", 2.324717957244746), std::nullopt, {},
         "(1-x)^2/(1-3x+2x^2-x^3)", "(x-x^2+x^3)/(1-x)^2"});
    add({"sum closure of layered skew one", "sum-closure", "sumclosure:layered-skew-one", "", true, std::nullopt,
         claim("1+sqrt2", 1 + std::sqrt(2.0)), std::nullopt, {}, "(1-x-x^2)/(1-2x-x^2)", "x/(1-x-x^2)"});

    add({"X-class", "grid", "geom:[-1,1;1,-1]", "", false, false, claim("2+sqrt2", 2 + std::sqrt(2.0)),
         claim("2", 2), [](std::size_t m) { return m % 2 == 0 ? std::uint64_t{1} << (m / 2) : 0; }, "", ""});
    add({"Av(12,21)", "finite", "av:12,21", "", false, true, claim("0", 0), claim("0", 0), {}, "1+x", ""});
    return c;
}

}  // namespace detail

inline const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = detail::build_catalog();
    return entries;
}

inline std::vector<const CatalogEntry*> catalog_group(std::string_view group) {
    std::vector<const CatalogEntry*> out;
    for (const auto& e : catalog())
        if (e.group == group) out.push_back(&e);
    return out;
}

// ---------------------------------------------------------------------------
// Golden fixtures: "id: v0,v1,... # [PAPER: where]"

struct FixtureLine {
    std::string id;
    std::vector<BigInt> values;
    std::string tag_kind;    // PAPER, TRIVIAL or DERIVED
    std::string tag_detail;  // free text after the colon
    std::size_t line = 0;

    std::vector<std::uint64_t> as_u64() const {
        std::vector<std::uint64_t> out;
        for (const auto& v : values) out.push_back(v.convert_to<std::uint64_t>());
        return out;
    }
};

// Blank lines and lines starting with '#' are ignored; every other line must
// carry a provenance tag.
inline std::vector<FixtureLine> parse_fixtures(std::istream& in) {
    static const std::regex line_re(
        R"(^\s*([A-Za-z0-9_.:()\-]+)\s*:\s*(-?[0-9]+(?:\s*,\s*-?[0-9]+)*)\s*#\s*\[(PAPER|TRIVIAL|DERIVED)(?::\s*([^\]]*))?\]\s*$)");
    std::vector<FixtureLine> out;
    std::string text;
    std::size_t lineno = 0;
    while (std::getline(in, text)) {
        ++lineno;
        const auto first = text.find_first_not_of(" \t\r");
        if (first == std::string::npos || text[first] == '#') continue;
        std::smatch m;
        if (!std::regex_match(text, m, line_re))
            throw FormatError("fixture line " + std::to_string(lineno) + " is malformed or untagged: " + text);
        FixtureLine fl;
        fl.id = m[1];
        fl.tag_kind = m[3];
        fl.tag_detail = m[4];
        fl.line = lineno;
        std::stringstream vals(m[2].str());
        std::string tok;
        while (std::getline(vals, tok, ',')) {
            tok.erase(0, tok.find_first_not_of(" \t"));
            tok.erase(tok.find_last_not_of(" \t") + 1);
            fl.values.emplace_back(tok);
        }
        out.push_back(std::move(fl));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Size guards

struct SizeGuards {
    static constexpr std::size_t class_size = 10;
    static constexpr std::size_t centro_size = 14;
    static constexpr std::size_t grid_size = 8;
    static constexpr std::uint64_t grid_words = std::uint64_t{1} << 24;  // words drawn per size
};

class SizeGuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline void guard(std::size_t requested, std::size_t limit, const std::string& what, bool force) {
    if (!force && requested > limit)
        throw SizeGuardError(what + " " + std::to_string(requested) + " exceeds the default limit " +
                             std::to_string(limit) + "; pass --force to run anyway");
}

// Word enumeration of Geom(A) at `length` draws cells^length words.
inline void guard_grid_words(const GridMatrix& a, std::size_t length, bool force) {
    if (force || length == 0) return;
    const std::size_t cells = GeomClass(a).drawing_matrix().nonzero_cells().size();
    long double words = 1;
    for (std::size_t i = 0; i < length; ++i) words *= static_cast<long double>(cells);
    if (words > static_cast<long double>(SizeGuards::grid_words))
        throw SizeGuardError("grid enumeration at size " + std::to_string(length) + " draws " + std::to_string(cells) +
                             "^" + std::to_string(length) + " words, over the default budget of 2^24; pass --force to run anyway");
}

// ---------------------------------------------------------------------------
// Diagnostics helpers

namespace detail {

inline Json seq_json(const std::vector<std::uint64_t>& v) { return Json(v); }

inline Json opt_json(const std::vector<std::optional<double>>& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(x ? Json(*x) : Json(nullptr));
    return out;
}

inline std::vector<double> defined(const std::vector<std::optional<double>>& v) {
    std::vector<double> out;
    for (const auto& x : v)
        if (x) out.push_back(*x);
    return out;
}

// Distances of the last `window` ratios to `target` never increase.
inline bool closing_in(const std::vector<double>& ratios, double target, std::size_t window = 3) {
    if (ratios.size() < window) return false;
    double prev = std::abs(ratios[ratios.size() - window] - target);
    for (std::size_t i = ratios.size() - window + 1; i < ratios.size(); ++i) {
        const double d = std::abs(ratios[i] - target);
        if (d > prev + 1e-12) return false;
        prev = d;
    }
    return true;
}

template <class F>
void run_jobs(std::size_t count, unsigned jobs, F f) {
    fan_out(count, jobs, f);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Verifications

inline Report verify_table1(std::size_t max_size = 11, EnumOptions opts = {}, bool force = false) {
    guard(max_size, SizeGuards::centro_size, "centrosymmetric size", force);
    Report rep{"verify table1", {{"max", max_size}}, {}};
    const auto rows = catalog_group("table1");
    std::vector<Report> parts(rows.size());
    detail::run_jobs(rows.size(), opts.jobs, [&](std::size_t i) {
        const auto& e = *rows[i];
        ClassEnumerator en(e.spec(), {1});
        std::vector<std::uint64_t> actual, expected;
        for (std::size_t m = 0; m <= max_size; ++m) {
            actual.push_back(en.centro_level(m).size());
            expected.push_back(e.centro_reference(m));
        }
        parts[i].exact(e.id, actual == expected, actual == expected ? "matches closed form" : "differs from closed form",
                       {{"expected", expected}, {"actual", actual}});
    });
    for (const auto& p : parts) rep.append(p);
    return rep;
}

inline Report verify_table2(std::size_t max_size = 10, EnumOptions opts = {}, bool force = false) {
    guard(max_size, SizeGuards::class_size, "class size", force);
    Report rep{"verify table2", {{"max", max_size}}, {}};
    const auto rows = catalog_group("table2");
    std::vector<Report> parts(rows.size());
    const std::size_t half = max_size / 2;
    detail::run_jobs(rows.size(), opts.jobs, [&](std::size_t i) {
        const auto& e = *rows[i];
        Report& r = parts[i];
        const ClassSpec spec = e.spec();
        r.exact(e.id + "/rc-invariant", syntactically_rc_invariant(spec), "basis closed under rc");
        const bool sc = syntactically_sum_closed(spec);
        r.exact(e.id + "/sum-closed", sc == *e.sum_closed, std::string("sum closed: ") + (sc ? "yes" : "no"));
        const CountTable t = count_table(spec, half);
        const auto bad = bound_violation(t);
        r.exact(e.id + "/bounds", !bad, bad ? "bound violated at n=" + std::to_string(*bad) : "b_n <= a_2n and b_n <= 2^n a_n",
                {{"a", t.a}, {"b_even", t.b_even}});
        const auto ga = empirical_growth(t.a), gb = empirical_growth(t.b_even);
        const auto ra = detail::defined(ga.ratios), rb = detail::defined(gb.ratios);
        Json diag = {{"a_ratios", detail::opt_json(ga.ratios)},
                     {"b_ratios", detail::opt_json(gb.ratios)},
                     {"growth", e.growth->exact},
                     {"growth_value", e.growth->value},
                     {"rc_growth", e.rc_growth->exact},
                     {"rc_growth_value", e.rc_growth->value},
                     {"a_closing_in", detail::closing_in(ra, e.growth->value)},
                     {"b_closing_in", detail::closing_in(rb, e.rc_growth->value)}};
        std::string msg = "ratio trends (diagnostic only)";
        if (!*e.rc_growth_equal && !ra.empty() && !rb.empty()) {
            const bool below = rb.back() < ra.back();
            diag["b_ratio_below_a_ratio"] = below;
            msg += below ? "; b ratios trend below a ratios" : "; b ratios not yet below a ratios";
        }
        r.info(e.id + "/trend", msg, diag);
    });
    for (const auto& p : parts) rep.append(p);
    return rep;
}

inline Report verify_table3(std::size_t max_size = 10, EnumOptions opts = {}, bool force = false) {
    guard(max_size, SizeGuards::class_size, "class size", force);
    Report rep{"verify table3", {{"max", max_size}}, {}};
    const auto rows = catalog_group("table3");
    std::vector<Report> parts(rows.size());
    detail::run_jobs(rows.size(), opts.jobs, [&](std::size_t i) {
        const auto& e = *rows[i];
        Report& r = parts[i];
        const ClassSpec d = parse_class_spec(e.base_text);
        r.exact(e.id + "/rc-invariant", syntactically_rc_invariant(e.spec()), "union of a class and its rc image");
        const auto chk = union_centro_check(d, max_size);
        r.exact(e.id + "/centro-identity", chk.holds,
                chk.holds ? "centrosymmetric members of the union equal those of the intersection"
                          : "centrosymmetric counts differ" +
                                (chk.counterexample ? " (e.g. " + chk.counterexample->to_string() + ")" : std::string()),
                {{"union", chk.union_counts}, {"intersection", chk.intersection_counts}});
        if (e.base_text == "av:312") {
            std::vector<std::uint64_t> even, powers;
            for (std::size_t m = 0; m <= max_size; m += 2) {
                even.push_back(chk.union_counts[m]);
                powers.push_back(std::uint64_t{1} << (m / 2));
            }
            r.exact(e.id + "/powers-of-two", even == powers, "even centrosymmetric counts are 2^k",
                    {{"expected", powers}, {"actual", even}});
        }
        const auto g = empirical_growth(chk.union_counts);
        r.info(e.id + "/trend", "diagnostic only",
               {{"growth", e.growth->exact}, {"rc_growth", e.rc_growth->exact}, {"centro_ratios", detail::opt_json(g.ratios)}});
    });
    for (const auto& p : parts) rep.append(p);
    return rep;
}

struct RootClaim {
    std::string name;
    std::string polynomial;
    double printed;
};

inline const std::vector<RootClaim>& threshold_roots() {
    static const std::vector<RootClaim> roots{
        {"xi", "x^5-2x^4-x^2-x-1", 2.30522}, {"tau", "x^3-3x^2+2x-1", 2.32472}, {"1+sqrt2", "x^2-2x-1", 2.41421}};
    return roots;
}

inline Report verify_roots() {
    Report rep{"verify roots", Json::object(), {}};
    for (const auto& rc : threshold_roots()) {
        const Polynomial p = parse_polynomial(rc.polynomial);
        const long double root = positive_root(p);
        const double residual = std::abs(static_cast<double>(p.eval(root)));
        const double err = std::abs(static_cast<double>(root) - rc.printed);
        rep.exact(rc.name, err < 1e-5 && residual < 1e-7, "positive root of " + rc.polynomial,
                  {{"root", static_cast<double>(root)}, {"printed", rc.printed}, {"tolerance", 1e-5},
                   {"residual", residual}, {"residual_tolerance", 1e-7}});
    }
    return rep;
}

inline Report verify_sum_closures(std::size_t agree_to = 8, std::size_t expand_to = 10, EnumOptions opts = {}) {
    Report rep{"verify sum-closures", {{"agree_to", agree_to}, {"expand_to", expand_to}}, {}};
    struct Pair {
        const char* closure;
        const char* basis;
    };
    const Pair pairs[] = {{"sumclosure:monotone-skew-monotone", "av:2413,3142,321"},
                          {"sumclosure:layered-skew-one", "av:312,3421,4321"}};
    std::vector<Report> parts(2);
    detail::run_jobs(2, opts.jobs, [&](std::size_t i) {
        Report& r = parts[i];
        const ClassSpec closure = parse_class_spec(pairs[i].closure), basis = parse_class_spec(pairs[i].basis);
        const auto agree = classes_agree(closure, basis, agree_to);
        r.exact(std::string(pairs[i].basis) + "/agrees", agree.agree,
                agree.agree ? std::string("sum closure equals the avoidance class through size ") + std::to_string(agree_to)
                            : "differ at size " + std::to_string(*agree.size) + " on " + agree.witness->to_string());

        const CatalogEntry* e = nullptr;
        for (const auto* c : catalog_group("sum-closure"))
            if (c->spec_text == pairs[i].basis) e = c;
        ClassEnumerator en(basis);
        std::vector<std::uint64_t> counts, ind;
        for (std::size_t n = 0; n <= expand_to; ++n) {
            const auto& lv = en.level(n);
            counts.push_back(lv.size());
            ind.push_back(n == 0 ? 0 : static_cast<std::uint64_t>(std::count_if(lv.begin(), lv.end(), is_sum_indecomposable)));
        }
        const RationalGF a = parse_gf(e->gf), c = parse_gf(e->ind_gf);
        auto to_u64 = [](const Series& s) {
            std::vector<std::uint64_t> out;
            for (const auto& v : s.integers()) out.push_back(v.convert_to<std::uint64_t>());
            return out;
        };
        const auto a_exp = to_u64(expand(a, expand_to + 1)), c_exp = to_u64(expand(c, expand_to + 1));
        r.exact(std::string(pairs[i].basis) + "/gf", a_exp == counts, "expansion of " + e->gf + " matches enumeration",
                {{"expected", a_exp}, {"actual", counts}});
        r.exact(std::string(pairs[i].basis) + "/ind-gf", c_exp == ind, "expansion of " + e->ind_gf + " matches indecomposables",
                {{"expected", c_exp}, {"actual", ind}});
        r.exact(std::string(pairs[i].basis) + "/sum-closure-gf", sum_closure_gf(c) == a, "1/(1-C) reduces to the class series",
                {{"computed", sum_closure_gf(c).to_string()}});
        if (i == 0) {
            bool linear = true;
            for (std::size_t n = 2; n <= std::min<std::size_t>(expand_to, 8); ++n) linear = linear && ind[n] == n - 1;
            r.exact(std::string(pairs[i].basis) + "/ind-linear", linear, "indecomposables of size n number n-1 for n>=2",
                    {{"ind", ind}});
        }
        const GrowthRate g = growth_rate_rational(a);
        r.exact(std::string(pairs[i].basis) + "/growth", g.kind == GrowthRate::Kind::exponential &&
                                                             std::abs(static_cast<double>(g.value) - e->growth->value) < 1e-5,
                "growth rate from the denominator",
                {{"computed", static_cast<double>(g.value)}, {"claimed", e->growth->value}, {"tolerance", 1e-5}});
    });
    for (const auto& p : parts) rep.append(p);
    rep.append(verify_roots(), "roots");
    return rep;
}

// Conjecture-oriented scan of a single class: bounds, growth diagnostics,
// convolution identities and the indecomposable lower bound.
inline Report conjecture_scan(const ClassSpec& spec, std::size_t max_size, EnumOptions opts = {}, bool force = false) {
    guard(max_size, SizeGuards::class_size, "class size", force);
    Report rep{"scan", {{"class", spec.to_string()}, {"max", max_size}}, {}};
    const std::size_t half = max_size / 2;
    const CountTable t = count_table(spec, half, opts);
    const bool rc_inv = syntactically_rc_invariant(spec);
    const bool sc = syntactically_sum_closed(spec);
    rep.info("counts", "exact counts",
             {{"a", t.a}, {"b_even", t.b_even}, {"b_odd", t.b_odd}, {"c", t.c}, {"d", t.d}});

    if (rc_inv) {
        const auto bad = bound_violation(t);
        rep.exact("bounds", !bad,
                  bad ? "b_n exceeds a proven bound at n=" + std::to_string(*bad) + " (indicates a defect)"
                      : "b_n <= a_2n and b_n <= 2^n a_n");
        std::vector<std::optional<double>> rb, ra;
        for (std::size_t n = 1; n <= half; ++n) {
            rb.push_back(t.b_even[n] ? std::optional<double>(std::pow(double(t.b_even[n]), 1.0 / double(n))) : std::nullopt);
            ra.push_back(t.a[n] ? std::optional<double>(std::pow(double(t.a[n]), 1.0 / double(n))) : std::nullopt);
        }
        rep.info("roots", "b_n^(1/n) against a_n^(1/n), n>=1 (diagnostic only)",
                 {{"b_root", detail::opt_json(rb)}, {"a_root", detail::opt_json(ra)}});
        if (t.a.back() == 0) {
            rep.exact("finite-class", t.b_even.back() == 0,
                      "class is finite; centrosymmetric counts vanish as well, so both diagnostics are 0");
        }
    } else {
        rep.info("bounds", "class not recognisably rc-invariant; centrosymmetric comparison skipped");
    }

    if (sc) {
        const auto ident = check_sum_closure_identity(t);
        rep.exact("sum-closure-identity", ident.holds,
                  ident.holds ? "A(1-C) = 1 through size " + std::to_string(ident.checked_to)
                              : "fails at n=" + std::to_string(*ident.first_failure));
        if (rc_inv) {
            const auto conv = check_convolution(t);
            rep.exact("convolution", conv.holds,
                      conv.holds ? "b_n = a_n + sum a_{n-k} d_k through n=" + std::to_string(conv.checked_to)
                                 : "fails at n=" + std::to_string(*conv.first_failure));
        }
        const auto& c = t.c;
        const bool increasing = c.size() >= 4 && c[c.size() - 1] > c[c.size() - 2] && c[c.size() - 2] > c[c.size() - 3];
        std::vector<std::size_t> below;
        for (std::size_t n = 1; n < c.size(); ++n)
            if (c[n] + 1 < n) below.push_back(n);
        std::string msg = increasing ? "indecomposable counts still increasing at the horizon" : "indecomposable counts not increasing at the horizon";
        if (increasing) msg += below.empty() ? "; c_n >= n-1 throughout" : "; counterexample candidates below n-1";
        rep.info("ind-lower-bound", msg,
                 {{"increasing", increasing}, {"below_n_minus_1", below}, {"tight", increasing && [&] {
                      for (std::size_t n = 2; n < c.size(); ++n)
                          if (c[n] != n - 1) return false;
                      return true;
                  }()}});
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Grid-class reports

namespace detail {

inline Json cells_json(const std::vector<Cell>& cells) {
    Json out = Json::array();
    for (Cell c : cells) out.push_back("(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")");
    return out;
}

}  // namespace detail

inline Report grid_graph_report(const GridMatrix& a) {
    Report rep{"grid graph", {{"matrix", a.to_string()}}, {}};
    const CellGraph g = cell_graph(a);
    Json edges = Json::array();
    for (auto [u, v] : g.edges)
        edges.push_back(detail::cells_json({g.vertices[u]})[0].get<std::string>() + "-" +
                        detail::cells_json({g.vertices[v]})[0].get<std::string>());
    rep.info("cell-graph", is_forest(g) ? "forest" : "has a cycle",
             {{"vertices", detail::cells_json(g.vertices)},
              {"edges", edges},
              {"components", g.component_count()},
              {"forest", is_forest(g)},
              {"rc_invariant_matrix", is_rc_matrix(a)}});
    return rep;
}

// Conditions (i) forest and (ii) rc pairs off components, and when (ii)
// holds the count identity |centrosymmetric gridded of size 2n| = |G_n(A_X)|.
inline Report grid_split_report(const GridMatrix& a, std::size_t max_n) {
    Report rep{"grid split", {{"matrix", a.to_string()}, {"n", max_n}}, {}};
    const auto pairing = rc_component_pairing(a);
    Json self = Json::array();
    for (const auto& comp : pairing.self_mapped) self.push_back(detail::cells_json(comp));
    rep.info("conditions", std::string("forest: ") + (pairing.forest ? "yes" : "no") +
                               ", rc pairs off components: " + (pairing.pairs_off ? "yes" : "no"),
             {{"checked_matrix", pairing.checked.to_string()},
              {"refined", pairing.normalized},
              {"forest", pairing.forest},
              {"pairs_off", pairing.pairs_off},
              {"self_mapped", self}});
    if (!pairing.pairs_off) return rep;
    const auto [ax, ay] = split_XY(a);
    rep.info("split", "A_X keeps one component of each pair", {{"A_X", ax.to_string()}, {"A_Y", ay.to_string()}});
    const GeomClass whole(pairing.checked), gx(ax);
    std::vector<std::uint64_t> centro, half;
    for (std::size_t n = 0; n <= max_n; ++n) {
        centro.push_back(centro_gridded_count(whole, 2 * n));
        half.push_back(gx.gridded_count(n));
    }
    rep.exact("gridded-identity", centro == half, "centrosymmetric gridded count at size 2n equals gridded count of A_X at n",
              {{"centro_gridded", centro}, {"A_X_gridded", half}});
    std::vector<std::uint64_t> direct, conv, squares;
    for (std::size_t n = 0; n <= max_n; ++n) {
        const auto id = gridded_count_identity(a, n);
        direct.push_back(id.direct);
        conv.push_back(id.convolution);
        squares.push_back(id.sum_of_squares);
    }
    rep.exact("gridded-product", direct == conv, "gridded count of A splits over A_X and A_Y",
              {{"direct", direct}, {"convolution", conv}, {"sum_of_squares", squares}});
    return rep;
}

inline Report grid_geom_report(const GridMatrix& a, std::size_t max_n) {
    Report rep{"grid geom", {{"matrix", a.to_string()}, {"n", max_n}}, {}};
    const GeomClass g(a);
    std::vector<std::uint64_t> members, gridded, most;
    for (std::size_t n = 0; n <= max_n; ++n) {
        members.push_back(g.members(n).size());
        gridded.push_back(g.gridded_count(n));
        most.push_back(g.max_griddings(n));
    }
    rep.info("counts", g.refined() ? "drawn on the doubled matrix" : "drawn on the matrix",
             {{"members", members}, {"gridded", gridded}, {"max_griddings", most}});
    return rep;
}

inline Report grid_centro_report(const GridMatrix& a, std::size_t max_n) {
    Report rep{"grid centro", {{"matrix", a.to_string()}, {"n", max_n}}, {}};
    const GeomClass g(a);
    const auto counts = centro_geom_counts(g, max_n);
    std::vector<std::uint64_t> with_gridding;
    for (std::size_t n = 0; n <= max_n; ++n) {
        std::uint64_t k = 0;
        for (const auto& p : g.members(2 * n))
            if (is_centrosymmetric(p) && has_centrosymmetric_gridding(p, g).found) ++k;
        with_gridding.push_back(k);
    }
    rep.info("centro-counts", "centrosymmetric members of even size 2n, n = 1.." + std::to_string(max_n),
             {{"sizes", [&] {
                   std::vector<std::size_t> v;
                   for (std::size_t n = 1; n <= max_n; ++n) v.push_back(2 * n);
                   return v;
               }()},
              {"counts", std::vector<std::uint64_t>(counts.begin() + 1, counts.end())},
              {"with_centrosymmetric_gridding", std::vector<std::uint64_t>(with_gridding.begin() + 1, with_gridding.end())}});
    return rep;
}

}  // namespace centro
