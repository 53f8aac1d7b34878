#include "centro/harness.hpp"

#include <catch_amalgamated.hpp>

#include <fstream>
#include <map>

using namespace centro;

namespace {

std::map<std::string, FixtureLine> golden() {
    std::ifstream in(CENTRO_FIXTURE_DIR "/golden.txt");
    REQUIRE(in);
    std::map<std::string, FixtureLine> out;
    for (auto& f : parse_fixtures(in)) out.emplace(f.id, std::move(f));
    return out;
}

std::string fixture_id(const std::string& basis) {
    std::string id = basis;
    std::replace(id.begin(), id.end(), ',', '-');
    return id;
}

Report sample_report() {
    Report r{"sample", {{"class", "av:321"}, {"n", 4}}, {}};
    r.exact("first", true, "ok", {{"a", std::vector<int>{1, 2, 5}}, {"note", "x,y"}});
    r.exact("second", false, "bad \"quote\"");
    r.info("third", "diagnostic", {{"ratio", 2.5}});
    return r;
}

}  // namespace

TEST_CASE("reports round-trip through JSON") {
    const Report r = sample_report();
    CHECK_FALSE(r.passed());
    CHECK(r.count(Check::Status::pass) == 1);
    const Json j = r.to_json();
    CHECK(j["passed"] == false);
    CHECK(j["checks"][2]["status"] == "info");
    CHECK(Report::from_json(j) == r);
    CHECK(Report::from_json(Json::parse(j.dump())) == r);
    CHECK_THROWS_AS(Report::from_json(Json{{"command", "x"}}), FormatError);
    Json bad = j;
    bad["checks"][0]["status"] = "maybe";
    CHECK_THROWS_AS(Report::from_json(bad), FormatError);
}

TEST_CASE("reports render as CSV and text") {
    const Report r = sample_report();
    const std::string csv = r.to_csv();
    CHECK(csv.rfind("check,status,field,index,value\n", 0) == 0);
    CHECK(csv.find("first,pass,a,1,2\n") != std::string::npos);
    CHECK(csv.find("first,pass,note,,\"x,y\"\n") != std::string::npos);
    CHECK(csv.find("second,fail,,,\"bad \"\"quote\"\"\"\n") != std::string::npos);
    const std::string text = r.to_text();
    CHECK(text.find("[fail] second") != std::string::npos);
    CHECK(text.find("a: 1, 2, 5") != std::string::npos);
    CHECK(text.find("FAILED (1 pass, 1 fail, 1 info)") != std::string::npos);
}

TEST_CASE("appending prefixes check names") {
    Report all{"all", Json::object(), {}};
    all.append(sample_report(), "part");
    CHECK(all.checks[0].name == "part/first");
}

TEST_CASE("fixture lines need a provenance tag") {
    const auto g = golden();
    CHECK(g.size() >= 10);
    for (const auto& [id, f] : g) CHECK((f.tag_kind == "PAPER" || f.tag_kind == "TRIVIAL" || f.tag_kind == "DERIVED"));

    std::istringstream ok("# comment\n\nx: 1, 2 ,3 # [TRIVIAL]\ny: -4 # [PAPER: Table 9]\n");
    const auto lines = parse_fixtures(ok);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0].as_u64() == std::vector<std::uint64_t>{1, 2, 3});
    CHECK(lines[0].tag_detail.empty());
    CHECK(lines[1].tag_detail == "Table 9");
    CHECK(lines[1].line == 4);

    std::istringstream untagged("x: 1,2,3\n");
    CHECK_THROWS_AS(parse_fixtures(untagged), FormatError);
    std::istringstream unknown("x: 1 # [GUESS]\n");
    CHECK_THROWS_AS(parse_fixtures(unknown), FormatError);
}

TEST_CASE("reference sequences") {
    CHECK(fibonacci(-1) == 1);
    CHECK(fibonacci(0) == 0);
    CHECK(fibonacci(1) == 1);
    CHECK(fibonacci(2) == 1);
    CHECK(fibonacci(12) == 144);
    CHECK(catalan(5) == 42);
    CHECK(central_binomial(5) == 252);
}

TEST_CASE("first-table closed forms match the printed sequences") {
    const auto g = golden();
    for (const auto* e : catalog_group("table1")) {
        const std::string basis = e->spec_text.substr(3);
        const auto& f = g.at("table1.Av(" + fixture_id(basis) + ")");
        CHECK(f.tag_kind == "PAPER");
        std::vector<std::uint64_t> computed;
        for (std::size_t m = 0; m < f.values.size(); ++m) computed.push_back(e->centro_reference(m));
        INFO(e->id);
        CHECK(computed == f.as_u64());
    }
}

TEST_CASE("catalog entries are rc-invariant as claimed") {
    for (const auto& e : catalog()) {
        INFO(e.id);
        if (e.group != "sum-closure") CHECK(syntactically_rc_invariant(e.spec()));
        if (e.sum_closed && e.group != "grid") CHECK(syntactically_sum_closed(e.spec()) == *e.sum_closed);
    }
    CHECK(catalog_group("table1").size() == 4);
    CHECK(catalog_group("table2").size() == 13);
    CHECK(catalog_group("table3").size() == 3);
}

TEST_CASE("bounds hold on every catalog count table") {
    for (const auto& e : catalog()) {
        INFO(e.id);
        const CountTable t = count_table(e.spec(), e.group == "grid" ? 3 : 4);
        CHECK_FALSE(bound_violation(t));
    }
}

TEST_CASE("second-table centrosymmetric sequences match the pinned snapshots") {
    const auto g = golden();
    for (const auto* e : catalog_group("table2")) {
        INFO(e->id);
        const auto& f = g.at("table2.Av(" + fixture_id(e->spec_text.substr(3)) + ").b");
        CHECK(f.tag_kind == "DERIVED");
        const CountTable t = count_table(e->spec(), f.values.size() - 1);
        CHECK(t.b_even == f.as_u64());
    }
}

TEST_CASE("fixture sequences agree with enumeration") {
    const auto g = golden();
    CHECK(enumerate_class(parse_class_spec("av:2413,3142"), 6).size() == g.at("count.Av(2413-3142)").as_u64()[6]);
    ClassEnumerator en(parse_class_spec("av:2413,3142,321"));
    const auto counts = g.at("count.Av(2413-3142-321)").as_u64();
    for (std::size_t n = 0; n < counts.size(); ++n) CHECK(en.level(n).size() == counts[n]);
    const auto ind = g.at("ind.Av(2413-3142-321)").as_u64();
    for (std::size_t n = 1; n < ind.size(); ++n) {
        const auto& lv = en.level(n);
        CHECK(static_cast<std::uint64_t>(std::count_if(lv.begin(), lv.end(), is_sum_indecomposable)) == ind[n]);
    }
    CHECK(monotone_centro_count(4, 2) == g.at("monotone.k4.n2").values[0]);
    CHECK(centro_geom_counts(GridMatrix::parse("-1,1;1,-1"), 5) ==
          [&] {
              auto v = g.at("grid.X.centro").as_u64();
              v.insert(v.begin(), 1);
              return v;
          }());

    const auto t = count_table(parse_class_spec("av:231,312"), 5);
    CHECK(t.d == g.at("series.Av(231-312).d").as_u64());
    CHECK(t.b_even == g.at("series.Av(231-312).b").as_u64());
    const RationalGF b = rc_gf(parse_gf("x/(1-x)"), parse_gf("(1-x)/(1-2x)"));
    CHECK(b.to_string() == "(1)/(1-2x)");
}

TEST_CASE("golden verifications pass") {
    const Report t1 = verify_table1();
    CHECK(t1.passed());
    CHECK(t1.count(Check::Status::pass) == 4);
    const Report t2 = verify_table2();
    CHECK(t2.passed());
    const Report t3 = verify_table3();
    CHECK(t3.passed());
    CHECK(t3.count(Check::Status::pass) == 7);
    const Report s5 = verify_sum_closures();
    CHECK(s5.passed());
    CHECK(s5.count(Check::Status::fail) == 0);
    CHECK(verify_roots().count(Check::Status::pass) == 3);
}

TEST_CASE("unequal growth rows trend below") {
    const Report t2 = verify_table2();
    for (const char* id : {"Av(1324,4231)/trend", "Av(2143,4321)/trend"}) {
        const auto it = std::find_if(t2.checks.begin(), t2.checks.end(), [&](const Check& c) { return c.name == id; });
        REQUIRE(it != t2.checks.end());
        CHECK(it->status == Check::Status::info);
        CHECK(it->data.contains("b_ratio_below_a_ratio"));
    }
}

TEST_CASE("verification reports are independent of the worker count") {
    CHECK(verify_table2(8, {1}).to_json() == verify_table2(8, {4}).to_json());
    CHECK(verify_table3(8, {1}).to_json() == verify_table3(8, {3}).to_json());
    CHECK(conjecture_scan(parse_class_spec("av:321"), 8, {1}).to_json() ==
          conjecture_scan(parse_class_spec("av:321"), 8, {4}).to_json());
}

TEST_CASE("scans") {
    const Report finite = conjecture_scan(parse_class_spec("av:12,21"), 6);
    CHECK(finite.passed());
    const auto it = std::find_if(finite.checks.begin(), finite.checks.end(),
                                 [](const Check& c) { return c.name == "finite-class"; });
    REQUIRE(it != finite.checks.end());
    CHECK(it->status == Check::Status::pass);

    const Report sc = conjecture_scan(parse_class_spec("av:321,2413,3142"), 10);
    CHECK(sc.passed());
    CHECK(sc.checks[0].data["a"] == Json(std::vector<int>{1, 1, 2, 5, 12, 28, 65, 151, 351, 816, 1897}));
    CHECK(sc.checks[0].data["d"] == Json(std::vector<int>{0, 1, 1, 1, 1, 1}));

    const Report one_sided = conjecture_scan(parse_class_spec("av:312"), 6);
    CHECK(one_sided.passed());
    CHECK(one_sided.checks[1].status == Check::Status::info);
}

TEST_CASE("size guards refuse large requests unless forced") {
    CHECK_THROWS_AS(verify_table1(15), SizeGuardError);
    CHECK_THROWS_AS(conjecture_scan(parse_class_spec("av:321"), 11), SizeGuardError);
    CHECK_NOTHROW(guard(11, 10, "size", true));
    CHECK_NOTHROW(guard(10, 10, "size", false));
}

TEST_CASE("grid reports") {
    const Report diag = grid_split_report(GridMatrix::parse("1,0;0,1"), 4);
    CHECK(diag.passed());
    CHECK(diag.count(Check::Status::pass) == 2);
    const Report x = grid_split_report(GridMatrix::parse("-1,1;1,-1"), 4);
    CHECK(x.count(Check::Status::pass) == 0);
    CHECK(x.checks[0].data["forest"] == false);
    CHECK(x.checks[0].data["pairs_off"] == false);
    const Report c = grid_centro_report(GridMatrix::parse("-1,1;1,-1"), 5);
    CHECK(c.checks[0].data["counts"] == Json(std::vector<int>{2, 4, 8, 16, 32}));
    CHECK(grid_graph_report(GridMatrix::parse("-1,1;1,-1")).checks[0].message == "has a cycle");
}
