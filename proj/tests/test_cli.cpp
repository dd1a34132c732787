#include "doctest.h"

#include "fixtures.hpp"
#include "pqs/cli.hpp"
#include "pqs/error.hpp"
#include "pqs/report.hpp"
#include "pqs/tables.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace pqs;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  auto dir = std::filesystem::temp_directory_path() / "pqs_test_cli";
  std::filesystem::create_directories(dir);
  auto path = (dir / name).string();
  std::ofstream(path) << content;
  return path;
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

}  // namespace

TEST_CASE("classify A5") {
  auto r = run({"classify", "--chi", "1", "--k2", "8", "--groups", "A5"});
  CHECK(r.code == kExitOk);
  auto report = parse_report(r.out);
  CHECK(report.families.size() == 3);
  CHECK(report.header.dedup == "hurwitz+aut+swap");
  CHECK(report.coverage_gaps.empty());
  for (const auto& f : report.families) {
    CHECK(f.group.name == "A5");
    CHECK(f.group.order == 60);
    CHECK(f.systems.size() == 2);
    CHECK(f.basket.empty());
  }
}

TEST_CASE("classify Z2 finds nothing") {
  auto r = run({"classify", "--chi", "1", "--k2", "8", "--groups", "Z2"});
  CHECK(r.code == kExitOk);
  CHECK(parse_report(r.out).families.empty());
}

TEST_CASE("classify reports an uncovered order") {
  auto groups = temp_file("a5.groups", "# one group\nA5\n");
  auto r = run({"classify", "--chi", "1", "--k2", "8", "--groups", "@" + groups});
  CHECK(r.code == kExitCoverageGap);
  CHECK(contains(r.err, "no group of order 32"));
  auto report = parse_report(r.out);
  CHECK(report.families.size() == 3);
  CHECK(std::any_of(report.coverage_gaps.begin(), report.coverage_gaps.end(),
                    [](const CoverageGap& g) { return g.group_order == 32; }));
}

TEST_CASE("group files with explicit generators") {
  auto groups = temp_file("explicit.groups", "MyA5 5 (1,2,3) (1,2,3,4,5)\n\n");
  auto r = run({"classify", "--chi", "1", "--k2", "8", "--groups", "@" + groups});
  CHECK(parse_report(r.out).families.size() == 3);
  auto bad = temp_file("bad.groups", "X 5 (1,2,3) (1,2,9)\n");
  auto e = run({"classify", "--chi", "1", "--k2", "8", "--groups", "@" + bad});
  CHECK(e.code == kExitError);
  CHECK(contains(e.err, "position 18"));
  CHECK_THROWS_AS(parse_group_line("X 0 (1,2)"), ParseError);
  CHECK(parse_group_line("PSL(2,7)")->order() == 168);
}

TEST_CASE("report file output") {
  auto path = (std::filesystem::temp_directory_path() / "pqs_test_cli" / "a5.json").string();
  std::filesystem::create_directories(std::filesystem::path(path).parent_path());
  auto r = run({"classify", "--chi", "1", "--k2", "6", "--groups", "A5", "--out", path});
  CHECK(r.code == kExitOk);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  auto report = parse_report(ss.str());
  REQUIRE(report.families.size() == 1);
  CHECK(report.families[0].basket.to_string() == "2x1/2(1,1)");
}

TEST_CASE("report round trip and determinism") {
  auto a = run({"classify", "--chi", "1", "--k2", "5", "--groups", "A5,S4,Z2xS4,PSL(2,7)"});
  auto b = run({"classify", "--chi", "1", "--k2", "5", "--groups", "A5,S4,Z2xS4,PSL(2,7)", "--jobs", "2"});
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  auto report = parse_report(a.out);
  CHECK(report.families.size() >= 5);
  CHECK(dump_report(report) == a.out);
  CHECK(parse_report(dump_report(report)) == report);
  auto gamma = run({"classify", "--chi", "1", "--gamma", "0", "--k2-window", "5..6", "--groups", "A5"});
  auto g = parse_report(gamma.out);
  CHECK(g.header.gamma == Rational(0));
  CHECK(g.header.k2_window == std::make_pair(5LL, 6LL));
  CHECK(parse_report(dump_report(g)) == g);
  CHECK(g.families.size() == 3);
}

TEST_CASE("usage errors") {
  CHECK(run({"classify", "--chi", "1", "--k2", "8", "--gamma", "0", "--groups", "A5"}).code == kExitUsage);
  CHECK(run({"classify", "--chi", "1", "--groups", "A5"}).code == kExitUsage);
  CHECK(run({"classify", "--chi", "1", "--k2", "8", "--k2-window", "1..2"}).code == kExitUsage);
  CHECK(run({"classify", "--chi", "1", "--gamma", "0", "--k2-window", "1-2"}).code == kExitUsage);
  CHECK(run({"classify", "--chi", "1", "--k2", "8", "--dedup", "braid"}).code == kExitUsage);
  CHECK(run({"classify", "--k2", "8"}).code == kExitUsage);
  CHECK(run({"classify", "--chi", "1", "--k2", "8", "--bogus"}).code == kExitUsage);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"verify-tables", "--subset", "small"}).code == kExitUsage);
  CHECK(run({"verify-tables", "--rows", "/nonexistent/rows"}).code == kExitUsage);
  CHECK(run({"classify", "--chi", "1", "--k2", "8", "--groups", "NoSuchGroup"}).code == kExitError);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("invariants of the fake Godeaux datum") {
  auto d = fixtures::fake_godeaux();
  auto r = run({"invariants", "--group", "PSL(2,7)", "--sys1", format_system(d.sys1), "--sys2",
                format_system(d.sys2)});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "chi = 1, p_g = 0, q = 0"));
  CHECK(contains(r.out, "K_S^2 = 1\n"));
  CHECK(contains(r.out, "gamma = 1, mu = "));
  CHECK(contains(r.out, "l = 5, c = 1"));
  CHECK(contains(r.out, "h11(X) = 4"));
  CHECK(contains(r.out, "basket: 1/7(1,1) + 2x1/7(1,2)"));
}

TEST_CASE("invariants of the first A5 row") {
  auto d = fixtures::a5_row1();
  auto r = run({"invariants", "--group", "A5", "--sys1", format_system(d.sys1), "--sys2",
                format_system(d.sys2)});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "K_S^2 = 8\n"));
  CHECK(contains(r.out, "basket: {}"));
}

TEST_CASE("invariants input errors") {
  auto nongen = run({"invariants", "--group", "A5", "--sys1", "(2,2,1):[(1,2)(3,4),(1,2)(3,4),()]",
                     "--sys2", "(3,3,3,3):[(1,2,3),(1,3,2),(1,2,3),(1,3,2)]"});
  CHECK(nongen.code == kExitError);
  auto gen = run({"invariants", "--group", "A5", "--sys1", "(2,2):[(1,2)(3,4),(1,2)(3,4)]", "--sys2",
                  "(2,2):[(1,2)(3,4),(1,2)(3,4)]"});
  CHECK(gen.code == kExitError);
  CHECK(contains(gen.err, "tuple does not generate G"));
  auto bad = run({"invariants", "--group", "A5", "--sys1", "(2,5,5):[(1,2)(3,4),(1,2,x,4,5),()]",
                  "--sys2", "(2,2):[(1,2)(3,4),(1,2)(3,4)]"});
  CHECK(bad.code == kExitError);
  CHECK(contains(bad.err, "position 26"));
  CHECK(run({"invariants", "--group", "A5"}).code == kExitUsage);
}

TEST_CASE("invariants from a report file") {
  auto a = run({"classify", "--chi", "1", "--k2", "8", "--groups", "A5"});
  auto path = temp_file("a5_report.json", a.out);
  auto r = run({"invariants", "--in", path});
  CHECK(r.code == kExitOk);
  std::size_t n = 0;
  const std::string header = "group: A5 (order 60)\n";
  for (auto pos = r.out.find(header); pos != std::string::npos; pos = r.out.find(header, pos + 1)) ++n;
  CHECK(n == 3);
  auto d = fixtures::fake_godeaux();
  auto single = temp_file("fg.json", "{\"group\": \"PSL(2,7)\", \"sys1\": \"" + format_system(d.sys1) +
                                         "\", \"sys2\": \"" + format_system(d.sys2) + "\"}");
  auto s = run({"invariants", "--in", single});
  CHECK(s.code == kExitOk);
  CHECK(contains(s.out, "K_S^2 = 1\n"));
  auto broken = temp_file("broken.json", "{\"group\": ");
  CHECK(run({"invariants", "--in", broken}).code == kExitError);
}

TEST_CASE("verify-tables flags a corrupted row and skips hard orders") {
  auto rows = temp_file("corrupt.rows",
                        "# k2 | basket | t1 | t2 | group | N\n"
                        "8 | {} | 2,5^2 | 3^4 | A5 | 1\n"
                        "8 | {} | 5^3 | 2^3,3 | A5 | 2\n"
                        "8 | {} | 2^5 | 2^5 | Z2^9 | 1\n");
  auto r = run({"verify-tables", "--rows", rows, "--subset", "small"});
  CHECK(r.code == kExitError);
  CHECK(contains(r.out, "PASS line 2:"));
  CHECK(contains(r.out, "FAIL line 3:"));
  CHECK(contains(r.out, "expected N=2, found 1"));
  CHECK(contains(r.out, "SKIPPED line 4:"));
  CHECK(contains(r.out, "treated by hand separately"));
  CHECK(contains(r.out, "summary: 1 passed, 1 failed, 1 skipped"));
}

TEST_CASE("rows parsing") {
  auto rows = parse_rows("# comment\n\n6 | 2x1/2(1,1) | 2,5^2 | 2,3^3 | A5 | 1 | Z3 x Z15 | Z^2 : Z15\n");
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].line == 3);
  CHECK(rows[0].k2 == 6);
  CHECK(rows[0].basket == Basket::parse("2x1/2(1,1)"));
  CHECK(rows[0].t2 == Signature::parse("2,3,3,3"));
  CHECK(rows[0].h1 == "Z3 x Z15");
  try {
    parse_rows("8 | 1/4(1,2) | 2,5^2 | 3^4 | A5 | 1\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 7);
    CHECK(contains(e.what(), "line 1"));
  }
  CHECK_THROWS_AS(parse_rows("8 | {} | 2,5^2 | 3^4 | A5\n"), ParseError);
  try {
    parse_rows("8 | {} | 2,5^2 | 3^4 | A5 | x\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 29);
  }
}

TEST_CASE("committed rows file parses") {
  auto rows = read_rows_file(PQS_SOURCE_DIR "/data/tables.rows");
  CHECK(rows.size() == 60);
  for (const auto& r : rows) {
    CHECK(basket_invariants(r.basket).B == 3 * (8 - r.k2));
    CHECK(r.h1.has_value());
  }
}
