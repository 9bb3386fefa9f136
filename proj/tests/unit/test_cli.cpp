#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "drg/cli/cli.hpp"
#include "drg/cli/format.hpp"
#include "drg/graphs/graph.hpp"

using namespace drg::cli;
using drg::exact::AlgebraicReal;
using drg::exact::Rational;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string field(const std::vector<ReportLine>& lines, const std::string& key, std::size_t nth = 0) {
  for (const auto& l : lines)
    for (const auto& [k, v] : l)
      if (k == key && nth-- == 0) return v;
  return {};
}

std::filesystem::path temp_path(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "drg_cli_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("exact value text round-trips") {
  for (const auto& x : {AlgebraicReal(3), AlgebraicReal(Rational(-35, 4)), AlgebraicReal(0)})
    CHECK(parse_exact(exact_text(x)) == x);
  auto roots = drg::exact::isolate_real_roots(parse_polynomial("x^3 + x^2 - 2*x - 1"));
  REQUIRE(roots.size() == 3);
  for (const auto& r : roots) {
    const std::string t = exact_text(r);
    CHECK(t.find(' ') == std::string::npos);
    CHECK(t.find(',') == std::string::npos);
    CHECK(parse_exact(t) == r);
    CHECK(exact_text(parse_exact(t)) == t);
  }
  CHECK(exact_text(roots[2]) == "root(x^3+x^2-2*x-1)~1.246979603717");
  CHECK_THROWS(parse_exact("1/0"));
  CHECK_THROWS(parse_exact("abc"));
  CHECK_THROWS(parse_exact("root(x^2-2)~5.0"));
  CHECK_THROWS(parse_polynomial("x^^2"));
}

TEST_CASE("construct") {
  auto r = invoke({"construct", "--family", "odd", "--n", "7"});
  CHECK(r.code == 0);
  auto lines = parse_report(r.out);
  CHECK(field(lines, "vertices") == "35");
  CHECK(field(lines, "edges") == "70");
  CHECK(field(lines, "regular") == "4");
  CHECK(field(parse_report(invoke({"construct", "--family", "cycle", "--n", "7"}).out), "edges") == "7");
  auto f = parse_report(invoke({"construct", "--family", "folded_cube", "--n", "7"}).out);
  CHECK(field(f, "vertices") == "64");
  CHECK(field(f, "edges") == "224");

  CHECK(invoke({"construct", "--family", "odd", "--n", "8"}).code == kDomainError);
  CHECK(invoke({"construct", "--family", "petersen", "--n", "5"}).code == kDomainError);
  CHECK(invoke({"construct", "--family", "odd"}).code == kUsageError);
  CHECK(invoke({"construct", "--family", "odd", "--n", "7", "--bogus"}).code == kUsageError);
  CHECK(invoke({}).code == kUsageError);
  CHECK(invoke({"frobnicate"}).code == kUsageError);
  CHECK(invoke({"--help"}).code == kOk);
}

TEST_CASE("analyze a constructed graph") {
  auto path = temp_path("odd7.txt");
  REQUIRE(invoke({"construct", "--family", "odd", "--n", "7", "--out", path.string()}).code == 0);
  auto r = invoke({"analyze", path.string()});
  REQUIRE(r.code == 0);
  auto lines = parse_report(r.out);
  CHECK(field(lines, "array") == "{4,3,3;1,1,2}");
  CHECK(field(lines, "ordering") == "4,-3,2,-1");
  CHECK(field(lines, "beta") == "-2");
  CHECK(field(lines, "mu") == "1");
  CHECK(field(lines, "verdict") == "OddGraph(3)");
  CHECK(invoke({"analyze", path.string(), "--strict-drg"}).out == r.out);
}

TEST_CASE("analyze arrays") {
  auto f = parse_report(invoke({"analyze", "--array", "{7,6,5;1,2,3}"}).out);
  CHECK(field(f, "verdict") == "FoldedCube(3)");
  CHECK(field(f, "ordering", 0) == "7,3,-1,-5");
  CHECK(field(f, "ordering", 1) == "7,-5,3,-1");
  CHECK(field(f, "beta", 0) == "2");
  CHECK(field(f, "beta", 1) == "-2");
  CHECK(field(parse_report(invoke({"analyze", "--array", "{3,2,1;1,2,3}"}).out), "verdict") == "NotAlmostBipartite");

  auto c = parse_report(invoke({"analyze", "--array", "{2,1,1;1,1,1}"}).out);
  CHECK(field(c, "verdict") == "Cycle(3)");
  // Every value field parses back to an exact number.
  for (std::size_t i = 0; i < 3; ++i) {
    auto beta = parse_exact(field(c, "beta", i));
    auto ordering = split(field(c, "ordering", i), ',');
    REQUIRE(ordering.size() == 4);
    CHECK(beta == parse_exact(ordering[1]));
  }

  CHECK(invoke({"analyze", "--array", "{4,3;1}"}).code == kDomainError);
  CHECK(invoke({"analyze"}).code == kUsageError);
  CHECK(invoke({"analyze", "x.txt", "--array", "{2,1;1,1}"}).code == kUsageError);
  CHECK(invoke({"analyze", temp_path("missing.txt").string()}).code == kDomainError);
}

TEST_CASE("analyze reports non-distance-regular graphs and disconnected input") {
  auto path = temp_path("path.txt");
  {
    std::ofstream os(path);
    os << "4 3\n0 1\n1 2\n2 3\n";
  }
  auto r = invoke({"analyze", path.string()});
  CHECK(r.code == 0);
  auto lines = parse_report(r.out);
  CHECK(field(lines, "distance_regular") == "false");
  CHECK(field(lines, "verdict") == "NotDistanceRegular");
  CHECK_FALSE(field(lines, "witness_x").empty());

  auto split_graph = temp_path("split.txt");
  {
    std::ofstream os(split_graph);
    os << "4 2\n0 1\n2 3\n";
  }
  auto d = invoke({"analyze", split_graph.string()});
  CHECK(d.code == kDomainError);
  CHECK(d.err.find("disconnected") != std::string::npos);
  CHECK(invoke({"double", split_graph.string()}).code == kDomainError);
}

TEST_CASE("double") {
  auto c7 = temp_path("c7.txt"), c14 = temp_path("c14.txt");
  invoke({"construct", "--family", "cycle", "--n", "7", "--out", c7.string()});
  auto r = parse_report(invoke({"double", c7.string(), "--out", c14.string()}).out);
  CHECK(field(r, "diameter") == "7");
  CHECK(field(r, "bipartite") == "true");
  CHECK(field(r, "spectrum_negation") == "true");
  auto g = drg::graphs::load_graph(c14.string());
  CHECK(g.order() == 14);
  CHECK(g.regular_degree() == 2u);
  CHECK(g.is_connected());

  auto o7 = temp_path("o7.txt");
  invoke({"construct", "--family", "odd", "--n", "7", "--out", o7.string()});
  auto o = parse_report(invoke({"double", o7.string()}).out);
  CHECK(field(o, "diameter") == "7");
  CHECK(field(o, "k_preserved") == "true");
  CHECK(field(o, "c2_preserved") == "true");
  CHECK(field(o, "spectrum_negation") == "true");
}

TEST_CASE("family") {
  auto a = parse_report(invoke({"family", "--beta", "-2", "--mu", "1"}).out);
  CHECK(field(a, "k") == "4");
  CHECK(field(a, "c2") == "1");
  CHECK(field(a, "c3") == "2");
  CHECK(field(a, "thetas") == "4,-3,2,-1");
  CHECK(field(a, "verdict") == "KnownFamily:odd7");
  auto b = parse_report(invoke({"family", "--beta", "2", "--mu", "2"}).out);
  CHECK(field(b, "k") == "7");
  CHECK(field(b, "c3") == "3");
  auto c = parse_report(invoke({"family", "--beta", "-3", "--mu", "1"}).out);
  CHECK(field(c, "array") == "{41,40,40;1,1,14}");
  CHECK(field(c, "integral_n_mults") == "fail");
  auto w = parse_report(invoke({"family", "--beta", "root(x^3+x^2-2*x-1)~1.246979603717", "--mu", "1"}).out);
  CHECK(field(w, "k") == "2");
  CHECK(invoke({"family", "--beta", "-3", "--mu", "0"}).code == kDomainError);
  CHECK(invoke({"family", "--beta", "-3"}).code == kUsageError);
}

TEST_CASE("sieve") {
  auto r = invoke({"sieve", "--beta-min", "-5", "--beta-max", "-3", "--mu-max", "4"});
  REQUIRE(r.code == 0);
  auto lines = parse_report(r.out);
  REQUIRE(lines.size() == 13);
  CHECK(lines.back().front() == std::pair<std::string, std::string>{"summary", "sieve"});
  CHECK(field(lines, "total") == "12");
  CHECK(invoke({"sieve", "--beta-min", "-5", "--beta-max", "-3", "--mu-max", "4"}).out == r.out);

  auto out = temp_path("sieve.txt");
  auto f = invoke({"sieve", "--beta-min", "-5", "--beta-max", "-3", "--mu-max", "4", "--out", out.string()});
  std::ifstream is(out);
  std::stringstream body;
  body << is.rdbuf();
  CHECK(body.str() + f.out == r.out);

  CHECK(invoke({"sieve", "--beta-min", "-3", "--beta-max", "-5"}).code == kDomainError);
  CHECK(invoke({"sieve", "--beta-max", "0"}).code == kDomainError);
  CHECK(invoke({"sieve", "--beta-min", "-2", "--beta-max", "-2", "--mu-max", "1", "--wide"}).code == 0);
  CHECK(invoke({"sieve", "--mu-max", "many"}).code == kUsageError);
}

TEST_CASE("check-identities") {
  auto r = invoke({"check-identities", "--trials", "100", "--seed", "42"});
  CHECK(r.code == 0);
  auto lines = parse_report(r.out);
  CHECK(field(lines, "failed") == "0");
  for (const auto& l : lines)
    if (l.front().first == "identity") CHECK(l.back().second == "pass");
  auto z = invoke({"check-identities", "--trials", "0"});
  CHECK(z.code == 0);
  CHECK(z.err.find("warning") != std::string::npos);
}

TEST_CASE("json output parses and uses the record field names") {
  auto j = Json::parse(invoke({"--json", "analyze", "--array", "{41,40,40;1,1,14}"}).out);
  CHECK(j["verdict"] == "D3Family(-3,1)");
  CHECK(j["n"] == "44574/7");
  CHECK(j["integral_n_mults"] == "fail");
  CHECK(j["orderings"][0]["beta"] == "-3");

  auto s = invoke({"sieve", "--json", "--beta-min", "-4", "--beta-max", "-3", "--mu-max", "2"});
  std::istringstream is(s.out);
  std::string line;
  std::vector<Json> docs;
  while (std::getline(is, line)) docs.push_back(Json::parse(line));
  REQUIRE(docs.size() == 5);
  for (std::size_t i = 0; i < 4; ++i)
    for (const char* key : {"beta", "mu", "k", "c2", "c3", "array", "n", "thetas", "mults", "verdict"})
      CHECK(docs[i].contains(key));
  CHECK(docs[4]["total"] == 4);

  for (const auto& args : std::vector<std::vector<std::string>>{
           {"--json", "construct", "--family", "cycle", "--n", "9"},
           {"--json", "family", "--beta", "-3", "--mu", "2"},
           {"--json", "check-identities", "--trials", "5"}}) {
    auto r = invoke(args);
    CHECK(r.code == 0);
    CHECK_FALSE(Json::parse(r.out).is_null());
  }
}

TEST_CASE("identical invocations give identical output") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"analyze", "--array", "{2,1,1;1,1,1}"},
           {"family", "--beta", "-7", "--mu", "41"},
           {"check-identities", "--trials", "20", "--seed", "9"}})
    CHECK(invoke(args).out == invoke(args).out);
}

}
