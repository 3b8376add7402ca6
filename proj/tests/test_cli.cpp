#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "nakaoka/cli_app.hpp"

using namespace nakaoka;

namespace {

struct RunOut {
  int code;
  std::string out;
  std::string err;
};

RunOut run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::size_t count_lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s)
    if (c == '\n') ++n;
  return n;
}

}  // namespace

TEST_CASE("evaluator prints canonical forms for the documented examples") {
  auto r1 = run_cli({"eval", "--functor", "burnside", "--p", "3", "--op", "nm", "2"});
  CHECK(r1.code == 0);
  CHECK(r1.out == "2 + 2*t\n");

  auto r2 = run_cli(
      {"eval", "--functor", "free-underlying", "--p", "2", "--op", "nm", "x0 + x1"});
  CHECK(r2.code == 0);
  CHECK(r2.out == "2*n + t[2,0]\n");

  auto r3 = run_cli({"eval", "--functor", "free-underlying", "--p", "2", "--op", "mul",
                     "t[1,0]", "t[1,0]"});
  CHECK(r3.code == 0);
  CHECK(r3.out == "t[2,0] + t[1,1]\n");
}

TEST_CASE("evaluator covers every operation and level flag") {
  auto add = run_cli({"eval", "--functor", "burnside", "--p", "2", "--op", "add", "1 + t",
                      "2 + 3*t"});
  CHECK(add.code == 0);
  CHECK(add.out == "3 + 4*t\n");

  auto sub = run_cli({"eval", "--functor", "free-fixed", "--p", "2", "--op", "sub",
                      "--level", "bottom", "x^2", "x"});
  CHECK(sub.code == 0);
  CHECK(sub.out == "x^2 - x\n");

  auto res = run_cli({"eval", "--functor", "burnside", "--p", "3", "--op", "res", "1 + t"});
  CHECK(res.code == 0);
  CHECK(res.out == "4\n");

  auto tr = run_cli({"eval", "--functor", "free-underlying", "--p", "2", "--op", "tr", "x0"});
  CHECK(tr.code == 0);
  CHECK(tr.out == "t[1,0]\n");

  auto cj = run_cli({"eval", "--functor", "free-underlying", "--p", "3", "--op", "conj",
                     "--k", "1", "x0"});
  CHECK(cj.code == 0);
  CHECK(cj.out == "x1\n");
}

TEST_CASE("malformed expressions exit with the parse code") {
  auto r = run_cli({"eval", "--functor", "burnside", "--p", "2", "--op", "nm", "2 +"});
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  CHECK(r.err.find("parse error") != std::string::npos);

  auto missing = run_cli({"eval", "--functor", "burnside", "--op", "nm", "2"});
  CHECK(missing.code == 2);

  auto badop = run_cli({"eval", "--functor", "burnside", "--p", "2", "--op", "frobnicate",
                        "2"});
  CHECK(badop.code == 2);
}

TEST_CASE("law suite runs clean and its output is a pure function of the seed") {
  auto a = run_cli({"axioms", "--functor", "ru", "--p", "3", "--trials", "50", "--seed",
                    "7", "--format", "json"});
  CHECK(a.code == 0);
  auto j = nlohmann::json::parse(a.out);
  CHECK(j["ok"] == true);
  REQUIRE(j["results"].size() == 1);
  CHECK(j["results"][0]["functor"] == "ru");
  CHECK(j["results"][0]["p"] == 3);
  CHECK(j["results"][0]["trials"] == 50);
  CHECK(j["results"][0]["laws"].size() >= 10);
  for (const auto& [law, count] : j["results"][0]["laws"].items())
    CHECK(count.get<std::uint64_t>() == 50);

  auto b = run_cli({"axioms", "--functor", "ru", "--p", "3", "--trials", "50", "--seed",
                    "7", "--format", "json"});
  CHECK(a.out == b.out);  // byte-identical across runs

  auto text = run_cli({"axioms", "--functor", "all", "--p", "2", "--trials", "20",
                       "--seed", "42"});
  CHECK(text.code == 0);
  CHECK(text.out.find("burnside p=2: PASS") != std::string::npos);
  CHECK(text.out.find("fixed-point-cyclic p=2: PASS") != std::string::npos);
  CHECK(text.out.find("all laws hold") != std::string::npos);
  CHECK(text.out.back() == '\n');
}

TEST_CASE("windowed spectrum listing is deterministic dot with the documented shape") {
  std::vector<std::string> args = {"spec",     "list", "--functor", "ru",
                                   "--p",      "3",    "--window",  "0,2,3,7",
                                   "--format", "dot"};
  auto r = run_cli(args);
  CHECK(r.code == 0);
  CHECK(r.out.rfind("digraph spec", 0) == 0);
  CHECK(r.out.find("\"(3,s)=(3,l)\"") != std::string::npos);
  CHECK(r.out.find("\"(0,s)\" -> \"(0,l)\"") != std::string::npos);
  // seven nodes and eight covering edges
  std::size_t nodes = 0, edges = 0;
  std::istringstream lines(r.out);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.find("->") != std::string::npos)
      ++edges;
    else if (line.find('"') != std::string::npos)
      ++nodes;
  }
  CHECK(nodes == 7);
  CHECK(edges == 8);
  auto again = run_cli(args);
  CHECK(again.out == r.out);

  auto js = run_cli({"spec", "list", "--functor", "burnside", "--p", "2", "--window",
                     "0,2,3,5", "--format", "json"});
  CHECK(js.code == 0);
  auto parsed = nlohmann::json::parse(js.out);
  CHECK(parsed["nodes"].size() == 7);
  CHECK(parsed["hasse"].size() == 8);
  CHECK(!parsed.contains("partial"));
}

TEST_CASE("spectrum listing rejects functors without an enumeration") {
  auto r = run_cli({"spec", "list", "--functor", "free-fixed", "--p", "2", "--window",
                    "0,3"});
  CHECK(r.code == 3);
  CHECK(r.out.empty());
}

TEST_CASE("prime comparison understands the bracket syntax and the p token") {
  auto eq = run_cli({"spec", "contains", "--functor", "free-fixed", "--p", "2", "--a",
                     "<type1 a=[p]>", "--b", "<type2 b=[p,n-x^p]>"});
  CHECK(eq.code == 0);
  CHECK(eq.out == "EQUAL\n");

  auto lt = run_cli({"spec", "contains", "--functor", "burnside", "--p", "2", "--a",
                     "<type1 a=[0]>", "--b", "<type1 a=[3]>"});
  CHECK(lt.code == 0);
  CHECK(lt.out.rfind("LESS-THAN\n", 0) == 0);
  CHECK(lt.out.find("witness") != std::string::npos);

  auto gt = run_cli({"spec", "contains", "--functor", "burnside", "--p", "2", "--a",
                     "<type1 a=[3]>", "--b", "<type1 a=[0]>"});
  CHECK(gt.code == 0);
  CHECK(gt.out.rfind("GREATER-THAN\n", 0) == 0);

  auto inc = run_cli({"spec", "contains", "--functor", "burnside", "--p", "2", "--a",
                      "<type1 a=[3]>", "--b", "<type1 a=[5]>"});
  CHECK(inc.code == 0);
  CHECK(inc.out.rfind("INCOMPARABLE\n", 0) == 0);

  auto bad = run_cli({"spec", "contains", "--functor", "burnside", "--p", "2", "--a",
                      "type1 a=[0]", "--b", "<type1 a=[3]>"});
  CHECK(bad.code == 2);
}

TEST_CASE("dimension certificates print the documented chain") {
  auto r = run_cli({"spec", "dim", "--functor", "free-fixed", "--p", "2", "--q", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("dim = 4\n", 0) == 0);
  CHECK(r.out.find("verified: yes") != std::string::npos);
  // a five-term chain: indices [0] through [4]
  CHECK(r.out.find("[4] type1") != std::string::npos);

  auto a = run_cli({"spec", "dim", "--functor", "burnside", "--p", "3"});
  CHECK(a.code == 0);
  CHECK(a.out.rfind("dim = 2\n", 0) == 0);
  CHECK(a.out.find("verified: yes") != std::string::npos);

  auto u = run_cli({"spec", "dim", "--functor", "free-underlying", "--p", "3"});
  CHECK(u.code == 0);
  CHECK(u.out.rfind("dim = 4\n", 0) == 0);
}

TEST_CASE("closure lists the up-set of the chosen points") {
  auto r = run_cli({"spec", "closure", "--functor", "burnside", "--p", "2", "--window",
                    "0,2,3,5", "--points", "(0;Z)"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "(0;Z)\n"
        "(2;2)=(2;Z)\n"
        "(3;Z)\n"
        "(5;Z)\n");

  auto top = run_cli({"spec", "closure", "--functor", "burnside", "--p", "2", "--window",
                      "0,2,3,5", "--points", "(3;Z) (5;5)"});
  CHECK(top.code == 0);
  CHECK(top.out == "(3;Z)\n(5;5)\n(5;Z)\n");

  auto bad = run_cli({"spec", "closure", "--functor", "burnside", "--p", "2", "--window",
                      "0,2", "--points", "(9;9)"});
  CHECK(bad.code == 3);
}

TEST_CASE("spectrum maps between the free functors work from the command line") {
  auto cores = run_cli({"spec", "coop", "--map", "cores", "--p", "2", "--prime",
                        "<type1 a=[x-1]>"});
  CHECK(cores.code == 0);
  CHECK(cores.out == "type1 a=<x0 - x1, x0 - 1>\n");

  auto cotr = run_cli({"spec", "coop", "--map", "cotr", "--p", "2", "--prime",
                       "<type2 b=[5, n^2+2]>"});
  CHECK(cotr.code == 0);
  CHECK(cotr.out == "type2 b=<5, x, n^2 + 3>\n");

  auto conm = run_cli({"spec", "coop", "--map", "conm", "--p", "2", "--prime",
                       "<type2 b=[n^2+1]>"});
  CHECK(conm.code == 0);
  CHECK(conm.out == "type2 b=<x^2 - n, x^2 + 1>\n");

  auto coc = run_cli({"spec", "coop", "--map", "coc", "--p", "3", "--prime",
                      "<type1 a=[x0+x1+x2]>"});
  CHECK(coc.code == 0);
  CHECK(coc.out == "type1 a=<x0 + x1 + x2>\n");
}

TEST_CASE("ghost commands expose the coordinates and the probe verdict") {
  auto m = run_cli({"ghost", "map", "--functor", "burnside", "--p", "2", "3 + 2*t"});
  CHECK(m.code == 0);
  CHECK(m.out == "(7 ; 3)\n");

  auto pr = run_cli({"ghost", "probe", "--functor", "modp-burnside", "--p", "3",
                     "--trials", "40", "--seed", "11"});
  CHECK(pr.code == 0);
  CHECK(pr.out.find("kernel: transfer image; p*K = 0 and K^2 = 0 hold exactly") !=
        std::string::npos);
  CHECK(pr.out.find("commutation: PASS") != std::string::npos);
  CHECK(pr.out.find("monad: PASS") != std::string::npos);

  auto inj = run_cli({"ghost", "probe", "--functor", "burnside", "--p", "2", "--trials",
                      "40", "--seed", "3"});
  CHECK(inj.code == 0);
  CHECK(inj.out.find("ghost map injective") != std::string::npos);
}

TEST_CASE("fixed-point checks pass for every supported kind") {
  for (auto [kind, p] : std::vector<std::pair<std::string, std::string>>{
           {"zmodp", "5"}, {"swap", "2"}, {"cyclic", "3"}}) {
    auto r = run_cli({"fixedpoint", "check", "--kind", kind, "--p", p, "--seed", "9"});
    INFO(kind);
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS") != std::string::npos);
  }
  auto bad = run_cli({"fixedpoint", "check", "--kind", "swap", "--p", "3", "--seed", "9"});
  CHECK(bad.code == 3);  // swap coefficients exist only at p = 2
}

TEST_CASE("transfer classes re-expand exactly from the command line") {
  auto r = run_cli({"express-t", "--p", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "p = 2: 25 of 25 orbit classes with |v| <= 8 re-expand exactly\n");

  auto listed = run_cli({"express-t", "--p", "2", "--max-abs", "3", "--list"});
  CHECK(listed.code == 0);
  CHECK(listed.out.find("t[1,0] = ") != std::string::npos);
  CHECK(count_lines(listed.out) >= 5);
}

TEST_CASE("the elimination cap surfaces as a resource exit") {
  setenv("NAKAOKA_GB_CAP", "1", 1);
  auto r = run_cli({"spec", "coop", "--map", "cores", "--p", "2", "--prime",
                    "<type2 b=[n-x^2]>"});
  unsetenv("NAKAOKA_GB_CAP");
  CHECK(r.code == 5);
  CHECK(r.err.find("resource limit") != std::string::npos);

  // the same call succeeds once the cap is back at its default
  auto ok = run_cli({"spec", "coop", "--map", "cores", "--p", "2", "--prime",
                     "<type2 b=[n-x^2]>"});
  CHECK(ok.code == 0);
}

TEST_CASE("help requests exit cleanly") {
  auto h = run_cli({"--help"});
  CHECK(h.code == 0);
  CHECK(h.out.find("eval") != std::string::npos);
  auto none = run_cli({});
  CHECK(none.code == 2);
}
