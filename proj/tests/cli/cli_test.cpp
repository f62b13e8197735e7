#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <map>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <catcom/algebra.hpp>
#include <catcom/corpus.hpp>
#include <catcom/term.hpp>

#include "cli.hpp"

namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

std::string data(const std::string& name) { return std::string(CATCOM_DATA_DIR) + "/" + name; }

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = catcom::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Outcome structured(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("structured");
  return invoke(std::move(args));
}

std::multimap<std::string, std::string> fields(const std::string& text) {
  std::multimap<std::string, std::string> m;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto c = line.find(": ");
    if (c != std::string::npos) m.emplace(line.substr(0, c), line.substr(c + 2));
  }
  return m;
}

std::string field(const std::string& text, const std::string& key) {
  const auto m = fields(text);
  const auto it = m.find(key);
  return it == m.end() ? std::string() : it->second;
}

std::vector<int> ints(const std::string& csv) {
  std::vector<int> v;
  std::istringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) v.push_back(std::stoi(item));
  return v;
}

catcom::Equation parse_equation(const std::string& text, const catcom::Signature& sig) {
  const auto eq = text.find(" = ");
  REQUIRE(eq != std::string::npos);
  return catcom::Equation::make(catcom::parse_term(text.substr(0, eq), sig),
                                catcom::parse_term(text.substr(eq + 3), sig));
}

bool satisfies(const catcom::FiniteAlgebra& a, const catcom::Equation& e) {
  const std::size_t n = e.var_count;
  std::vector<int> xs(n, 0);
  const std::size_t total = catcom::power(a.carrier(), n);
  for (std::size_t i = 0; i < total; ++i) {
    catcom::decode_index(i, a.carrier(), xs);
    if (catcom::evaluate(a, e.lhs, xs) != catcom::evaluate(a, e.rhs, xs)) return false;
  }
  return true;
}

std::string last_line(const std::string& text) {
  const auto end = text.find_last_not_of('\n');
  const auto start = text.rfind('\n', end);
  return text.substr(start == std::string::npos ? 0 : start + 1, end - start);
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("exit codes of the reference invocations") {
    CHECK(invoke({"commute", data("sl.thy"), "--ops", "join,join", "--arity", "4"}).code == 0);
    CHECK(invoke({"commute", data("latt.alg"), "--ops", "and,or"}).code == 1);
    const auto grp =
        structured({"commute", data("grp.thy"), "--ops", "mul,mul", "--depth", "3", "--model-bound", "2"});
    CHECK(grp.code == 2);
    CHECK(field(grp.out, "bound") == "depth=3 model-bound=2");
  }

  TEST_CASE("every report ends with a verdict line") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"commute", data("sl.thy"), "--ops", "join,join"},
             {"clone", data("z2.alg")},
             {"graded", data("quantum_plane.grd"), "--ops", "x,y"}}) {
      const auto r = invoke(args);
      const auto last = last_line(r.out);
      CHECK(last.rfind("verdict: ", 0) == 0);
      CHECK(r.code == (last == "verdict: pass" ? 0 : last == "verdict: fail" ? 1 : 2));
    }
  }

  TEST_CASE("structured output is deterministic") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"check-theory", data("monoid_comm.problem")},
             {"commute", data("latt.alg"), "--ops", "and,or"},
             {"models", data("monoid.thy"), "--model-bound", "3"},
             {"gen", "--seed", "5", "--count", "12", "--check"},
             {"premonoidal", data("lzb.prem")}}) {
      const auto a = structured(args);
      const auto b = structured(args);
      CHECK(a.out == b.out);
      CHECK(a.out.find("time:") == std::string::npos);
    }
  }

  TEST_CASE("theory refutation witness re-verifies") {
    const auto r = structured({"check-theory", data("monoid_comm.problem")});
    REQUIRE(r.code == 1);
    const auto model = catcom::parse_algebra(field(r.out, "witness_model"));
    const auto eq = parse_equation(field(r.out, "witness_equation"), model.signature());
    const auto xs = ints(field(r.out, "witness_assignment"));
    CHECK(catcom::evaluate(model, eq.lhs, xs) != catcom::evaluate(model, eq.rhs, xs));
    const auto values = ints(field(r.out, "witness_values"));
    REQUIRE(values.size() == 2);
    CHECK(values[0] == catcom::evaluate(model, eq.lhs, xs));
    CHECK(values[1] == catcom::evaluate(model, eq.rhs, xs));
    const auto theory = catcom::parse_presentation(
        "theory monoid { op mul:2; op e:0; eq mul(mul(x1,x2),x3) = mul(x1,mul(x2,x3)); "
        "eq mul(e,x1) = x1; eq mul(x1,e) = x1; }");
    for (const auto& axiom : theory.equations()) CHECK(satisfies(model, axiom));
  }

  TEST_CASE("algebra interchange witness re-verifies") {
    const auto r = structured({"commute", data("latt.alg"), "--ops", "and,or"});
    REQUIRE(r.code == 1);
    std::ifstream in(data("latt.alg"));
    std::stringstream ss;
    ss << in.rdbuf();
    const auto alg = catcom::parse_algebra(ss.str());
    const auto eq = parse_equation(field(r.out, "witness_equation"), alg.signature());
    const auto xs = ints(field(r.out, "witness_assignment"));
    REQUIRE(xs.size() == eq.var_count);
    CHECK(catcom::evaluate(alg, eq.lhs, xs) != catcom::evaluate(alg, eq.rhs, xs));
  }

  TEST_CASE("malformed input is located and exits 3") {
    const auto dir = fs::temp_directory_path() / "catcom_cli_test";
    fs::create_directories(dir);
    const auto bad = (dir / "bad.thy").string();
    std::ofstream(bad) << "theory t {\n  op f:2;\n  eq f(x1,x2 = x1;\n}\n";
    const auto r = invoke({"check-theory", bad});
    CHECK(r.code == 3);
    REQUIRE(r.err.find(bad + ":3:") != std::string::npos);
    CHECK(std::regex_search(r.err.substr(r.err.find(bad) + bad.size()), std::regex(R"(^:3:\d+: )")));
    CHECK(invoke({"check-theory", (dir / "missing.thy").string()}).code == 3);
    CHECK(invoke({"nonsense"}).code == 3);
    CHECK(invoke({"commute", data("sl.thy"), "--ops", "join,nope"}).code == 3);
    CHECK(invoke({"commute", data("sl.thy"), "--arity", "x"}).code == 3);
  }

  TEST_CASE("verbs over the bundled data") {
    struct Case {
      std::vector<std::string> args;
      int code;
    };
    const std::vector<Case> cases{
        {{"check-theory", data("sl.thy"), "--goal", "join(x1,x2) = join(x2,x1)"}, 0},
        {{"tensor", data("sl.thy"), data("sl.thy")}, 0},
        {{"verify-tensor", data("sl.thy"), data("pointed.thy")}, 0},
        {{"clone", data("z2.alg")}, 0},
        {{"centralizer", data("s3.mon"), "--ops", "1"}, 0},
        {{"centralizer", data("latt.alg"), "--ops", "and"}, 0},
        {{"commute", data("lzb.mon")}, 1},
        {{"operad", data("com3.operad")}, 0},
        {{"operad", data("ass3.operad")}, 0},
        {{"bv", data("ass_u.op"), data("ass_u.op"), "--size", "2"}, 0},
        {{"bv", data("com_u.op"), data("ass_u.op"), "--size", "2"}, 0},
        {{"cat", data("arrow.cat"), data("arrow.cat")}, 0},
        {{"sesqui", data("free.sesqui")}, 1},
        {{"sesqui", data("walking.sesqui")}, 0},
        {{"premonoidal", data("z2.prem")}, 0},
        {{"freyd", data("z2.prem")}, 0},
        {{"freyd", data("lzb.prem")}, 1},
        {{"graded", data("quantum_plane.grd"), "--ops", "x,y"}, 1},
    };
    for (const auto& c : cases) {
      CAPTURE(c.args[0]);
      CAPTURE(c.args[1]);
      const auto r = structured(c.args);
      CHECK(r.code == c.code);
      CHECK(field(r.out, "verb") == c.args[0]);
    }
  }

  TEST_CASE("bv counts match interchanging pairs") {
    const auto r = structured({"bv", data("ass_u.op"), data("ass_u.op"), "--size", "2"});
    CHECK(field(r.out, "k2") == "algebras=4 interchanging_pairs=4");
  }

  TEST_CASE("artifacts written with --out re-parse") {
    const auto dir = fs::temp_directory_path() / "catcom_cli_test";
    fs::remove_all(dir);
    fs::create_directories(dir);
    const auto tensor = (dir / "tensor.thy").string();
    CHECK(invoke({"tensor", data("monoid.thy"), data("monoid.thy"), "--out", tensor}).code == 0);
    std::ifstream in(tensor);
    std::stringstream ss;
    ss << in.rdbuf();
    const auto p = catcom::parse_presentation(ss.str());
    CHECK(p.signature().size() == 4);

    const auto gen_dir = (dir / "gen").string();
    CHECK(invoke({"gen", "--seed", "11", "--count", "6", "--out", gen_dir}).code == 0);
    std::size_t files = 0;
    for (const auto& entry : fs::directory_iterator(gen_dir)) {
      std::ifstream f(entry.path());
      std::stringstream text;
      text << f.rdbuf();
      CHECK_NOTHROW(catcom::parse_problem(text.str()));
      const auto r = invoke({"check-theory", entry.path().string(), "--depth", "3", "--model-bound", "3"});
      CHECK(r.code >= 0);
      CHECK(r.code <= 2);
      ++files;
    }
    CHECK(files == 6);
  }
}
