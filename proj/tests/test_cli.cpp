#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rootpoly/cli.hpp"
#include "rootpoly/graph_io.hpp"
#include "rootpoly/polynomial.hpp"
#include "rootpoly/polytope.hpp"
#include "rootpoly/serialize.hpp"
#include "rootpoly/shelling.hpp"

using namespace rootpoly;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string kPath4 = "n=4; edges=1-2,2-3,3-4";

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("golden text outputs") {
    CHECK(run({"reduce", "--mode", "S", "--strategy", "lex-first", "x12 x23"}).out == "x13 x12 + x23 x13 + b x13\n");
    CHECK(run({"ehrhart", kPath4, "--eval", "1"}).out == "7\n");
    CHECK(run({"normal-form", "x12 x23 x34"}).out ==
          "x14 x13 x12 + x14 x23 x13 + x24 x14 x23 + x34 x14 x12 + x34 x24 x14 + b x14 x12 + b x14 x13 + "
          "b x14 x23 + b x24 x14 + b x34 x14 + b^2 x14\n");
    CHECK(run({"fvector", kPath4}).out == "f = [0, 1, 5, 5]\n");
    CHECK(run({"census", kPath4}).out == "f = [0, 1, 5, 5]\n");
    CHECK(run({"volume", kPath4}).out == "5/6\n");
    CHECK(run({"ehrhart", kPath4}).out == "L(t) = 5/6 t^3 + 5/2 t^2 + 8/3 t + 1\n");
    CHECK(run({"series", kPath4}).out == "num = [1, 3, 1]; den = (1-x)^4\n");
    CHECK(run({"triangulate", "n=3; edges=1-2,2-3"}).out == "n=3; edges=1-2,1-3\nn=3; edges=1-3,2-3\n");
  }

  TEST_CASE("shell fixture") {
    const Result r = run({"shell", "n=5; edges=1-3,2-3,3-4,3-5"});
    CHECK(r.code == 0);
    CHECK(r.out.find("T5: {1-5,2-4,2-5,3-4} S={1-5,2-5,3-4} M={} S_T={2-5,3-4}\n") != std::string::npos);
  }

  TEST_CASE("verify exits zero on standard fixtures") {
    for (const std::string& g : {kPath4, std::string("n=5; edges=1-3,2-3,3-4,3-5"), std::string("n=3; edges=1-2,2-3"),
                                 std::string("n=4; edges=1-4,2-4,3-4")}) {
      const Result r = run({"verify", g});
      CHECK_MESSAGE(r.code == 0, r.out);
    }
  }

  TEST_CASE("deterministic output") {
    for (int k = 0; k < 2; ++k)
      CHECK(run({"reduce", "--mode", "S", "--strategy", "seeded-random", "--seed", "4", "x12 x23 x34"}).out ==
            run({"reduce", "--mode", "S", "--strategy", "seeded-random", "--seed", "4", "x12 x23 x34"}).out);
  }

  TEST_CASE("json outputs round trip") {
    const Polynomial p = nlohmann::json::parse(run({"normal-form", "x12 x23 x34", "--format", "json"}).out);
    CHECK(p == parse_polynomial(run({"normal-form", "x12 x23 x34"}).out, Mode::noncommutative));
    const FVector f = nlohmann::json::parse(run({"fvector", kPath4, "--format", "json"}).out);
    CHECK(f == f_vector(parse_graph(kPath4)));
    const EhrhartPolynomial e = nlohmann::json::parse(run({"ehrhart", kPath4, "--format", "json"}).out);
    CHECK(e == ehrhart(parse_graph(kPath4)));
    const EhrhartSeries s = nlohmann::json::parse(run({"series", kPath4, "--format", "json"}).out);
    CHECK(s.numerator == ehrhart_series(parse_graph(kPath4)).numerator);
    const std::vector<Graph> t = nlohmann::json::parse(run({"triangulate", kPath4, "--format", "json"}).out);
    CHECK(t == triangulate(parse_graph(kPath4)));
    const auto steps = nlohmann::json::parse(run({"shell", kPath4, "--format", "json"}).out).get<std::vector<ShellingStep>>();
    CHECK(steps.size() == 5);
    const auto report = nlohmann::json::parse(run({"verify", kPath4, "--format", "json"}).out);
    CHECK(report["pass"] == true);
    CHECK(parse_rational(nlohmann::json::parse(run({"volume", kPath4, "--format", "json"}).out).get<std::string>()) ==
          Rational(5, 6));
  }

  TEST_CASE("input from a file") {
    const std::string name = "cli_test_input.txt";
    {
      std::ofstream file(name);
      file << kPath4 << "\n";
    }
    CHECK(run({"fvector", name}).out == "f = [0, 1, 5, 5]\n");
    std::remove(name.c_str());
  }

  TEST_CASE("errors") {
    const Result bad_graph = run({"fvector", "n=4; edges=1-2,2-x"});
    CHECK(bad_graph.code == 2);
    CHECK(bad_graph.err == "error: expected a nonnegative integer\n  n=4; edges=1-2,2-x\n                   ^\n");
    const Result bad_word = run({"reduce", "x12 y23"});
    CHECK(bad_word.code == 2);
    CHECK(bad_word.err.find("      ^") != std::string::npos);
    CHECK(run({}).code == 2);
    CHECK(run({"bogus", "x"}).code == 2);
    CHECK(run({"fvector"}).code == 2);
    CHECK(run({"reduce", "--mode", "Q", "x12"}).code == 2);
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"census", "n=8; edges=1-2,2-3,3-4,4-5,5-6,6-7,7-8"}).code == 2);
    CHECK(run({"shell", "n=4; edges=1-3,2-4,1-2"}).code == 2);
  }
}
