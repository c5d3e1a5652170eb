#include "cli.hpp"
#include "findings.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

using fqsum::cli::run;
using Json = nlohmann::ordered_json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<Json> lines(const std::string& text) {
  std::vector<Json> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(Json::parse(line));
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("field-info") {
  Result r = cli({"field-info", "-p", "5", "-r", "1"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["q"] == 5);
  CHECK(j["generator"] == 2);
  CHECK(j["characters"] == 4);

  CHECK(cli({"field-info", "-p", "4", "-r", "1"}).code == 2);
  j = Json::parse(cli({"field-info", "-p", "2", "-r", "2"}).out);
  CHECK(j["modulus"] == Json::array({1, 1, 1}));
  CHECK(Json::parse(cli({"field-info", "-q", "9"}).out) == Json::parse(cli({"field-info", "-p", "3", "-r", "2"}).out));
  CHECK(cli({"field-info", "-q", "6"}).code == 2);
  CHECK(cli({"field-info"}).code == 2);
  CHECK(cli({"field-info", "-q", "9", "-p", "3"}).code == 2);
  CHECK(cli({"field-info", "-q", "8", "--format", "human"}).out.rfind("F_8", 0) == 0);
}

TEST_CASE("eval") {
  Result r = cli({"eval", "jacobi", "-p", "5", "-A", "0", "-B", "0"});
  REQUIRE(r.code == 0);
  CHECK(Json::parse(r.out)["integer"] == "3");

  r = cli({"eval", "f1", "-p", "5", "-A", "1", "-B", "2", "-Bp", "3", "-C", "1", "-x", "0", "-y", "3"});
  REQUIRE(r.code == 0);
  CHECK(Json::parse(r.out)["integer"] == "0");

  // 2F1 at x = 1 against A(-1) [B | conj(A)C]; at q = 7 with A = 1, C = 4: conj(A)C = 3, A(-1) = -1
  const Json f = Json::parse(cli({"eval", "f21", "-q", "7", "-A", "1", "-B", "2", "-C", "4", "-x", "1"}).out);
  const Json b = Json::parse(cli({"eval", "binom", "-q", "7", "-A", "2", "-B", "3"}).out);
  REQUIRE(f["value"]["coeffs"].size() == b["value"]["coeffs"].size());
  for (std::size_t i = 0; i < f["value"]["coeffs"].size(); ++i) {
    CHECK(std::stol(f["value"]["coeffs"][i].get<std::string>()) ==
          -std::stol(b["value"]["coeffs"][i].get<std::string>()));
  }

  // both evaluators, and coefficient-vector element syntax
  const auto point = Json::parse(cli({"eval", "f1", "-q", "9", "-A", "1", "-B", "2", "-Bp", "3", "-C", "5", "-x",
                                      "1,1", "-y", "2,0"})
                                     .out);
  const auto chars = Json::parse(cli({"eval", "f1", "-q", "9", "-A", "1", "-B", "2", "-Bp", "3", "-C", "5", "-x",
                                      "1,1", "-y", "2,0", "--form", "char"})
                                     .out);
  CHECK(point["value"] == chars["value"]);
  CHECK(point["params"]["x"] == 2);  // 1 + x is the generator g, at index 2
  CHECK(cli({"eval", "jacobi", "-q", "9", "-A", "1", "-B", "1", "--format", "human"}).out.find('z') !=
        std::string::npos);
}

TEST_CASE("eval rejects malformed parameters") {
  CHECK(cli({"eval", "jacobi", "-p", "5", "-A", "4", "-B", "0"}).code == 2);
  CHECK(cli({"eval", "jacobi", "-p", "5", "-A", "1"}).code == 2);
  CHECK(cli({"eval", "f21", "-p", "5", "-A", "1", "-B", "1", "-C", "1"}).code == 2);
  CHECK(cli({"eval", "f21", "-p", "5", "-A", "1", "-B", "1", "-C", "1", "-x", "7"}).code == 2);
  CHECK(cli({"eval", "f21", "-q", "9", "-A", "1", "-B", "1", "-C", "1", "-x", "1,1,1"}).code == 2);
  CHECK(cli({"eval", "f21", "-q", "9", "-A", "1", "-B", "1", "-C", "1", "-x", "a"}).code == 2);
  CHECK(cli({"eval", "gauss", "-p", "5"}).code == 2);
  CHECK(cli({"eval", "jacobi", "-p", "5", "-A", "x", "-B", "0"}).code == 2);
}

TEST_CASE("verify") {
  Result r = cli({"verify", "thm1.3", "-q", "5", "--exhaustive"});
  CHECK(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["cases"] == 6400);
  CHECK(j["counterexamples"].empty());
  CHECK_FALSE(j.contains("ms"));

  CHECK(cli({"verify", "bogus-id", "-q", "3"}).code == 2);
  CHECK(cli({"verify", "-q", "3"}).code == 2);
  CHECK(cli({"verify", "--all", "thm1.1", "-q", "3"}).code == 2);
  CHECK(cli({"verify", "thm1.1", "-q", "3", "--sampled", "--exhaustive"}).code == 2);
  CHECK(cli({"verify", "thm1.1", "-q", "3", "--jobs", "0"}).code == 2);
  CHECK(cli({"verify", "thm1.1", "-q", "3,6"}).code == 2);

  r = cli({"verify", "thm3.3-b", "-q", "5", "--max-counterexamples", "2"});
  CHECK(r.code == 1);
  CHECK(Json::parse(r.out)["counterexamples"].size() == 2);
  CHECK(Json::parse(cli({"verify", "thm1.1", "-q", "5", "--timing"}).out).contains("ms"));
  CHECK(cli({"verify", "thm1.1", "-q", "5", "--mutated"}).code == 1);
  CHECK(cli({"verify", "prop2.2", "-p", "3", "-r", "2"}).code == 0);
}

TEST_CASE("verify --all streams one report per (q, id)") {
  Result r = cli({"verify", "--all", "-q", "3,4,5", "--exhaustive"});
  // The analysed entries fail as printed, so the run reports counterexamples.
  CHECK(r.code == 1);
  const auto reports = lines(r.out);
  REQUIRE(reports.size() == 3 * fqsum::registry().size());
  CHECK(reports.front()["q"] == 3);
  CHECK(reports.back()["q"] == 5);
  for (const Json& j : reports) {
    const bool analysed = findings::find(j["id"].get<std::string>()) != nullptr;
    if (!analysed) CHECK(j["passed"] == true);
  }

  std::vector<std::string> args{"verify"};
  for (const auto& c : fqsum::registry())
    if (!findings::find(c.id)) args.push_back(c.id);
  for (std::string extra : {"-q", "3,4,5", "--exhaustive"}) args.push_back(extra);
  CHECK(cli(args).code == 0);
}

TEST_CASE("verify output is byte-identical across runs and jobs") {
  const std::vector<std::string> base{"verify", "--all", "-q", "7", "--sampled", "--samples", "300", "--seed", "9"};
  auto with = [&](std::vector<std::string> extra) {
    std::vector<std::string> a = base;
    a.insert(a.end(), extra.begin(), extra.end());
    return cli(a).out;
  };
  const std::string one = with({"--jobs", "1"});
  CHECK(one == with({"--jobs", "1"}));
  CHECK(one == with({"--jobs", "4"}));
  CHECK(one != with({"--seed", "10"}));
  const std::string path = "verify_out_test.jsonl";
  CHECK(cli({"verify", "thm1.1", "-q", "5", "--out", path}).out.empty());
  CHECK(Json::parse(slurp(path))["id"] == "thm1.1");
  std::remove(path.c_str());
}

TEST_CASE("verify human format") {
  Result r = cli({"verify", "thm1.1", "cor3.2-a", "-q", "5", "--format", "human", "--max-counterexamples", "1"});
  CHECK(r.code == 1);
  CHECK(r.out.rfind("PASS thm1.1 q=5 exhaustive cases=320 failures=0", 0) == 0);
  CHECK(r.out.find("FAIL cor3.2-a q=5") != std::string::npos);
  CHECK(r.out.find("[mismatch]") != std::string::npos);
}

TEST_CASE("table") {
  Result r = cli({"table", "jacobi", "-p", "3"});
  REQUIRE(r.code == 0);
  auto rows = lines(r.out);
  CHECK(rows.size() == 4);
  CHECK(rows[0]["A"] == 0);
  CHECK(rows[0]["B"] == 0);
  CHECK(rows[0]["integer"] == "1");
  CHECK(rows[1]["B"] == 1);

  r = cli({"table", "f1", "-p", "3"});
  rows = lines(r.out);
  CHECK(rows.size() == 144);
  CHECK(rows[1]["y"] == 1);
  CHECK(rows[3]["x"] == 1);
  CHECK(r.out == cli({"table", "f1", "-p", "3"}).out);

  CHECK(lines(cli({"table", "binom", "-q", "4"}).out).size() == 9);
  CHECK(lines(cli({"table", "f21", "-q", "4"}).out).size() == 27 * 4);

  const std::string path = "table_test.jsonl";
  CHECK(cli({"table", "f21", "-q", "5", "--out", path}).code == 0);
  const std::string first = slurp(path);
  CHECK(cli({"table", "f21", "-q", "5", "--out", path}).code == 0);
  CHECK(first == slurp(path));
  CHECK(lines(first).size() == 64 * 5);
  std::remove(path.c_str());

  CHECK(cli({"table", "gauss", "-p", "3"}).code == 2);
}

TEST_CASE("list and usage") {
  Result r = cli({"list"});
  CHECK(r.code == 0);
  CHECK(lines(r.out).size() == fqsum::registry().size());
  CHECK(cli({}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"--help"}).code == 0);
}
