#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "zetafrob/cli.hpp"
#include "zetafrob/error.hpp"

using namespace zetafrob;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "zetafrob");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string parse_message(const std::string& text, int n, std::uint64_t p) {
  try {
    cli::parse_coefficients(text, n, p, "--q-poly");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    return e.what();
  }
  FAIL("expected a parse error");
  return {};
}

}  // namespace

TEST_CASE("parse_coefficients") {
  using V = std::vector<std::vector<std::int64_t>>;
  CHECK(cli::parse_coefficients("0,1,0,1", 1, 3, "--q-poly") == V{{0}, {1}, {0}, {1}});
  CHECK(cli::parse_coefficients("2:1,0:0,1:0", 2, 3, "--q-poly") == V{{2, 1}, {0, 0}, {1, 0}});

  CHECK(parse_message("0,1,3", 1, 3).find("column 5") != std::string::npos);
  CHECK(parse_message("0,,1", 1, 3).find("column 3") != std::string::npos);
  CHECK(parse_message("1:2,1", 2, 3).find("column 5") != std::string::npos);
  CHECK(parse_message("1;2", 1, 3).find("column 2") != std::string::npos);
  CHECK(parse_message("", 1, 3).find("--q-poly") != std::string::npos);
  CHECK(parse_message("1,", 1, 3).find("column 3") != std::string::npos);
}

TEST_CASE("run on y^2 = x^3 + x over F_3") {
  const Outcome o = invoke({"--p", "3", "--n", "1", "--q-poly", "0,1,0,1"});
  REQUIRE(o.code == 0);
  const auto doc = nlohmann::json::parse(o.out);
  CHECK(doc["L"] == nlohmann::json::array({3, 0, 1}));
  CHECK(doc["q"] == 3);
  CHECK(doc["g"] == 1);
  CHECK(doc["d"] == 3);
  for (const char* key : {"L", "q", "p", "n", "g", "d", "basis", "strip", "N1", "N", "nwork",
                          "matrix_min_val", "twisted", "timings", "warnings"})
    CHECK_MESSAGE(doc.contains(key), key);
  for (const char* stage : {"setup", "lift", "frobenius_matrix", "twisted_power", "charpoly", "lift_lpoly"})
    CHECK_MESSAGE(doc["timings"].contains(stage), stage);
  CHECK_FALSE(doc.contains("oracle"));
}

TEST_CASE("schema is stable across inputs") {
  const Outcome a = invoke({"--p", "3", "--q-poly", "0,1,0,1"});
  const Outcome b = invoke({"--p", "5", "--n", "2", "--modulus", "3,0,1", "--q-poly", "1:1,0:1,0:0,0:0,1:0"});
  REQUIRE(a.code == 0);
  REQUIRE(b.code == 0);
  std::vector<std::string> ka, kb;
  const auto da = nlohmann::ordered_json::parse(a.out), db = nlohmann::ordered_json::parse(b.out);
  for (const auto& [k, v] : da.items()) ka.push_back(k);
  for (const auto& [k, v] : db.items()) kb.push_back(k);
  CHECK(ka == kb);
}

TEST_CASE("--oracle adds the brute-force polynomial") {
  const Outcome o = invoke({"--p", "5", "--q-poly", "1,1,0,0,0,1", "--oracle", "--seed", "4"});
  REQUIRE(o.code == 0);
  const auto doc = nlohmann::json::parse(o.out);
  CHECK(doc["oracle"]["match"] == true);
  CHECK(doc["oracle"]["L"] == doc["L"]);
}

TEST_CASE("--basis b1 below 2g warns about denominators") {
  const Outcome o = invoke({"--p", "3", "--q-poly", "2,1,0,0,0,0,0,1", "--basis", "b1", "--oracle"});
  REQUIRE(o.code == 0);
  const auto doc = nlohmann::json::parse(o.out);
  CHECK(doc["basis"] == "B1");
  CHECK(doc["matrix_min_val"].get<int>() < 0);
  CHECK_FALSE(doc["warnings"].empty());
  CHECK(doc["oracle"]["match"] == true);
  CHECK(o.err.find("warning") != std::string::npos);
}

TEST_CASE("--json-out writes the same document") {
  const std::string path = "cli_test_out.json";
  const Outcome o = invoke({"--p", "3", "--q-poly", "0,1,0,1", "--json-out", path});
  REQUIRE(o.code == 0);
  std::ifstream f(path);
  std::stringstream s;
  s << f.rdbuf();
  CHECK(s.str() == o.out);
  std::remove(path.c_str());
}

TEST_CASE("input errors exit with 2") {
  CHECK(invoke({"--q-poly", "0,1,0,1"}).code == 2);
  CHECK(invoke({"--p", "3", "--q-poly", "0,1,0,3"}).code == 2);
  CHECK(invoke({"--p", "4", "--q-poly", "0,1,0,1"}).code == 2);
  CHECK(invoke({"--p", "2", "--q-poly", "0,1,0,1"}).code == 2);
  CHECK(invoke({"--p", "3", "--q-poly", "0,0,1,1"}).code == 2);
  CHECK(invoke({"--p", "3", "--q-poly", "0,1,1"}).code == 2);
  CHECK(invoke({"--p", "3", "--n", "2", "--q-poly", "0:0,1:0,0:0,1:0"}).code == 2);
  CHECK(invoke({"--p", "3", "--n", "2", "--modulus", "1,0,1", "--q-poly", "0:0,1:0,0:0,1:0"}).code == 0);
  CHECK(invoke({"--p", "3", "--n", "2", "--modulus", "2,0,1", "--q-poly", "0:0,1:0,0:0,1:0"}).code == 2);
  CHECK(invoke({"--p", "3", "--q-poly", "0,1,0,1", "--basis", "b3"}).code == 2);
  const Outcome e = invoke({"--p", "3", "--q-poly", "0,1,x"});
  CHECK(e.code == 2);
  CHECK(e.err.find("column 5") != std::string::npos);
}

TEST_CASE("insufficient forced precision is an internal failure") {
  const Outcome o = invoke({"--p", "7", "--q-poly", "2,3,0,0,0,1", "--precision", "1"});
  CHECK(o.code == 3);
  CHECK_FALSE(o.err.empty());
}
