#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "whk/serialize.hpp"

using namespace whk;

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

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "whk_test_cli";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string write(const std::string& name, const std::string& text) {
  auto p = scratch(name);
  std::ofstream(p) << text;
  return p.string();
}

}  // namespace

TEST_CASE("valid structures exit 0") {
  CHECK(run({"check", "wha", "--base", "g4"}).code == 0);
  CHECK(run({"check", "wha", "--base", "g2", "--field", "fp:7"}).code == 0);
  CHECK(run({"check", "datum", "--datum", "ex3", "--base", "g3"}).code == 0);
  CHECK(run({"check", "yd", "--base", "g2"}).code == 0);
  CHECK(run({"integrals", "v4", "--datum", "ex1", "--base", "g4"}).code == 0);
  CHECK(run({"suite", "smash", "--base", "g2", "--serial"}).code == 0);
}

TEST_CASE("objects written by build are read back by check") {
  const std::string h = scratch("g4.json").string();
  auto b = run({"gallery", "g4", "--out", h});
  CHECK(b.code == 0);
  CHECK(b.out.find("dim 4") != std::string::npos);
  CHECK(run({"check", "wha", "--in", h}).code == 0);
  const std::string d = scratch("dual.json").string();
  CHECK(run({"build", "dual", "--in", h, "--out", d}).code == 0);
  CHECK(run({"check", "wha", "--in", d}).code == 0);
  const std::string dd = scratch("double.json").string();
  CHECK(run({"build", "double", "--base", "g2", "--out", dd}).code == 0);
  CHECK(read_json_file(dd)["dim"] == 4);
}

TEST_CASE("failing axioms exit 1 with the failing check") {
  Json j = to_json(g2(Field::rationals()));
  j["antipode"][0][1] = "1";
  const std::string p = write("bad_antipode.json", dump(j));
  auto r = run({"check", "wha", "--in", p});
  CHECK(r.code == 1);
  CHECK(r.out.find("FAIL") != std::string::npos);
  j = to_json(g2(Field::rationals()));
  j["mult"][0][0][0] = "2";
  CHECK(run({"check", "algebra", "--in", write("bad_mult.json", dump(j))}).code == 1);
}

TEST_CASE("input errors exit 2") {
  CHECK(run({"check", "wha", "--in", write("broken.json", "{\"dim\": 2,")}).code == 2);
  CHECK(run({"check", "wha", "--in", scratch("absent.json").string()}).code == 2);
  CHECK(run({"check", "wha"}).code == 2);
  CHECK(run({"gallery", "nope"}).code == 2);
  CHECK(run({"gallery", "pair(9)", "--max-dim", "64"}).code == 2);
  CHECK(run({"check", "wha", "--base", "g4", "--max-dim", "3"}).code == 2);
  CHECK(run({"check", "wha", "--base", "g2", "--field", "fp:8"}).code == 2);
  CHECK(run({"check", "nonsense"}).code == 2);
  CHECK(run({"suite", "nonsense"}).code == 2);
  CHECK(run({"integrals", "v0", "--base", "g2"}).code == 2);
  Json j = to_json(g2(Field::rationals()));
  j["unit"] = Json::array({"1"});
  CHECK(run({"check", "algebra", "--in", write("short_unit.json", dump(j))}).code == 2);
}

TEST_CASE("mismatched fields exit 2") {
  const std::string p = scratch("g2_q.json").string();
  CHECK(run({"gallery", "g2", "--out", p}).code == 0);
  CHECK(run({"check", "wha", "--in", p, "--field", "fp:7"}).code == 2);
}

TEST_CASE("JSON reports") {
  auto r = run({"check", "wha", "--base", "g3", "--report", "json"});
  CHECK(r.code == 0);
  Json j = parse_json(r.out);
  CHECK(j["checks"].is_array());
  CHECK_FALSE(j["checks"].empty());
}
