#include "doctest.h"

#include <filesystem>
#include <fstream>

#include "whk/serialize.hpp"
#include "whk/smash.hpp"

using namespace whk;

namespace {

WhaPtr share(WeakHopfAlgebra h) { return std::make_shared<const WeakHopfAlgebra>(std::move(h)); }

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "whk_test_serialize";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("gallery objects round-trip bit for bit") {
  for (Field f : {Field::rationals(), Field::prime(7)}) {
    for (const char* name : {"g2", "g3", "g4", "zn(3)", "pair(3)", "dual:g4", "opcop:g3"}) {
      CAPTURE(name);
      const std::string text = dump(to_json(gallery(name, f)));
      const Json back = to_json(wha_from_json(parse_json(text)));
      CHECK(dump(back) == text);
      CHECK(dump(to_json(algebra_from_json(parse_json(text)))) ==
            dump(to_json(gallery(name, f).wba().algebra())));
    }
  }
}

TEST_CASE("rational scalars are written in lowest terms") {
  const Field q = Field::rationals();
  auto h = dual(g4(q));
  Json j = to_json(h);
  CHECK(j["field"]["kind"] == "rational");
  auto lb = left_base_coalgebra(g4(q));
  const std::string text = dump(to_json(lb.coalgebra));
  CHECK(dump(to_json(coalgebra_from_json(parse_json(text)))) == text);
}

TEST_CASE("data, modules and Yetter-Drinfeld modules round-trip") {
  auto h = share(g4(Field::rationals()));
  for (Example e : {Example::ex1, Example::ex2, Example::ex3, Example::ex4}) {
    CAPTURE(to_string(e));
    auto d = example_datum(h, e);
    const std::string text = dump(to_json(*d));
    auto back = datum_from_json(parse_json(text));
    CHECK(dump(to_json(*back)) == text);
    CHECK(back->nondegenerate == d->nondegenerate);
    auto s = build_smash(d);
    auto m = functor_Pprime(s, regular_module(s.algebra));
    const std::string mt = dump(to_json(m));
    CHECK(dump(to_json(module_from_json(parse_json(mt)))) == mt);
  }
  auto unit = yd_unit(wba_of(h));
  const std::string yt = dump(to_json(unit));
  CHECK(dump(to_json(yd_from_json(parse_json(yt)))) == yt);
}

TEST_CASE("malformed JSON names the position") {
  try {
    parse_json("{\n  \"dim\": 2,\n  oops\n}");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("malformed structures are rejected") {
  Json j = to_json(g2(Field::rationals()));
  Json bad = j;
  bad["unit"] = Json::array({"1"});
  CHECK_THROWS_AS(algebra_from_json(bad), ParseError);
  bad = j;
  bad["unit"][0] = 0.5;
  CHECK_THROWS_AS(algebra_from_json(bad), ParseError);
  bad = j;
  bad.erase("field");
  CHECK_THROWS_AS(algebra_from_json(bad), ParseError);
  bad = j;
  bad["field"] = Json{{"kind", "prime"}, {"p", 8}};
  CHECK_THROWS(algebra_from_json(bad));
  bad = j;
  bad["antipode"][0][0] = "5";
  CHECK_THROWS_AS(wha_from_json(bad), AxiomFailure);
}

TEST_CASE("references to the gallery and to files") {
  Json d = to_json(*example_datum(share(g3(Field::rationals())), Example::ex1));
  d["H"] = "gallery:g3";
  CHECK(datum_from_json(d)->H->dim() == 2);
  write_json_file(scratch("h.json"), to_json(g3(Field::rationals())));
  d["H"] = "h.json";
  auto path = scratch("datum.json");
  write_json_file(path, d);
  ReadContext ctx;
  ctx.dir = path.parent_path();
  CHECK(datum_from_json(read_json_file(path), ctx)->H->dim() == 2);
  d["H"] = "missing.json";
  CHECK_THROWS_AS(datum_from_json(d, ctx), ParseError);
}

TEST_CASE("reports serialize checks in id order with witnesses") {
  const Field q = Field::rationals();
  auto h = g2(q);
  Matrix s = h.antipode();
  s.at(0, 1) += q.one();
  Report r = check_wha(h.wba(), s);
  Json j = to_json(r);
  bool sorted = true, witnessed = false;
  for (std::size_t i = 1; i < j["checks"].size(); ++i) {
    sorted = sorted && j["checks"][i - 1]["id"].get<std::string>() <= j["checks"][i]["id"].get<std::string>();
  }
  for (const auto& c : j["checks"]) witnessed = witnessed || (!c["pass"].get<bool>() && c.contains("witness"));
  CHECK(sorted);
  CHECK(witnessed);
  CHECK(render_text(r).find("FAIL") != std::string::npos);
}
