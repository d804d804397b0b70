#include "doctest.h"

#include "whk/errors.hpp"
#include "whk/gallery.hpp"

using namespace whk;

namespace {

WhaPtr share(WeakHopfAlgebra h) { return std::make_shared<const WeakHopfAlgebra>(std::move(h)); }

}  // namespace

TEST_CASE("groupoid algebras pass the weak Hopf axioms") {
  for (Field f : {Field::rationals(), Field::prime(7)}) {
    for (const char* name : {"g2", "g3", "g4", "zn(3)", "pair(3)", "dual:g4", "opcop:g4"}) {
      CAPTURE(name);
      auto h = gallery(name, f);
      CHECK(check_wha(h.wba(), h.antipode()).passed());
    }
  }
}

TEST_CASE("G3 is weak and G2 is not") {
  auto q = Field::rationals();
  CHECK(check_wba(g3(q).wba().algebra(), g3(q).wba().coalgebra()).note_value("weak") == "true");
  CHECK(check_wba(g2(q).wba().algebra(), g2(q).wba().coalgebra()).note_value("weak") == "false");
}

TEST_CASE("every example datum is a non-degenerate right datum") {
  for (const char* name : {"g2", "g3", "g4"}) {
    auto h = share(gallery(name, Field::rationals()));
    for (Example e : {Example::ex1, Example::ex2, Example::ex3, Example::ex4}) {
      CAPTURE(name);
      CAPTURE(to_string(e));
      auto d = example_datum(h, e);
      CHECK(d->side == Side::right);
      CHECK(d->nondegenerate);
    }
  }
}

TEST_CASE("both forms of the H^L coproduct agree") {
  for (const char* name : {"g2", "g3", "g4", "pair(3)"}) {
    CHECK(left_base_coalgebra(gallery(name, Field::rationals())).forms_agree);
  }
}

TEST_CASE("broken groupoid tables are rejected") {
  Groupoid g = cyclic_group(3);
  g.compose[1][2] = 1;
  CHECK_THROWS_AS(groupoid_algebra(g, Field::rationals()), NotAGroupoid);
  CHECK_THROWS_AS(gallery("nope", Field::rationals()), ParseError);
}
