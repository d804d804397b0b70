#include "doctest.h"

#include "whk/adjoint.hpp"
#include "whk/errors.hpp"
#include "whk/smash.hpp"

using namespace whk;

namespace {

WhaPtr share(WeakHopfAlgebra h) { return std::make_shared<const WeakHopfAlgebra>(std::move(h)); }

}  // namespace

TEST_CASE("over a Hopf algebra induction is a plain tensor product") {
  auto h = share(g2(Field::rationals()));
  for (Example e : {Example::ex1, Example::ex2, Example::ex3, Example::ex4}) {
    CAPTURE(to_string(e));
    auto d = example_datum(h, e);
    auto g = induce_G(regular_amodule(*d), d);
    CHECK(g.carrier.dim() == d->C().dim() * d->A().dim());
    CHECK(check_module(g.module).passed());
    auto gh = coinduce_Ghat(regular_ccomodule(*d), d);
    CHECK(gh.carrier.dim() == d->C().dim() * d->A().dim());
    CHECK(check_module(gh.module).passed());
  }
}

TEST_CASE("induced modules are Doi-Hopf modules on weak examples") {
  for (const char* name : {"g3", "g4"}) {
    auto h = share(gallery(name, Field::rationals()));
    for (Example e : {Example::ex1, Example::ex2, Example::ex3, Example::ex4}) {
      CAPTURE(name);
      CAPTURE(to_string(e));
      auto d = example_datum(h, e);
      CHECK(check_amodule(*d, regular_amodule(*d)).passed());
      CHECK(check_ccomodule(*d, regular_ccomodule(*d)).passed());
      CHECK(check_module(induce_G(regular_amodule(*d), d).module).passed());
      CHECK(check_module(coinduce_Ghat(regular_ccomodule(*d), d).module).passed());
      CHECK(check_induction_identities(*d).passed());
    }
  }
}

TEST_CASE("both adjunctions on harvested modules") {
  auto h = share(g4(Field::rationals()));
  for (Example e : {Example::ex1, Example::ex3}) {
    auto d = example_datum(h, e);
    auto mods = harvest_modules(build_smash(d), 3);
    CHECK_FALSE(mods.empty());
    CHECK(check_adjunction(d, mods).passed());
  }
}

TEST_CASE("induction of the zero module") {
  auto h = share(g4(Field::rationals()));
  auto d = example_datum(h, Example::ex2);
  AModule zero{0, Tensor(h->field(), {0, d->A().dim(), 0})};
  auto g = induce_G(zero, d);
  CHECK(g.module.dim() == 0);
  CHECK(check_module(g.module).passed());
  CComodule czero{0, Matrix(h->field(), 0, 0)};
  CHECK(coinduce_Ghat(czero, d).module.dim() == 0);
  CHECK(counit_delta(g).rows() == 0);
}

TEST_CASE("induction refuses left data") {
  auto h = share(g2(Field::rationals()));
  auto d = dual_datum(*example_datum(h, Example::ex1));
  CHECK_THROWS_AS(induce_G(AModule{0, Tensor(h->field(), {0, d->A().dim(), 0})}, d),
                  DegenerateDatum);
}
