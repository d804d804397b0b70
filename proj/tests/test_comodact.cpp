#include "doctest.h"

#include "whk/errors.hpp"
#include "whk/gallery.hpp"

using namespace whk;

namespace {

WhaPtr share(WeakHopfAlgebra h) { return std::make_shared<const WeakHopfAlgebra>(std::move(h)); }

}  // namespace

TEST_CASE("the comultiplication is a non-degenerate coaction on H") {
  auto h = share(g4(Field::rationals()));
  Coaction x(Side::left, wba_of(h), h->wba().algebra(), h->wba().coalgebra().comult_map());
  CHECK(check_comodule_algebra(x).passed());
  CHECK(is_nondegenerate(x));
  CHECK(check_nondegenerate(x).passed());
}

TEST_CASE("constituents of every example datum") {
  for (const char* name : {"g2", "g3", "g4"}) {
    auto h = share(gallery(name, Field::prime(7)));
    for (Example e : {Example::ex1, Example::ex2, Example::ex3, Example::ex4}) {
      CAPTURE(name);
      CAPTURE(to_string(e));
      auto d = example_datum(h, e);
      CHECK(check_comodule_algebra(d->coaction).passed());
      CHECK(check_module_coalgebra(d->action).passed());
      CHECK(is_nondegenerate(d->action));
    }
  }
}

TEST_CASE("a perturbed coaction is caught") {
  auto h = share(g4(Field::rationals()));
  auto d = example_datum(h, Example::ex3);
  Matrix rho = d->coaction.rho;
  rho.at(0, 0) += rho.field().one();
  Coaction bad(d->coaction.side, d->coaction.H, d->coaction.A, rho);
  auto r = check_comodule_algebra(bad);
  CHECK_FALSE(r.passed());
  CHECK_THROWS_AS(build_datum(bad, d->action, h), AxiomFailure);
}

TEST_CASE("a perturbed action is caught") {
  auto h = share(g3(Field::rationals()));
  auto d = example_datum(h, Example::ex1);
  Tensor act = d->action.tensor();
  act[0] += act.field().one();
  Action bad(d->action.side(), d->action.H(), d->action.C(), act);
  CHECK_FALSE(check_module_coalgebra(bad).passed());
}

TEST_CASE("shapes and fields must match") {
  const Field q = Field::rationals();
  auto h = share(g2(q));
  CHECK_THROWS(Coaction(Side::left, wba_of(h), h->wba().algebra(), Matrix(q, 3, 2)));
  auto h7 = share(g2(Field::prime(7)));
  CHECK_THROWS(Coaction(Side::left, wba_of(h7), h->wba().algebra(),
                        h->wba().coalgebra().comult_map()));
}

TEST_CASE("subalgebras and restricted coactions") {
  const Field q = Field::rationals();
  auto h = share(g4(q));
  const auto& a = h->wba().algebra();
  Algebra hl = subalgebra(a, h->wba().hl());
  CHECK(hl.dim() == 2);
  CHECK(check_algebra(hl).passed());
  // Off-diagonal arrows e01 and e10 multiply to e00, which is not in the span.
  CHECK_THROWS_AS(subalgebra(a, Subspace::span(q, 4, {a.unit(), a.basis(1), a.basis(2)})),
                  NotASubalgebra);
  Coaction x(Side::left, wba_of(h), a, h->wba().coalgebra().comult_map());
  CHECK(restrict_coaction_to_subalgebra(x, h->wba().hl()).A.dim() == 2);
  Subspace swap = Subspace::span(q, 4, {a.unit(), add(a.basis(1), a.basis(2))});
  CHECK(subalgebra(a, swap).dim() == 2);
  CHECK_THROWS_AS(restrict_coaction_to_subalgebra(x, swap), NotInvariant);
}
