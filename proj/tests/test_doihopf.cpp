#include "doctest.h"

#include "whk/errors.hpp"
#include "whk/gallery.hpp"

using namespace whk;

namespace {

WhaPtr share(WeakHopfAlgebra h) { return std::make_shared<const WeakHopfAlgebra>(std::move(h)); }

bool same_structure(const Datum& a, const Datum& b) {
  return a.side == b.side && a.H->algebra().mult() == b.H->algebra().mult() &&
         a.H->coalgebra().comult() == b.H->coalgebra().comult() && a.A().mult() == b.A().mult() &&
         a.A().unit() == b.A().unit() && a.C().comult() == b.C().comult() &&
         a.C().counit_vector() == b.C().counit_vector() && a.coaction.rho == b.coaction.rho &&
         a.action.tensor() == b.action.tensor() && a.nondegenerate == b.nondegenerate;
}

}  // namespace

TEST_CASE("dualizing a datum twice gives it back") {
  for (const char* name : {"g2", "g3", "g4"}) {
    auto h = share(gallery(name, Field::rationals()));
    for (Example e : {Example::ex1, Example::ex2, Example::ex3, Example::ex4}) {
      CAPTURE(name);
      CAPTURE(to_string(e));
      auto d = example_datum(h, e);
      auto dd = dual_datum(*d);
      CHECK(dd->side == Side::left);
      CHECK(dd->nondegenerate == d->nondegenerate);
      auto ddd = dual_datum(*dd);
      CHECK(same_structure(*d, *ddd));
    }
  }
}
