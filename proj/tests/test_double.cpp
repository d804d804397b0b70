#include "doctest.h"

#include "whk/double.hpp"
#include "whk/smash.hpp"

using namespace whk;

namespace {

WhaPtr share(WeakHopfAlgebra h) { return std::make_shared<const WeakHopfAlgebra>(std::move(h)); }

}  // namespace

TEST_CASE("doubles of small groupoid algebras") {
  const Field q = Field::rationals();
  auto d2 = build_double(share(g2(q)));
  CHECK(d2.dim() == 4);
  CHECK(d2.report.passed());
  CHECK(check_wha(d2.wha->wba(), d2.wha->antipode()).passed());
  // The double of the 2x2 matrix algebra is Morita trivial: one simple module of dimension 2.
  auto d4 = build_double(share(g4(q)));
  CHECK(d4.dim() == 4);
  CHECK(center(d4.algebra).dim() == 1);
  CHECK(check_wha(d4.wha->wba(), d4.wha->antipode()).passed());
}

TEST_CASE("the double of Z2 is commutative") {
  auto d = build_double(share(g2(Field::prime(7))));
  CHECK(center(d.algebra).dim() == 4);
}

TEST_CASE("projection and section of the double") {
  auto d = build_double(share(g3(Field::rationals())));
  CHECK((d.projection * d.section).is_identity());
  for (const auto& v : d.relations.basis_vectors()) CHECK(is_zero(d.projection.apply(v)));
}

TEST_CASE("the twisted double has the dimension of the double") {
  auto t = build_twisted_double(share(g4(Field::rationals())));
  CHECK(t.algebra.dim() == t.inner.dim());
  CHECK(check_algebra(t.algebra).passed());
}

TEST_CASE("Yetter-Drinfeld unit, tensors and unitors") {
  for (const char* name : {"g2", "g3", "g4"}) {
    CAPTURE(name);
    auto h = share(gallery(name, Field::rationals()));
    auto unit = yd_unit(wba_of(h));
    CHECK(unit.dim == h->wba().hl().dim());
    auto r = check_yd(unit, h);
    CHECK(r.passed());
    CHECK(r.note_value("yd.forms_agree") == "true");
    auto uu = yd_tensor(unit, unit);
    CHECK(uu.module.dim == unit.dim);
    CHECK(check_yd(uu.module, h).passed());
    CHECK(check_unitors(unit, unit).passed());
  }
}

TEST_CASE("Yetter-Drinfeld modules are modules over the double") {
  for (const char* name : {"g2", "g4"}) {
    CAPTURE(name);
    auto h = share(gallery(name, Field::rationals()));
    auto d = build_double(h);
    auto reg = double_to_yd(regular_module(d.algebra), d);
    CHECK(check_yd(reg, h).passed());
    CHECK(check_yd_vs_double(reg, d).passed());
    CHECK(check_yd_vs_double(yd_unit(wba_of(h)), d).passed());
    CHECK(same_module(yd_to_double(reg, d), regular_module(d.algebra)));
  }
}

TEST_CASE("a perturbed coaction breaks the Yetter-Drinfeld relation") {
  auto h = share(g4(Field::rationals()));
  auto d = build_double(h);
  auto reg = double_to_yd(regular_module(d.algebra), d);
  reg.coaction.at(1, 0) += reg.coaction.field().one();
  CHECK_FALSE(check_yd(reg, h).passed());
}
