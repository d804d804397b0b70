#include "doctest.h"

#include "whk/integrals.hpp"

using namespace whk;

namespace {

WhaPtr share(WeakHopfAlgebra h) { return std::make_shared<const WeakHopfAlgebra>(std::move(h)); }

std::size_t v4_dim(const char* name, Example e) {
  auto h = share(gallery(name, Field::rationals()));
  auto v = compute_V4(example_datum(h, e));
  CHECK(v.report.passed());
  return v.space.dim();
}

}  // namespace

TEST_CASE("V4 dimensions over the group algebra of Z2") {
  CHECK(v4_dim("g2", Example::ex1) == 2);
  CHECK(v4_dim("g2", Example::ex3) == 2);
}

TEST_CASE("V4 dimensions over the weak examples") {
  CHECK(v4_dim("g3", Example::ex1) == 2);
  CHECK(v4_dim("g4", Example::ex1) == 1);
  CHECK(v4_dim("g4", Example::ex2) == 4);
  CHECK(v4_dim("g4", Example::ex3) == 2);
}

TEST_CASE("V4 basis vectors have zero residual and perturbations do not") {
  auto h = share(g4(Field::rationals()));
  auto d = example_datum(h, Example::ex3);
  auto v = compute_V4(d);
  for (const auto& g : v.space.basis_vectors()) CHECK(is_zero(v4_residual(*d, g)));
  Vec g = v.space.basis_vector(0);
  std::size_t i = 0;
  while (v.space.contains(add(g, unit_vec(g[0].field(), g.size(), i)))) ++i;
  CHECK_FALSE(is_zero(v4_residual(*d, add(g, unit_vec(g[0].field(), g.size(), i)))));
}

TEST_CASE("the example maps f are bijections onto V0") {
  for (const char* name : {"g2", "g3", "g4"}) {
    auto h = share(gallery(name, Field::rationals()));
    for (Example e : {Example::ex1, Example::ex2, Example::ex3}) {
      CAPTURE(name);
      CAPTURE(to_string(e));
      auto v = v0_iso(example_datum(h, e), e, h);
      CHECK(v.report.passed("f.into_v0"));
      CHECK(v.report.passed("f.bijective"));
      CHECK(v.v0.dim() == v.v4.space.dim());
    }
  }
}

TEST_CASE("normalized elements over the center correspond to the unit") {
  auto h = share(g4(Field::rationals()));
  auto v = v0_iso(example_datum(h, Example::ex1), Example::ex1, h);
  CHECK(v.report.passed());
  CHECK(check_normalization_equation(v, h->wba().one()));
  CHECK_FALSE(check_normalization_equation(v, h->wba().zero()));
}

TEST_CASE("the dual integral convention is pinned on Z2") {
  Report evidence;
  CHECK(pin_dual_convention(Field::rationals(), &evidence) == DualIntegralConvention::primary);
  CHECK(evidence.passed("convention.primary"));
}

TEST_CASE("serial and parallel V4 agree") {
  auto h = share(g4(Field::prime(7)));
  auto d = example_datum(h, Example::ex2);
  CHECK(compute_V4(d, Exec::serial).space == compute_V4(d, Exec::parallel).space);
}
