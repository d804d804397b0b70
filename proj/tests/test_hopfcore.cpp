#include "doctest.h"

#include "whk/gallery.hpp"
#include "whk/integrals.hpp"

using namespace whk;

namespace {

Vec ints(Field f, std::initializer_list<long> xs) {
  Vec v;
  for (long x : xs) v.push_back(f.from_int(x));
  return v;
}

Tensor bumped(const Tensor& t, std::size_t i) {
  Tensor u = t;
  u[i] += t.field().one();
  return u;
}

}  // namespace

TEST_CASE("the group algebra of Z2 is an ordinary Hopf algebra") {
  const Field q = Field::rationals();
  auto h = g2(q);
  CHECK(h.wba().counit_multiplicative());
  CHECK(h.wba().pi_l() == Matrix::from_columns(q, 2, {ints(q, {1, 0}), ints(q, {1, 0})}));
  CHECK(h.wba().hl().dim() == 1);
  CHECK(h.antipode().is_identity());
  CHECK(h.wba().delta_one() == kron(ints(q, {1, 0}), ints(q, {1, 0})));
}

TEST_CASE("counital subalgebras of groupoid algebras are spanned by identities") {
  const Field q = Field::rationals();
  CHECK(g3(q).wba().hl() == Subspace::full(q, 2));
  auto h4 = g4(q);
  CHECK(h4.wba().hl().dim() == 2);
  CHECK(h4.wba().hl() == h4.wba().hr());
  CHECK(pair(3, q).wba().hl().dim() == 3);
  CHECK_FALSE(h4.wba().counit_multiplicative());
}

TEST_CASE("perturbed structure constants fail with a witness") {
  const Field q = Field::rationals();
  auto h = g4(q);
  const auto& a = h.wba().algebra();
  const auto& c = h.wba().coalgebra();
  Algebra a2(q, bumped(a.mult(), 1), a.unit());
  auto r = check_wba(a2, c);
  CHECK_FALSE(r.passed());
  bool witnessed = false;
  for (const auto& ch : r.checks()) witnessed = witnessed || (!ch.pass && ch.witness);
  CHECK(witnessed);
  Coalgebra c2(q, bumped(c.comult(), 0), c.counit_vector());
  CHECK_FALSE(check_wba(a, c2).passed());
  Matrix s = h.antipode();
  s.at(0, 0) += q.one();
  CHECK_FALSE(check_wha(h.wba(), s).passed());
  CHECK_THROWS_AS(WeakHopfAlgebra::make(h.wba(), s), AxiomFailure);
}

TEST_CASE("duals, opposites and tensor products stay weak Hopf") {
  const Field q = Field::rationals();
  auto h = g4(q);
  auto d = dual(h);
  CHECK(check_wha(d.wba(), d.antipode()).passed());
  auto dd = dual(d);
  CHECK(dd.wba().algebra().mult() == h.wba().algebra().mult());
  CHECK(dd.wba().coalgebra().comult() == h.wba().coalgebra().comult());
  auto v = op_cop_variants(h);
  for (const auto* x : {&v.op, &v.cop, &v.op_cop}) CHECK(check_wha(x->wba(), x->antipode()).passed());
  auto t = tensor_product(g2(q), g3(q));
  CHECK(t.dim() == 4);
  CHECK(check_wha(t.wba(), t.antipode()).passed());
}

TEST_CASE("serial and parallel checks agree") {
  auto h = pair(3, Field::prime(5));
  auto a = check_wha(h.wba(), h.antipode(), Exec::serial);
  auto b = check_wha(h.wba(), h.antipode(), Exec::parallel);
  REQUIRE(a.checks().size() == b.checks().size());
  for (std::size_t i = 0; i < a.checks().size(); ++i) {
    CHECK(a.checks()[i].id == b.checks()[i].id);
    CHECK(a.checks()[i].pass == b.checks()[i].pass);
  }
}

TEST_CASE("center of the 2x2 matrix algebra is the scalars") {
  const Field q = Field::rationals();
  auto h = g4(q);
  auto z = center(h.wba().algebra());
  CHECK(z.dim() == 1);
  CHECK(z.contains(h.wba().one()));
  CHECK(center(g2(q).wba().algebra()).dim() == 2);
}

TEST_CASE("integrals of groupoid algebras") {
  const Field q = Field::rationals();
  auto h = g2(q);
  auto r = integral_space(h, Side::right);
  CHECK(r.space == Subspace::span(q, 2, {ints(q, {1, 1})}));
  CHECK(integral_space(h, Side::left).space == r.space);
  CHECK(integral_space(g3(q), Side::right).space.dim() == 2);
  CHECK(integral_space(g4(q), Side::right).space.dim() == 2);
  CHECK(is_nondegenerate_integral(h, ints(q, {1, 1})));
  CHECK_FALSE(is_nondegenerate_integral(h, ints(q, {0, 0})));
  Vec rho = dual_right_integral(h, ints(q, {1, 1}));
  CHECK(rho == ints(q, {1, 0}));
  CHECK_THROWS_AS(dual_right_integral(h, ints(q, {0, 0})), NoDualIntegral);
}

TEST_CASE("left base coalgebra of the pair groupoid") {
  auto lb = left_base_coalgebra(g4(Field::rationals()));
  CHECK(lb.forms_agree);
  CHECK(lb.coalgebra.dim() == 2);
  CHECK(check_coalgebra(lb.coalgebra).passed());
}
