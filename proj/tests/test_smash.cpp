#include "doctest.h"

#include "whk/errors.hpp"
#include "whk/smash.hpp"

using namespace whk;

namespace {

WhaPtr share(WeakHopfAlgebra h) { return std::make_shared<const WeakHopfAlgebra>(std::move(h)); }

// The same WHA on the basis reordered by perm.
WhaPtr permuted(const WeakHopfAlgebra& h, const std::vector<std::size_t>& perm) {
  const Field f = h.field();
  Matrix p(f, h.dim(), h.dim());
  for (std::size_t k = 0; k < perm.size(); ++k) p.at(k, perm[k]) = f.one();
  auto b = WeakBialgebra::make(permute_basis(h.wba().algebra(), perm),
                               permute_basis(h.wba().coalgebra(), perm));
  return share(WeakHopfAlgebra::make(b, p * h.antipode() * inverse(p)));
}

}  // namespace

TEST_CASE("smash products over the group algebra of Z2") {
  auto h = share(g2(Field::rationals()));
  auto dim = [&](Example e) { return build_smash(example_datum(h, e)).algebra.dim(); };
  CHECK(dim(Example::ex1) == 2);
  CHECK(dim(Example::ex2) == 2);
  CHECK(dim(Example::ex3) == 4);
}

TEST_CASE("the smash product of H with its dual is a full matrix algebra") {
  auto h = share(g2(Field::rationals()));
  auto s = build_smash(example_datum(h, Example::ex3));
  CHECK(center(s.algebra).dim() == 1);
  auto w = build_weyl(wba_of(h));
  CHECK(w.algebra.dim() == 4);
}

TEST_CASE("smash laws and comparison maps on every example") {
  for (const char* name : {"g2", "g3", "g4"}) {
    auto h = share(gallery(name, Field::rationals()));
    for (Example e : {Example::ex1, Example::ex2, Example::ex3, Example::ex4}) {
      CAPTURE(name);
      CAPTURE(to_string(e));
      auto s = build_smash(example_datum(h, e));
      CHECK(s.e_idempotent);
      CHECK(check_smash(s).passed());
      auto iso = example_iso(s, e, h);
      CHECK(iso.report.passed());
      CHECK(iso.target.dim() == s.algebra.dim());
    }
  }
}

TEST_CASE("smash products do not depend on the basis order") {
  const Field q = Field::rationals();
  auto h = share(g4(q));
  auto hp = permuted(*h, {3, 1, 0, 2});
  CHECK(check_wha(hp->wba(), hp->antipode()).passed());
  for (Example e : {Example::ex1, Example::ex2, Example::ex3, Example::ex4}) {
    CAPTURE(to_string(e));
    auto s = build_smash(example_datum(h, e));
    auto sp = build_smash(example_datum(hp, e));
    CHECK(s.algebra.dim() == sp.algebra.dim());
    CHECK(center(s.algebra).dim() == center(sp.algebra).dim());
    CHECK(check_smash(sp).passed());
    CHECK(example_iso(sp, e, hp).report.passed());
  }
}

TEST_CASE("left data are refused") {
  auto h = share(g2(Field::rationals()));
  auto d = dual_datum(*example_datum(h, Example::ex1));
  CHECK_THROWS_AS(build_smash(d), DegenerateDatum);
}

TEST_CASE("P and P' are mutually inverse on cyclic modules") {
  auto h = share(g4(Field::rationals()));
  auto s = build_smash(example_datum(h, Example::ex3));
  auto reg = regular_module(s.algebra);
  CHECK(check_right_module(s.algebra, reg).passed());
  for (std::size_t i = 0; i < reg.dim; ++i) {
    auto n = submodule(reg, cyclic_submodule(s.algebra, reg, s.algebra.basis(i)));
    auto m = functor_Pprime(s, n);
    CHECK(check_module(m).passed());
    CHECK(same_module(functor_P(s, m), n));
  }
}

TEST_CASE("the zero module") {
  auto h = share(g3(Field::rationals()));
  auto s = build_smash(example_datum(h, Example::ex1));
  auto reg = regular_module(s.algebra);
  auto zero = submodule(reg, Subspace::zero(s.algebra.field(), reg.dim));
  CHECK(zero.dim == 0);
  auto m = functor_Pprime(s, zero);
  CHECK(m.dim() == 0);
  CHECK(check_module(m).passed());
  CHECK(same_module(functor_P(s, m), zero));
  CHECK(morphism_space(m, functor_Pprime(s, reg)).dim() == 0);
}
