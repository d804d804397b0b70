#include "doctest.h"

#include "whk/errors.hpp"
#include "whk/multilinear.hpp"
#include "whk/subspace.hpp"
#include "whk/suite.hpp"
#include "whk/tensor.hpp"

using namespace whk;

namespace {

Vec ints(Field f, std::initializer_list<long> xs) {
  Vec v;
  for (long x : xs) v.push_back(f.from_int(x));
  return v;
}

}  // namespace

TEST_CASE("rational arithmetic is exact") {
  const Field q = Field::rationals();
  const Scalar third = q.from_fraction(1, 3);
  CHECK(third + third + third == q.one());
  CHECK((q.from_fraction(-2, 4)).to_string() == "-1/2");
  CHECK(q.parse("6/4") == q.from_fraction(3, 2));
  CHECK(q.parse("-7").to_string() == "-7");
  CHECK_THROWS_AS(q.zero().inverse(), DivisionByZero);
  CHECK_THROWS_AS(q.parse("1/0"), ParseError);
  CHECK_THROWS_AS(q.parse("abc"), ParseError);
}

TEST_CASE("prime field arithmetic reduces modulo p") {
  const Field f = Field::prime(7);
  CHECK(f.from_int(9) == f.from_int(2));
  CHECK(f.from_int(-1).to_string() == "6");
  CHECK(f.from_int(3).inverse() == f.from_int(5));
  CHECK(f.from_fraction(1, 2) == f.from_int(4));
  CHECK_THROWS_AS(f.from_int(7).inverse(), DivisionByZero);
  CHECK_THROWS(Field::prime(8));
  CHECK_THROWS_AS(f.one() + Field::rationals().one(), FieldMismatch);
}

TEST_CASE("subspaces are canonical") {
  const Field q = Field::rationals();
  auto a = Subspace::span(q, 3, {ints(q, {1, 2, 3}), ints(q, {0, 1, 1})});
  auto b = Subspace::span(q, 3, {ints(q, {1, 3, 4}), ints(q, {2, 4, 6}), ints(q, {1, 1, 2})});
  CHECK(a == b);
  CHECK(a.dim() == 2);
  CHECK(a.contains(ints(q, {2, 5, 7})));
  CHECK_FALSE(a.contains(ints(q, {0, 0, 1})));
  CHECK(a.from_coordinates(a.coordinates(ints(q, {2, 5, 7}))) == ints(q, {2, 5, 7}));
  auto c = Subspace::span(q, 3, {ints(q, {0, 0, 1})});
  CHECK(a.intersect(c).dim() == 0);
  CHECK(a.sum(c) == Subspace::full(q, 3));
  CHECK(Subspace::zero(q, 3).is_subspace_of(a));
}

TEST_CASE("kernel and image of a known matrix") {
  const Field q = Field::rationals();
  Matrix m = Matrix::from_rows(q, 3, {ints(q, {1, 2, 3}), ints(q, {2, 4, 6})});
  CHECK(rank(m) == 1);
  auto k = kernel_of(m);
  CHECK(k.dim() == 2);
  for (const auto& v : k.basis_vectors()) CHECK(is_zero(m.apply(v)));
  CHECK(image_of(m) == Subspace::span(q, 2, {ints(q, {1, 2})}));
  CHECK_THROWS_AS(inverse(m.transpose() * m), DivisionByZero);
  Matrix sq = Matrix::from_rows(q, 2, {ints(q, {2, 1}), ints(q, {1, 1})});
  CHECK((inverse(sq) * sq).is_identity());
}

TEST_CASE("zero-dimensional spaces are handled") {
  const Field q = Field::rationals();
  Matrix empty(q, 0, 3);
  CHECK(kernel_of(empty) == Subspace::full(q, 3));
  CHECK(image_of(Matrix(q, 2, 0)).dim() == 0);
  auto quo = quotient(3, Subspace::full(q, 3));
  CHECK(quo.projection.rows() == 0);
}

TEST_CASE("inconsistent systems are reported") {
  const Field q = Field::rationals();
  Matrix c = Matrix::from_rows(q, 1, {ints(q, {1}), ints(q, {1})});
  CHECK_THROWS_AS(solve_linear_system({c}, {ints(q, {1, 2})}), InconsistentSystem);
  auto s = solve_linear_system({c}, {ints(q, {3, 3})});
  CHECK(s.particular == ints(q, {3}));
  CHECK(s.homogeneous.dim() == 0);
}

TEST_CASE("Kronecker order puts the first factor first") {
  const Field q = Field::rationals();
  CHECK(kron(ints(q, {1, 2}), ints(q, {1, 0, 3})) == ints(q, {1, 0, 3, 2, 0, 6}));
  Vec v = kron(unit_vec(q, 2, 1), unit_vec(q, 3, 2));
  CHECK(v == unit_vec(q, 6, 5));
  CHECK(permute_factors(v, {2, 3}, {1, 0}) == kron(unit_vec(q, 3, 2), unit_vec(q, 2, 1)));
  Matrix swap = Matrix::from_rows(q, 2, {ints(q, {0, 1}), ints(q, {1, 0})});
  CHECK(apply_factor(v, {2, 3}, 0, swap) == kron(unit_vec(q, 2, 0), unit_vec(q, 3, 2)));
}

TEST_CASE("matrix product as a contraction") {
  const Field q = Field::rationals();
  Tensor a(q, {2, 3}, ints(q, {1, 2, 3, 4, 5, 6}));
  Tensor b(q, {3, 2}, ints(q, {1, 0, 0, 1, 1, 1}));
  Tensor want(q, {2, 2}, ints(q, {4, 5, 10, 11}));
  CHECK(contract(a, b, {{1, 0}}, Exec::serial) == want);
  CHECK(contract(a, b, {{1, 0}}, Exec::parallel) == want);
  CHECK(contract_reference(a, b, {{1, 0}}) == want);
  CHECK_THROWS(contract(a, a, {{1, 0}}));
}

TEST_CASE("randomized kernel suite") {
  CHECK(suite_kernel(Field::rationals(), 3, 300).passed());
  CHECK(suite_kernel(Field::prime(7), 5, 300).passed());
  CHECK(suite_kernel(Field::prime(2), 9, 300, Exec::serial).passed());
}
