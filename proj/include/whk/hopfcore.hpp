#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "whk/linalg.hpp"
#include "whk/parallel.hpp"
#include "whk/report.hpp"
#include "whk/subspace.hpp"
#include "whk/tensor.hpp"

namespace whk {

std::vector<std::string> default_names(const std::string& stem, std::size_t n);

/// Finite-dimensional algebra by structure constants:
/// e_i e_j = sum_k mult[i][j][k] e_k.
class Algebra {
 public:
  Algebra(Field f, Tensor mult, Vec unit, std::vector<std::string> names = {});

  Field field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const Tensor& mult() const { return mult_; }
  const Vec& unit() const { return unit_; }
  const std::vector<std::string>& names() const { return names_; }

  Vec basis(std::size_t i) const { return unit_vec(field_, dim_, i); }
  Vec zero() const { return zero_vec(field_, dim_); }
  Vec mul(const Vec& x, const Vec& y) const;
  /// x -> a x
  Matrix left_mult(const Vec& a) const;
  /// x -> x a
  Matrix right_mult(const Vec& a) const;
  /// The multiplication as a map A (x) A -> A.
  Matrix mult_map() const;
  /// Nonzero terms (k, c) of e_i e_j = sum c e_k.
  const std::vector<std::pair<std::size_t, Scalar>>& product_terms(std::size_t i,
                                                                   std::size_t j) const {
    return table_[i * dim_ + j];
  }

 private:
  Field field_;
  std::size_t dim_;
  Tensor mult_;
  Vec unit_;
  std::vector<std::string> names_;
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> table_;  // sparse row of e_i e_j
};

/// Finite-dimensional coalgebra: Delta(e_i) = sum comult[i][j][k] e_j (x) e_k.
class Coalgebra {
 public:
  Coalgebra(Field f, Tensor comult, Vec counit, std::vector<std::string> names = {});

  Field field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const Tensor& comult() const { return comult_; }
  const Vec& counit_vector() const { return counit_; }
  const std::vector<std::string>& names() const { return names_; }

  Vec basis(std::size_t i) const { return unit_vec(field_, dim_, i); }
  /// Delta(x) in C (x) C.
  Vec comul(const Vec& x) const;
  Scalar counit(const Vec& x) const;
  Matrix comult_map() const;
  Matrix counit_map() const;

 private:
  Field field_;
  std::size_t dim_;
  Tensor comult_;
  Vec counit_;
  std::vector<std::string> names_;
};

Report check_algebra(const Algebra& a, Exec exec = Exec::parallel);
Report check_coalgebra(const Coalgebra& c, Exec exec = Exec::parallel);

/// Product in A_0 (x) ... (x) A_k, factorwise.
Vec tensor_mul(const std::vector<const Algebra*>& algebras, const Vec& x, const Vec& y);

/// Algebra dual to a coalgebra (convolution product) and vice versa.
Algebra dual_algebra(const Coalgebra& c);
Coalgebra dual_coalgebra(const Algebra& a);

/// Checks that f: src -> dst is unital and multiplicative.
Report check_algebra_map(const Algebra& src, const Algebra& dst, const Matrix& f,
                         Exec exec = Exec::parallel);

/// Axioms of a weak bialgebra: algebra and coalgebra axioms, multiplicative
/// Delta, weak comultiplicativity of the unit, weak multiplicativity of the counit.
Report check_wba(const Algebra& a, const Coalgebra& c, Exec exec = Exec::parallel);

class WeakBialgebra {
 public:
  /// Validates eagerly and throws AxiomFailure on any violated axiom.
  static WeakBialgebra make(Algebra a, Coalgebra c, Exec exec = Exec::parallel);

  const Algebra& algebra() const { return algebra_; }
  const Coalgebra& coalgebra() const { return coalgebra_; }
  Field field() const { return algebra_.field(); }
  std::size_t dim() const { return algebra_.dim(); }
  const std::vector<std::string>& names() const { return algebra_.names(); }

  Vec basis(std::size_t i) const { return algebra_.basis(i); }
  Vec zero() const { return algebra_.zero(); }
  const Vec& one() const { return algebra_.unit(); }
  Vec mul(const Vec& x, const Vec& y) const { return algebra_.mul(x, y); }
  Vec comul(const Vec& x) const { return coalgebra_.comul(x); }
  Scalar counit(const Vec& x) const { return coalgebra_.counit(x); }

  /// Delta(1) in H (x) H.
  const Vec& delta_one() const { return delta_one_; }
  /// Pi^L(h) = eps(1_(1) h) 1_(2)
  const Matrix& pi_l() const { return pi_l_; }
  /// Pi^R(h) = 1_(1) eps(h 1_(2))
  const Matrix& pi_r() const { return pi_r_; }
  const Subspace& hl() const { return hl_; }
  const Subspace& hr() const { return hr_; }
  /// True when eps is multiplicative (ordinary bialgebra).
  bool counit_multiplicative() const { return counit_multiplicative_; }

 private:
  WeakBialgebra(Algebra a, Coalgebra c);
  Algebra algebra_;
  Coalgebra coalgebra_;
  Vec delta_one_;
  Matrix pi_l_, pi_r_;
  Subspace hl_, hr_;
  bool counit_multiplicative_ = false;
};

/// The counital projections (Pi^L, Pi^R).
std::pair<Matrix, Matrix> projections(const WeakBialgebra& h);

/// Antipode axioms h_(1) S(h_(2)) = Pi^L(h), S(h_(1)) h_(2) = Pi^R(h),
/// S(h_(1)) h_(2) S(h_(3)) = S(h); also reports anti-(co)multiplicativity and
/// invertibility of S.
Report check_wha(const WeakBialgebra& h, const Matrix& antipode, Exec exec = Exec::parallel);

class WeakHopfAlgebra {
 public:
  static WeakHopfAlgebra make(WeakBialgebra h, Matrix antipode, Exec exec = Exec::parallel);

  const WeakBialgebra& wba() const { return wba_; }
  const Matrix& antipode() const { return antipode_; }
  bool antipode_invertible() const { return antipode_inverse_.has_value(); }
  /// Throws AntipodeNotInvertible when S is singular.
  const Matrix& antipode_inverse() const;

  Field field() const { return wba_.field(); }
  std::size_t dim() const { return wba_.dim(); }

 private:
  WeakHopfAlgebra(WeakBialgebra h, Matrix s);
  WeakBialgebra wba_;
  Matrix antipode_;
  std::optional<Matrix> antipode_inverse_;
};

/// Structure on the dual space: transposed product and coproduct.
WeakBialgebra dual(const WeakBialgebra& h);
WeakHopfAlgebra dual(const WeakHopfAlgebra& h);

/// Same space with the product reversed.
Algebra opposite_algebra(const Algebra& a);
WeakBialgebra opposite(const WeakBialgebra& h);
WeakBialgebra coopposite(const WeakBialgebra& h);
WeakBialgebra opposite_coopposite(const WeakBialgebra& h);

struct Variants {
  WeakHopfAlgebra op;
  WeakHopfAlgebra cop;
  WeakHopfAlgebra op_cop;
};

/// H^op and H_cop carry S^{-1}; H^op_cop carries S. Throws
/// AntipodeNotInvertible when S is singular.
Variants op_cop_variants(const WeakHopfAlgebra& h);

WeakBialgebra tensor_product(const WeakBialgebra& a, const WeakBialgebra& b);
WeakHopfAlgebra tensor_product(const WeakHopfAlgebra& a, const WeakHopfAlgebra& b);

/// phi -> y := y_(1) <phi, y_(2)>, with phi a functional on the coalgebra.
Vec arrow_left(const Coalgebra& c, const Vec& phi, const Vec& y);
/// y <- phi := <phi, y_(1)> y_(2)
Vec arrow_right(const Coalgebra& c, const Vec& y, const Vec& phi);

/// Renumbers the basis: new basis vector k is old basis vector perm[k].
Algebra permute_basis(const Algebra& a, const std::vector<std::size_t>& perm);
Coalgebra permute_basis(const Coalgebra& c, const std::vector<std::size_t>& perm);

/// Center {z : z x = x z for all x}.
Subspace center(const Algebra& a);
/// Commutant of a set of elements inside a subspace of the algebra.
Subspace commutant(const Algebra& a, const Subspace& inside, const std::vector<Vec>& elements);

}  // namespace whk
