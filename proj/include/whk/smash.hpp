#pragma once

#include <cstddef>

#include "whk/doihopf.hpp"
#include "whk/gallery.hpp"

namespace whk {

/// The smash product A # C^ of a non-degenerate right datum, realized on the
/// image of E(a (x) c^) = 1_<0> a (x) 1_<-1> |> c^ inside A (x) C^ (A-major).
struct SmashAlgebra {
  DatumPtr datum;
  Algebra dual_c;      ///< C^ with the convolution product
  Matrix e;            ///< E on the ambient space
  Subspace carrier;
  Algebra algebra;     ///< on the echelon basis of the carrier
  bool e_idempotent;

  std::size_t ambient_dim() const { return e.rows(); }
  Matrix embedding() const { return carrier.embedding(); }
  /// Ambient product (a # c^)(b # d^) = a_<0> b # c^ (a_<-1> |> d^).
  Vec ambient_mul(const Vec& x, const Vec& y) const;
  /// h |> c^ on C^, where (h |> c^)(d) = c^(d.h).
  Vec triangle(const Vec& h, const Vec& chat) const;
};

/// Throws DegenerateDatum for left or degenerate data and AxiomFailure when
/// the product fails to be associative and unital on the carrier.
SmashAlgebra build_smash(const DatumPtr& d, Exec exec = Exec::parallel);

/// Associativity, unit law and closure of the carrier, as a report.
Report check_smash(const SmashAlgebra& s, Exec exec = Exec::parallel);

/// The comparison maps of the four examples. iota goes from the smash
/// algebra to `target`, both on their own bases.
struct IsoResult {
  Algebra target;
  Matrix iota;
  Report report;
};

/// `which` must match the construction of the datum (ex4 expects the datum
/// built from K, and hopf must be K). Throws NotAnIso when a check fails and
/// `strict` is set.
IsoResult example_iso(const SmashAlgebra& s, Example which, const WhaPtr& hopf,
                      bool strict = false, Exec exec = Exec::parallel);

/// Subalgebra of End(V) (n x n matrices flattened row-major) generated by the
/// given operators and the identity. With `opposite`, the product of U and V
/// is the matrix V U, matching operators written on the right.
Subspace generated_matrix_algebra(Field f, std::size_t n, const std::vector<Matrix>& gens);
Algebra matrix_subalgebra(Field f, std::size_t n, const Subspace& span, bool opposite);

/// The Heisenberg double realized on H by right operators: phi a acts as
/// x -> (x <- phi) a. The algebra is the generated operator algebra with the
/// product written for operators on the right.
struct WeylAlgebra {
  WbaPtr h;
  Subspace span;
  Algebra algebra;
  /// Coordinates of phi a.
  Vec element(const Vec& a, const Vec& phi) const;
};
WeylAlgebra build_weyl(const WbaPtr& h);

/// A right module over a finite-dimensional algebra: action[m][x][m'].
struct RightModule {
  std::size_t dim;
  Tensor action;
};

RightModule regular_module(const Algebra& a);
Report check_right_module(const Algebra& a, const RightModule& m, Exec exec = Exec::parallel);
/// Restriction to an invariant subspace, on its echelon basis. Throws NotInvariant.
RightModule submodule(const RightModule& m, const Subspace& sub);
/// The submodule generated by v.
Subspace cyclic_submodule(const Algebra& a, const RightModule& m, const Vec& v);

/// m.(a # c^) = c^(m_<-1>) m_<0>.a
RightModule functor_P(const SmashAlgebra& s, const DoiHopfModule& m);
/// m.a = m.E(a (x) eps_C) and rho(m) = c_i (x) m.E(1 (x) gamma^i)
DoiHopfModule functor_Pprime(const SmashAlgebra& s, const RightModule& n);

/// Test modules: P' of the regular module and of the cyclic submodules
/// generated by carrier basis vectors, without repeats, at most `limit`.
std::vector<DoiHopfModule> harvest_modules(const SmashAlgebra& s, std::size_t limit = 6);

/// On morphisms both functors are the identity on the underlying map.
bool same_module(const RightModule& a, const RightModule& b);
bool same_module(const DoiHopfModule& a, const DoiHopfModule& b);

}  // namespace whk
