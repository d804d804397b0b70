#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "whk/hopfcore.hpp"
#include "whk/multilinear.hpp"

namespace whk {

enum class Side { left, right };

std::string to_string(Side s);

using WbaPtr = std::shared_ptr<const WeakBialgebra>;

/// Weak coaction of H on an algebra A.
///
/// Left:  rho: A -> H (x) A, stored as an (nH*nA) x nA matrix, H-factor major.
/// Right: rho: A -> A (x) H, stored as an (nA*nH) x nA matrix, A-factor major.
struct Coaction {
  Side side;
  WbaPtr H;
  Algebra A;
  Matrix rho;

  Coaction(Side side, WbaPtr H, Algebra A, Matrix rho);
  Vec apply(const Vec& a) const { return rho.apply(a); }
  /// Factor dims of the target space, in storage order.
  Dims target_dims() const;
};

/// Weak action of H on a coalgebra C. act[c][h][c'] is the coefficient of
/// e_c' in c.h (right side) or in h.c (left side).
class Action {
 public:
  Action(Side side, WbaPtr H, Coalgebra C, Tensor act);

  Side side() const { return side_; }
  const WbaPtr& H() const { return H_; }
  const Coalgebra& C() const { return C_; }
  const Tensor& tensor() const { return act_; }

  /// c acted on by h, whichever side the action is on.
  Vec apply(const Vec& c, const Vec& h) const;
  /// The map c -> c acted on by h.
  Matrix by(const Vec& h) const;

 private:
  Side side_;
  WbaPtr H_;
  Coalgebra C_;
  Tensor act_;
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> table_;
};

Report check_comodule_algebra(const Coaction& x, Exec exec = Exec::parallel);
Report check_module_coalgebra(const Action& x, Exec exec = Exec::parallel);

/// Both the defining and the unit-only form of non-degeneracy, whether they
/// agree, and on non-degenerate input the reformulated compatibility law.
Report check_nondegenerate(const Coaction& x, Exec exec = Exec::parallel);
Report check_nondegenerate(const Action& x, Exec exec = Exec::parallel);

bool is_nondegenerate(const Coaction& x);
bool is_nondegenerate(const Action& x);

/// Names for the echelon basis of b: a basis vector equal to some e_k keeps
/// that name, the rest become stem0, stem1, ...
std::vector<std::string> basis_names(const Subspace& b, const std::vector<std::string>& names,
                                     const std::string& stem);

/// Algebra structure on a unital subalgebra B, on the echelon basis of B.
/// Throws NotASubalgebra.
Algebra subalgebra(const Algebra& a, const Subspace& b);

/// Rebases the coaction onto B. Throws NotASubalgebra or NotInvariant.
Coaction restrict_coaction_to_subalgebra(const Coaction& x, const Subspace& b);

/// Coordinates of v in V_0 (x) ... (x) V_k where factor j is replaced by the
/// subspace subs[j] (nullptr keeps the factor). Throws NotInvariant.
Vec restrict_tensor(const Vec& v, const Dims& dims, const std::vector<const Subspace*>& subs);

}  // namespace whk
