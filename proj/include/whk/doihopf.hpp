#pragma once

#include <cstddef>
#include <memory>
#include <optional>

#include "whk/comodact.hpp"

namespace whk {

using WhaPtr = std::shared_ptr<const WeakHopfAlgebra>;

/// A weak Doi-Hopf datum (H, A, C). A right datum pairs a left comodule
/// algebra with a right module coalgebra; a left datum the mirror images.
struct Datum {
  Side side;
  WbaPtr H;
  WhaPtr hopf;  ///< set when H carries an antipode; then H aliases hopf->wba()
  Coaction coaction;
  Action action;
  bool nondegenerate = false;

  const Algebra& A() const { return coaction.A; }
  const Coalgebra& C() const { return action.C(); }
};

using DatumPtr = std::shared_ptr<const Datum>;

/// Shared-pointer view of a WHA's underlying weak bialgebra.
WbaPtr wba_of(const WhaPtr& h);

/// Constituent checks of a datum, including non-degeneracy (as notes).
Report check_datum(const Coaction& coaction, const Action& action, Exec exec = Exec::parallel);

/// Validates and throws AxiomFailure with the constituent report.
DatumPtr build_datum(Coaction coaction, Action action, WhaPtr hopf = nullptr,
                     Exec exec = Exec::parallel);

/// (H, A, C) -> (H^, C^, A^). Involutive on structure constants.
DatumPtr dual_datum(const Datum& d, Exec exec = Exec::parallel);

/// Weak Doi-Hopf module. Over a right datum: right A-module and left
/// C-comodule, coaction (nC*dim) x dim, C-factor major. Over a left datum:
/// left A-module and right C-comodule, coaction (dim*nC) x dim, M-factor major.
/// action[m][a][m'] is the coefficient of e_m' in m acted on by a.
class DoiHopfModule {
 public:
  DoiHopfModule(DatumPtr datum, std::size_t dim, Tensor action, Matrix coaction);

  const DatumPtr& datum() const { return datum_; }
  std::size_t dim() const { return dim_; }
  const Tensor& action() const { return action_; }
  const Matrix& coaction() const { return coaction_; }
  Field field() const { return datum_->H->field(); }

  Vec act(const Vec& m, const Vec& a) const { return eval_.apply(m, a); }
  Vec coact(const Vec& m) const { return coaction_.apply(m); }
  Vec basis(std::size_t i) const { return unit_vec(field(), dim_, i); }
  Dims coaction_dims() const;

 private:
  DatumPtr datum_;
  std::size_t dim_;
  Tensor action_;
  Matrix coaction_;
  Bilinear eval_;
};

Report check_module(const DoiHopfModule& m, Exec exec = Exec::parallel);

/// Throws DatumMismatch when source and target live over different data.
Report check_morphism(const DoiHopfModule& src, const DoiHopfModule& tgt, const Matrix& t,
                      Exec exec = Exec::parallel);

/// All morphisms src -> tgt as a subspace of (tgt.dim x src.dim) matrices
/// flattened row-major.
Subspace morphism_space(const DoiHopfModule& src, const DoiHopfModule& tgt,
                        Exec exec = Exec::parallel);

/// Flattened row-major vector back to a matrix.
Matrix as_matrix(Field f, std::size_t rows, std::size_t cols, const Vec& flat);

/// The dual module over the dual datum `dual` (which must be dual_datum of
/// m's datum, or structurally equal to it).
DoiHopfModule dualize_module(const DoiHopfModule& m, const DatumPtr& dual);

/// Right modules over A or left comodules over C alone: the inputs of the
/// induction functors.
struct AModule {
  std::size_t dim;
  Tensor action;  ///< [dim, nA, dim]
};

struct CComodule {
  std::size_t dim;
  Matrix coaction;  ///< (nC*dim) x dim, C-factor major
};

AModule forget_coaction(const DoiHopfModule& m);
CComodule forget_action(const DoiHopfModule& m);

Report check_amodule(const Datum& d, const AModule& m, Exec exec = Exec::parallel);
Report check_ccomodule(const Datum& d, const CComodule& m, Exec exec = Exec::parallel);

/// Regular right A-module and regular left C-comodule.
AModule regular_amodule(const Datum& d);
CComodule regular_ccomodule(const Datum& d);

}  // namespace whk
