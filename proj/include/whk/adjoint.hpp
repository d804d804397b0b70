#pragma once

#include <vector>

#include "whk/doihopf.hpp"

namespace whk {

/// G(M) = C.1_<-1> (x) M.1_<0> inside C (x) M (C-major).
struct InducedModule {
  AModule base;
  Subspace carrier;
  DoiHopfModule module;
};

/// G^(M) spanned by eps_C(m_<-1>.a_<-1>) m_<0> (x) a_<0> inside M (x) A (M-major).
struct CoinducedModule {
  CComodule base;
  Subspace carrier;
  DoiHopfModule module;
};

/// Both throw DegenerateDatum for left or degenerate data.
InducedModule induce_G(const AModule& m, const DatumPtr& d);
CoinducedModule coinduce_Ghat(const CComodule& m, const DatumPtr& d);

/// G(T) = id_C (x) T and G^(T) = T (x) id_A between carriers.
Matrix induce_map(const InducedModule& src, const InducedModule& tgt, const Matrix& t);
Matrix coinduce_map(const CoinducedModule& src, const CoinducedModule& tgt, const Matrix& t);

/// rho_M: M -> G(F(M)), m -> m_<-1> (x) m_<0>.
Matrix unit_rho(const DoiHopfModule& m, const InducedModule& gfm);
/// delta_N: F(G(N)) -> N, the counit of C on the first factor.
Matrix counit_delta(const InducedModule& gn);
/// rho^_M: M -> F^(G^(M)), m -> eps_C(m_<-1>.1_<-1>) m_<0> (x) 1_<0>.
Matrix unit_rho_hat(const CoinducedModule& gm);
/// delta^_M: G^(F^(M)) -> M, m (x) a -> m.a.
Matrix counit_delta_hat(const DoiHopfModule& m, const CoinducedModule& gfm);

/// (i) Delta_C(c.1_<-1>) (x) 1_<0> = c_(1) (x) c_(2).1_<-1> (x) 1_<0>
/// (ii) Pi^L(a_<-1>) (x) a_<0> = Pi^L(1_<-1>) (x) 1_<0> a
Report check_induction_identities(const Datum& d, Exec exec = Exec::parallel);

/// Morphism property, naturality and triangle identities for both
/// adjunctions on the given modules.
Report check_adjunction(const DatumPtr& d, const std::vector<DoiHopfModule>& modules,
                        Exec exec = Exec::parallel);

/// Intertwiner residual checks for the one-sided structures.
Report check_amodule_map(const Datum& d, const AModule& src, const AModule& tgt, const Matrix& t,
                         Exec exec = Exec::parallel);
Report check_ccomodule_map(const Datum& d, const CComodule& src, const CComodule& tgt,
                           const Matrix& t, Exec exec = Exec::parallel);

}  // namespace whk
