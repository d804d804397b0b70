#pragma once

#include <cstddef>
#include <optional>

#include "whk/doihopf.hpp"
#include "whk/smash.hpp"

namespace whk {

/// D(H) as the quotient of H (x) H^ (H-major) by the amalgamation relations
/// closed under D(h) . r . D(phi). The class of a (x) phi is D(a)D(phi).
struct DrinfeldDouble {
  WhaPtr H;
  Subspace relations;
  Matrix projection;  ///< H (x) H^ -> D(H)
  Matrix section;     ///< D(H) -> H (x) H^, right inverse of projection
  Algebra algebra;
  std::shared_ptr<const WeakHopfAlgebra> wha;
  Report report;  ///< well-definedness and both counit formulas

  std::size_t dim() const { return algebra.dim(); }
};

/// Ambient product (a (x) phi)(b (x) psi) = a b_(2) (x) phi_(2) psi
/// <phi_(1), b_(3)> <phi_(3), S^-1(b_(1))>.
Vec double_ambient_mul(const WeakHopfAlgebra& h, const Vec& x, const Vec& y);

/// Throws AntipodeNotInvertible, WellDefinednessFailure, or AxiomFailure
/// when the quotient structure is not a WHA.
DrinfeldDouble build_double(const WhaPtr& h, Exec exec = Exec::parallel);

/// D(K^op_cop)^op together with the double it comes from.
struct TwistedDouble {
  DrinfeldDouble inner;
  Algebra algebra;
};
TwistedDouble build_twisted_double(const WhaPtr& k, Exec exec = Exec::parallel);

/// Right H-module and left H-coaction (nH*dim) x dim, H-major.
struct YDModule {
  WbaPtr H;
  std::size_t dim;
  Tensor action;
  Matrix coaction;

  Vec act(const Vec& m, const Vec& a) const;
  Vec coact(const Vec& m) const { return coaction.apply(m); }
};

/// Module and comodule axioms, both non-degeneracies, the two lines of the
/// defining relation, and when `hopf` is given the single relation and
/// whether it agreed with the two-line form.
Report check_yd(const YDModule& m, const WhaPtr& hopf = nullptr, Exec exec = Exec::parallel);

/// H^L with a^L . h = 1_(2) eps(a^L h 1_(1)) and coaction Delta restricted.
YDModule yd_unit(const WbaPtr& h);

/// M x N on the image of m (x) n -> m.1_(1) (x) n.1_(2) inside M (x) N.
struct YDProduct {
  YDModule module;
  Subspace carrier;
  std::size_t left_dim, right_dim;
};
YDProduct yd_tensor(const YDModule& m, const YDModule& n);
/// T x S between carriers: (T (x) S) restricted and corestricted.
Matrix yd_tensor_map(const YDProduct& src, const YDProduct& tgt, const Matrix& t, const Matrix& s);

/// Intertwiner check for a linear map between YD modules.
Report check_yd_morphism(const YDModule& src, const YDModule& tgt, const Matrix& t,
                         Exec exec = Exec::parallel);
Subspace yd_morphism_space(const YDModule& src, const YDModule& tgt);

struct Unitors {
  YDProduct left_product;   ///< H^L x M
  YDProduct right_product;  ///< M x H^L
  Matrix left;              ///< M -> H^L x M, m -> 1_(2) (x) m.Pi^L(1_(1))
  Matrix right;             ///< M -> M x H^L, m -> m.1_(1) (x) 1_(2)
};
Unitors yd_unitors(const YDModule& m);
/// Invertibility, intertwining and the triangle identity for (M, N).
Report check_unitors(const YDModule& m, const YDModule& n, Exec exec = Exec::parallel);

/// Right D(H)-module with m.D(a)D(phi) = (m.a).phi, where m.phi = phi(m_<-1>) m_<0>.
RightModule yd_to_double(const YDModule& m, const DrinfeldDouble& d);
/// m.a = m.D(a) and rho(m) = e_i (x) m.D(e^i).
YDModule double_to_yd(const RightModule& n, const DrinfeldDouble& d);
/// Well-definedness on the relations, module axioms over D(H), and both
/// roundtrips.
Report check_yd_vs_double(const YDModule& m, const DrinfeldDouble& d, Exec exec = Exec::parallel);

}  // namespace whk
