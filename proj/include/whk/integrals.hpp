#pragma once

#include <optional>
#include <string>

#include "whk/doihopf.hpp"
#include "whk/gallery.hpp"

namespace whk {

/// Left integrals h l = Pi^L(h) l, right integrals r h = r Pi^R(h).
struct IntegralSpace {
  Side side;
  Subspace space;
};

IntegralSpace integral_space(const WeakHopfAlgebra& h, Side side);

/// phi -> (phi -> x) is a bijection from H^ onto H.
bool is_nondegenerate_integral(const WeakHopfAlgebra& h, const Vec& x);

/// A non-degenerate element of the integral space: basis vectors first, then
/// their sum, then seeded small-integer combinations. Throws
/// NoNondegenerateIntegral when none is found.
Vec nondegenerate_integral(const WeakHopfAlgebra& h, Side side);

/// primary: the right integral rho of H^ with <rho, r_(1)> r_(2) = 1.
/// mirrored: r_(1) <rho, r_(2)> = 1.
enum class DualIntegralConvention { primary, mirrored };
std::string to_string(DualIntegralConvention c);

/// Throws NoDualIntegral when r is degenerate or the defining system is
/// inconsistent.
Vec dual_right_integral(const WeakHopfAlgebra& h, const Vec& r,
                        DualIntegralConvention c = DualIntegralConvention::primary);

/// gamma in C^ (x) C^ (x) A with gamma(c)(d) = sum gamma[c][d][a] e_a.
struct V4Space {
  DatumPtr datum;
  Subspace space;
  Report report;  ///< re-substitution of every basis solution
};

V4Space compute_V4(const DatumPtr& d, Exec exec = Exec::parallel);
/// Residual of the two defining conditions at gamma; zero iff gamma is in V4.
Vec v4_residual(const Datum& d, const Vec& gamma);

/// gamma(c_(1))(c_(2)) = eps_C(c.1_<-1>) 1_<0> for every basis c.
bool check_normalized(const Datum& d, const Vec& gamma);

/// The example realization V0 of the integral space inside a host algebra,
/// together with f: V4 -> host.
struct V0Result {
  Example which;
  Algebra host;
  V4Space v4;
  Subspace v0;
  Matrix f;  ///< host coordinates x V4 coordinates
  std::optional<Vec> integral;       ///< the chosen r
  std::optional<Vec> dual_integral;  ///< the pinned dual right integral
  Matrix hat_embedding;              ///< H^ (or K^) -> host, used by the normalization equation
  Vec rho_hat_1_2;                   ///< Delta^(rho) flattened, rho_(1) major
  Matrix hat_sinv;                   ///< S^^-1
  Report report;
};

/// `base` is H for ex1..ex3 and K for ex4 (the datum must be example_datum
/// of `base`). Throws NoNondegenerateIntegral when the Frobenius hypothesis
/// fails.
V0Result v0_iso(const DatumPtr& d, Example which, const WhaPtr& base,
                DualIntegralConvention c = DualIntegralConvention::primary,
                Exec exec = Exec::parallel);

/// The displayed normalization equation of ex2..ex4 at a host element:
/// S^^-1(rho_(2)) x rho_(1) = 1. For ex1 the condition is x = 1.
bool check_normalization_equation(const V0Result& v, const Vec& x);

/// The convention under which example 2 over G2 has a bijective f and a
/// solvable normalization equation; primary wins ties. The evidence for both
/// conventions goes to `evidence` when given.
DualIntegralConvention pin_dual_convention(Field f, Report* evidence = nullptr);

/// Dimension comparison of V0 with the left integrals of H^ for ex2, and
/// the map g(l) = S^(l <- r) into H^^L.
Report example2_remark(const V0Result& v, const WhaPtr& h);

}  // namespace whk
