#include "whk/adjoint.hpp"

#include <functional>

#include "whk/errors.hpp"
#include "whk/multilinear.hpp"

namespace whk {

namespace {

void require_right_nondegenerate(const Datum& d) {
  if (d.side != Side::right) throw DegenerateDatum("induction is defined for right data");
  if (!d.nondegenerate) throw DegenerateDatum("induction needs a non-degenerate datum");
}

std::vector<std::pair<std::size_t, std::size_t>> support(const Vec& v, std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t t = 0; t < v.size(); ++t) {
    if (!v[t].is_zero()) out.emplace_back(t / n, t % n);
  }
  return out;
}

Vec amod_act(const AModule& m, const Vec& x, const Vec& a) {
  if (m.dim == 0) return {};
  return Bilinear(m.action).apply(x, a);
}

// Coordinates of each column image in the subspace, as a matrix.
Matrix corestrict(const Subspace& tgt, std::size_t cols, const std::function<Vec(std::size_t)>& image) {
  return matrix_of(tgt.field(), tgt.dim(), cols,
                   [&](std::size_t i) { return tgt.coordinates(image(i)); }, Exec::serial);
}

}  // namespace

InducedModule induce_G(const AModule& m, const DatumPtr& dp) {
  const Datum& d = *dp;
  require_right_nondegenerate(d);
  const Field f = d.H->field();
  const Algebra& A = d.A();
  const std::size_t nc = d.C().dim(), na = A.dim(), dm = m.dim;
  // (c (x) m).a = c.a_<-1> (x) m.a_<0> on the ambient space
  auto ambient_act = [&](const Vec& x, const Vec& a) {
    Vec out = zero_vec(f, nc * dm);
    Vec rho = d.coaction.apply(a);
    for (auto [c, mm] : support(x, dm)) {
      for (auto [h, a0] : support(rho, na)) {
        axpy(out, x[c * dm + mm] * rho[h * na + a0],
             kron(d.action.apply(d.C().basis(c), d.H->basis(h)),
                  amod_act(m, unit_vec(f, dm, mm), A.basis(a0))));
      }
    }
    return out;
  };
  Subspace carrier = image_of(matrix_of(f, nc * dm, nc * dm, [&](std::size_t i) {
    return ambient_act(unit_vec(f, nc * dm, i), A.unit());
  }, Exec::serial));
  const std::size_t k = carrier.dim();
  Tensor act(f, {k, na, k});
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t a = 0; a < na; ++a) {
      Vec c = carrier.coordinates(ambient_act(carrier.basis_vector(i), A.basis(a)));
      for (std::size_t j = 0; j < k; ++j) act.at({i, a, j}) = c[j];
    }
  }
  const Matrix delta_id = d.C().comult_map().kron(Matrix::identity(f, dm));
  Matrix rho = matrix_of(f, nc * k, k, [&](std::size_t i) {
    return restrict_tensor(delta_id.apply(carrier.basis_vector(i)), {nc, nc * dm},
                           {nullptr, &carrier});
  }, Exec::serial);
  DoiHopfModule mod(dp, k, std::move(act), std::move(rho));
  return InducedModule{m, std::move(carrier), std::move(mod)};
}

namespace {

// eps_C(m_<-1>.a_<-1>) m_<0> (x) a_<0> for x in M (x) A
Vec coinduce_project(const Datum& d, const CComodule& m, const Vec& x) {
  const Field f = d.H->field();
  const std::size_t na = d.A().dim(), dm = m.dim;
  Vec out = zero_vec(f, dm * na);
  for (auto [mm, a] : support(x, na)) {
    Vec rm = m.coaction.column(mm);
    Vec ra = d.coaction.apply(d.A().basis(a));
    for (auto [c, m0] : support(rm, dm)) {
      for (auto [h, a0] : support(ra, na)) {
        Scalar e = d.C().counit(d.action.apply(d.C().basis(c), d.H->basis(h)));
        if (e.is_zero()) continue;
        out[m0 * na + a0].add_product(x[mm * na + a] * rm[c * dm + m0] * ra[h * na + a0], e);
      }
    }
  }
  return out;
}

}  // namespace

CoinducedModule coinduce_Ghat(const CComodule& m, const DatumPtr& dp) {
  const Datum& d = *dp;
  require_right_nondegenerate(d);
  const Field f = d.H->field();
  const Algebra& A = d.A();
  const std::size_t nc = d.C().dim(), na = A.dim(), dm = m.dim;
  Subspace carrier = image_of(matrix_of(f, dm * na, dm * na, [&](std::size_t i) {
    return coinduce_project(d, m, unit_vec(f, dm * na, i));
  }, Exec::serial));
  const std::size_t k = carrier.dim();
  // (m (x) a).b = projection of m (x) ab
  const Matrix id_m = Matrix::identity(f, dm);
  Tensor act(f, {k, na, k});
  for (std::size_t i = 0; i < k; ++i) {
    Vec v = carrier.basis_vector(i);
    for (std::size_t b = 0; b < na; ++b) {
      Vec vb = id_m.kron(A.right_mult(A.basis(b))).apply(v);
      Vec c = carrier.coordinates(coinduce_project(d, m, vb));
      for (std::size_t j = 0; j < k; ++j) act.at({i, b, j}) = c[j];
    }
  }
  // m (x) a -> m_<-1>.a_<-1> (x) m_<0> (x) a_<0>
  Matrix rho = matrix_of(f, nc * k, k, [&](std::size_t i) {
    Vec v = carrier.basis_vector(i);
    Vec out = zero_vec(f, nc * dm * na);
    for (auto [mm, a] : support(v, na)) {
      Vec rm = m.coaction.column(mm);
      Vec ra = d.coaction.apply(A.basis(a));
      for (auto [c, m0] : support(rm, dm)) {
        for (auto [h, a0] : support(ra, na)) {
          Vec ch = d.action.apply(d.C().basis(c), d.H->basis(h));
          Scalar w = v[mm * na + a] * rm[c * dm + m0] * ra[h * na + a0];
          for (std::size_t cc = 0; cc < nc; ++cc) {
            if (!ch[cc].is_zero()) out[(cc * dm + m0) * na + a0].add_product(w, ch[cc]);
          }
        }
      }
    }
    return restrict_tensor(out, {nc, dm * na}, {nullptr, &carrier});
  }, Exec::serial);
  DoiHopfModule mod(dp, k, std::move(act), std::move(rho));
  return CoinducedModule{m, std::move(carrier), std::move(mod)};
}

Matrix induce_map(const InducedModule& src, const InducedModule& tgt, const Matrix& t) {
  const Field f = t.field();
  const std::size_t nc = src.module.datum()->C().dim();
  const Matrix full = Matrix::identity(f, nc).kron(t);
  return corestrict(tgt.carrier, src.carrier.dim(),
                    [&](std::size_t i) { return full.apply(src.carrier.basis_vector(i)); });
}

Matrix coinduce_map(const CoinducedModule& src, const CoinducedModule& tgt, const Matrix& t) {
  const Field f = t.field();
  const std::size_t na = src.module.datum()->A().dim();
  const Matrix full = t.kron(Matrix::identity(f, na));
  return corestrict(tgt.carrier, src.carrier.dim(),
                    [&](std::size_t i) { return full.apply(src.carrier.basis_vector(i)); });
}

Matrix unit_rho(const DoiHopfModule& m, const InducedModule& gfm) {
  return corestrict(gfm.carrier, m.dim(), [&](std::size_t i) { return m.coact(m.basis(i)); });
}

Matrix counit_delta(const InducedModule& gn) {
  const Field f = gn.module.field();
  const Matrix eps_id =
      gn.module.datum()->C().counit_map().kron(Matrix::identity(f, gn.base.dim));
  return eps_id * gn.carrier.embedding();
}

Matrix unit_rho_hat(const CoinducedModule& gm) {
  const Datum& d = *gm.module.datum();
  const Field f = d.H->field();
  return corestrict(gm.carrier, gm.base.dim, [&](std::size_t i) {
    return coinduce_project(d, gm.base, kron(unit_vec(f, gm.base.dim, i), d.A().unit()));
  });
}

Matrix counit_delta_hat(const DoiHopfModule& m, const CoinducedModule& gfm) {
  const Field f = m.field();
  const std::size_t na = m.datum()->A().dim();
  return matrix_of(f, m.dim(), gfm.carrier.dim(), [&](std::size_t i) {
    Vec v = gfm.carrier.basis_vector(i);
    Vec out = zero_vec(f, m.dim());
    for (auto [mm, a] : support(v, na)) axpy(out, v[mm * na + a], m.act(m.basis(mm), m.datum()->A().basis(a)));
    return out;
  }, Exec::serial);
}

Report check_induction_identities(const Datum& d, Exec exec) {
  require_right_nondegenerate(d);
  const Field f = d.H->field();
  const Algebra& A = d.A();
  const Coalgebra& C = d.C();
  const std::size_t nc = C.dim(), na = A.dim(), nh = d.H->dim();
  const Vec rho1 = d.coaction.apply(A.unit());
  const auto one_terms = support(rho1, na);
  Report r("induction identities");
  r.add(check_identity("induction.counit_side",
                       "Delta_C(c.1_<-1>) (x) 1_<0> = c_(1) (x) c_(2).1_<-1> (x) 1_<0>", {nc},
                       [&](const std::vector<std::size_t>& i) {
                         Vec lhs = zero_vec(f, nc * nc * na), rhs = lhs;
                         Vec dc = C.comul(C.basis(i[0]));
                         for (auto [h, a0] : one_terms) {
                           const Scalar& w = rho1[h * na + a0];
                           axpy(lhs, w, kron(C.comul(d.action.apply(C.basis(i[0]), d.H->basis(h))),
                                             A.basis(a0)));
                           for (auto [c1, c2] : support(dc, nc)) {
                             axpy(rhs, w * dc[c1 * nc + c2],
                                  kron(kron(C.basis(c1), d.action.apply(C.basis(c2), d.H->basis(h))),
                                       A.basis(a0)));
                           }
                         }
                         return sub(lhs, rhs);
                       },
                       exec));
  const Matrix& pl = d.H->pi_l();
  r.add(check_identity("induction.unit_side", "Pi^L(a_<-1>) (x) a_<0> = Pi^L(1_<-1>) (x) 1_<0> a", {na},
                       [&](const std::vector<std::size_t>& i) {
                         Vec rho = d.coaction.apply(A.basis(i[0]));
                         Vec lhs = zero_vec(f, nh * na), rhs = lhs;
                         for (auto [h, a0] : support(rho, na)) {
                           axpy(lhs, rho[h * na + a0], kron(pl.column(h), A.basis(a0)));
                         }
                         for (auto [h, a0] : one_terms) {
                           axpy(rhs, rho1[h * na + a0],
                                kron(pl.column(h), A.mul(A.basis(a0), A.basis(i[0]))));
                         }
                         return sub(lhs, rhs);
                       },
                       exec));
  return r;
}

Report check_amodule_map(const Datum& d, const AModule& src, const AModule& tgt, const Matrix& t,
                         Exec exec) {
  const Field f = d.H->field();
  Report r("A-module map");
  r.add(check_identity("intertwines_action", "T(m.a) = T(m).a", {src.dim, d.A().dim()},
                       [&](const std::vector<std::size_t>& i) {
                         Vec m = unit_vec(f, src.dim, i[0]), a = d.A().basis(i[1]);
                         return sub(t.apply(amod_act(src, m, a)), amod_act(tgt, t.apply(m), a));
                       },
                       exec));
  return r;
}

Report check_ccomodule_map(const Datum& d, const CComodule& src, const CComodule& tgt,
                           const Matrix& t, Exec exec) {
  const Field f = d.H->field();
  const Matrix id_t = Matrix::identity(f, d.C().dim()).kron(t);
  Report r("C-comodule map");
  r.add(check_identity("intertwines_coaction", "rho(T m) = (id (x) T) rho(m)", {src.dim},
                       [&](const std::vector<std::size_t>& i) {
                         return sub(id_t.apply(src.coaction.column(i[0])),
                                    tgt.coaction.apply(t.column(i[0])));
                       },
                       exec));
  return r;
}

Report check_adjunction(const DatumPtr& dp, const std::vector<DoiHopfModule>& modules, Exec exec) {
  const Datum& d = *dp;
  require_right_nondegenerate(d);
  const Field f = d.H->field();
  Report r("adjunctions");
  auto all = [](const Report& x) { return x.passed(); };
  bool unit_mor = true, counit_mor = true, tri1 = true, tri2 = true;
  bool hunit_mor = true, hcounit_mor = true, htri1 = true, htri2 = true;
  struct Cache {
    InducedModule gfm;
    CoinducedModule gfm_hat;
  };
  std::vector<Cache> cache;
  for (const DoiHopfModule& m : modules) {
    const AModule fm = forget_coaction(m);
    const CComodule fm_hat = forget_action(m);
    InducedModule gfm = induce_G(fm, dp);
    CoinducedModule gfm_hat = coinduce_Ghat(fm_hat, dp);
    const Matrix rho = unit_rho(m, gfm);
    unit_mor = unit_mor && all(check_module(gfm.module, exec)) &&
               all(check_morphism(m, gfm.module, rho, exec));
    // delta_N on N = F(M), as an A-module map F(G(N)) -> N
    const Matrix delta = counit_delta(gfm);
    counit_mor = counit_mor &&
                 all(check_amodule_map(d, forget_coaction(gfm.module), fm, delta, exec));
    // (delta F)(F rho) = id_F
    tri1 = tri1 && delta * rho == Matrix::identity(f, m.dim());
    // (G delta)(rho G) = id_G at N = F(M)
    InducedModule gfg = induce_G(forget_coaction(gfm.module), dp);
    tri2 = tri2 && induce_map(gfg, gfm, delta) * unit_rho(gfm.module, gfg) ==
                       Matrix::identity(f, gfm.carrier.dim());

    const Matrix rho_hat = unit_rho_hat(gfm_hat);
    const Matrix delta_hat = counit_delta_hat(m, gfm_hat);
    hunit_mor = hunit_mor && all(check_module(gfm_hat.module, exec)) &&
                all(check_ccomodule_map(d, fm_hat, forget_action(gfm_hat.module), rho_hat, exec));
    hcounit_mor = hcounit_mor && all(check_morphism(gfm_hat.module, m, delta_hat, exec));
    // (F^ delta^)(rho^ F^) = id_F^
    htri1 = htri1 && delta_hat * rho_hat == Matrix::identity(f, m.dim());
    // (delta^ G^)(G^ rho^) = id_G^ at N = F^(M)
    CoinducedModule gfg_hat = coinduce_Ghat(forget_action(gfm_hat.module), dp);
    htri2 = htri2 && counit_delta_hat(gfm_hat.module, gfg_hat) *
                             coinduce_map(gfm_hat, gfg_hat, rho_hat) ==
                         Matrix::identity(f, gfm_hat.carrier.dim());
    cache.push_back({std::move(gfm), std::move(gfm_hat)});
  }
  const std::string n = std::to_string(modules.size()) + " modules";
  r.add("G.unit_is_morphism", "rho_M is a Doi-Hopf morphism into G(F(M))", unit_mor, n);
  r.add("G.counit_is_morphism", "delta_N is an A-module map F(G(N)) -> N", counit_mor, n);
  r.add("G.triangle_F", "(delta F)(F rho) = id_F", tri1, n);
  r.add("G.triangle_G", "(G delta)(rho G) = id_G", tri2, n);
  r.add("Ghat.unit_is_morphism", "rho^_M is a C-comodule map into F^(G^(M))", hunit_mor, n);
  r.add("Ghat.counit_is_morphism", "delta^_M is a Doi-Hopf morphism G^(F^(M)) -> M", hcounit_mor, n);
  r.add("Ghat.triangle_F", "(F^ delta^)(rho^ F^) = id_F^", htri1, n);
  r.add("Ghat.triangle_G", "(delta^ G^)(G^ rho^) = id_G^", htri2, n);

  // naturality on all morphisms between harvested modules
  bool nat_rho = true, nat_delta = true, nat_rho_hat = true, nat_delta_hat = true;
  std::size_t count = 0;
  for (std::size_t i = 0; i < modules.size(); ++i) {
    for (std::size_t j = 0; j < modules.size(); ++j) {
      const DoiHopfModule &src = modules[i], &tgt = modules[j];
      Subspace homs = morphism_space(src, tgt, exec);
      for (const Vec& tv : homs.basis_vectors()) {
        ++count;
        Matrix t = as_matrix(f, tgt.dim(), src.dim(), tv);
        const Cache &cs = cache[i], &ct = cache[j];
        Matrix gft = induce_map(cs.gfm, ct.gfm, t);
        nat_rho = nat_rho && gft * unit_rho(src, cs.gfm) == unit_rho(tgt, ct.gfm) * t;
        nat_delta = nat_delta && t * counit_delta(cs.gfm) == counit_delta(ct.gfm) * gft;
        Matrix gft_hat = coinduce_map(cs.gfm_hat, ct.gfm_hat, t);
        nat_rho_hat = nat_rho_hat && gft_hat * unit_rho_hat(cs.gfm_hat) == unit_rho_hat(ct.gfm_hat) * t;
        nat_delta_hat = nat_delta_hat && t * counit_delta_hat(src, cs.gfm_hat) ==
                                             counit_delta_hat(tgt, ct.gfm_hat) * gft_hat;
      }
    }
  }
  const std::string m = std::to_string(count) + " morphisms";
  r.add("G.unit_natural", "G(F(T)) rho = rho T", nat_rho, m);
  r.add("G.counit_natural", "T delta = delta F(G(T))", nat_delta, m);
  r.add("Ghat.unit_natural", "G^(T) rho^ = rho^ T", nat_rho_hat, m);
  r.add("Ghat.counit_natural", "T delta^ = delta^ G^(F^(T))", nat_delta_hat, m);
  return r;
}

}  // namespace whk
