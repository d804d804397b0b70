#include "whk/comodact.hpp"

#include "whk/errors.hpp"
#include "whk/multilinear.hpp"

namespace whk {

std::string to_string(Side s) { return s == Side::left ? "left" : "right"; }

Coaction::Coaction(Side side_, WbaPtr H_, Algebra A_, Matrix rho_)
    : side(side_), H(std::move(H_)), A(std::move(A_)), rho(std::move(rho_)) {
  if (!H) throw DimMismatch("coaction without a weak bialgebra");
  if (H->field() != A.field() || rho.field() != A.field()) throw FieldMismatch("coaction fields differ");
  if (rho.rows() != H->dim() * A.dim() || rho.cols() != A.dim()) {
    throw DimMismatch("coaction matrix must be (dim H * dim A) x dim A");
  }
}

Dims Coaction::target_dims() const {
  return side == Side::left ? Dims{H->dim(), A.dim()} : Dims{A.dim(), H->dim()};
}

Action::Action(Side side, WbaPtr H, Coalgebra C, Tensor act)
    : side_(side), H_(std::move(H)), C_(std::move(C)), act_(std::move(act)) {
  if (!H_) throw DimMismatch("action without a weak bialgebra");
  const std::size_t nc = C_.dim(), nh = H_->dim();
  if (act_.shape() != std::vector<std::size_t>{nc, nh, nc}) {
    throw DimMismatch("action tensor must have shape [dim C, dim H, dim C]");
  }
  if (act_.field() != C_.field() || H_->field() != C_.field()) throw FieldMismatch("action fields differ");
  table_.resize(nc * nh);
  for (std::size_t c = 0; c < nc; ++c) {
    for (std::size_t h = 0; h < nh; ++h) {
      for (std::size_t k = 0; k < nc; ++k) {
        const Scalar& s = act_.at({c, h, k});
        if (!s.is_zero()) table_[c * nh + h].emplace_back(k, s);
      }
    }
  }
}

Vec Action::apply(const Vec& c, const Vec& h) const {
  const std::size_t nc = C_.dim(), nh = H_->dim();
  if (c.size() != nc || h.size() != nh) throw ShapeMismatch("action argument sizes");
  Vec out = zero_vec(C_.field(), nc);
  for (std::size_t i = 0; i < nc; ++i) {
    if (c[i].is_zero()) continue;
    for (std::size_t j = 0; j < nh; ++j) {
      if (h[j].is_zero()) continue;
      const auto& row = table_[i * nh + j];
      if (row.empty()) continue;
      Scalar w = c[i] * h[j];
      for (const auto& [k, s] : row) out[k].add_product(w, s);
    }
  }
  return out;
}

Matrix Action::by(const Vec& h) const {
  return matrix_of(C_.field(), C_.dim(), C_.dim(),
                   [&](std::size_t c) { return apply(C_.basis(c), h); }, Exec::serial);
}

namespace {

// Sum over Delta_C(c) (x) Delta(h) of (c1 . h1) (x) (c2 . h2).
Vec act_on_tensor(const Action& x, const Vec& dc, const Vec& dh) {
  const std::size_t nc = x.C().dim(), nh = x.H()->dim();
  Vec out = zero_vec(x.C().field(), nc * nc);
  for (std::size_t p = 0; p < dc.size(); ++p) {
    if (dc[p].is_zero()) continue;
    for (std::size_t q = 0; q < dh.size(); ++q) {
      if (dh[q].is_zero()) continue;
      Vec l = x.apply(x.C().basis(p / nc), x.H()->basis(q / nh));
      Vec r = x.apply(x.C().basis(p % nc), x.H()->basis(q % nh));
      axpy(out, dc[p] * dh[q], kron(l, r));
    }
  }
  return out;
}

}  // namespace

Report check_comodule_algebra(const Coaction& x, Exec exec) {
  const WeakBialgebra& H = *x.H;
  const std::size_t nh = H.dim(), na = x.A.dim();
  const Matrix delta = H.coalgebra().comult_map();
  const std::vector<const Algebra*> factors =
      x.side == Side::left ? std::vector<const Algebra*>{&H.algebra(), &x.A}
                           : std::vector<const Algebra*>{&x.A, &H.algebra()};
  const Dims dims = x.target_dims();
  const Vec rho_one = x.apply(x.A.unit());
  Report r(to_string(x.side) + " comodule algebra");

  if (x.side == Side::left) {
    r.add(check_identity("coaction.coassociativity", "(id x rho)rho = (Delta x id)rho", {na},
                         [&](const std::vector<std::size_t>& i) {
                           Vec v = x.apply(x.A.basis(i[0]));
                           return sub(apply_factor(v, dims, 1, x.rho), apply_factor(v, dims, 0, delta));
                         },
                         exec));
    r.add(check_identity("coaction.unit_compatibility", "(1 x a)rho(1_A) = (Pi^R x id)rho(a)", {na},
                         [&](const std::vector<std::size_t>& i) {
                           Vec a = x.A.basis(i[0]);
                           Vec lhs = tensor_mul(factors, kron(H.one(), a), rho_one);
                           return sub(lhs, apply_factor(x.apply(a), dims, 0, H.pi_r()));
                         },
                         exec));
  } else {
    r.add(check_identity("coaction.coassociativity", "(rho x id)rho = (id x Delta)rho", {na},
                         [&](const std::vector<std::size_t>& i) {
                           Vec v = x.apply(x.A.basis(i[0]));
                           return sub(apply_factor(v, dims, 0, x.rho), apply_factor(v, dims, 1, delta));
                         },
                         exec));
    r.add(check_identity("coaction.unit_compatibility", "rho(1_A)(a x 1) = (id x Pi^L)rho(a)", {na},
                         [&](const std::vector<std::size_t>& i) {
                           Vec a = x.A.basis(i[0]);
                           Vec lhs = tensor_mul(factors, rho_one, kron(a, H.one()));
                           return sub(lhs, apply_factor(x.apply(a), dims, 1, H.pi_l()));
                         },
                         exec));
  }
  r.add(check_identity("coaction.multiplicativity", "rho(ab) = rho(a)rho(b)", {na, na},
                       [&](const std::vector<std::size_t>& i) {
                         Vec a = x.A.basis(i[0]), b = x.A.basis(i[1]);
                         return sub(x.apply(x.A.mul(a, b)),
                                    tensor_mul(factors, x.apply(a), x.apply(b)));
                       },
                       exec));
  (void)nh;
  return r;
}

Report check_module_coalgebra(const Action& x, Exec exec) {
  const WeakBialgebra& H = *x.H();
  const Coalgebra& C = x.C();
  const std::size_t nh = H.dim(), nc = C.dim();
  const Field f = C.field();
  Report r(to_string(x.side()) + " module coalgebra");

  if (x.side() == Side::right) {
    r.add(check_identity("action.associativity", "(c.g).h = c.(gh)", {nc, nh, nh},
                         [&](const std::vector<std::size_t>& i) {
                           Vec c = C.basis(i[0]), g = H.basis(i[1]), h = H.basis(i[2]);
                           return sub(x.apply(x.apply(c, g), h), x.apply(c, H.mul(g, h)));
                         },
                         exec));
    r.add(check_identity("action.counit_compatibility", "c.Pi^L(h) = eps_C(c_(1).h) c_(2)",
                         {nc, nh},
                         [&](const std::vector<std::size_t>& i) {
                           Vec c = C.basis(i[0]), h = H.basis(i[1]);
                           Vec d = C.comul(c);
                           Vec rhs = zero_vec(f, nc);
                           for (std::size_t p = 0; p < d.size(); ++p) {
                             if (d[p].is_zero()) continue;
                             Scalar e = C.counit(x.apply(C.basis(p / nc), h));
                             if (!e.is_zero()) rhs[p % nc].add_product(d[p], e);
                           }
                           return sub(x.apply(c, H.pi_l().column(i[1])), rhs);
                         },
                         exec));
  } else {
    r.add(check_identity("action.associativity", "g.(h.c) = (gh).c", {nc, nh, nh},
                         [&](const std::vector<std::size_t>& i) {
                           Vec c = C.basis(i[0]), g = H.basis(i[1]), h = H.basis(i[2]);
                           return sub(x.apply(x.apply(c, h), g), x.apply(c, H.mul(g, h)));
                         },
                         exec));
    r.add(check_identity("action.counit_compatibility", "Pi^R(h).c = c_(1) eps_C(h.c_(2))",
                         {nc, nh},
                         [&](const std::vector<std::size_t>& i) {
                           Vec c = C.basis(i[0]), h = H.basis(i[1]);
                           Vec d = C.comul(c);
                           Vec rhs = zero_vec(f, nc);
                           for (std::size_t p = 0; p < d.size(); ++p) {
                             if (d[p].is_zero()) continue;
                             Scalar e = C.counit(x.apply(C.basis(p % nc), h));
                             if (!e.is_zero()) rhs[p / nc].add_product(d[p], e);
                           }
                           return sub(x.apply(c, H.pi_r().column(i[1])), rhs);
                         },
                         exec));
  }
  r.add(check_identity("action.comultiplicativity", "Delta_C(c.h) = c_(1).h_(1) x c_(2).h_(2)",
                       {nc, nh},
                       [&](const std::vector<std::size_t>& i) {
                         Vec c = C.basis(i[0]), h = H.basis(i[1]);
                         return sub(C.comul(x.apply(c, h)), act_on_tensor(x, C.comul(c), H.comul(h)));
                       },
                       exec));
  return r;
}

Report check_nondegenerate(const Coaction& x, Exec exec) {
  const WeakBialgebra& H = *x.H;
  const std::size_t na = x.A.dim();
  const Dims dims = x.target_dims();
  const std::size_t hpos = x.side == Side::left ? 0 : 1;
  const Matrix eps = H.coalgebra().counit_map();
  Report r(to_string(x.side) + " coaction non-degeneracy");

  auto full = check_identity("nondegenerate.full", "counit applied to rho is the identity", {na},
                             [&](const std::vector<std::size_t>& i) {
                               Vec a = x.A.basis(i[0]);
                               return sub(apply_factor(x.apply(a), dims, hpos, eps), a);
                             },
                             exec);
  auto unit = check_identity("nondegenerate.unit", "counit applied to rho(1_A) is 1_A", {},
                             [&](const std::vector<std::size_t>&) {
                               return sub(apply_factor(x.apply(x.A.unit()), dims, hpos, eps),
                                          x.A.unit());
                             },
                             exec);
  const bool agree = full.pass == unit.pass;
  const bool nondeg = full.pass;
  r.add(std::move(full));
  r.add(std::move(unit));
  r.add("nondegenerate.forms_agree", "both forms of non-degeneracy agree", agree);
  r.note("nondegenerate", nondeg ? "true" : "false");

  if (nondeg) {
    const Matrix delta = H.coalgebra().comult_map();
    const Vec rho_one = x.apply(x.A.unit());
    const Algebra& ha = H.algebra();
    r.add(check_identity(
        "coaction.unit_compatibility.equivalent_form",
        x.side == Side::left ? "(Delta x id)rho(1_A) = (1 x rho(1_A))(Delta(1) x 1_A)"
                             : "(id x Delta)rho(1_A) = (1_A x Delta(1))(rho(1_A) x 1)",
        {},
        [&](const std::vector<std::size_t>&) {
          const std::size_t nh = H.dim(), na = x.A.dim();
          const Vec& d1 = H.delta_one();
          Vec rhs = zero_vec(H.field(), nh * nh * na);
          // (1 (x) h (x) a)(u (x) v (x) 1) = u (x) hv (x) a, and mirrored on the right.
          for (std::size_t p = 0; p < rho_one.size(); ++p) {
            if (rho_one[p].is_zero()) continue;
            for (std::size_t q = 0; q < d1.size(); ++q) {
              if (d1[q].is_zero()) continue;
              const std::size_t u = q / nh, v = q % nh;
              if (x.side == Side::left) {
                const std::size_t h = p / na, aa = p % na;
                for (const auto& [m, s] : ha.product_terms(h, v)) {
                  rhs[(u * nh + m) * na + aa] += rho_one[p] * d1[q] * s;
                }
              } else {
                const std::size_t aa = p / nh, h = p % nh;
                for (const auto& [m, s] : ha.product_terms(u, h)) {
                  rhs[(aa * nh + m) * nh + v] += rho_one[p] * d1[q] * s;
                }
              }
            }
          }
          return sub(apply_factor(rho_one, dims, x.side == Side::left ? 0 : 1, delta), rhs);
        },
        exec));
  }
  return r;
}

Report check_nondegenerate(const Action& x, Exec exec) {
  const WeakBialgebra& H = *x.H();
  const Coalgebra& C = x.C();
  const std::size_t nc = C.dim(), nh = H.dim();
  Report r(to_string(x.side()) + " action non-degeneracy");

  auto full = check_identity("nondegenerate.full", "the unit acts as the identity", {nc},
                             [&](const std::vector<std::size_t>& i) {
                               Vec c = C.basis(i[0]);
                               return sub(x.apply(c, H.one()), c);
                             },
                             exec);
  auto unit = check_identity("nondegenerate.unit", "eps_C(c acted on by 1) = eps_C(c)", {nc},
                             [&](const std::vector<std::size_t>& i) {
                               Vec c = C.basis(i[0]);
                               return Vec{C.counit(x.apply(c, H.one())) - C.counit(c)};
                             },
                             exec);
  const bool agree = full.pass == unit.pass;
  const bool nondeg = full.pass;
  r.add(std::move(full));
  r.add(std::move(unit));
  r.add("nondegenerate.forms_agree", "both forms of non-degeneracy agree", agree);
  r.note("nondegenerate", nondeg ? "true" : "false");

  if (nondeg) {
    const Matrix& proj = x.side() == Side::right ? H.pi_l() : H.pi_r();
    r.add(check_identity("action.counit_compatibility.equivalent_form",
                         x.side() == Side::right ? "eps_C(c.h) = eps_C(c.Pi^L(h))"
                                                 : "eps_C(h.c) = eps_C(Pi^R(h).c)",
                         {nc, nh},
                         [&](const std::vector<std::size_t>& i) {
                           Vec c = C.basis(i[0]);
                           return Vec{C.counit(x.apply(c, H.basis(i[1]))) -
                                      C.counit(x.apply(c, proj.column(i[1])))};
                         },
                         exec));
  }
  return r;
}

bool is_nondegenerate(const Coaction& x) {
  return check_nondegenerate(x, Exec::serial).passed("nondegenerate.full");
}

bool is_nondegenerate(const Action& x) {
  return check_nondegenerate(x, Exec::serial).passed("nondegenerate.full");
}

std::vector<std::string> basis_names(const Subspace& b, const std::vector<std::string>& names,
                                        const std::string& stem) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < b.dim(); ++i) {
    Vec v = b.basis_vector(i);
    std::size_t nz = 0, where = 0;
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (!v[k].is_zero()) {
        ++nz;
        where = k;
      }
    }
    if (nz == 1 && v[where].is_one()) {
      out.push_back(names[where]);
    } else {
      out.push_back(stem + std::to_string(i));
    }
  }
  return out;
}

Algebra subalgebra(const Algebra& a, const Subspace& b) {
  if (b.ambient_dim() != a.dim()) throw NotASubalgebra("subspace lives in another space");
  if (!b.contains(a.unit())) throw NotASubalgebra("subspace does not contain the unit");
  const std::size_t d = b.dim();
  Tensor m(a.field(), {d, d, d});
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      Vec p = a.mul(b.basis_vector(i), b.basis_vector(j));
      if (!b.contains(p)) throw NotASubalgebra("subspace is not closed under multiplication");
      Vec coords = b.coordinates(p);
      for (std::size_t k = 0; k < d; ++k) m.at({i, j, k}) = coords[k];
    }
  }
  return Algebra(a.field(), std::move(m), b.coordinates(a.unit()), basis_names(b, a.names(), "b"));
}

Vec restrict_tensor(const Vec& v, const Dims& dims, const std::vector<const Subspace*>& subs) {
  if (subs.size() != dims.size()) throw ShapeMismatch("one subspace slot per factor");
  Vec coords = v;
  Dims cur = dims;
  for (std::size_t j = 0; j < subs.size(); ++j) {
    if (subs[j] == nullptr) continue;
    coords = apply_factor(coords, cur, j, subs[j]->coordinate_map());
    cur[j] = subs[j]->dim();
  }
  Vec back = coords;
  for (std::size_t j = 0; j < subs.size(); ++j) {
    if (subs[j] == nullptr) continue;
    back = apply_factor(back, cur, j, subs[j]->embedding());
    cur[j] = dims[j];
  }
  if (back != v) throw NotInvariant("tensor does not lie in the product of the subspaces");
  return coords;
}

Coaction restrict_coaction_to_subalgebra(const Coaction& x, const Subspace& b) {
  Algebra sub_alg = subalgebra(x.A, b);
  const std::size_t d = b.dim();
  const Dims dims = x.target_dims();
  std::vector<const Subspace*> slots =
      x.side == Side::left ? std::vector<const Subspace*>{nullptr, &b}
                           : std::vector<const Subspace*>{&b, nullptr};
  Matrix rho = matrix_of(x.A.field(), x.H->dim() * d, d, [&](std::size_t i) {
    return restrict_tensor(x.apply(b.basis_vector(i)), dims, slots);
  }, Exec::serial);
  return Coaction(x.side, x.H, std::move(sub_alg), std::move(rho));
}

}  // namespace whk
