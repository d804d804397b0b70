#include "whk/integrals.hpp"

#include <random>

#include "whk/double.hpp"
#include "whk/smash.hpp"

namespace whk {

namespace {

using Terms = std::vector<std::pair<std::size_t, Scalar>>;

Terms support(const Vec& v) {
  Terms out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) out.emplace_back(i, v[i]);
  }
  return out;
}

// Sparse lookups shared by the V4 residuals.
struct V4Tables {
  const Datum& d;
  std::size_t nh, na, nc;
  std::vector<Terms> rho;        // rho(e_a) over H (x) A, H-major
  std::vector<Terms> delta_h;    // Delta(e_h) over H (x) H
  std::vector<Terms> delta_c;    // Delta_C(e_c) over C (x) C
  std::vector<Vec> c_dot_h;      // e_c . e_h at c * nh + h
  std::vector<Vec> a_basis, c_basis;

  explicit V4Tables(const Datum& datum)
      : d(datum), nh(datum.H->dim()), na(datum.A().dim()), nc(datum.C().dim()) {
    const Field f = d.H->field();
    for (std::size_t a = 0; a < na; ++a) {
      a_basis.push_back(unit_vec(f, na, a));
      rho.push_back(support(d.coaction.apply(a_basis.back())));
    }
    for (std::size_t h = 0; h < nh; ++h) delta_h.push_back(support(d.H->comul(d.H->basis(h))));
    for (std::size_t c = 0; c < nc; ++c) {
      c_basis.push_back(unit_vec(f, nc, c));
      delta_c.push_back(support(d.C().comul(c_basis.back())));
    }
    for (std::size_t c = 0; c < nc; ++c) {
      for (std::size_t h = 0; h < nh; ++h) {
        c_dot_h.push_back(d.action.apply(c_basis[c], d.H->basis(h)));
      }
    }
  }

  // gamma(c)(e) for arbitrary c, e in C.
  Vec gam(const Vec& g, const Vec& c, const Vec& e) const {
    Vec out = zero_vec(d.H->field(), na);
    for (std::size_t i = 0; i < nc; ++i) {
      if (c[i].is_zero()) continue;
      for (std::size_t j = 0; j < nc; ++j) {
        if (e[j].is_zero()) continue;
        Scalar w = c[i] * e[j];
        const std::size_t base = (i * nc + j) * na;
        for (std::size_t a = 0; a < na; ++a) {
          if (!g[base + a].is_zero()) out[a].add_product(w, g[base + a]);
        }
      }
    }
    return out;
  }

  // Both defining conditions at the basis pair (c, e): na*na entries for the
  // first, then nc*na for the second.
  Vec block(const Vec& g, std::size_t c, std::size_t e) const {
    const Field f = d.H->field();
    const Algebra& A = d.A();
    Vec out = zero_vec(f, na * na + nc * na);
    const Vec x = gam(g, c_basis[c], c_basis[e]);
    const bool x_zero = is_zero(x);
    for (std::size_t a = 0; a < na; ++a) {
      Vec res = x_zero ? zero_vec(f, na) : A.mul(x, a_basis[a]);
      for (const auto& [t, k] : rho[a]) {
        const std::size_t h = t / na, a0 = t % na;
        for (const auto& [u, k2] : delta_h[h]) {
          const std::size_t h1 = u / nh, h2 = u % nh;
          Vec y = gam(g, c_dot_h[c * nh + h1], c_dot_h[e * nh + h2]);
          if (is_zero(y)) continue;
          axpy(res, -(k * k2), A.mul(a_basis[a0], y));
        }
      }
      for (std::size_t i = 0; i < na; ++i) out[a * na + i] = res[i];
    }
    const std::size_t off = na * na;
    for (const auto& [t, k] : delta_c[c]) {
      const std::size_t c1 = t / nc, c2 = t % nc;
      Vec y = gam(g, c_basis[c2], c_basis[e]);
      for (std::size_t i = 0; i < na; ++i) {
        if (!y[i].is_zero()) out[off + c1 * na + i].add_product(k, y[i]);
      }
    }
    for (const auto& [t, k] : delta_c[e]) {
      const std::size_t d1 = t / nc, d2 = t % nc;
      Vec y = gam(g, c_basis[c], c_basis[d1]);
      if (is_zero(y)) continue;
      for (const auto& [u, k2] : support(d.coaction.apply(y))) {
        const std::size_t h = u / na, x0 = u % na;
        const Vec& dh = c_dot_h[d2 * nh + h];
        for (std::size_t j = 0; j < nc; ++j) {
          if (dh[j].is_zero()) continue;
          out[off + j * na + x0] -= k * k2 * dh[j];
        }
      }
    }
    return out;
  }

  // gamma(c_(1))(c_(2)) - eps_C(c.1_<-1>) 1_<0>, linear part only.
  Vec normalization_lhs(const Vec& g) const {
    const Field f = d.H->field();
    Vec out = zero_vec(f, nc * na);
    for (std::size_t c = 0; c < nc; ++c) {
      for (const auto& [t, k] : delta_c[c]) {
        Vec y = gam(g, c_basis[t / nc], c_basis[t % nc]);
        for (std::size_t i = 0; i < na; ++i) {
          if (!y[i].is_zero()) out[c * na + i].add_product(k, y[i]);
        }
      }
    }
    return out;
  }

  Vec normalization_rhs() const {
    const Field f = d.H->field();
    Vec out = zero_vec(f, nc * na);
    for (const auto& [t, k] : support(d.coaction.apply(d.A().unit()))) {
      const std::size_t h = t / na, a0 = t % na;
      for (std::size_t c = 0; c < nc; ++c) {
        Scalar e = d.C().counit(c_dot_h[c * nh + h]);
        if (!e.is_zero()) out[c * na + a0].add_product(k, e);
      }
    }
    return out;
  }
};

void require_right_datum(const Datum& d) {
  if (d.side != Side::right || !d.nondegenerate) {
    throw DegenerateDatum("integral spaces need a non-degenerate right datum");
  }
}

Matrix columns_of(Field f, std::size_t rows, const std::vector<Vec>& cols) {
  return Matrix::from_columns(f, rows, cols);
}

}  // namespace

IntegralSpace integral_space(const WeakHopfAlgebra& hopf, Side side) {
  const WeakBialgebra& h = hopf.wba();
  const Field f = h.field();
  const std::size_t n = h.dim();
  const Algebra& a = h.algebra();
  std::vector<Matrix> blocks;
  for (std::size_t i = 0; i < n; ++i) {
    if (side == Side::right) {
      blocks.push_back(a.right_mult(h.basis(i)) - a.right_mult(h.pi_r().column(i)));
    } else {
      blocks.push_back(a.left_mult(h.basis(i)) - a.left_mult(h.pi_l().column(i)));
    }
  }
  return IntegralSpace{side, kernel_of(vstack(f, n, blocks))};
}

bool is_nondegenerate_integral(const WeakHopfAlgebra& hopf, const Vec& x) {
  const WeakBialgebra& h = hopf.wba();
  const std::size_t n = h.dim();
  Matrix m = matrix_of(h.field(), n, n, [&](std::size_t p) {
    return arrow_left(h.coalgebra(), unit_vec(h.field(), n, p), x);
  }, Exec::serial);
  return rank(m) == n;
}

Vec nondegenerate_integral(const WeakHopfAlgebra& hopf, Side side) {
  const Field f = hopf.field();
  const Subspace space = integral_space(hopf, side).space;
  const std::vector<Vec> basis = space.basis_vectors();
  for (const auto& v : basis) {
    if (is_nondegenerate_integral(hopf, v)) return v;
  }
  if (basis.empty()) throw NoNondegenerateIntegral("the integral space is zero");
  Vec sum = zero_vec(f, hopf.dim());
  for (const auto& v : basis) sum = add(sum, v);
  if (is_nondegenerate_integral(hopf, sum)) return sum;
  std::mt19937 rng(20240601);
  std::uniform_int_distribution<long> coef(-3, 3);
  for (int attempt = 0; attempt < 64; ++attempt) {
    Vec v = zero_vec(f, hopf.dim());
    for (const auto& b : basis) axpy(v, f.from_int(coef(rng)), b);
    if (!is_zero(v) && is_nondegenerate_integral(hopf, v)) return v;
  }
  throw NoNondegenerateIntegral("no non-degenerate " + to_string(side) + " integral found");
}

std::string to_string(DualIntegralConvention c) {
  return c == DualIntegralConvention::primary ? "primary" : "mirrored";
}

Vec dual_right_integral(const WeakHopfAlgebra& hopf, const Vec& r, DualIntegralConvention c) {
  if (!is_nondegenerate_integral(hopf, r)) throw NoDualIntegral("r is not a non-degenerate integral");
  const WeakBialgebra& h = hopf.wba();
  const Field f = h.field();
  const std::size_t n = h.dim();
  const WeakHopfAlgebra hat = dual(hopf);
  const Subspace rights = integral_space(hat, Side::right).space;
  const Matrix emb = rights.embedding();
  Matrix pair = matrix_of(f, n, n, [&](std::size_t p) {
    Vec phi = unit_vec(f, n, p);
    return c == DualIntegralConvention::primary ? arrow_right(h.coalgebra(), r, phi)
                                                : arrow_left(h.coalgebra(), phi, r);
  }, Exec::serial);
  auto sol = try_solve_linear_system({pair * emb}, {h.one()});
  if (!sol) {
    throw NoDualIntegral("no right integral of the dual meets the " + to_string(c) +
                         " convention");
  }
  return emb.apply(sol->particular);
}

Vec v4_residual(const Datum& d, const Vec& gamma) {
  require_right_datum(d);
  V4Tables t(d);
  std::vector<Vec> parts;
  for (std::size_t c = 0; c < t.nc; ++c) {
    for (std::size_t e = 0; e < t.nc; ++e) parts.push_back(t.block(gamma, c, e));
  }
  return concat(parts);
}

V4Space compute_V4(const DatumPtr& dp, Exec exec) {
  const Datum& d = *dp;
  require_right_datum(d);
  const Field f = d.H->field();
  V4Tables t(d);
  const std::size_t u = t.nc * t.nc * t.na;
  const std::size_t rows = t.na * t.na + t.nc * t.na;

  // The kernel is cut down one (c, d) block at a time, so the system is
  // never assembled in full.
  std::vector<Vec> current;
  for (std::size_t i = 0; i < u; ++i) current.push_back(unit_vec(f, u, i));
  for (std::size_t c = 0; c < t.nc && !current.empty(); ++c) {
    for (std::size_t e = 0; e < t.nc && !current.empty(); ++e) {
      Matrix m = matrix_of(f, rows, current.size(),
                           [&](std::size_t k) { return t.block(current[k], c, e); }, exec);
      if (m.is_zero()) continue;
      Subspace ker = kernel_of(m);
      std::vector<Vec> next;
      for (std::size_t k = 0; k < ker.dim(); ++k) {
        const Vec coords = ker.basis_vector(k);
        Vec v = zero_vec(f, u);
        for (std::size_t j = 0; j < coords.size(); ++j) {
          if (!coords[j].is_zero()) axpy(v, coords[j], current[j]);
        }
        next.push_back(std::move(v));
      }
      current = std::move(next);
    }
  }
  Subspace space = Subspace::span(f, u, current);

  Report r("V4 of the datum");
  r.add(check_identity("v4.resubstitution", "every basis solution satisfies both conditions",
                       {space.dim()}, [&](const std::vector<std::size_t>& i) {
                         Vec g = space.basis_vector(i[0]);
                         std::vector<Vec> parts;
                         for (std::size_t c = 0; c < t.nc; ++c) {
                           for (std::size_t e = 0; e < t.nc; ++e) parts.push_back(t.block(g, c, e));
                         }
                         return concat(parts);
                       }, exec));
  r.note("v4_dim", std::to_string(space.dim()));
  return V4Space{dp, std::move(space), std::move(r)};
}

bool check_normalized(const Datum& d, const Vec& gamma) {
  require_right_datum(d);
  V4Tables t(d);
  return t.normalization_lhs(gamma) == t.normalization_rhs();
}

bool check_normalization_equation(const V0Result& v, const Vec& x) {
  const Algebra& host = v.host;
  if (v.which == Example::ex1) return x == host.unit();
  const Field f = host.field();
  const std::size_t n = v.hat_embedding.cols();
  Vec total = host.zero();
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      const Scalar& k = v.rho_hat_1_2[p * n + q];
      if (k.is_zero()) continue;
      Vec left = v.hat_embedding.apply(v.hat_sinv.apply(unit_vec(f, n, q)));
      Vec right = v.hat_embedding.column(p);
      axpy(total, k, host.mul(host.mul(left, x), right));
    }
  }
  return total == host.unit();
}

namespace {

// The normalization equation as an affine map x -> N x on the host.
Matrix normalization_map(const V0Result& v) {
  const Algebra& host = v.host;
  const Field f = host.field();
  const std::size_t n = v.hat_embedding.cols();
  std::vector<std::pair<Vec, Vec>> terms;
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      const Scalar& k = v.rho_hat_1_2[p * n + q];
      if (k.is_zero()) continue;
      terms.emplace_back(scale(k, v.hat_embedding.apply(v.hat_sinv.apply(unit_vec(f, n, q)))),
                         v.hat_embedding.column(p));
    }
  }
  return matrix_of(f, host.dim(), host.dim(), [&](std::size_t i) {
    Vec out = host.zero();
    for (const auto& [l, r] : terms) axpy(out, f.one(), host.mul(host.mul(l, host.basis(i)), r));
    return out;
  }, Exec::serial);
}

// (x -> psi)(y) = psi(y x) on a functional psi.
Vec harpoon_functional(const Algebra& a, const Vec& x, const Vec& psi) {
  const Field f = a.field();
  Vec out = zero_vec(f, a.dim());
  for (std::size_t y = 0; y < a.dim(); ++y) out[y] = dot(f, psi, a.mul(a.basis(y), x));
  return out;
}

}  // namespace

V0Result v0_iso(const DatumPtr& dp, Example which, const WhaPtr& base, DualIntegralConvention conv,
                Exec exec) {
  const Datum& d = *dp;
  require_right_datum(d);
  const Field f = d.H->field();
  const WeakHopfAlgebra& K = *base;
  const WeakBialgebra& kb = K.wba();
  const std::size_t n = K.dim();
  V4Tables t(d);
  V4Space v4 = compute_V4(dp, exec);
  const std::vector<Vec> gammas = v4.space.basis_vectors();

  std::optional<Vec> r;
  std::optional<Vec> rho_hat;
  if (which != Example::ex1) {
    r = nondegenerate_integral(K, Side::right);
    rho_hat = dual_right_integral(K, *r, conv);
  }
  auto dual_basis = [&](std::size_t i) { return unit_vec(f, n, i); };

  std::optional<Algebra> host;
  Subspace v0 = Subspace::zero(f, 0);
  std::function<Vec(const Vec&)> fmap;
  Matrix hat_embedding(f, 0, 0);

  switch (which) {
    case Example::ex1: {
      host = kb.algebra();
      v0 = center(*host);
      const Vec one_c = kb.hl().coordinates(kb.one());
      fmap = [&t, one_c](const Vec& g) { return t.gam(g, one_c, one_c); };
      break;
    }
    case Example::ex2: {
      WeakBialgebra hat = dual(kb);
      host = hat.algebra();
      v0 = commutant(*host, Subspace::full(f, n), hat.hr().basis_vectors());
      const Vec rv = *r;
      fmap = [&t, &kb, n, f, rv](const Vec& g) {
        Vec out = zero_vec(f, n);
        for (std::size_t h = 0; h < n; ++h) {
          out[h] = kb.counit(kb.hl().from_coordinates(t.gam(g, rv, unit_vec(f, n, h))));
        }
        return out;
      };
      hat_embedding = Matrix::identity(f, n);
      break;
    }
    case Example::ex3: {
      auto w = std::make_shared<WeylAlgebra>(build_weyl(wba_of(base)));
      host = w->algebra;
      std::vector<Vec> hs;
      for (std::size_t a = 0; a < n; ++a) hs.push_back(w->element(kb.basis(a), kb.coalgebra().counit_vector()));
      v0 = commutant(*host, Subspace::full(f, host->dim()), hs);
      std::vector<Vec> table;  // phi^i a at i * n + a
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t a = 0; a < n; ++a) table.push_back(w->element(kb.basis(a), dual_basis(i)));
      }
      const Vec rv = *r;
      const std::size_t hd = host->dim();
      fmap = [&t, table, rv, n, f, hd](const Vec& g) {
        Vec out = zero_vec(f, hd);
        for (std::size_t i = 0; i < n; ++i) {
          Vec x = t.gam(g, rv, unit_vec(f, n, i));
          for (std::size_t a = 0; a < n; ++a) {
            if (!x[a].is_zero()) axpy(out, x[a], table[i * n + a]);
          }
        }
        return out;
      };
      hat_embedding = columns_of(f, hd, [&] {
        std::vector<Vec> cols;
        for (std::size_t p = 0; p < n; ++p) cols.push_back(w->element(kb.one(), dual_basis(p)));
        return cols;
      }());
      break;
    }
    case Example::ex4: {
      TwistedDouble tw = build_twisted_double(base, exec);
      host = tw.algebra;
      const Matrix proj = tw.inner.projection;
      const std::size_t hd = host->dim();
      const Vec one_hat = kb.coalgebra().counit_vector();
      auto D = [&](const Vec& a, const Vec& phi) { return proj.apply(kron(a, phi)); };
      const Algebra& ka = kb.algebra();
      const Matrix& sinv = K.antipode_inverse();
      const Vec sr = sinv.apply(*r);
      std::vector<Matrix> blocks;
      for (std::size_t b = 0; b < n; ++b) {
        const Vec db = D(kb.basis(b), one_hat);
        std::vector<std::pair<Vec, Vec>> rhs;  // (D(b1), D(psi)) with weight folded in
        for (const auto& [idx, k] : support(kb.comul(kb.basis(b)))) {
          const Vec b2 = sinv.apply(sinv.apply(kb.basis(idx % n)));
          Vec psi = harpoon_functional(ka, ka.mul(sr, b2), *rho_hat);
          rhs.emplace_back(scale(k, D(kb.basis(idx / n), one_hat)), D(kb.one(), psi));
        }
        const Algebra& hh = *host;
        blocks.push_back(matrix_of(f, hd, hd, [&](std::size_t i) {
          Vec u = hh.basis(i);
          Vec out = hh.mul(u, db);
          for (const auto& [l, p] : rhs) out = sub(out, hh.mul(hh.mul(l, u), p));
          return out;
        }, Exec::serial));
      }
      v0 = kernel_of(vstack(f, hd, blocks));
      const Vec rv = *r;
      fmap = [&t, proj, rv, n, f](const Vec& g) {
        Vec out = zero_vec(f, proj.rows());
        for (std::size_t i = 0; i < n; ++i) {
          Vec x = t.gam(g, rv, unit_vec(f, n, i));
          if (!is_zero(x)) out = add(out, proj.apply(kron(x, unit_vec(f, n, i))));
        }
        return out;
      };
      std::vector<Vec> cols;
      for (std::size_t p = 0; p < n; ++p) cols.push_back(D(kb.one(), dual_basis(p)));
      hat_embedding = columns_of(f, hd, cols);
      break;
    }
  }

  const std::size_t hd = host->dim();
  std::vector<Vec> images(gammas.size());
  for_each_index(gammas.size(), Exec::serial, [&](std::size_t i) { images[i] = fmap(gammas[i]); });
  Matrix fm = columns_of(f, hd, images);
  if (gammas.empty()) fm = Matrix(f, hd, 0);

  Report rep("integrals of " + to_string(which));
  rep.merge("v4", v4.report);
  bool into = true;
  for (const auto& x : images) into = into && v0.contains(x);
  rep.add("f.into_v0", "f maps V4 into V0", into);
  const std::size_t rk = gammas.empty() ? 0 : rank(fm);
  rep.add("f.bijective", "f is a linear bijection V4 -> V0",
          rk == gammas.size() && rk == v0.dim(),
          "rank " + std::to_string(rk) + ", dim V4 " + std::to_string(gammas.size()) +
              ", dim V0 " + std::to_string(v0.dim()));
  rep.note("v4_dim", std::to_string(gammas.size()));
  rep.note("v0_dim", std::to_string(v0.dim()));
  rep.note("host_dim", std::to_string(hd));

  V0Result out{which,
               std::move(*host),
               std::move(v4),
               std::move(v0),
               std::move(fm),
               r,
               rho_hat,
               std::move(hat_embedding),
               Vec{},
               Matrix(f, 0, 0),
               Report{}};

  // Normalized elements of V4 as an affine subspace in V4 coordinates.
  const Matrix e4 = out.v4.space.embedding();
  std::optional<AffineSolution> norm4;
  if (!gammas.empty()) {
    Matrix nl = matrix_of(f, t.nc * t.na, gammas.size(),
                          [&](std::size_t i) { return t.normalization_lhs(gammas[i]); }, exec);
    norm4 = try_solve_linear_system({nl}, {t.normalization_rhs()});
  }
  rep.note("normalization.solvable_in_v4", norm4 ? "yes" : "no");

  if (which == Example::ex1) {
    const Vec& one = out.host.unit();
    rep.add("normalized.unique", "exactly one normalized element in V4",
            norm4.has_value() && norm4->homogeneous.dim() == 0);
    rep.add("normalized.maps_to_unit", "f(normalized) is the unit",
            norm4.has_value() && out.f.apply(norm4->particular) == one);
    bool iff = false;
    if (!gammas.empty()) {
      auto pre = try_solve_linear_system({out.f}, {one});
      iff = pre && pre->homogeneous.dim() == 0 && check_normalized(d, e4.apply(pre->particular));
    }
    rep.add("normalized.iff_unit", "the preimage of the unit is normalized", iff);
  } else {
    rep.note("dual_integral.convention", to_string(conv));
    out.rho_hat_1_2 = dual_coalgebra(kb.algebra()).comul(*rho_hat);
    out.hat_sinv = K.antipode_inverse().transpose();
    const Matrix nm = normalization_map(out);
    std::optional<AffineSolution> norm0;
    if (out.v0.dim() > 0) {
      norm0 = try_solve_linear_system({nm * out.v0.embedding()}, {out.host.unit()});
    }
    rep.note("normalization.solvable_in_v0", norm0 ? "yes" : "no");
    if (norm4 && norm0) {
      bool corr = nm.apply(out.f.apply(norm4->particular)) == out.host.unit() &&
                  norm4->homogeneous.dim() == norm0->homogeneous.dim();
      for (const auto& v : norm4->homogeneous.basis_vectors()) {
        corr = corr && (nm * out.f).apply(v) == out.host.zero();
      }
      rep.note("normalization.correspondence", corr ? "yes" : "no");
    }
  }
  out.report = std::move(rep);
  return out;
}

DualIntegralConvention pin_dual_convention(Field f, Report* evidence) {
  auto h = std::make_shared<const WeakHopfAlgebra>(g2(f));
  DatumPtr d = example_datum(h, Example::ex2, Exec::serial);
  std::optional<DualIntegralConvention> pinned;
  for (auto c : {DualIntegralConvention::primary, DualIntegralConvention::mirrored}) {
    bool ok = false;
    try {
      V0Result v = v0_iso(d, Example::ex2, h, c, Exec::serial);
      ok = v.report.passed() && v.report.note_value("normalization.solvable_in_v0") == "yes";
    } catch (const NoDualIntegral&) {
      ok = false;
    }
    if (evidence) evidence->add("convention." + to_string(c), "ex2 over G2 passes", ok);
    if (ok && !pinned) pinned = c;
  }
  return pinned.value_or(DualIntegralConvention::primary);
}

Report example2_remark(const V0Result& v, const WhaPtr& h) {
  Report rep("example 2 left integrals of the dual");
  const WeakHopfAlgebra hat = dual(*h);
  const Subspace il = integral_space(hat, Side::left).space;
  rep.note("v0_dim", std::to_string(v.v0.dim()));
  rep.note("left_integrals_dim", std::to_string(il.dim()));
  rep.note("dims_differ", v.v0.dim() != il.dim() ? "yes" : "no");
  if (!v.integral) return rep;
  const Field f = h->field();
  const std::size_t n = h->dim();
  const Algebra& a = h->wba().algebra();
  const Matrix st = h->antipode().transpose();
  std::vector<Vec> images;
  for (const auto& lam : il.basis_vectors()) {
    Vec shifted = zero_vec(f, n);
    for (std::size_t y = 0; y < n; ++y) shifted[y] = dot(f, lam, a.mul(*v.integral, a.basis(y)));
    images.push_back(st.apply(shifted));
  }
  const Subspace img = Subspace::span(f, n, images);
  rep.note("g.injective", img.dim() == il.dim() ? "yes" : "no");
  rep.note("g.image_is_hat_hl", img == hat.wba().hl() ? "yes" : "no");
  return rep;
}

}  // namespace whk
