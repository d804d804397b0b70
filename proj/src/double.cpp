#include "whk/double.hpp"

#include <map>
#include <tuple>

#include "whk/errors.hpp"
#include "whk/gallery.hpp"
#include "whk/multilinear.hpp"

namespace whk {

namespace {

struct Term3 {
  std::size_t i, j, k;
  Scalar c;
};

// Delta^2(e_b) as a list of (b1, b2, b3, coefficient).
std::vector<Term3> delta3(const Coalgebra& c, std::size_t b) {
  const std::size_t n = c.dim();
  std::vector<Term3> out;
  Vec d = c.comul(c.basis(b));
  for (std::size_t jk = 0; jk < d.size(); ++jk) {
    if (d[jk].is_zero()) continue;
    Vec d1 = c.comul(c.basis(jk / n));
    for (std::size_t pq = 0; pq < d1.size(); ++pq) {
      if (d1[pq].is_zero()) continue;
      out.push_back({pq / n, pq % n, jk % n, d[jk] * d1[pq]});
    }
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> nonzero_pairs(const Vec& v, std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t t = 0; t < v.size(); ++t) {
    if (!v[t].is_zero()) out.emplace_back(t / n, t % n);
  }
  return out;
}

// The functional y -> phi(x y) resp. phi(y x) for phi = eps.
Vec eps_left(const WeakBialgebra& h, const Vec& x) {
  return matrix_of(h.field(), 1, h.dim(), [&](std::size_t y) {
           return Vec{h.counit(h.mul(x, h.basis(y)))};
         }, Exec::serial).row(0);
}
Vec eps_right(const WeakBialgebra& h, const Vec& x) {
  return matrix_of(h.field(), 1, h.dim(), [&](std::size_t y) {
           return Vec{h.counit(h.mul(h.basis(y), x))};
         }, Exec::serial).row(0);
}

class DoubleOps {
 public:
  explicit DoubleOps(const WeakHopfAlgebra& h)
      : h_(h), w_(h.wba()), n_(h.dim()), hat_(dual_algebra(w_.coalgebra())),
        hatco_(dual_coalgebra(w_.algebra())), sinv_(h.antipode_inverse()) {
    for (std::size_t b = 0; b < n_; ++b) d3_.push_back(delta3(w_.coalgebra(), b));
  }

  std::size_t n() const { return n_; }
  const Algebra& hat() const { return hat_; }
  const Coalgebra& hatco() const { return hatco_; }
  Vec hat_one() const { return w_.coalgebra().counit_vector(); }

  // [b3 e_y S^-1(b1)]_p as a matrix with rows p and columns y
  const Matrix& sandwich(std::size_t b1, std::size_t b3) {
    auto key = std::make_pair(b1, b3);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    Vec sb1 = sinv_.column(b1);
    Matrix m = matrix_of(w_.field(), n_, n_, [&](std::size_t y) {
      return w_.mul(w_.mul(w_.basis(b3), w_.basis(y)), sb1);
    }, Exec::serial);
    return cache_.emplace(key, std::move(m)).first->second;
  }

  Vec mul(const Vec& x, const Vec& y) {
    const Field f = w_.field();
    Vec out = zero_vec(f, n_ * n_);
    const Algebra& alg = w_.algebra();
    for (auto [a, p] : nonzero_pairs(x, n_)) {
      const Scalar& xa = x[a * n_ + p];
      for (auto [b, q] : nonzero_pairs(y, n_)) {
        Scalar w = xa * y[b * n_ + q];
        for (const Term3& t : d3_[b]) {
          const auto& ab = alg.product_terms(a, t.j);
          if (ab.empty()) continue;
          Vec phi = sandwich(t.i, t.k).row(p);
          if (is_zero(phi)) continue;
          Vec right = hat_.mul(phi, hat_.basis(q));
          if (is_zero(right)) continue;
          Scalar wc = w * t.c;
          for (const auto& [s, cs] : ab) {
            Scalar wcs = wc * cs;
            for (std::size_t r = 0; r < n_; ++r) {
              if (!right[r].is_zero()) out[s * n_ + r].add_product(wcs, right[r]);
            }
          }
        }
      }
    }
    return out;
  }

  // (a_(1) (x) phi_(2)) (x) (a_(2) (x) phi_(1))
  Vec comul(const Vec& x) const {
    const std::size_t m = n_ * n_;
    Vec out = zero_vec(w_.field(), m * m);
    for (auto [a, p] : nonzero_pairs(x, n_)) {
      Vec da = w_.comul(w_.basis(a));
      Vec dp = hatco_.comul(hatco_.basis(p));
      for (auto [a1, a2] : nonzero_pairs(da, n_)) {
        for (auto [p1, p2] : nonzero_pairs(dp, n_)) {
          out[(a1 * n_ + p2) * m + (a2 * n_ + p1)].add_product(
              x[a * n_ + p], da[a1 * n_ + a2] * dp[p1 * n_ + p2]);
        }
      }
    }
    return out;
  }

  // eps(a (phi -> 1))
  Scalar counit_first(const Vec& x) const {
    Scalar s = w_.field().zero();
    for (auto [a, p] : nonzero_pairs(x, n_)) {
      Vec t = arrow_left(w_.coalgebra(), hat_.basis(p), w_.one());
      s.add_product(x[a * n_ + p], w_.counit(w_.mul(w_.basis(a), t)));
    }
    return s;
  }

  // eps^((1^ <- a) phi), with eps^ the evaluation at 1
  Scalar counit_second(const Vec& x) const {
    Scalar s = w_.field().zero();
    for (auto [a, p] : nonzero_pairs(x, n_)) {
      Vec psi = hat_.mul(eps_left(w_, w_.basis(a)), hat_.basis(p));
      s.add_product(x[a * n_ + p], hatco_.counit(psi));
    }
    return s;
  }

  // D(S^^-1(phi)) D(S(a))
  Vec antipode(const Vec& x) {
    Vec out = zero_vec(w_.field(), n_ * n_);
    for (auto [a, p] : nonzero_pairs(x, n_)) {
      Vec phi = sinv_.row(p);  // S^^-1 = (S^-1)^T applied to e^p
      Vec sa = h_.antipode().column(a);
      axpy(out, x[a * n_ + p], mul(kron(w_.one(), phi), kron(sa, hat_one())));
    }
    return out;
  }

  Subspace relations() const {
    std::vector<Vec> gens;
    auto add_family = [&](const Subspace& base, bool left_base) {
      for (std::size_t i = 0; i < base.dim(); ++i) {
        Vec x = base.basis_vector(i);
        // x^R -> 1^ <- x^R and x^L -> x^L -> 1^
        Vec chi = left_base ? eps_right(w_, x) : eps_left(w_, x);
        for (std::size_t h = 0; h < n_; ++h) {
          Vec hx = w_.mul(w_.basis(h), x);
          for (std::size_t p = 0; p < n_; ++p) {
            Vec r = kron(hx, hat_.basis(p));
            axpy(r, -w_.field().one(), kron(w_.basis(h), hat_.mul(chi, hat_.basis(p))));
            if (!is_zero(r)) gens.push_back(std::move(r));
          }
        }
      }
    };
    add_family(w_.hr(), false);
    add_family(w_.hl(), true);
    return Subspace::span(w_.field(), n_ * n_, gens);
  }

 private:
  const WeakHopfAlgebra& h_;
  const WeakBialgebra& w_;
  std::size_t n_;
  Algebra hat_;
  Coalgebra hatco_;
  Matrix sinv_;
  std::vector<std::vector<Term3>> d3_;
  std::map<std::pair<std::size_t, std::size_t>, Matrix> cache_;
};

}  // namespace

Vec double_ambient_mul(const WeakHopfAlgebra& h, const Vec& x, const Vec& y) {
  DoubleOps ops(h);
  return ops.mul(x, y);
}

DrinfeldDouble build_double(const WhaPtr& hp, Exec exec) {
  const WeakHopfAlgebra& h = *hp;
  const Field f = h.field();
  (void)h.antipode_inverse();  // throws AntipodeNotInvertible
  DoubleOps ops(h);
  const std::size_t n = h.dim(), m = n * n;
  Subspace rel = ops.relations();
  Quotient q = quotient(m, rel);
  const Matrix& pi = q.projection;
  const std::size_t k = pi.rows();
  const Matrix pipi = pi.kron(pi);

  Report r("Drinfel'd double");
  std::vector<Vec> rels = rel.basis_vectors();
  r.add(check_identity("well_defined.product", "products of relations with basis elements vanish",
                       {rels.size(), m},
                       [&](const std::vector<std::size_t>& i) {
                         Vec e = unit_vec(f, m, i[1]);
                         return concat({pi.apply(ops.mul(rels[i[0]], e)),
                                        pi.apply(ops.mul(e, rels[i[0]]))});
                       },
                       Exec::serial));
  r.add(check_identity("well_defined.coproduct", "the coproduct vanishes on relations",
                       {rels.size()},
                       [&](const std::vector<std::size_t>& i) {
                         return pipi.apply(ops.comul(rels[i[0]]));
                       },
                       Exec::serial));
  r.add(check_identity("well_defined.counit", "both counit formulas vanish on relations",
                       {rels.size()},
                       [&](const std::vector<std::size_t>& i) {
                         return Vec{ops.counit_first(rels[i[0]]), ops.counit_second(rels[i[0]])};
                       },
                       Exec::serial));
  r.add(check_identity("well_defined.antipode", "the antipode preserves the relations",
                       {rels.size()},
                       [&](const std::vector<std::size_t>& i) {
                         return pi.apply(ops.antipode(rels[i[0]]));
                       },
                       Exec::serial));
  r.add(check_identity("counit.formulas_agree", "eps(a (phi -> 1)) = eps^((1^ <- a) phi)", {m},
                       [&](const std::vector<std::size_t>& i) {
                         Vec e = unit_vec(f, m, i[0]);
                         return Vec{ops.counit_first(e) - ops.counit_second(e)};
                       },
                       Exec::serial));
  if (!r.passed()) throw WellDefinednessFailure("Drinfel'd double: " + r.summary());

  std::vector<Vec> sec(k);
  for (std::size_t i = 0; i < k; ++i) sec[i] = q.section.column(i);
  Tensor mult(f, {k, k, k});
  std::vector<Vec> prods(k * k);
  for_each_index(k * k, exec, [&](std::size_t ij) {
    DoubleOps local(h);
    prods[ij] = pi.apply(local.mul(sec[ij / k], sec[ij % k]));
  });
  for (std::size_t ij = 0; ij < k * k; ++ij) {
    for (std::size_t t = 0; t < k; ++t) mult.at({ij / k, ij % k, t}) = prods[ij][t];
  }
  Tensor comult(f, {k, k, k});
  Vec counit(k, f.zero());
  Matrix s(f, k, k);
  for (std::size_t i = 0; i < k; ++i) {
    Vec d = pipi.apply(ops.comul(sec[i]));
    for (std::size_t t = 0; t < k * k; ++t) comult.at({i, t / k, t % k}) = d[t];
    counit[i] = ops.counit_first(sec[i]);
    s.set_column(i, pi.apply(ops.antipode(sec[i])));
  }
  std::vector<std::string> names;
  const auto& hn = h.wba().names();
  const auto& hatn = ops.hat().names();
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t rep = q.representatives[i];
    names.push_back("D(" + hn[rep / n] + ")D(" + hatn[rep % n] + ")");
  }
  Vec unit = pi.apply(kron(h.wba().one(), ops.hat_one()));
  Algebra alg(f, std::move(mult), std::move(unit), names);
  Coalgebra co(f, std::move(comult), std::move(counit), names);
  auto wha = std::make_shared<const WeakHopfAlgebra>(
      WeakHopfAlgebra::make(WeakBialgebra::make(alg, co, exec), std::move(s), exec));
  r.note("dim", std::to_string(k));
  return DrinfeldDouble{hp, std::move(rel), pi, q.section, std::move(alg), std::move(wha),
                        std::move(r)};
}

TwistedDouble build_twisted_double(const WhaPtr& k, Exec exec) {
  Variants v = op_cop_variants(*k);
  DrinfeldDouble d = build_double(std::make_shared<const WeakHopfAlgebra>(v.op_cop), exec);
  Algebra op = opposite_algebra(d.algebra);
  return TwistedDouble{std::move(d), std::move(op)};
}

// --------------------------------------------------------------- YD modules

Vec YDModule::act(const Vec& m, const Vec& a) const {
  const std::size_t nh = H->dim();
  Vec out = zero_vec(H->field(), dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (m[i].is_zero()) continue;
    for (std::size_t h = 0; h < nh; ++h) {
      if (a[h].is_zero()) continue;
      Scalar w = m[i] * a[h];
      for (std::size_t j = 0; j < dim; ++j) {
        const Scalar& c = action.at({i, h, j});
        if (!c.is_zero()) out[j].add_product(w, c);
      }
    }
  }
  return out;
}

Report check_yd(const YDModule& md, const WhaPtr& hopf, Exec exec) {
  const WeakBialgebra& h = *md.H;
  const Field f = h.field();
  const std::size_t nh = h.dim(), d = md.dim;
  auto em = [&](std::size_t i) { return unit_vec(f, d, i); };
  Report r("Yetter-Drinfel'd module");
  r.add(check_identity("module.associativity", "(m.a).b = m.(ab)", {d, nh, nh},
                       [&](const std::vector<std::size_t>& i) {
                         Vec a = h.basis(i[1]), b = h.basis(i[2]);
                         return sub(md.act(md.act(em(i[0]), a), b), md.act(em(i[0]), h.mul(a, b)));
                       },
                       exec));
  r.add(check_identity("module.unital", "m.1 = m", {d},
                       [&](const std::vector<std::size_t>& i) {
                         return sub(md.act(em(i[0]), h.one()), em(i[0]));
                       },
                       exec));
  const Dims cd{nh, d};
  r.add(check_identity("comodule.coassociativity", "(Delta (x) id) rho = (id (x) rho) rho", {d},
                       [&](const std::vector<std::size_t>& i) {
                         Vec rho = md.coact(em(i[0]));
                         return sub(apply_factor(rho, cd, 0, h.coalgebra().comult_map()),
                                    apply_factor(rho, cd, 1, md.coaction));
                       },
                       exec));
  r.add(check_identity("comodule.counit", "(eps (x) id) rho = id", {d},
                       [&](const std::vector<std::size_t>& i) {
                         Vec rho = md.coact(em(i[0]));
                         return sub(apply_factor(rho, cd, 0, h.coalgebra().counit_map()), em(i[0]));
                       },
                       exec));

  // m_<-1> a_(1) (x) m_<0>.a_(2)
  auto lhs_first = [&](const Vec& m, const Vec& a) {
    Vec out = zero_vec(f, nh * d);
    Vec rho = md.coact(m);
    Vec da = h.comul(a);
    for (auto [x, m0] : nonzero_pairs(rho, d)) {
      for (auto [a1, a2] : nonzero_pairs(da, nh)) {
        axpy(out, rho[x * d + m0] * da[a1 * nh + a2],
             kron(h.mul(h.basis(x), h.basis(a1)), md.act(em(m0), h.basis(a2))));
      }
    }
    return out;
  };
  r.add(check_identity("yd.first",
                       "m_<-1> a_(1) (x) m_<0>.a_(2) = a_(2) (m.a_(1))_<-1> (x) (m.a_(1))_<0>",
                       {d, nh},
                       [&](const std::vector<std::size_t>& i) {
                         Vec a = h.basis(i[1]);
                         Vec rhs = zero_vec(f, nh * d);
                         Vec da = h.comul(a);
                         for (auto [a1, a2] : nonzero_pairs(da, nh)) {
                           Vec rho = md.coact(md.act(em(i[0]), h.basis(a1)));
                           for (auto [x, m0] : nonzero_pairs(rho, d)) {
                             axpy(rhs, da[a1 * nh + a2] * rho[x * d + m0],
                                  kron(h.mul(h.basis(a2), h.basis(x)), em(m0)));
                           }
                         }
                         return sub(lhs_first(em(i[0]), a), rhs);
                       },
                       exec));
  r.add(check_identity("yd.second", "m_<-1> 1_(1) (x) m_<0>.1_(2) = m_<-1> (x) m_<0>", {d},
                       [&](const std::vector<std::size_t>& i) {
                         return sub(lhs_first(em(i[0]), h.one()), md.coact(em(i[0])));
                       },
                       exec));
  if (hopf) {
    const Matrix& sinv = hopf->antipode_inverse();
    r.add(check_identity("yd.single",
                         "(m.a)_<-1> (x) (m.a)_<0> = S^-1(a_(3)) m_<-1> a_(1) (x) m_<0>.a_(2)",
                         {d, nh},
                         [&](const std::vector<std::size_t>& i) {
                           Vec rho = md.coact(em(i[0]));
                           Vec rhs = zero_vec(f, nh * d);
                           for (const Term3& t : delta3(h.coalgebra(), i[1])) {
                             for (auto [x, m0] : nonzero_pairs(rho, d)) {
                               Vec left = h.mul(h.mul(sinv.column(t.k), h.basis(x)), h.basis(t.i));
                               if (is_zero(left)) continue;
                               axpy(rhs, t.c * rho[x * d + m0],
                                    kron(left, md.act(em(m0), h.basis(t.j))));
                             }
                           }
                           return sub(md.coact(md.act(em(i[0]), h.basis(i[1]))), rhs);
                         },
                         exec));
    const bool two = r.passed("yd.first") && r.passed("yd.second");
    r.note("yd.forms_agree", two == r.passed("yd.single") ? "true" : "false");
  }
  return r;
}

YDModule yd_unit(const WbaPtr& hp) {
  const WeakBialgebra& h = *hp;
  const Subspace& hl = h.hl();
  const std::size_t k = hl.dim(), nh = h.dim();
  Matrix rho = matrix_of(h.field(), nh * k, k, [&](std::size_t i) {
    return restrict_tensor(h.comul(hl.basis_vector(i)), {nh, nh}, {nullptr, &hl});
  }, Exec::serial);
  return YDModule{hp, k, left_base_action(h), std::move(rho)};
}

YDProduct yd_tensor(const YDModule& m, const YDModule& n) {
  if (m.H != n.H) throw DatumMismatch("YD modules over different weak bialgebras");
  const WeakBialgebra& h = *m.H;
  const Field f = h.field();
  const std::size_t nh = h.dim(), dm = m.dim, dn = n.dim;
  const auto one_terms = nonzero_pairs(h.delta_one(), nh);
  auto proj = [&](std::size_t col) {
    Vec out = zero_vec(f, dm * dn);
    Vec em = unit_vec(f, dm, col / std::max<std::size_t>(dn, 1));
    Vec en = unit_vec(f, dn, col % std::max<std::size_t>(dn, 1));
    for (auto [s, t] : one_terms) {
      axpy(out, h.delta_one()[s * nh + t], kron(m.act(em, h.basis(s)), n.act(en, h.basis(t))));
    }
    return out;
  };
  Subspace carrier = image_of(matrix_of(f, dm * dn, dm * dn, proj, Exec::serial));
  const std::size_t k = carrier.dim();
  Tensor act(f, {k, nh, k});
  Matrix rho(f, nh * k, k);
  std::vector<Term3> one3 = [&] {
    std::vector<Term3> out;
    for (auto [s, t] : one_terms) {
      Vec dt = h.comul(h.basis(t));
      for (auto [t1, t2] : nonzero_pairs(dt, nh)) {
        out.push_back({s, t1, t2, h.delta_one()[s * nh + t] * dt[t1 * nh + t2]});
      }
    }
    return out;
  }();
  for (std::size_t i = 0; i < k; ++i) {
    Vec v = carrier.basis_vector(i);
    for (std::size_t a = 0; a < nh; ++a) {
      Vec out = zero_vec(f, dm * dn);
      Vec da = h.comul(h.basis(a));
      for (auto [x, y] : nonzero_pairs(v, dn)) {
        for (auto [a1, a2] : nonzero_pairs(da, nh)) {
          axpy(out, v[x * dn + y] * da[a1 * nh + a2],
               kron(m.act(unit_vec(f, dm, x), h.basis(a1)), n.act(unit_vec(f, dn, y), h.basis(a2))));
        }
      }
      Vec c = carrier.coordinates(out);
      for (std::size_t j = 0; j < k; ++j) act.at({i, a, j}) = c[j];
    }
    // n_<-1> m_<-1> 1_(1) (x) m_<0>.1_(2) (x) n_<0>.1_(3)
    Vec out = zero_vec(f, nh * dm * dn);
    for (auto [x, y] : nonzero_pairs(v, dn)) {
      Vec rm = m.coact(unit_vec(f, dm, x)), rn = n.coact(unit_vec(f, dn, y));
      for (auto [hm, m0] : nonzero_pairs(rm, dm)) {
        for (auto [hn, n0] : nonzero_pairs(rn, dn)) {
          Vec nm = h.mul(h.basis(hn), h.basis(hm));
          if (is_zero(nm)) continue;
          Scalar w = v[x * dn + y] * rm[hm * dm + m0] * rn[hn * dn + n0];
          for (const Term3& t : one3) {
            Vec left = h.mul(nm, h.basis(t.i));
            if (is_zero(left)) continue;
            axpy(out, w * t.c,
                 kron(left, kron(m.act(unit_vec(f, dm, m0), h.basis(t.j)),
                                 n.act(unit_vec(f, dn, n0), h.basis(t.k)))));
          }
        }
      }
    }
    rho.set_column(i, restrict_tensor(out, {nh, dm * dn}, {nullptr, &carrier}));
  }
  return YDProduct{YDModule{m.H, k, std::move(act), std::move(rho)}, std::move(carrier), dm, dn};
}

Matrix yd_tensor_map(const YDProduct& src, const YDProduct& tgt, const Matrix& t, const Matrix& s) {
  const Matrix ts = t.kron(s);
  const Field f = ts.field();
  return matrix_of(f, tgt.carrier.dim(), src.carrier.dim(), [&](std::size_t i) {
    return tgt.carrier.coordinates(ts.apply(src.carrier.basis_vector(i)));
  }, Exec::serial);
}

namespace {

// Residual of T as an intertwiner, linear in T.
Vec intertwiner_residual(const YDModule& src, const YDModule& tgt, const Matrix& t) {
  const WeakBialgebra& h = *src.H;
  const Field f = h.field();
  const std::size_t nh = h.dim();
  std::vector<Vec> parts;
  const Matrix id_t = Matrix::identity(f, nh).kron(t);
  for (std::size_t i = 0; i < src.dim; ++i) {
    Vec m = unit_vec(f, src.dim, i);
    for (std::size_t a = 0; a < nh; ++a) {
      parts.push_back(sub(t.apply(src.act(m, h.basis(a))), tgt.act(t.apply(m), h.basis(a))));
    }
    parts.push_back(sub(id_t.apply(src.coact(m)), tgt.coact(t.apply(m))));
  }
  return concat(parts);
}

}  // namespace

Report check_yd_morphism(const YDModule& src, const YDModule& tgt, const Matrix& t, Exec exec) {
  const WeakBialgebra& h = *src.H;
  const Field f = h.field();
  Report r("YD morphism");
  r.add(check_identity("intertwines_action", "T(m.a) = T(m).a", {src.dim, h.dim()},
                       [&](const std::vector<std::size_t>& i) {
                         Vec m = unit_vec(f, src.dim, i[0]);
                         return sub(t.apply(src.act(m, h.basis(i[1]))),
                                    tgt.act(t.apply(m), h.basis(i[1])));
                       },
                       exec));
  const Matrix id_t = Matrix::identity(f, h.dim()).kron(t);
  r.add(check_identity("intertwines_coaction", "rho(T m) = (id (x) T) rho(m)", {src.dim},
                       [&](const std::vector<std::size_t>& i) {
                         Vec m = unit_vec(f, src.dim, i[0]);
                         return sub(id_t.apply(src.coact(m)), tgt.coact(t.apply(m)));
                       },
                       exec));
  return r;
}

Subspace yd_morphism_space(const YDModule& src, const YDModule& tgt) {
  const Field f = src.H->field();
  const std::size_t cols = tgt.dim * src.dim;
  const std::size_t rows = src.dim * (src.H->dim() * tgt.dim + src.H->dim() * tgt.dim);
  Matrix sys = matrix_of(f, rows, cols, [&](std::size_t c) {
    return intertwiner_residual(src, tgt, as_matrix(f, tgt.dim, src.dim, unit_vec(f, cols, c)));
  }, Exec::serial);
  return kernel_of(sys);
}

Unitors yd_unitors(const YDModule& m) {
  const WeakBialgebra& h = *m.H;
  const Field f = h.field();
  const std::size_t nh = h.dim(), d = m.dim;
  YDModule unit = yd_unit(m.H);
  YDProduct lp = yd_tensor(unit, m), rp = yd_tensor(m, unit);
  const Subspace& hl = h.hl();
  const auto one_terms = nonzero_pairs(h.delta_one(), nh);
  Matrix left = matrix_of(f, lp.carrier.dim(), d, [&](std::size_t i) {
    Vec out = zero_vec(f, nh * d);
    for (auto [s, t] : one_terms) {
      Vec pl = h.pi_l().column(s);
      axpy(out, h.delta_one()[s * nh + t], kron(h.basis(t), m.act(unit_vec(f, d, i), pl)));
    }
    return lp.carrier.coordinates(restrict_tensor(out, {nh, d}, {&hl, nullptr}));
  }, Exec::serial);
  Matrix right = matrix_of(f, rp.carrier.dim(), d, [&](std::size_t i) {
    Vec out = zero_vec(f, d * nh);
    for (auto [s, t] : one_terms) {
      axpy(out, h.delta_one()[s * nh + t], kron(m.act(unit_vec(f, d, i), h.basis(s)), h.basis(t)));
    }
    return rp.carrier.coordinates(restrict_tensor(out, {d, nh}, {nullptr, &hl}));
  }, Exec::serial);
  return Unitors{std::move(lp), std::move(rp), std::move(left), std::move(right)};
}

Report check_unitors(const YDModule& m, const YDModule& n, Exec exec) {
  const Field f = m.H->field();
  Report r("unitors");
  for (int side = 0; side < 2; ++side) {
    const YDModule* x = side == 0 ? &m : &n;
    const std::string stem = side == 0 ? "first." : "second.";
    Unitors u = yd_unitors(*x);
    for (auto [name, map, prod] : {std::tuple{"left", &u.left, &u.left_product},
                                   std::tuple{"right", &u.right, &u.right_product}}) {
      const std::string id = stem + name;
      r.add(id + ".invertible", "the unitor is invertible",
            map->rows() == map->cols() && rank(*map) == map->rows());
      r.merge(id, check_yd_morphism(*x, prod->module, *map, exec));
    }
    // naturality on the endomorphisms of x
    Subspace ends = yd_morphism_space(*x, *x);
    YDModule unit = yd_unit(x->H);
    bool natural = true;
    for (const Vec& tv : ends.basis_vectors()) {
      Matrix t = as_matrix(f, x->dim, x->dim, tv);
      Matrix id_l = Matrix::identity(f, unit.dim);
      natural = natural &&
                yd_tensor_map(u.left_product, u.left_product, id_l, t) * u.left == u.left * t &&
                yd_tensor_map(u.right_product, u.right_product, t, id_l) * u.right == u.right * t;
    }
    r.add(stem + "natural", "unitors commute with endomorphisms", natural,
          std::to_string(ends.dim()) + " endomorphisms");
  }
  // triangle: u^R_M (x) id_N = id_M (x) u^L_N on M x N, inside M (x) H^L (x) N
  Unitors um = yd_unitors(m), un = yd_unitors(n);
  YDProduct mn = yd_tensor(m, n);
  const Matrix ur = um.right_product.carrier.embedding() * um.right;
  const Matrix ul = un.left_product.carrier.embedding() * un.left;
  const Matrix lhs = ur.kron(Matrix::identity(f, n.dim)) * mn.carrier.embedding();
  const Matrix rhs = Matrix::identity(f, m.dim).kron(ul) * mn.carrier.embedding();
  r.add("triangle", "(u^R_M x id_N) agrees with (id_M x u^L_N) up to the associator", lhs == rhs);
  return r;
}

// ------------------------------------------------------ YD and D(H)-modules

namespace {

Vec yd_ambient_act(const YDModule& md, const Vec& m, const Vec& x, std::size_t n) {
  const Field f = md.H->field();
  Vec out = zero_vec(f, md.dim);
  for (auto [a, p] : nonzero_pairs(x, n)) {
    Vec ma = md.act(m, md.H->basis(a));
    Vec rho = md.coact(ma);
    for (std::size_t j = 0; j < md.dim; ++j) {
      if (!rho[p * md.dim + j].is_zero()) out[j].add_product(x[a * n + p], rho[p * md.dim + j]);
    }
  }
  return out;
}

}  // namespace

RightModule yd_to_double(const YDModule& md, const DrinfeldDouble& d) {
  const Field f = md.H->field();
  const std::size_t k = d.dim(), n = md.H->dim();
  Tensor t(f, {md.dim, k, md.dim});
  for (std::size_t x = 0; x < k; ++x) {
    Vec s = d.section.column(x);
    for (std::size_t i = 0; i < md.dim; ++i) {
      Vec out = yd_ambient_act(md, unit_vec(f, md.dim, i), s, n);
      for (std::size_t j = 0; j < md.dim; ++j) t.at({i, x, j}) = out[j];
    }
  }
  return RightModule{md.dim, std::move(t)};
}

YDModule double_to_yd(const RightModule& nm, const DrinfeldDouble& d) {
  WbaPtr h = wba_of(d.H);
  const Field f = h->field();
  const std::size_t n = h->dim(), dm = nm.dim;
  Bilinear act(nm.action);
  const Vec hat_one = h->coalgebra().counit_vector();
  Tensor t(f, {dm, n, dm});
  Matrix rho(f, n * dm, dm);
  for (std::size_t a = 0; a < n; ++a) {
    Vec da = d.projection.apply(kron(h->basis(a), hat_one));
    Vec dp = d.projection.apply(kron(h->one(), unit_vec(f, n, a)));
    for (std::size_t i = 0; i < dm; ++i) {
      Vec out = act.apply(unit_vec(f, dm, i), da);
      for (std::size_t j = 0; j < dm; ++j) t.at({i, a, j}) = out[j];
      Vec co = act.apply(unit_vec(f, dm, i), dp);
      for (std::size_t j = 0; j < dm; ++j) rho.at(a * dm + j, i) = co[j];
    }
  }
  return YDModule{h, dm, std::move(t), std::move(rho)};
}

Report check_yd_vs_double(const YDModule& md, const DrinfeldDouble& d, Exec exec) {
  const Field f = md.H->field();
  const std::size_t n = md.H->dim();
  Report r("YD modules and D(H)-modules");
  std::vector<Vec> rels = d.relations.basis_vectors();
  r.add(check_identity("well_defined", "relations act by zero", {md.dim, rels.size()},
                       [&](const std::vector<std::size_t>& i) {
                         return yd_ambient_act(md, unit_vec(f, md.dim, i[0]), rels[i[1]], n);
                       },
                       exec));
  RightModule dm = yd_to_double(md, d);
  r.merge("double", check_right_module(d.algebra, dm, exec));
  YDModule back = double_to_yd(dm, d);
  r.add("roundtrip.yd", "YD -> D(H) -> YD is the identity",
        back.action == md.action && back.coaction == md.coaction);
  r.add("roundtrip.double", "D(H) -> YD -> D(H) is the identity",
        same_module(yd_to_double(back, d), dm));
  return r;
}

}  // namespace whk
