#include "whk/hopfcore.hpp"

#include "whk/errors.hpp"
#include "whk/multilinear.hpp"

namespace whk {

namespace {

void require_shape(const Tensor& t, std::size_t n, const char* what) {
  if (t.shape() != std::vector<std::size_t>{n, n, n}) {
    throw ShapeMismatch(std::string(what) + " tensor must have shape [n,n,n]");
  }
}

std::string dual_name(const std::string& s) {
  if (!s.empty() && s.back() == '*') return s.substr(0, s.size() - 1);
  return s + "*";
}

std::vector<std::string> dual_names(const std::vector<std::string>& names) {
  std::vector<std::string> out;
  for (const auto& n : names) out.push_back(dual_name(n));
  return out;
}

std::vector<std::string> product_names(const std::vector<std::string>& a,
                                       const std::vector<std::string>& b) {
  std::vector<std::string> out;
  for (const auto& x : a) {
    for (const auto& y : b) out.push_back(x + "." + y);
  }
  return out;
}

Tensor swap_last_two(const Tensor& t) {
  const std::size_t n = t.shape()[0];
  Tensor s(t.field(), t.shape());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) s.at({i, j, k}) = t.at({i, k, j});
    }
  }
  return s;
}

Tensor swap_first_two(const Tensor& t) {
  const std::size_t n = t.shape()[0];
  Tensor s(t.field(), t.shape());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) s.at({i, j, k}) = t.at({j, i, k});
    }
  }
  return s;
}

Tensor kron3(const Tensor& a, const Tensor& b) {
  const std::size_t n = a.shape()[0], m = b.shape()[0];
  Tensor t(a.field(), {n * m, n * m, n * m});
  for (std::size_t ia = 0; ia < a.size(); ++ia) {
    if (a[ia].is_zero()) continue;
    auto x = a.unflat(ia);
    for (std::size_t ib = 0; ib < b.size(); ++ib) {
      if (b[ib].is_zero()) continue;
      auto y = b.unflat(ib);
      t.at({x[0] * m + y[0], x[1] * m + y[1], x[2] * m + y[2]}) = a[ia] * b[ib];
    }
  }
  return t;
}

Matrix pi_l_of(const Algebra& a, const Coalgebra& c, const Vec& delta_one) {
  const std::size_t n = a.dim();
  return matrix_of(a.field(), n, n, [&](std::size_t j) {
    Vec out = a.zero();
    Vec ej = a.basis(j);
    for (std::size_t idx = 0; idx < delta_one.size(); ++idx) {
      if (delta_one[idx].is_zero()) continue;
      std::size_t x = idx / n, y = idx % n;
      Scalar e = c.counit(a.mul(a.basis(x), ej));
      if (!e.is_zero()) out[y].add_product(delta_one[idx], e);
    }
    return out;
  }, Exec::serial);
}

Matrix pi_r_of(const Algebra& a, const Coalgebra& c, const Vec& delta_one) {
  const std::size_t n = a.dim();
  return matrix_of(a.field(), n, n, [&](std::size_t j) {
    Vec out = a.zero();
    Vec ej = a.basis(j);
    for (std::size_t idx = 0; idx < delta_one.size(); ++idx) {
      if (delta_one[idx].is_zero()) continue;
      std::size_t x = idx / n, y = idx % n;
      Scalar e = c.counit(a.mul(ej, a.basis(y)));
      if (!e.is_zero()) out[x].add_product(delta_one[idx], e);
    }
    return out;
  }, Exec::serial);
}

}  // namespace

std::vector<std::string> default_names(const std::string& stem, std::size_t n) {
  std::vector<std::string> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(stem + std::to_string(i));
  return v;
}

// ---------------------------------------------------------------- Algebra

Algebra::Algebra(Field f, Tensor mult, Vec unit, std::vector<std::string> names)
    : field_(f), dim_(unit.size()), mult_(std::move(mult)), unit_(std::move(unit)),
      names_(std::move(names)) {
  require_shape(mult_, dim_, "multiplication");
  if (mult_.field() != f) throw FieldMismatch("multiplication tensor over another field");
  for (const auto& s : unit_) {
    if (s.field() != f) throw FieldMismatch("unit vector over another field");
  }
  if (names_.empty()) names_ = default_names("e", dim_);
  if (names_.size() != dim_) throw DimMismatch("basis name count differs from dimension");
  table_.resize(dim_ * dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      for (std::size_t k = 0; k < dim_; ++k) {
        const Scalar& s = mult_.at({i, j, k});
        if (!s.is_zero()) table_[i * dim_ + j].emplace_back(k, s);
      }
    }
  }
}

Vec Algebra::mul(const Vec& x, const Vec& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw ShapeMismatch("algebra element length mismatch");
  Vec out = zero();
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      const auto& row = table_[i * dim_ + j];
      if (row.empty()) continue;
      Scalar c = x[i] * y[j];
      for (const auto& [k, s] : row) out[k].add_product(c, s);
    }
  }
  return out;
}

Matrix Algebra::left_mult(const Vec& a) const {
  return matrix_of(field_, dim_, dim_, [&](std::size_t j) { return mul(a, basis(j)); },
                   Exec::serial);
}

Matrix Algebra::right_mult(const Vec& a) const {
  return matrix_of(field_, dim_, dim_, [&](std::size_t j) { return mul(basis(j), a); },
                   Exec::serial);
}

Matrix Algebra::mult_map() const { return mult_.as_matrix(2).transpose(); }

// -------------------------------------------------------------- Coalgebra

Coalgebra::Coalgebra(Field f, Tensor comult, Vec counit, std::vector<std::string> names)
    : field_(f), dim_(counit.size()), comult_(std::move(comult)), counit_(std::move(counit)),
      names_(std::move(names)) {
  require_shape(comult_, dim_, "comultiplication");
  if (comult_.field() != f) throw FieldMismatch("comultiplication tensor over another field");
  if (names_.empty()) names_ = default_names("e", dim_);
  if (names_.size() != dim_) throw DimMismatch("basis name count differs from dimension");
}

Vec Coalgebra::comul(const Vec& x) const {
  if (x.size() != dim_) throw ShapeMismatch("coalgebra element length mismatch");
  Vec out = zero_vec(field_, dim_ * dim_);
  const std::size_t nn = dim_ * dim_;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t jk = 0; jk < nn; ++jk) {
      const Scalar& s = comult_[i * nn + jk];
      if (!s.is_zero()) out[jk].add_product(x[i], s);
    }
  }
  return out;
}

Scalar Coalgebra::counit(const Vec& x) const { return dot(field_, counit_, x); }

Matrix Coalgebra::comult_map() const { return comult_.as_matrix(1).transpose(); }

Matrix Coalgebra::counit_map() const { return Matrix::from_rows(field_, dim_, {counit_}); }

// ----------------------------------------------------------------- checks

Report check_algebra(const Algebra& a, Exec exec) {
  Report r("algebra");
  const std::size_t n = a.dim();
  r.add(check_identity("associativity", "(xy)z = x(yz)", {n, n, n},
                       [&](const std::vector<std::size_t>& i) {
                         Vec x = a.basis(i[0]), y = a.basis(i[1]), z = a.basis(i[2]);
                         return sub(a.mul(a.mul(x, y), z), a.mul(x, a.mul(y, z)));
                       },
                       exec));
  r.add(check_identity("unit_law", "1x = x = x1", {n},
                       [&](const std::vector<std::size_t>& i) {
                         Vec x = a.basis(i[0]);
                         return concat({sub(a.mul(a.unit(), x), x), sub(a.mul(x, a.unit()), x)});
                       },
                       exec));
  return r;
}

Report check_coalgebra(const Coalgebra& c, Exec exec) {
  Report r("coalgebra");
  const std::size_t n = c.dim();
  const Matrix delta = c.comult_map();
  const Matrix eps = c.counit_map();
  r.add(check_identity("coassociativity", "(Delta x id)Delta = (id x Delta)Delta", {n},
                       [&](const std::vector<std::size_t>& i) {
                         Vec d = c.comul(c.basis(i[0]));
                         return sub(apply_factor(d, {n, n}, 0, delta),
                                    apply_factor(d, {n, n}, 1, delta));
                       },
                       exec));
  r.add(check_identity("counit_law", "(eps x id)Delta = id = (id x eps)Delta", {n},
                       [&](const std::vector<std::size_t>& i) {
                         Vec x = c.basis(i[0]);
                         Vec d = c.comul(x);
                         return concat({sub(apply_factor(d, {n, n}, 0, eps), x),
                                        sub(apply_factor(d, {n, n}, 1, eps), x)});
                       },
                       exec));
  return r;
}

Vec tensor_mul(const std::vector<const Algebra*>& algebras, const Vec& x, const Vec& y) {
  Dims dims;
  for (const auto* a : algebras) dims.push_back(a->dim());
  const std::size_t total = total_dim(dims);
  if (x.size() != total || y.size() != total) throw ShapeMismatch("tensor algebra element size");
  if (algebras.empty()) return x;
  const std::size_t k = algebras.size();
  Vec out = zero_vec(algebras.front()->field(), total);
  std::vector<std::size_t> xs, ys;
  for (std::size_t i = 0; i < total; ++i) {
    if (!x[i].is_zero()) xs.push_back(i);
    if (!y[i].is_zero()) ys.push_back(i);
  }
  // Expand factor by factor, dropping a pair as soon as one factor product vanishes.
  std::vector<std::pair<std::size_t, Scalar>> acc, next;
  for (std::size_t i : xs) {
    const auto xi = unflatten(i, dims);
    for (std::size_t j : ys) {
      const auto yj = unflatten(j, dims);
      acc.assign(1, {0, x[i] * y[j]});
      for (std::size_t f = 0; f < k && !acc.empty(); ++f) {
        const auto& terms = algebras[f]->product_terms(xi[f], yj[f]);
        next.clear();
        for (const auto& [idx, c] : acc) {
          for (const auto& [t, s] : terms) next.emplace_back(idx * dims[f] + t, c * s);
        }
        acc.swap(next);
      }
      for (const auto& [idx, c] : acc) out[idx] += c;
    }
  }
  return out;
}

Algebra dual_algebra(const Coalgebra& c) {
  const std::size_t n = c.dim();
  Tensor m(c.field(), {n, n, n});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) m.at({i, j, k}) = c.comult().at({k, i, j});
    }
  }
  return Algebra(c.field(), std::move(m), c.counit_vector(), dual_names(c.names()));
}

Coalgebra dual_coalgebra(const Algebra& a) {
  const std::size_t n = a.dim();
  Tensor d(a.field(), {n, n, n});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) d.at({i, j, k}) = a.mult().at({j, k, i});
    }
  }
  return Coalgebra(a.field(), std::move(d), a.unit(), dual_names(a.names()));
}

Report check_algebra_map(const Algebra& src, const Algebra& dst, const Matrix& f, Exec exec) {
  if (f.rows() != dst.dim() || f.cols() != src.dim()) throw ShapeMismatch("algebra map shape");
  Report r("algebra map");
  r.add(check_identity("unital", "f(1) = 1", {},
                       [&](const std::vector<std::size_t>&) {
                         return sub(f.apply(src.unit()), dst.unit());
                       },
                       exec));
  const std::size_t n = src.dim();
  r.add(check_identity("multiplicative", "f(xy) = f(x)f(y)", {n, n},
                       [&](const std::vector<std::size_t>& i) {
                         Vec x = src.basis(i[0]), y = src.basis(i[1]);
                         return sub(f.apply(src.mul(x, y)), dst.mul(f.apply(x), f.apply(y)));
                       },
                       exec));
  return r;
}

Report check_wba(const Algebra& a, const Coalgebra& c, Exec exec) {
  if (a.field() != c.field()) throw FieldMismatch("algebra and coalgebra over different fields");
  if (a.dim() != c.dim()) throw DimMismatch("algebra and coalgebra dimensions differ");
  Report r("weak bialgebra");
  r.merge("", check_algebra(a, exec));
  r.merge("", check_coalgebra(c, exec));
  const std::size_t n = a.dim();

  r.add(check_identity("multiplicative_comult", "Delta(xy) = Delta(x)Delta(y)", {n, n},
                       [&](const std::vector<std::size_t>& i) {
                         Vec x = a.basis(i[0]), y = a.basis(i[1]);
                         return sub(c.comul(a.mul(x, y)),
                                    tensor_mul({&a, &a}, c.comul(x), c.comul(y)));
                       },
                       exec));

  const Vec d1 = c.comul(a.unit());
  const Matrix delta = c.comult_map();
  // (x (x) y (x) 1)(1 (x) z (x) w) = x (x) yz (x) w, so both products reduce to
  // a single multiplication in the middle factor.
  auto middle = [&](bool swap) {
    Vec out = zero_vec(a.field(), n * n * n);
    for (std::size_t p = 0; p < d1.size(); ++p) {
      if (d1[p].is_zero()) continue;
      for (std::size_t q = 0; q < d1.size(); ++q) {
        if (d1[q].is_zero()) continue;
        const std::size_t x = p / n, y = p % n, z = q / n, w = q % n;
        const auto& terms = swap ? a.product_terms(z, y) : a.product_terms(y, z);
        for (const auto& [m, s] : terms) out[(x * n + m) * n + w] += d1[p] * d1[q] * s;
      }
    }
    return out;
  };
  r.add(check_identity("weak_unit_law.first",
                       "(Delta x id)Delta(1) = (Delta(1) x 1)(1 x Delta(1))", {},
                       [&](const std::vector<std::size_t>&) {
                         return sub(apply_factor(d1, {n, n}, 0, delta), middle(false));
                       },
                       exec));
  r.add(check_identity("weak_unit_law.second",
                       "(Delta x id)Delta(1) = (1 x Delta(1))(Delta(1) x 1)", {},
                       [&](const std::vector<std::size_t>&) {
                         return sub(apply_factor(d1, {n, n}, 0, delta), middle(true));
                       },
                       exec));

  // eps_pair[i][j] = eps(e_i e_j)
  std::vector<Scalar> eps_pair;
  eps_pair.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) eps_pair.push_back(c.counit(a.mul(a.basis(i), a.basis(j))));
  }
  Field f = a.field();
  r.add(check_identity("weak_counit_law",
                       "eps(xyz) = eps(xy_(1))eps(y_(2)z) = eps(xy_(2))eps(y_(1)z)", {n, n, n},
                       [&](const std::vector<std::size_t>& i) {
                         const std::size_t x = i[0], y = i[1], z = i[2];
                         Scalar lhs = c.counit(a.mul(a.mul(a.basis(x), a.basis(y)), a.basis(z)));
                         Scalar first = f.zero(), second = f.zero();
                         for (std::size_t j = 0; j < n; ++j) {
                           for (std::size_t k = 0; k < n; ++k) {
                             const Scalar& cf = c.comult().at({y, j, k});
                             if (cf.is_zero()) continue;
                             first.add_product(cf, eps_pair[x * n + j] * eps_pair[k * n + z]);
                             second.add_product(cf, eps_pair[x * n + k] * eps_pair[j * n + z]);
                           }
                         }
                         return Vec{lhs - first, lhs - second};
                       },
                       exec));

  bool strict = true;
  for (std::size_t i = 0; i < n && strict; ++i) {
    for (std::size_t j = 0; j < n && strict; ++j) {
      if (eps_pair[i * n + j] != c.counit(a.basis(i)) * c.counit(a.basis(j))) strict = false;
    }
  }
  r.note("counit_multiplicative", strict ? "true" : "false");
  r.note("weak", strict ? "false" : "true");
  return r;
}

// ---------------------------------------------------------- WeakBialgebra

WeakBialgebra::WeakBialgebra(Algebra a, Coalgebra c)
    : algebra_(std::move(a)), coalgebra_(std::move(c)),
      delta_one_(coalgebra_.comul(algebra_.unit())),
      pi_l_(pi_l_of(algebra_, coalgebra_, delta_one_)),
      pi_r_(pi_r_of(algebra_, coalgebra_, delta_one_)), hl_(image_of(pi_l_)),
      hr_(image_of(pi_r_)) {
  const std::size_t n = algebra_.dim();
  counit_multiplicative_ = true;
  for (std::size_t i = 0; i < n && counit_multiplicative_; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Vec x = algebra_.basis(i), y = algebra_.basis(j);
      if (coalgebra_.counit(algebra_.mul(x, y)) != coalgebra_.counit(x) * coalgebra_.counit(y)) {
        counit_multiplicative_ = false;
        break;
      }
    }
  }
}

WeakBialgebra WeakBialgebra::make(Algebra a, Coalgebra c, Exec exec) {
  Report r = check_wba(a, c, exec);
  if (!r.passed()) throw AxiomFailure(std::move(r));
  return WeakBialgebra(std::move(a), std::move(c));
}

std::pair<Matrix, Matrix> projections(const WeakBialgebra& h) { return {h.pi_l(), h.pi_r()}; }

Report check_wha(const WeakBialgebra& h, const Matrix& s, Exec exec) {
  const std::size_t n = h.dim();
  if (s.rows() != n || s.cols() != n) throw ShapeMismatch("antipode must be an n x n matrix");
  if (s.field() != h.field()) throw FieldMismatch("antipode over another field");
  Report r("weak Hopf algebra");
  const Algebra& a = h.algebra();
  const Matrix delta = h.coalgebra().comult_map();
  std::vector<Vec> s_col(n);
  for (std::size_t k = 0; k < n; ++k) s_col[k] = s.column(k);

  r.add(check_identity("antipode_left", "h_(1) S(h_(2)) = Pi^L(h)", {n},
                       [&](const std::vector<std::size_t>& i) {
                         Vec d = h.comul(h.basis(i[0]));
                         Vec acc = h.zero();
                         for (std::size_t jk = 0; jk < d.size(); ++jk) {
                           if (d[jk].is_zero()) continue;
                           axpy(acc, d[jk], a.mul(h.basis(jk / n), s_col[jk % n]));
                         }
                         return sub(acc, h.pi_l().column(i[0]));
                       },
                       exec));
  r.add(check_identity("antipode_right", "S(h_(1)) h_(2) = Pi^R(h)", {n},
                       [&](const std::vector<std::size_t>& i) {
                         Vec d = h.comul(h.basis(i[0]));
                         Vec acc = h.zero();
                         for (std::size_t jk = 0; jk < d.size(); ++jk) {
                           if (d[jk].is_zero()) continue;
                           axpy(acc, d[jk], a.mul(s_col[jk / n], h.basis(jk % n)));
                         }
                         return sub(acc, h.pi_r().column(i[0]));
                       },
                       exec));
  r.add(check_identity("antipode_sandwich", "S(h_(1)) h_(2) S(h_(3)) = S(h)", {n},
                       [&](const std::vector<std::size_t>& i) {
                         Vec d3 = apply_factor(h.comul(h.basis(i[0])), {n, n}, 0, delta);
                         Vec acc = h.zero();
                         for (std::size_t t = 0; t < d3.size(); ++t) {
                           if (d3[t].is_zero()) continue;
                           std::size_t x = t / (n * n), y = (t / n) % n, z = t % n;
                           axpy(acc, d3[t], a.mul(a.mul(s_col[x], h.basis(y)), s_col[z]));
                         }
                         return sub(acc, s_col[i[0]]);
                       },
                       exec));
  r.add(check_identity("antipode_anti_multiplicative", "S(xy) = S(y)S(x)", {n, n},
                       [&](const std::vector<std::size_t>& i) {
                         Vec xy = a.mul(h.basis(i[0]), h.basis(i[1]));
                         return sub(s.apply(xy), a.mul(s_col[i[1]], s_col[i[0]]));
                       },
                       exec));
  const Matrix s_kron = s.kron(s);
  r.add(check_identity("antipode_anti_comultiplicative", "Delta(S(h)) = S(h_(2)) x S(h_(1))",
                       {n},
                       [&](const std::vector<std::size_t>& i) {
                         Vec d = h.comul(h.basis(i[0]));
                         Vec flipped = permute_factors(s_kron.apply(d), {n, n}, {1, 0});
                         return sub(h.comul(s_col[i[0]]), flipped);
                       },
                       exec));
  r.note("antipode_invertible", rank(s) == n ? "true" : "false");
  return r;
}

WeakHopfAlgebra::WeakHopfAlgebra(WeakBialgebra h, Matrix s)
    : wba_(std::move(h)), antipode_(std::move(s)) {
  if (rank(antipode_) == antipode_.rows()) antipode_inverse_ = inverse(antipode_);
}

WeakHopfAlgebra WeakHopfAlgebra::make(WeakBialgebra h, Matrix antipode, Exec exec) {
  Report r = check_wha(h, antipode, exec);
  if (!r.passed()) throw AxiomFailure(std::move(r));
  return WeakHopfAlgebra(std::move(h), std::move(antipode));
}

const Matrix& WeakHopfAlgebra::antipode_inverse() const {
  if (!antipode_inverse_) throw AntipodeNotInvertible("antipode is singular");
  return *antipode_inverse_;
}

// ------------------------------------------------------- constructions

WeakBialgebra dual(const WeakBialgebra& h) {
  return WeakBialgebra::make(dual_algebra(h.coalgebra()), dual_coalgebra(h.algebra()));
}

WeakHopfAlgebra dual(const WeakHopfAlgebra& h) {
  return WeakHopfAlgebra::make(dual(h.wba()), h.antipode().transpose());
}

Algebra opposite_algebra(const Algebra& a) {
  return Algebra(a.field(), swap_first_two(a.mult()), a.unit(), a.names());
}

WeakBialgebra opposite(const WeakBialgebra& h) {
  return WeakBialgebra::make(opposite_algebra(h.algebra()), h.coalgebra());
}

WeakBialgebra coopposite(const WeakBialgebra& h) {
  const Coalgebra& c = h.coalgebra();
  return WeakBialgebra::make(
      h.algebra(), Coalgebra(c.field(), swap_last_two(c.comult()), c.counit_vector(), c.names()));
}

WeakBialgebra opposite_coopposite(const WeakBialgebra& h) { return coopposite(opposite(h)); }

Variants op_cop_variants(const WeakHopfAlgebra& h) {
  const Matrix& sinv = h.antipode_inverse();
  return Variants{WeakHopfAlgebra::make(opposite(h.wba()), sinv),
                  WeakHopfAlgebra::make(coopposite(h.wba()), sinv),
                  WeakHopfAlgebra::make(opposite_coopposite(h.wba()), h.antipode())};
}

WeakBialgebra tensor_product(const WeakBialgebra& a, const WeakBialgebra& b) {
  if (a.field() != b.field()) throw FieldMismatch("tensor product across fields");
  auto names = product_names(a.names(), b.names());
  Algebra alg(a.field(), kron3(a.algebra().mult(), b.algebra().mult()), kron(a.one(), b.one()),
              names);
  Coalgebra coalg(a.field(), kron3(a.coalgebra().comult(), b.coalgebra().comult()),
                  kron(a.coalgebra().counit_vector(), b.coalgebra().counit_vector()), names);
  return WeakBialgebra::make(std::move(alg), std::move(coalg));
}

WeakHopfAlgebra tensor_product(const WeakHopfAlgebra& a, const WeakHopfAlgebra& b) {
  return WeakHopfAlgebra::make(tensor_product(a.wba(), b.wba()), a.antipode().kron(b.antipode()));
}

Vec arrow_left(const Coalgebra& c, const Vec& phi, const Vec& y) {
  const std::size_t n = c.dim();
  Vec d = c.comul(y);
  Vec out = zero_vec(c.field(), n);
  for (std::size_t jk = 0; jk < d.size(); ++jk) {
    if (d[jk].is_zero() || phi[jk % n].is_zero()) continue;
    out[jk / n].add_product(d[jk], phi[jk % n]);
  }
  return out;
}

Vec arrow_right(const Coalgebra& c, const Vec& y, const Vec& phi) {
  const std::size_t n = c.dim();
  Vec d = c.comul(y);
  Vec out = zero_vec(c.field(), n);
  for (std::size_t jk = 0; jk < d.size(); ++jk) {
    if (d[jk].is_zero() || phi[jk / n].is_zero()) continue;
    out[jk % n].add_product(d[jk], phi[jk / n]);
  }
  return out;
}

Algebra permute_basis(const Algebra& a, const std::vector<std::size_t>& perm) {
  const std::size_t n = a.dim();
  if (perm.size() != n) throw DimMismatch("permutation length");
  Tensor m(a.field(), {n, n, n});
  Vec unit = a.zero();
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) {
    unit[i] = a.unit()[perm[i]];
    names[i] = a.names()[perm[i]];
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) m.at({i, j, k}) = a.mult().at({perm[i], perm[j], perm[k]});
    }
  }
  return Algebra(a.field(), std::move(m), std::move(unit), std::move(names));
}

Coalgebra permute_basis(const Coalgebra& c, const std::vector<std::size_t>& perm) {
  const std::size_t n = c.dim();
  if (perm.size() != n) throw DimMismatch("permutation length");
  Tensor d(c.field(), {n, n, n});
  Vec counit = zero_vec(c.field(), n);
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) {
    counit[i] = c.counit_vector()[perm[i]];
    names[i] = c.names()[perm[i]];
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        d.at({i, j, k}) = c.comult().at({perm[i], perm[j], perm[k]});
      }
    }
  }
  return Coalgebra(c.field(), std::move(d), std::move(counit), std::move(names));
}

Subspace commutant(const Algebra& a, const Subspace& inside, const std::vector<Vec>& elements) {
  const std::size_t n = a.dim();
  const std::size_t d = inside.dim();
  if (inside.ambient_dim() != n) throw DimMismatch("commutant subspace lives elsewhere");
  std::vector<Matrix> blocks;
  for (const auto& x : elements) {
    blocks.push_back(matrix_of(a.field(), n, d, [&](std::size_t c) {
      Vec z = inside.basis_vector(c);
      return sub(a.mul(z, x), a.mul(x, z));
    }, Exec::serial));
  }
  if (blocks.empty()) return inside;
  Subspace k = kernel_of(vstack(a.field(), d, blocks));
  std::vector<Vec> vecs;
  for (std::size_t i = 0; i < k.dim(); ++i) vecs.push_back(inside.from_coordinates(k.basis_vector(i)));
  return Subspace::span(a.field(), n, vecs);
}

Subspace center(const Algebra& a) {
  std::vector<Vec> basis;
  for (std::size_t i = 0; i < a.dim(); ++i) basis.push_back(a.basis(i));
  return commutant(a, Subspace::full(a.field(), a.dim()), basis);
}

}  // namespace whk
