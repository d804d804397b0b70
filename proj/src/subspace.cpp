#include "whk/subspace.hpp"

#include "whk/errors.hpp"

namespace whk {

Subspace Subspace::zero(Field f, std::size_t ambient) { return Subspace(Matrix(f, 0, ambient), {}); }

Subspace Subspace::full(Field f, std::size_t ambient) {
  std::vector<std::size_t> piv(ambient);
  for (std::size_t i = 0; i < ambient; ++i) piv[i] = i;
  return Subspace(Matrix::identity(f, ambient), std::move(piv));
}

Subspace Subspace::span(Field f, std::size_t ambient, const std::vector<Vec>& vectors) {
  Matrix m(f, vectors.size(), ambient);
  for (std::size_t r = 0; r < vectors.size(); ++r) m.set_row(r, vectors[r]);
  return row_space(m);
}

Subspace Subspace::row_space(const Matrix& m) {
  Echelon e = rref(m);
  Matrix basis(m.field(), e.pivots.size(), m.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) basis.set_row(r, e.reduced.row(r));
  return Subspace(std::move(basis), std::move(e.pivots));
}

std::vector<Vec> Subspace::basis_vectors() const {
  std::vector<Vec> v;
  for (std::size_t i = 0; i < dim(); ++i) v.push_back(basis_.row(i));
  return v;
}

Vec Subspace::from_coordinates(const Vec& coords) const {
  if (coords.size() != dim()) throw ShapeMismatch("subspace coordinate length mismatch");
  Vec v = zero_vec(field(), ambient_dim());
  for (std::size_t r = 0; r < dim(); ++r) {
    if (coords[r].is_zero()) continue;
    for (std::size_t c = pivots_[r]; c < ambient_dim(); ++c) {
      if (!basis_.at(r, c).is_zero()) v[c].add_product(coords[r], basis_.at(r, c));
    }
  }
  return v;
}

bool Subspace::contains(const Vec& v) const {
  if (v.size() != ambient_dim()) throw ShapeMismatch("vector outside ambient space");
  Vec coords;
  coords.reserve(dim());
  for (auto p : pivots_) coords.push_back(v[p]);
  return from_coordinates(coords) == v;
}

Vec Subspace::coordinates(const Vec& v) const {
  if (v.size() != ambient_dim()) throw ShapeMismatch("vector outside ambient space");
  Vec coords;
  coords.reserve(dim());
  for (auto p : pivots_) coords.push_back(v[p]);
  if (from_coordinates(coords) != v) throw NotInvariant("vector is not in the subspace");
  return coords;
}

Matrix Subspace::embedding() const { return basis_.transpose(); }

Matrix Subspace::coordinate_map() const {
  Matrix m(field(), dim(), ambient_dim());
  for (std::size_t r = 0; r < dim(); ++r) m.at(r, pivots_[r]) = field().one();
  return m;
}

bool Subspace::is_subspace_of(const Subspace& other) const {
  for (std::size_t r = 0; r < dim(); ++r) {
    if (!other.contains(basis_.row(r))) return false;
  }
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.ambient_dim() != ambient_dim()) throw DimMismatch("subspace sum ambient mismatch");
  auto v = basis_vectors();
  auto w = other.basis_vectors();
  v.insert(v.end(), w.begin(), w.end());
  return span(field(), ambient_dim(), v);
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_dim() != ambient_dim()) {
    throw DimMismatch("subspace intersection ambient mismatch");
  }
  // x = U a = W b  <=>  [U | -W] (a, b) = 0
  const std::size_t d1 = dim(), d2 = other.dim(), n = ambient_dim();
  Matrix m(field(), n, d1 + d2);
  for (std::size_t c = 0; c < d1; ++c) {
    for (std::size_t r = 0; r < n; ++r) m.at(r, c) = basis_.at(c, r);
  }
  for (std::size_t c = 0; c < d2; ++c) {
    for (std::size_t r = 0; r < n; ++r) m.at(r, d1 + c) = -other.basis_.at(c, r);
  }
  Subspace k = kernel_of(m);
  std::vector<Vec> vecs;
  for (std::size_t i = 0; i < k.dim(); ++i) {
    Vec ab = k.basis_vector(i);
    vecs.push_back(from_coordinates(Vec(ab.begin(), ab.begin() + static_cast<std::ptrdiff_t>(d1))));
  }
  return span(field(), n, vecs);
}

Subspace kernel_of(const Matrix& f) {
  Echelon e = rref(f);
  const std::size_t n = f.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec v = unit_vec(f.field(), n, free);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced.at(r, free);
    basis.push_back(std::move(v));
  }
  return Subspace::span(f.field(), n, basis);
}

Subspace image_of(const Matrix& f) { return Subspace::row_space(f.transpose()); }

Quotient quotient(std::size_t ambient_dim, const Subspace& relations) {
  if (relations.ambient_dim() != ambient_dim) throw DimMismatch("relations live in another space");
  Field f = relations.field();
  std::vector<bool> is_pivot(ambient_dim, false);
  for (auto p : relations.pivots()) is_pivot[p] = true;
  std::vector<std::size_t> reps;
  std::vector<std::size_t> position(ambient_dim, 0);
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    if (!is_pivot[i]) {
      position[i] = reps.size();
      reps.push_back(i);
    }
  }
  const std::size_t q = reps.size();
  Matrix proj(f, q, ambient_dim);
  Matrix sec(f, ambient_dim, q);
  for (std::size_t k = 0; k < q; ++k) {
    proj.at(k, reps[k]) = f.one();
    sec.at(reps[k], k) = f.one();
  }
  // e_pivot = (e_pivot - row) + row, and e_pivot - row only involves non-pivots.
  const Matrix& b = relations.basis();
  for (std::size_t r = 0; r < relations.dim(); ++r) {
    std::size_t p = relations.pivots()[r];
    for (std::size_t c = 0; c < ambient_dim; ++c) {
      if (c == p || b.at(r, c).is_zero()) continue;
      proj.at(position[c], p) = -b.at(r, c);
    }
  }
  return {std::move(proj), std::move(sec), std::move(reps)};
}

std::optional<AffineSolution> try_solve_linear_system(const std::vector<Matrix>& constraints,
                                                      const std::vector<Vec>& rhs) {
  if (constraints.size() != rhs.size()) throw DimMismatch("constraint and rhs count differ");
  if (constraints.empty()) throw DimMismatch("empty linear system");
  Field f = constraints.front().field();
  const std::size_t n = constraints.front().cols();
  std::size_t rows = 0;
  for (std::size_t k = 0; k < constraints.size(); ++k) {
    if (constraints[k].cols() != n) throw DimMismatch("constraints disagree on unknown count");
    if (constraints[k].rows() != rhs[k].size()) throw DimMismatch("rhs length mismatch");
    rows += constraints[k].rows();
  }
  Matrix aug(f, rows, n + 1);
  std::size_t r0 = 0;
  for (std::size_t k = 0; k < constraints.size(); ++k) {
    for (std::size_t r = 0; r < constraints[k].rows(); ++r) {
      for (std::size_t c = 0; c < n; ++c) aug.at(r0 + r, c) = constraints[k].at(r, c);
      aug.at(r0 + r, n) = rhs[k][r];
    }
    r0 += constraints[k].rows();
  }
  Echelon e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == n) return std::nullopt;
  Vec particular = zero_vec(f, n);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) particular[e.pivots[r]] = e.reduced.at(r, n);

  Matrix homog(f, rows, n);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < n; ++c) homog.at(r, c) = aug.at(r, c);
  }
  for (std::size_t k = 0; k < constraints.size(); ++k) {
    if (constraints[k].apply(particular) != rhs[k]) {
      throw Error("linear solver self-check failed on particular solution");
    }
  }
  return AffineSolution{std::move(particular), kernel_of(homog)};
}

AffineSolution solve_linear_system(const std::vector<Matrix>& constraints,
                                   const std::vector<Vec>& rhs) {
  auto s = try_solve_linear_system(constraints, rhs);
  if (!s) throw InconsistentSystem("linear system has no solution");
  return std::move(*s);
}

}  // namespace whk
