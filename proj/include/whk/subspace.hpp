#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "whk/linalg.hpp"

namespace whk {

/// A linear subspace of k^n stored as a basis in reduced row echelon form.
/// The form is canonical, so equal subspaces have identical bases.
class Subspace {
 public:
  static Subspace zero(Field f, std::size_t ambient);
  static Subspace full(Field f, std::size_t ambient);
  static Subspace span(Field f, std::size_t ambient, const std::vector<Vec>& vectors);
  static Subspace row_space(const Matrix& m);

  Field field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Vec basis_vector(std::size_t i) const { return basis_.row(i); }
  std::vector<Vec> basis_vectors() const;

  bool contains(const Vec& v) const;
  /// Coordinates of v in the echelon basis (read off at the pivots).
  /// Throws NotInvariant when v lies outside the subspace.
  Vec coordinates(const Vec& v) const;
  Vec from_coordinates(const Vec& coords) const;
  /// Matrix of the inclusion k^dim -> k^ambient.
  Matrix embedding() const;
  /// Matrix of the pivot read-off k^ambient -> k^dim; a left inverse of embedding().
  Matrix coordinate_map() const;

  bool is_subspace_of(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  Subspace sum(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  Subspace(Matrix basis, std::vector<std::size_t> pivots)
      : basis_(std::move(basis)), pivots_(std::move(pivots)) {}
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace kernel_of(const Matrix& f);
Subspace image_of(const Matrix& f);

/// Quotient of k^n by a subspace. The quotient basis is the set of non-pivot
/// coordinates of the relation echelon form.
struct Quotient {
  Matrix projection;  ///< n -> n - dim(relations)
  Matrix section;     ///< right inverse of projection
  std::vector<std::size_t> representatives;  ///< ambient indices of quotient basis vectors
};

Quotient quotient(std::size_t ambient_dim, const Subspace& relations);

/// Solution set {particular + homogeneous} of a stacked linear system.
struct AffineSolution {
  Vec particular;
  Subspace homogeneous;
};

/// Solves C_k x = b_k for all k simultaneously. Throws InconsistentSystem when
/// no solution exists. The returned particular solution is re-substituted.
AffineSolution solve_linear_system(const std::vector<Matrix>& constraints,
                                   const std::vector<Vec>& rhs);
std::optional<AffineSolution> try_solve_linear_system(const std::vector<Matrix>& constraints,
                                                      const std::vector<Vec>& rhs);

}  // namespace whk
