#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "whk/linalg.hpp"
#include "whk/parallel.hpp"

namespace whk {

/// Dense multi-dimensional array of scalars in row-major order.
class Tensor {
 public:
  Tensor(Field f, std::vector<std::size_t> shape);
  Tensor(Field f, std::vector<std::size_t> shape, Vec entries);

  Field field() const { return field_; }
  const std::vector<std::size_t>& shape() const { return shape_; }
  std::size_t rank() const { return shape_.size(); }
  std::size_t size() const { return data_.size(); }

  Scalar& at(std::initializer_list<std::size_t> idx) { return data_[flat(idx)]; }
  const Scalar& at(std::initializer_list<std::size_t> idx) const { return data_[flat(idx)]; }
  Scalar& operator[](std::size_t i) { return data_[i]; }
  const Scalar& operator[](std::size_t i) const { return data_[i]; }

  std::size_t flat(std::initializer_list<std::size_t> idx) const;
  std::size_t flat(const std::vector<std::size_t>& idx) const;
  std::vector<std::size_t> unflat(std::size_t i) const;

  const Vec& entries() const { return data_; }
  Matrix as_matrix(std::size_t row_axes) const;

  friend bool operator==(const Tensor& a, const Tensor& b);
  friend bool operator!=(const Tensor& a, const Tensor& b) { return !(a == b); }

 private:
  Field field_;
  std::vector<std::size_t> shape_;
  Vec data_;
};

using AxisPairs = std::vector<std::pair<std::size_t, std::size_t>>;

/// Contraction over the paired axes (axis of t, axis of u). The result's axes
/// are the free axes of t followed by the free axes of u.
Tensor contract(const Tensor& t, const Tensor& u, const AxisPairs& axes,
                Exec exec = Exec::parallel);

/// Brute-force oracle for contract: visits every pair of entries.
Tensor contract_reference(const Tensor& t, const Tensor& u, const AxisPairs& axes);

std::vector<std::size_t> unflatten(std::size_t i, const std::vector<std::size_t>& dims);

}  // namespace whk

namespace whk {

/// Sparse evaluator for a bilinear map given by a tensor t[i][j][k]:
/// (x, y) -> sum x_i y_j t[i][j][k] e_k.
class Bilinear {
 public:
  explicit Bilinear(const Tensor& t);
  Vec apply(const Vec& x, const Vec& y) const;
  /// Image of a pair of basis vectors as a sparse list.
  const std::vector<std::pair<std::size_t, Scalar>>& basis_pair(std::size_t i, std::size_t j) const {
    return table_[i * d1_ + j];
  }
  std::size_t dim_out() const { return d2_; }

 private:
  Field field_;
  std::size_t d0_, d1_, d2_;
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> table_;
};

}  // namespace whk
