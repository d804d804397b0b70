#include "whk/tensor.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "whk/errors.hpp"

namespace whk {

namespace {

std::size_t product(const std::vector<std::size_t>& dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

std::vector<std::size_t> strides_of(const std::vector<std::size_t>& shape) {
  std::vector<std::size_t> s(shape.size(), 1);
  for (std::size_t k = shape.size(); k-- > 1;) s[k - 1] = s[k] * shape[k];
  return s;
}

struct ContractionPlan {
  std::vector<std::size_t> free_t, free_u;
  std::vector<std::size_t> out_shape;
  std::vector<std::size_t> sum_shape;
};

ContractionPlan plan(const Tensor& t, const Tensor& u, const AxisPairs& axes) {
  if (t.field() != u.field()) throw FieldMismatch("contract across fields");
  std::vector<bool> used_t(t.rank(), false), used_u(u.rank(), false);
  ContractionPlan p;
  for (auto [a, b] : axes) {
    if (a >= t.rank() || b >= u.rank()) throw ShapeMismatch("contraction axis out of range");
    if (used_t[a] || used_u[b]) throw ShapeMismatch("contraction axis used twice");
    if (t.shape()[a] != u.shape()[b]) {
      throw ShapeMismatch("paired axes differ: " + std::to_string(t.shape()[a]) + " vs " +
                          std::to_string(u.shape()[b]));
    }
    used_t[a] = used_u[b] = true;
    p.sum_shape.push_back(t.shape()[a]);
  }
  for (std::size_t k = 0; k < t.rank(); ++k) {
    if (!used_t[k]) {
      p.free_t.push_back(k);
      p.out_shape.push_back(t.shape()[k]);
    }
  }
  for (std::size_t k = 0; k < u.rank(); ++k) {
    if (!used_u[k]) {
      p.free_u.push_back(k);
      p.out_shape.push_back(u.shape()[k]);
    }
  }
  return p;
}

}  // namespace

std::vector<std::size_t> unflatten(std::size_t i, const std::vector<std::size_t>& dims) {
  std::vector<std::size_t> idx(dims.size(), 0);
  for (std::size_t k = dims.size(); k-- > 0;) {
    idx[k] = i % dims[k];
    i /= dims[k];
  }
  return idx;
}

Tensor::Tensor(Field f, std::vector<std::size_t> shape)
    : field_(f), shape_(std::move(shape)), data_(product(shape_), f.zero()) {}

Tensor::Tensor(Field f, std::vector<std::size_t> shape, Vec entries)
    : field_(f), shape_(std::move(shape)), data_(std::move(entries)) {
  if (data_.size() != product(shape_)) throw ShapeMismatch("tensor entry count mismatch");
  for (const auto& s : data_) {
    if (s.field() != f) throw FieldMismatch("tensor entries from another field");
  }
}

std::size_t Tensor::flat(std::initializer_list<std::size_t> idx) const {
  return flat(std::vector<std::size_t>(idx));
}

std::size_t Tensor::flat(const std::vector<std::size_t>& idx) const {
  if (idx.size() != shape_.size()) throw ShapeMismatch("tensor index rank mismatch");
  std::size_t i = 0;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (idx[k] >= shape_[k]) throw ShapeMismatch("tensor index out of range");
    i = i * shape_[k] + idx[k];
  }
  return i;
}

std::vector<std::size_t> Tensor::unflat(std::size_t i) const { return unflatten(i, shape_); }

Matrix Tensor::as_matrix(std::size_t row_axes) const {
  if (row_axes > shape_.size()) throw ShapeMismatch("as_matrix axis split out of range");
  std::size_t rows = 1;
  for (std::size_t k = 0; k < row_axes; ++k) rows *= shape_[k];
  std::size_t cols = data_.size() / std::max<std::size_t>(rows, 1);
  Matrix m(field_, rows, rows == 0 ? 0 : cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = data_[r * cols + c];
  }
  return m;
}

bool operator==(const Tensor& a, const Tensor& b) {
  return a.field_ == b.field_ && a.shape_ == b.shape_ && a.data_ == b.data_;
}

Tensor contract(const Tensor& t, const Tensor& u, const AxisPairs& axes, Exec exec) {
  ContractionPlan p = plan(t, u, axes);
  Tensor out(t.field(), p.out_shape);
  const auto st = strides_of(t.shape());
  const auto su = strides_of(u.shape());
  const std::size_t n_sum = product(p.sum_shape);
  const std::size_t n_free_t = p.free_t.size();

  for_each_index(out.size(), exec, [&](std::size_t o) {
    auto oi = unflatten(o, p.out_shape);
    std::size_t base_t = 0, base_u = 0;
    for (std::size_t k = 0; k < n_free_t; ++k) base_t += oi[k] * st[p.free_t[k]];
    for (std::size_t k = 0; k < p.free_u.size(); ++k) base_u += oi[n_free_t + k] * su[p.free_u[k]];
    Scalar acc = t.field().zero();
    for (std::size_t s = 0; s < n_sum; ++s) {
      auto si = unflatten(s, p.sum_shape);
      std::size_t it = base_t, iu = base_u;
      for (std::size_t k = 0; k < axes.size(); ++k) {
        it += si[k] * st[axes[k].first];
        iu += si[k] * su[axes[k].second];
      }
      const Scalar& x = t[it];
      if (x.is_zero()) continue;
      const Scalar& y = u[iu];
      if (!y.is_zero()) acc.add_product(x, y);
    }
    out[o] = std::move(acc);
  });
  return out;
}

Tensor contract_reference(const Tensor& t, const Tensor& u, const AxisPairs& axes) {
  ContractionPlan p = plan(t, u, axes);
  Tensor out(t.field(), p.out_shape);
  for (std::size_t i = 0; i < t.size(); ++i) {
    auto ti = t.unflat(i);
    for (std::size_t j = 0; j < u.size(); ++j) {
      auto uj = u.unflat(j);
      bool matched = true;
      for (auto [a, b] : axes) {
        if (ti[a] != uj[b]) {
          matched = false;
          break;
        }
      }
      if (!matched) continue;
      std::vector<std::size_t> oi;
      for (auto k : p.free_t) oi.push_back(ti[k]);
      for (auto k : p.free_u) oi.push_back(uj[k]);
      out[out.flat(oi)] += t[i] * u[j];
    }
  }
  return out;
}

}  // namespace whk

namespace whk {

Bilinear::Bilinear(const Tensor& t) : field_(t.field()) {
  if (t.rank() != 3) throw ShapeMismatch("bilinear map needs a rank-3 tensor");
  d0_ = t.shape()[0];
  d1_ = t.shape()[1];
  d2_ = t.shape()[2];
  table_.resize(d0_ * d1_);
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i].is_zero()) continue;
    table_[i / d2_].emplace_back(i % d2_, t[i]);
  }
}

Vec Bilinear::apply(const Vec& x, const Vec& y) const {
  if (x.size() != d0_ || y.size() != d1_) throw ShapeMismatch("bilinear argument sizes");
  Vec out = zero_vec(field_, d2_);
  for (std::size_t i = 0; i < d0_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < d1_; ++j) {
      if (y[j].is_zero()) continue;
      const auto& row = table_[i * d1_ + j];
      if (row.empty()) continue;
      Scalar w = x[i] * y[j];
      for (const auto& [k, s] : row) out[k].add_product(w, s);
    }
  }
  return out;
}

}  // namespace whk
