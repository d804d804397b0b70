#include "whk/multilinear.hpp"

#include "whk/errors.hpp"
#include "whk/tensor.hpp"

namespace whk {

std::size_t total_dim(const Dims& dims) {
  std::size_t n = 1;
  for (auto d : dims) n *= d;
  return n;
}

Vec apply_factor(const Vec& v, const Dims& dims, std::size_t j, const Matrix& f) {
  if (j >= dims.size()) throw ShapeMismatch("factor index out of range");
  if (v.size() != total_dim(dims)) throw ShapeMismatch("vector does not match factor dims");
  if (f.cols() != dims[j]) throw ShapeMismatch("map domain does not match factor");
  std::size_t left = 1, right = 1;
  for (std::size_t k = 0; k < j; ++k) left *= dims[k];
  for (std::size_t k = j + 1; k < dims.size(); ++k) right *= dims[k];
  const std::size_t mid = dims[j];
  const std::size_t out = f.rows();
  Field field = f.field();

  // Sparse columns of f.
  std::vector<std::vector<std::size_t>> nz(mid);
  for (std::size_t c = 0; c < mid; ++c) {
    for (std::size_t r = 0; r < out; ++r) {
      if (!f.at(r, c).is_zero()) nz[c].push_back(r);
    }
  }
  Vec result = zero_vec(field, left * out * right);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    std::size_t r = i % right;
    std::size_t m = (i / right) % mid;
    std::size_t l = i / (right * mid);
    for (auto o : nz[m]) result[(l * out + o) * right + r].add_product(v[i], f.at(o, m));
  }
  return result;
}

Vec permute_factors(const Vec& v, const Dims& dims, const std::vector<std::size_t>& perm) {
  if (perm.size() != dims.size()) throw ShapeMismatch("permutation length mismatch");
  if (v.size() != total_dim(dims)) throw ShapeMismatch("vector does not match factor dims");
  Dims out_dims(dims.size());
  for (std::size_t k = 0; k < perm.size(); ++k) out_dims[k] = dims[perm.at(k)];
  if (v.empty()) return v;
  Vec result = zero_vec(v.front().field(), v.size());
  std::vector<std::size_t> out_idx(dims.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    auto idx = unflatten(i, dims);
    std::size_t flat = 0;
    for (std::size_t k = 0; k < perm.size(); ++k) flat = flat * out_dims[k] + idx[perm[k]];
    result[flat] = v[i];
  }
  return result;
}

Matrix matrix_of(Field f, std::size_t rows, std::size_t cols,
                 const std::function<Vec(std::size_t)>& image, Exec exec) {
  std::vector<Vec> columns(cols);
  for_each_index(cols, exec, [&](std::size_t c) { columns[c] = image(c); });
  for (const auto& c : columns) {
    if (c.size() != rows) throw ShapeMismatch("column image has wrong length");
  }
  return Matrix::from_columns(f, rows, columns);
}

Vec concat(const std::vector<Vec>& parts) {
  Vec out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

}  // namespace whk
