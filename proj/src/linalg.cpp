#include "whk/linalg.hpp"

#include "whk/errors.hpp"

namespace whk {

Vec zero_vec(Field f, std::size_t n) { return Vec(n, f.zero()); }

Vec unit_vec(Field f, std::size_t n, std::size_t i) {
  Vec v = zero_vec(f, n);
  v.at(i) = f.one();
  return v;
}

bool is_zero(const Vec& v) {
  for (const auto& s : v) {
    if (!s.is_zero()) return false;
  }
  return true;
}

void axpy(Vec& y, const Scalar& c, const Vec& x) {
  if (y.size() != x.size()) throw ShapeMismatch("axpy length mismatch");
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i].is_zero()) y[i].add_product(c, x[i]);
  }
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw ShapeMismatch("vector length mismatch");
  Vec r = a;
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw ShapeMismatch("vector length mismatch");
  Vec r = a;
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return r;
}

Vec scale(const Scalar& c, const Vec& x) {
  Vec r = x;
  for (auto& s : r) s *= c;
  return r;
}

Scalar dot(Field f, const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw ShapeMismatch("dot length mismatch");
  Scalar s = f.zero();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) s.add_product(a[i], b[i]);
  }
  return s;
}

Vec kron(const Vec& x, const Vec& y) {
  if (x.empty() || y.empty()) return {};
  Field f = x.front().field();
  Vec r = zero_vec(f, x.size() * y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (!y[j].is_zero()) r[i * y.size() + j] = x[i] * y[j];
    }
  }
  return r;
}

std::string to_string(const Vec& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].to_string();
  }
  return s + "]";
}

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, f.zero()) {}

Matrix Matrix::identity(Field f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
  return m;
}

Matrix Matrix::from_columns(Field f, std::size_t rows, const std::vector<Vec>& cols) {
  Matrix m(f, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(c, cols[c]);
  return m;
}

Matrix Matrix::from_rows(Field f, std::size_t cols, const std::vector<Vec>& rows) {
  Matrix m(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
  return m;
}

Vec Matrix::row(std::size_t r) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec Matrix::column(std::size_t c) const {
  Vec v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back(at(r, c));
  return v;
}

void Matrix::set_column(std::size_t c, const Vec& v) {
  if (v.size() != rows_) throw ShapeMismatch("column length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) at(r, c) = v[r];
}

void Matrix::set_row(std::size_t r, const Vec& v) {
  if (v.size() != cols_) throw ShapeMismatch("row length mismatch");
  for (std::size_t c = 0; c < cols_; ++c) at(r, c) = v[c];
}

Vec Matrix::apply(const Vec& x) const {
  if (x.size() != cols_) {
    throw ShapeMismatch("matrix of shape " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                        " applied to vector of length " + std::to_string(x.size()));
  }
  Vec y = zero_vec(field_, rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (x[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Scalar& a = at(r, c);
      if (!a.is_zero()) y[r].add_product(a, x[c]);
    }
  }
  return y;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  }
  return t;
}

Matrix Matrix::kron(const Matrix& o) const {
  Matrix k(field_, rows_ * o.rows_, cols_ * o.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      const Scalar& a = at(r, c);
      if (a.is_zero()) continue;
      for (std::size_t r2 = 0; r2 < o.rows_; ++r2) {
        for (std::size_t c2 = 0; c2 < o.cols_; ++c2) {
          const Scalar& b = o.at(r2, c2);
          if (!b.is_zero()) k.at(r * o.rows_ + r2, c * o.cols_ + c2) = a * b;
        }
      }
    }
  }
  return k;
}

bool Matrix::is_zero() const { return whk::is_zero(data_); }

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (r == c ? !at(r, c).is_one() : !at(r, c).is_zero()) return false;
    }
  }
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) {
    throw ShapeMismatch("cannot compose " + std::to_string(a.rows_) + "x" +
                        std::to_string(a.cols_) + " with " + std::to_string(b.rows_) + "x" +
                        std::to_string(b.cols_));
  }
  Matrix m(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a.at(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& y = b.at(k, j);
        if (!y.is_zero()) m.at(i, j).add_product(x, y);
      }
    }
  }
  return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeMismatch("matrix sum shape mismatch");
  Matrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] += b.data_[i];
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw ShapeMismatch("matrix difference shape mismatch");
  }
  Matrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] -= b.data_[i];
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.field_ != b.field_) throw FieldMismatch("matrix comparison across fields");
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix vstack(Field f, std::size_t cols, const std::vector<Matrix>& blocks) {
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw ShapeMismatch("vstack column mismatch");
    rows += b.rows();
  }
  Matrix m(f, rows, cols);
  std::size_t r0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r) {
      for (std::size_t c = 0; c < cols; ++c) m.at(r0 + r, c) = b.at(r, c);
    }
    r0 += b.rows();
  }
  return m;
}

Echelon rref(const Matrix& input) {
  Matrix m = input;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t sel = row;
    while (sel < rows && m.at(sel, col).is_zero()) ++sel;
    if (sel == rows) continue;
    if (sel != row) {
      for (std::size_t c = col; c < cols; ++c) std::swap(m.at(sel, c), m.at(row, c));
    }
    Scalar inv = m.at(row, col).inverse();
    for (std::size_t c = col; c < cols; ++c) {
      if (!m.at(row, c).is_zero()) m.at(row, c) *= inv;
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || m.at(r, col).is_zero()) continue;
      Scalar factor = m.at(r, col);
      for (std::size_t c = col; c < cols; ++c) {
        if (!m.at(row, c).is_zero()) m.at(r, c) -= factor * m.at(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw ShapeMismatch("inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, n + r) = m.field().one();
  }
  Echelon e = rref(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw DivisionByZero("singular matrix");
  Matrix inv(m.field(), n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv.at(r, c) = e.reduced.at(r, n + c);
  }
  return inv;
}

}  // namespace whk
