#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "whk/field.hpp"

namespace whk {

/// Dense coordinate vector. The field is carried by the owning structure,
/// since an empty vector has no scalar to ask.
using Vec = std::vector<Scalar>;

Vec zero_vec(Field f, std::size_t n);
Vec unit_vec(Field f, std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
/// y += c * x
void axpy(Vec& y, const Scalar& c, const Vec& x);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Scalar& c, const Vec& x);
Scalar dot(Field f, const Vec& a, const Vec& b);
/// Kronecker product; index of (i, j) is i * y.size() + j.
Vec kron(const Vec& x, const Vec& y);
std::string to_string(const Vec& v);

/// Dense matrix; doubles as the representation of a linear map between based
/// spaces, with rows indexing the codomain and columns the domain.
class Matrix {
 public:
  Matrix(Field f, std::size_t rows, std::size_t cols);
  static Matrix identity(Field f, std::size_t n);
  static Matrix from_columns(Field f, std::size_t rows, const std::vector<Vec>& cols);
  static Matrix from_rows(Field f, std::size_t cols, const std::vector<Vec>& rows);

  Field field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec column(std::size_t c) const;
  void set_column(std::size_t c, const Vec& v);
  void set_row(std::size_t r, const Vec& v);

  Vec apply(const Vec& x) const;
  Matrix transpose() const;
  Matrix kron(const Matrix& o) const;
  bool is_zero() const;
  bool is_identity() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  const Vec& data() const { return data_; }

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  Vec data_;
};

Matrix vstack(Field f, std::size_t cols, const std::vector<Matrix>& blocks);

/// Reduced row echelon form with the pivot column of each nonzero row.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

Echelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Inverse of a square matrix; throws DivisionByZero when singular.
Matrix inverse(const Matrix& m);

}  // namespace whk
