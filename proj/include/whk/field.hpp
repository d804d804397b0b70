#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace whk {

class Scalar;

/// The base field: either the rationals or a prime field F_p with p < 2^31.
class Field {
 public:
  static Field rationals() { return Field(0); }
  /// Throws std::invalid_argument unless p is a prime below 2^31.
  static Field prime(std::uint64_t p);

  bool is_rational() const { return p_ == 0; }
  bool is_prime() const { return p_ != 0; }
  std::uint32_t characteristic() const { return p_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long v) const;
  Scalar from_fraction(long num, long den) const;
  /// Accepts "n", "-n" and "p/q"; throws ParseError otherwise.
  Scalar parse(std::string_view text) const;

  std::string name() const;

  friend bool operator==(Field a, Field b) { return a.p_ == b.p_; }
  friend bool operator!=(Field a, Field b) { return a.p_ != b.p_; }

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

bool is_prime_number(std::uint64_t n);

/// An exact element of a Field. Rationals are kept in lowest terms with a
/// positive denominator; prime-field elements are residues in [0, p).
class Scalar {
 public:
  explicit Scalar(Field f);
  Scalar(Field f, const mpq_class& q);

  Field field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// y += a * b without temporaries.
  void add_product(const Scalar& a, const Scalar& b);

  std::string to_string() const;

  std::uint32_t residue() const { return residue_; }
  const mpq_class& rational() const { return q_; }

 private:
  void require_same(const Scalar& o) const;

  Field field_;
  std::uint32_t residue_ = 0;
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace whk
