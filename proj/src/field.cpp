#include "whk/field.hpp"

#include <charconv>
#include <ostream>
#include <stdexcept>

#include "whk/errors.hpp"

namespace whk {

namespace {

std::uint32_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = result * base % p;
    base = base * base % p;
    exp >>= 1U;
  }
  return static_cast<std::uint32_t>(result);
}

std::uint32_t reduce(const mpz_class& z, std::uint32_t p) {
  mpz_class r = z % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

bool parse_integer(std::string_view text, mpz_class& out) {
  if (text.empty()) return false;
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') return false;
  }
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return out.set_str(digits, 10) == 0;
}

}  // namespace

bool is_prime_number(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31U) || !is_prime_number(p)) {
    throw std::invalid_argument("field characteristic must be a prime below 2^31, got " +
                                std::to_string(p));
  }
  return Field(static_cast<std::uint32_t>(p));
}

Scalar Field::zero() const { return Scalar(*this); }

Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long v) const { return Scalar(*this, mpq_class(v)); }

Scalar Field::from_fraction(long num, long den) const {
  if (den == 0) throw DivisionByZero("zero denominator");
  return from_int(num) / from_int(den);
}

Scalar Field::parse(std::string_view text) const {
  auto slash = text.find('/');
  mpz_class num;
  mpz_class den = 1;
  if (slash == std::string_view::npos) {
    if (!parse_integer(text, num)) throw ParseError("malformed scalar '" + std::string(text) + "'");
  } else {
    if (!parse_integer(text.substr(0, slash), num) ||
        !parse_integer(text.substr(slash + 1), den)) {
      throw ParseError("malformed scalar '" + std::string(text) + "'");
    }
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  }
  mpq_class q(num, den);
  q.canonicalize();
  if (is_prime()) {
    mpz_class d = q.get_den();
    if (d % p_ == 0) throw ParseError("denominator divisible by p in '" + std::string(text) + "'");
  }
  return Scalar(*this, q);
}

std::string Field::name() const {
  return is_rational() ? std::string("rational") : "fp:" + std::to_string(p_);
}

Scalar::Scalar(Field f) : field_(f) {}

Scalar::Scalar(Field f, const mpq_class& q) : field_(f) {
  if (f.is_rational()) {
    q_ = q;
    q_.canonicalize();
    return;
  }
  std::uint32_t p = f.characteristic();
  std::uint32_t num = reduce(q.get_num(), p);
  std::uint32_t den = reduce(q.get_den(), p);
  if (den == 0) throw DivisionByZero("denominator vanishes modulo " + std::to_string(p));
  residue_ = static_cast<std::uint32_t>(std::uint64_t{num} * mod_pow(den, p - 2, p) % p);
}

bool Scalar::is_zero() const {
  return field_.is_rational() ? sgn(q_) == 0 : residue_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_rational() ? q_ == 1 : residue_ == 1;
}

void Scalar::require_same(const Scalar& o) const {
  if (field_ != o.field_) {
    throw FieldMismatch("scalar arithmetic across fields " + field_.name() + " and " +
                        o.field_.name());
  }
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  Scalar r(field_);
  if (field_.is_rational()) {
    r.q_ = 1 / q_;
  } else {
    std::uint32_t p = field_.characteristic();
    r.residue_ = mod_pow(residue_, p - 2, p);
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same(o);
  if (field_.is_rational()) {
    q_ += o.q_;
  } else {
    std::uint64_t s = std::uint64_t{residue_} + o.residue_;
    std::uint32_t p = field_.characteristic();
    residue_ = static_cast<std::uint32_t>(s >= p ? s - p : s);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  require_same(o);
  if (field_.is_rational()) {
    q_ -= o.q_;
  } else {
    std::uint32_t p = field_.characteristic();
    residue_ = residue_ >= o.residue_ ? residue_ - o.residue_ : residue_ + (p - o.residue_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same(o);
  if (field_.is_rational()) {
    q_ *= o.q_;
  } else {
    residue_ = static_cast<std::uint32_t>(std::uint64_t{residue_} * o.residue_ %
                                          field_.characteristic());
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  require_same(o);
  return *this *= o.inverse();
}

Scalar Scalar::operator-() const {
  Scalar r(field_);
  r -= *this;
  return r;
}

void Scalar::add_product(const Scalar& a, const Scalar& b) {
  require_same(a);
  require_same(b);
  if (field_.is_rational()) {
    if (sgn(a.q_) == 0 || sgn(b.q_) == 0) return;
    q_ += a.q_ * b.q_;
  } else {
    std::uint32_t p = field_.characteristic();
    std::uint64_t s = (std::uint64_t{a.residue_} * b.residue_ + residue_) % p;
    residue_ = static_cast<std::uint32_t>(s);
  }
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.require_same(b);
  return a.field_.is_rational() ? a.q_ == b.q_ : a.residue_ == b.residue_;
}

std::string Scalar::to_string() const {
  if (field_.is_rational()) return q_.get_str();
  return std::to_string(residue_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace whk
