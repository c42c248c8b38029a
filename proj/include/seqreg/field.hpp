#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace seqreg {

class FieldElem;

/// Coefficient field: the rationals (characteristic 0) or a prime field F_p
/// with p < 2^31.
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field(0); }
  /// Throws InvalidInput if p is not a prime below 2^31.
  static Field prime(std::uint64_t p);

  std::uint32_t characteristic() const { return p_; }
  bool is_rational() const { return p_ == 0; }

  FieldElem zero() const;
  FieldElem one() const;
  FieldElem from_int(std::int64_t v) const;
  FieldElem from_rational(const mpq_class& q) const;
  /// Parses "n" or "n/d" (optional sign).
  FieldElem parse(const std::string& text) const;

  std::string name() const;

  friend bool operator==(Field a, Field b) { return a.p_ == b.p_; }
  friend bool operator!=(Field a, Field b) { return a.p_ != b.p_; }

 private:
  friend class FieldElem;
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

bool is_prime(std::uint64_t n);

/// An element of a Field. Rationals are kept in lowest terms with positive
/// denominator; prime-field residues live in [0, p).
class FieldElem {
 public:
  /// Rational zero.
  FieldElem() = default;

  Field field() const { return Field(p_); }
  std::uint32_t characteristic() const { return p_; }

  bool is_zero() const;
  bool is_one() const;

  FieldElem operator-() const;
  FieldElem inverse() const;  // throws on zero

  FieldElem& operator+=(const FieldElem& o);
  FieldElem& operator-=(const FieldElem& o);
  FieldElem& operator*=(const FieldElem& o);
  FieldElem& operator/=(const FieldElem& o);

  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
  friend FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }

  friend bool operator==(const FieldElem& a, const FieldElem& b);
  friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

  /// Residue for prime fields (undefined for rationals).
  std::uint32_t residue() const { return std::get<std::uint32_t>(v_); }
  const mpq_class& rational() const { return std::get<mpq_class>(v_); }

  /// Prime-field elements print in the symmetric range (-p/2, p/2].
  std::string to_string() const;
  bool is_negative_for_printing() const;

 private:
  friend class Field;
  static FieldElem modp(std::uint32_t p, std::uint32_t r);
  static FieldElem rat(mpq_class q);

  void check_same(const FieldElem& o) const {
    if (p_ != o.p_) throw_field_mismatch();
  }
  [[noreturn]] static void throw_field_mismatch();

  void add_rational(const FieldElem& o);
  void sub_rational(const FieldElem& o);
  void mul_rational(const FieldElem& o);

  std::uint32_t p_ = 0;
  std::variant<mpq_class, std::uint32_t> v_;
};

inline bool FieldElem::is_zero() const {
  if (p_ != 0) return std::get<std::uint32_t>(v_) == 0;
  return sgn(std::get<mpq_class>(v_)) == 0;
}

inline FieldElem& FieldElem::operator+=(const FieldElem& o) {
  check_same(o);
  if (p_ != 0) {
    std::uint32_t& r = std::get<std::uint32_t>(v_);
    std::uint64_t s = std::uint64_t{r} + std::get<std::uint32_t>(o.v_);
    r = static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
    return *this;
  }
  add_rational(o);
  return *this;
}

inline FieldElem& FieldElem::operator-=(const FieldElem& o) {
  check_same(o);
  if (p_ != 0) {
    std::uint32_t& r = std::get<std::uint32_t>(v_);
    std::uint32_t b = std::get<std::uint32_t>(o.v_);
    r = r >= b ? r - b : r + (p_ - b);
    return *this;
  }
  sub_rational(o);
  return *this;
}

inline FieldElem& FieldElem::operator*=(const FieldElem& o) {
  check_same(o);
  if (p_ != 0) {
    std::uint32_t& r = std::get<std::uint32_t>(v_);
    r = static_cast<std::uint32_t>(std::uint64_t{r} * std::get<std::uint32_t>(o.v_) % p_);
    return *this;
  }
  mul_rational(o);
  return *this;
}

inline FieldElem& FieldElem::operator/=(const FieldElem& o) { return *this *= o.inverse(); }

inline bool operator==(const FieldElem& a, const FieldElem& b) {
  if (a.p_ != b.p_) return false;
  return a.v_ == b.v_;
}

}  // namespace seqreg
