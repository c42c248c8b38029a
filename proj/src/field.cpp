#include "seqreg/field.hpp"

#include <cctype>

#include "seqreg/errors.hpp"

namespace seqreg {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p)) {
    throw InvalidInput("field modulus " + std::to_string(p) + " is not a prime below 2^31");
  }
  return Field(static_cast<std::uint32_t>(p));
}

FieldElem Field::zero() const { return from_int(0); }
FieldElem Field::one() const { return from_int(1); }

FieldElem Field::from_int(std::int64_t v) const {
  if (p_ == 0) return FieldElem::rat(mpq_class(static_cast<long>(v)));
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return FieldElem::modp(p_, static_cast<std::uint32_t>(r));
}

FieldElem Field::from_rational(const mpq_class& q) const {
  if (p_ == 0) return FieldElem::rat(q);
  mpz_class num = q.get_num() % p_;
  if (num < 0) num += p_;
  mpz_class den = q.get_den() % p_;
  if (den == 0) throw InvalidInput("denominator vanishes in " + name());
  auto n = FieldElem::modp(p_, static_cast<std::uint32_t>(num.get_ui()));
  auto d = FieldElem::modp(p_, static_cast<std::uint32_t>(den.get_ui()));
  return n / d;
}

FieldElem Field::parse(const std::string& text) const {
  mpq_class q;
  try {
    std::string t = text;
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    q = mpq_class(t, 10);
  } catch (const std::invalid_argument&) {
    throw InvalidInput("not a number: '" + text + "'");
  }
  if (q.get_den() == 0) throw InvalidInput("zero denominator: '" + text + "'");
  q.canonicalize();
  return from_rational(q);
}

std::string Field::name() const { return p_ == 0 ? "QQ" : "ZZ/" + std::to_string(p_); }

FieldElem FieldElem::modp(std::uint32_t p, std::uint32_t r) {
  FieldElem e;
  e.p_ = p;
  e.v_ = r;
  return e;
}

FieldElem FieldElem::rat(mpq_class q) {
  FieldElem e;
  e.p_ = 0;
  e.v_ = std::move(q);
  return e;
}

void FieldElem::throw_field_mismatch() {
  throw InvalidInput("field mismatch between coefficients");
}

bool FieldElem::is_one() const {
  if (p_ != 0) return std::get<std::uint32_t>(v_) == 1;
  return std::get<mpq_class>(v_) == 1;
}

FieldElem FieldElem::operator-() const {
  if (p_ != 0) {
    std::uint32_t r = std::get<std::uint32_t>(v_);
    return modp(p_, r == 0 ? 0 : p_ - r);
  }
  return rat(-std::get<mpq_class>(v_));
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw InvalidInput("division by zero");
  if (p_ != 0) {
    // Extended Euclid on (r, p).
    std::int64_t a = std::get<std::uint32_t>(v_), b = p_, x0 = 1, x1 = 0;
    while (b != 0) {
      std::int64_t q = a / b;
      std::int64_t t = a - q * b;
      a = b;
      b = t;
      t = x0 - q * x1;
      x0 = x1;
      x1 = t;
    }
    x0 %= static_cast<std::int64_t>(p_);
    if (x0 < 0) x0 += p_;
    return modp(p_, static_cast<std::uint32_t>(x0));
  }
  mpq_class inv = 1 / std::get<mpq_class>(v_);
  return rat(inv);
}

void FieldElem::add_rational(const FieldElem& o) {
  std::get<mpq_class>(v_) += std::get<mpq_class>(o.v_);
}
void FieldElem::sub_rational(const FieldElem& o) {
  std::get<mpq_class>(v_) -= std::get<mpq_class>(o.v_);
}
void FieldElem::mul_rational(const FieldElem& o) {
  std::get<mpq_class>(v_) *= std::get<mpq_class>(o.v_);
}

bool FieldElem::is_negative_for_printing() const {
  if (p_ != 0) return std::get<std::uint32_t>(v_) > p_ / 2;
  return sgn(std::get<mpq_class>(v_)) < 0;
}

std::string FieldElem::to_string() const {
  if (p_ != 0) {
    std::uint32_t r = std::get<std::uint32_t>(v_);
    if (r > p_ / 2) return "-" + std::to_string(p_ - r);
    return std::to_string(r);
  }
  return std::get<mpq_class>(v_).get_str();
}

}  // namespace seqreg
