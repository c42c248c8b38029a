#pragma once

#include <span>
#include <string>
#include <vector>

#include "seqreg/field.hpp"
#include "seqreg/monomial.hpp"

namespace seqreg {

struct Term {
  Monomial mono;
  FieldElem coeff;
};

/// Sparse multivariate polynomial over a Field in a fixed number of
/// variables. Terms are stored strictly descending in grevlex with no zero
/// coefficients, so structural equality is polynomial equality.
///
/// Values are immutable in practice: every operation returns a new Poly.
class Poly {
 public:
  /// The zero polynomial of QQ[] (placeholder; prefer the explicit ctor).
  Poly() = default;
  Poly(Field field, int nvars);

  static Poly constant(Field field, int nvars, const FieldElem& c);
  static Poly constant(Field field, int nvars, std::int64_t c);
  static Poly variable(Field field, int nvars, int index);
  static Poly monomial(Field field, int nvars, const Monomial& m, const FieldElem& c);
  /// Builds from arbitrary (unsorted, possibly repeated) terms.
  static Poly from_terms(Field field, int nvars, std::vector<Term> terms);

  Field field() const { return field_; }
  int nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  /// Maximal total degree; -1 for zero.
  int total_degree() const { return terms_.empty() ? -1 : terms_.front().mono.degree(); }
  /// Minimal total degree among terms; -1 for zero.
  int low_degree() const;
  FieldElem constant_term() const;
  FieldElem coefficient(const Monomial& m) const;

  Poly operator-() const;
  friend Poly operator+(const Poly& p, const Poly& q);
  friend Poly operator-(const Poly& p, const Poly& q);
  friend Poly operator*(const Poly& p, const Poly& q);
  Poly& operator+=(const Poly& q) { return *this = *this + q; }
  Poly& operator-=(const Poly& q) { return *this = *this - q; }
  Poly& operator*=(const Poly& q) { return *this = *this * q; }

  Poly scaled(const FieldElem& c) const;
  Poly times_monomial(const Monomial& m, const FieldElem& c) const;
  Poly pow(int e) const;

  friend bool operator==(const Poly& p, const Poly& q);
  friend bool operator!=(const Poly& p, const Poly& q) { return !(p == q); }

  /// Degree-d homogeneous component.
  Poly homogeneous_part(int d) const;
  Poly linear_part() const { return homogeneous_part(1); }

  FieldElem eval(std::span<const FieldElem> point) const;
  /// Invertible in the local ring at the origin, i.e. nonzero constant term.
  bool is_local_unit() const;
  /// Substitutes x_i -> x_i + c_i.
  Poly translate(std::span<const FieldElem> point) const;
  /// Substitutes x_i -> images[i].
  Poly substitute(std::span<const Poly> images) const;
  /// Re-embeds into a ring with more variables (new ones appended).
  Poly extend_vars(int nvars) const;

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  void check_compatible(const Poly& q) const;

  Field field_ = Field::rationals();
  int nvars_ = 0;
  std::vector<Term> terms_;
};

/// Coefficients of linear_part(p) as a dense vector of length nvars.
std::vector<FieldElem> linear_coefficients(const Poly& p);

}  // namespace seqreg
