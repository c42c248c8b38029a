#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace seqreg {

/// Largest supported variable count, including helper variables added
/// internally (Rabinowitsch and elimination).
inline constexpr int kMaxVars = 8;

/// Exponent vector with cached total degree. Slots beyond the ring's
/// variable count stay zero.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(const std::vector<int>& exponents);

  static Monomial variable(int index);

  int degree() const { return degree_; }
  int exponent(int i) const { return exp_[static_cast<std::size_t>(i)]; }
  void set_exponent(int i, int e);
  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (exp_[i] > o.exp_[i]) return false;
    }
    return true;
  }

  /// Requires divides(o); returns o / *this.
  Monomial quotient_of(const Monomial& o) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.exp_[i] = static_cast<std::uint16_t>(a.exp_[i] + b.exp_[i]);
    r.degree_ = a.degree_ + b.degree_;
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b);
  static Monomial gcd(const Monomial& a, const Monomial& b);
  bool coprime(const Monomial& o) const;

  /// Bit i is set iff variable i occurs.
  int support_mask() const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp_ == b.exp_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return a.exp_ != b.exp_; }

  std::string to_string(const std::vector<std::string>& names) const;

  const std::array<std::uint16_t, kMaxVars>& exponents() const { return exp_; }

 private:
  std::array<std::uint16_t, kMaxVars> exp_{};
  int degree_ = 0;
};

/// Monomial orders. grevlex and lex are global (1 is the smallest monomial);
/// neg_grevlex_local is the local degree order (lower total degree is larger,
/// ties broken by grevlex), for which 1 is the largest monomial.
/// homogenizing_local is a global degree order on k[x, t] (t the last
/// variable) that breaks ties by the higher power of t, then grevlex; on
/// homogeneous polynomials it ranks terms as neg_grevlex_local ranks their
/// dehomogenizations.
enum class OrderKind { grevlex, lex, neg_grevlex_local, homogenizing_local };

class MonomialOrder {
 public:
  MonomialOrder() = default;
  MonomialOrder(OrderKind kind, int nvars) : kind_(kind), nvars_(nvars) {}

  OrderKind kind() const { return kind_; }
  int nvars() const { return nvars_; }
  bool is_global() const { return kind_ != OrderKind::neg_grevlex_local; }

  /// Three-way comparison: >0 if a > b.
  int compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
      case OrderKind::grevlex:
        return compare_grevlex(a, b);
      case OrderKind::lex:
        return compare_lex(a, b);
      case OrderKind::neg_grevlex_local:
        if (a.degree() != b.degree()) return a.degree() < b.degree() ? 1 : -1;
        return compare_grevlex(a, b);
      case OrderKind::homogenizing_local: {
        if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
        const int t = nvars_ - 1;
        if (a.exponent(t) != b.exponent(t)) return a.exponent(t) > b.exponent(t) ? 1 : -1;
        return compare_grevlex(a, b);
      }
    }
    return 0;
  }

  std::string name() const;

  static int compare_grevlex(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
    for (int i = kMaxVars - 1; i >= 0; --i) {
      if (a.exponent(i) != b.exponent(i)) return a.exponent(i) < b.exponent(i) ? 1 : -1;
    }
    return 0;
  }

  static int compare_lex(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < kMaxVars; ++i) {
      if (a.exponent(i) != b.exponent(i)) return a.exponent(i) > b.exponent(i) ? 1 : -1;
    }
    return 0;
  }

 private:
  OrderKind kind_ = OrderKind::grevlex;
  int nvars_ = 0;
};

/// All monomials in `nvars` variables of total degree exactly `deg`.
std::vector<Monomial> monomials_of_degree(int nvars, int deg);

}  // namespace seqreg
