#include "seqreg/monomial.hpp"

#include <algorithm>
#include <sstream>

#include "seqreg/errors.hpp"

namespace seqreg {

Monomial::Monomial(const std::vector<int>& exponents) {
  if (exponents.size() > static_cast<std::size_t>(kMaxVars)) {
    throw InvalidInput("too many variables (max " + std::to_string(kMaxVars) + ")");
  }
  for (std::size_t i = 0; i < exponents.size(); ++i) set_exponent(static_cast<int>(i), exponents[i]);
}

Monomial Monomial::variable(int index) {
  Monomial m;
  m.set_exponent(index, 1);
  return m;
}

void Monomial::set_exponent(int i, int e) {
  if (i < 0 || i >= kMaxVars) throw InvalidInput("variable index out of range");
  if (e < 0 || e > 0xffff) throw InvalidInput("exponent out of range");
  degree_ += e - exp_[static_cast<std::size_t>(i)];
  exp_[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(e);
}

Monomial Monomial::quotient_of(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp_[i] = static_cast<std::uint16_t>(o.exp_[i] - exp_[i]);
  r.degree_ = o.degree_ - degree_;
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  int d = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.exp_[i] = std::max(a.exp_[i], b.exp_[i]);
    d += r.exp_[i];
  }
  r.degree_ = d;
  return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  int d = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.exp_[i] = std::min(a.exp_[i], b.exp_[i]);
    d += r.exp_[i];
  }
  r.degree_ = d;
  return r;
}

bool Monomial::coprime(const Monomial& o) const {
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (exp_[i] != 0 && o.exp_[i] != 0) return false;
  }
  return true;
}

int Monomial::support_mask() const {
  int mask = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    if (exp_[static_cast<std::size_t>(i)] != 0) mask |= 1 << i;
  }
  return mask;
}

std::string Monomial::to_string(const std::vector<std::string>& names) const {
  if (degree_ == 0) return "1";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (exp_[i] == 0) continue;
    if (!first) out << '*';
    first = false;
    if (i < names.size()) {
      out << names[i];
    } else {
      out << "x_" << i;
    }
    if (exp_[i] > 1) out << '^' << exp_[i];
  }
  return out.str();
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case OrderKind::grevlex:
      return "grevlex";
    case OrderKind::lex:
      return "lex";
    case OrderKind::neg_grevlex_local:
      return "neg-grevlex-local";
    case OrderKind::homogenizing_local:
      return "homogenizing-local";
  }
  return "?";
}

namespace {

void fill(int nvars, int var, int remaining, Monomial& cur, std::vector<Monomial>& out) {
  if (var == nvars - 1) {
    cur.set_exponent(var, remaining);
    out.push_back(cur);
    cur.set_exponent(var, 0);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur.set_exponent(var, e);
    fill(nvars, var + 1, remaining - e, cur, out);
  }
  cur.set_exponent(var, 0);
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int nvars, int deg) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (deg == 0) out.emplace_back();
    return out;
  }
  Monomial cur;
  fill(nvars, 0, deg, cur, out);
  return out;
}

}  // namespace seqreg
