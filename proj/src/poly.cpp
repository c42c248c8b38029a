#include "seqreg/poly.hpp"

#include <algorithm>
#include <sstream>

#include "seqreg/errors.hpp"

namespace seqreg {

namespace {

int cmp(const Monomial& a, const Monomial& b) { return MonomialOrder::compare_grevlex(a, b); }

// Merges two descending term lists, adding coefficients of equal monomials.
std::vector<Term> merge_add(const std::vector<Term>& a, const std::vector<Term>& b, bool negate_b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = cmp(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(negate_b ? Term{b[j].mono, -b[j].coeff} : b[j]);
      ++j;
    } else {
      FieldElem s = negate_b ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
      if (!s.is_zero()) out.push_back({a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(negate_b ? Term{b[j].mono, -b[j].coeff} : b[j]);
  return out;
}

}  // namespace

Poly::Poly(Field field, int nvars) : field_(field), nvars_(nvars) {
  if (nvars < 0 || nvars > kMaxVars) {
    throw InvalidInput("variable count must be in [0, " + std::to_string(kMaxVars) + "]");
  }
}

Poly Poly::constant(Field field, int nvars, const FieldElem& c) {
  Poly p(field, nvars);
  if (c.field() != field) throw InvalidInput("coefficient from a different field");
  if (!c.is_zero()) p.terms_.push_back({Monomial(), c});
  return p;
}

Poly Poly::constant(Field field, int nvars, std::int64_t c) {
  return constant(field, nvars, field.from_int(c));
}

Poly Poly::variable(Field field, int nvars, int index) {
  if (index < 0 || index >= nvars) throw InvalidInput("variable index out of range");
  return monomial(field, nvars, Monomial::variable(index), field.one());
}

Poly Poly::monomial(Field field, int nvars, const Monomial& m, const FieldElem& c) {
  Poly p(field, nvars);
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

Poly Poly::from_terms(Field field, int nvars, std::vector<Term> terms) {
  Poly p(field, nvars);
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return cmp(a.mono, b.mono) > 0; });
  for (auto& t : terms) {
    if (t.coeff.field() != field) throw InvalidInput("coefficient from a different field");
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

int Poly::low_degree() const {
  if (terms_.empty()) return -1;
  int d = terms_.front().mono.degree();
  for (const auto& t : terms_) d = std::min(d, t.mono.degree());
  return d;
}

FieldElem Poly::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return field_.zero();
}

FieldElem Poly::coefficient(const Monomial& m) const {
  for (const auto& t : terms_) {
    if (t.mono == m) return t.coeff;
  }
  return field_.zero();
}

void Poly::check_compatible(const Poly& q) const {
  if (field_ != q.field_) throw InvalidInput("polynomials over different fields");
  if (nvars_ != q.nvars_) throw InvalidInput("polynomials in different variable counts");
}

Poly Poly::operator-() const {
  Poly r(field_, nvars_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono, -t.coeff});
  return r;
}

Poly operator+(const Poly& p, const Poly& q) {
  p.check_compatible(q);
  Poly r(p.field_, p.nvars_);
  r.terms_ = merge_add(p.terms_, q.terms_, false);
  return r;
}

Poly operator-(const Poly& p, const Poly& q) {
  p.check_compatible(q);
  Poly r(p.field_, p.nvars_);
  r.terms_ = merge_add(p.terms_, q.terms_, true);
  return r;
}

Poly operator*(const Poly& p, const Poly& q) {
  p.check_compatible(q);
  Poly r(p.field_, p.nvars_);
  if (p.is_zero() || q.is_zero()) return r;
  const Poly& small = p.size() <= q.size() ? p : q;
  const Poly& big = p.size() <= q.size() ? q : p;
  // One sorted row per term of the smaller factor, summed in a balanced
  // merge tree so each term is touched O(log rows) times.
  std::vector<std::vector<Term>> rows;
  rows.reserve(small.size());
  for (const auto& s : small.terms_) {
    std::vector<Term> row;
    row.reserve(big.size());
    for (const auto& b : big.terms_) row.push_back({s.mono * b.mono, s.coeff * b.coeff});
    rows.push_back(std::move(row));
  }
  while (rows.size() > 1) {
    std::vector<std::vector<Term>> next;
    next.reserve((rows.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < rows.size(); i += 2) next.push_back(merge_add(rows[i], rows[i + 1], false));
    if (rows.size() % 2 == 1) next.push_back(std::move(rows.back()));
    rows = std::move(next);
  }
  r.terms_ = std::move(rows.front());
  return r;
}

Poly Poly::scaled(const FieldElem& c) const {
  Poly r(field_, nvars_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono, t.coeff * c});
  return r;
}

Poly Poly::times_monomial(const Monomial& m, const FieldElem& c) const {
  Poly r(field_, nvars_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
  return r;
}

Poly Poly::pow(int e) const {
  if (e < 0) throw InvalidInput("negative exponent");
  Poly result = constant(field_, nvars_, 1);
  Poly base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

bool operator==(const Poly& p, const Poly& q) {
  if (p.field_ != q.field_ || p.nvars_ != q.nvars_ || p.terms_.size() != q.terms_.size()) return false;
  for (std::size_t i = 0; i < p.terms_.size(); ++i) {
    if (p.terms_[i].mono != q.terms_[i].mono || p.terms_[i].coeff != q.terms_[i].coeff) return false;
  }
  return true;
}

Poly Poly::homogeneous_part(int d) const {
  Poly r(field_, nvars_);
  for (const auto& t : terms_) {
    if (t.mono.degree() == d) r.terms_.push_back(t);
  }
  return r;
}

FieldElem Poly::eval(std::span<const FieldElem> point) const {
  if (point.size() != static_cast<std::size_t>(nvars_)) throw InvalidInput("point has wrong arity");
  FieldElem sum = field_.zero();
  for (const auto& t : terms_) {
    FieldElem v = t.coeff;
    for (int i = 0; i < nvars_; ++i) {
      for (int e = 0; e < t.mono.exponent(i); ++e) v *= point[static_cast<std::size_t>(i)];
    }
    sum += v;
  }
  return sum;
}

bool Poly::is_local_unit() const { return !constant_term().is_zero(); }

Poly Poly::translate(std::span<const FieldElem> point) const {
  if (point.size() != static_cast<std::size_t>(nvars_)) throw InvalidInput("point has wrong arity");
  std::vector<Poly> images;
  images.reserve(point.size());
  for (int i = 0; i < nvars_; ++i) {
    images.push_back(variable(field_, nvars_, i) + constant(field_, nvars_, point[static_cast<std::size_t>(i)]));
  }
  return substitute(images);
}

Poly Poly::substitute(std::span<const Poly> images) const {
  if (images.size() != static_cast<std::size_t>(nvars_)) throw InvalidInput("substitution has wrong arity");
  Field target_field = field_;
  int target_vars = images.empty() ? 0 : images.front().nvars();
  Poly result(target_field, target_vars);
  // Powers are cached per variable.
  std::vector<std::vector<Poly>> powers(images.size());
  for (const auto& t : terms_) {
    Poly prod = constant(target_field, target_vars, t.coeff);
    for (std::size_t i = 0; i < images.size(); ++i) {
      int e = t.mono.exponent(static_cast<int>(i));
      if (e == 0) continue;
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(constant(target_field, target_vars, 1));
      while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[i]);
      prod = prod * cache[static_cast<std::size_t>(e)];
    }
    result += prod;
  }
  return result;
}

Poly Poly::extend_vars(int nvars) const {
  if (nvars < nvars_) throw InvalidInput("cannot shrink the variable count");
  Poly r(field_, nvars);
  r.terms_ = terms_;  // grevlex order is stable under appending unused variables
  return r;
}

std::string Poly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    bool neg = t.coeff.is_negative_for_printing();
    FieldElem mag = neg ? -t.coeff : t.coeff;
    if (first) {
      if (neg) out << '-';
    } else {
      out << (neg ? " - " : " + ");
    }
    first = false;
    if (t.mono.is_one()) {
      out << mag.to_string();
    } else if (mag.is_one()) {
      out << t.mono.to_string(names);
    } else {
      out << mag.to_string() << '*' << t.mono.to_string(names);
    }
  }
  return out.str();
}

std::vector<FieldElem> linear_coefficients(const Poly& p) {
  std::vector<FieldElem> v(static_cast<std::size_t>(p.nvars()), p.field().zero());
  for (const auto& t : p.terms()) {
    if (t.mono.degree() != 1) continue;
    for (int i = 0; i < p.nvars(); ++i) {
      if (t.mono.exponent(i) == 1) v[static_cast<std::size_t>(i)] = t.coeff;
    }
  }
  return v;
}

}  // namespace seqreg
