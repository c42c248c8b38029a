#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "seqreg/groebner.hpp"

namespace seqreg {

/// Sentinel returned by local dimension queries when the ideal contains a
/// local unit (the localized quotient is the zero ring).
inline constexpr int kEmptySpectrum = -1;

struct LocalOptions {
  /// Mora reduction steps allowed per element.
  std::size_t max_reduction_steps = 1'000'000;
  std::size_t max_pairs = 200'000;
};

/// Standard basis of I * S_(x) with respect to the local degree order
/// neg-grevlex. Built from a homogenized Gröbner basis; membership uses
/// Mora's weak normal form.
class LocalStandardBasis {
 public:
  static LocalStandardBasis compute(Field field, int nvars, const std::vector<Poly>& gens,
                                    const LocalOptions& opts = {});

  const std::vector<Poly>& elements() const { return elems_; }
  /// Minimal generators of the lead (tangent-cone) monomial ideal.
  const std::vector<Monomial>& lead_ideal() const { return leads_; }
  bool is_unit() const { return leads_.size() == 1 && leads_[0].is_one(); }

  /// Mora weak normal form: zero iff p lies in the localized ideal.
  Poly weak_normal_form(const Poly& p) const;

 private:
  Field field_ = Field::rationals();
  int nvars_ = 0;
  std::vector<Poly> elems_;
  std::vector<Monomial> leads_;
  LocalOptions opts_;
};

/// Mora normal form of f against `basis` under the local order. Exposed for
/// tests; returns h with u*f - h in (basis) for some local unit u.
Poly mora_normal_form(const Poly& f, const std::vector<Poly>& basis, const LocalOptions& opts = {});

/// Krull dimension of S/(monomials) via maximal independent variable sets;
/// kEmptySpectrum if the ideal contains 1.
int monomial_ideal_dimension(const std::vector<Monomial>& gens, int nvars);
/// Keeps only the minimal generators of a monomial ideal, sorted.
std::vector<Monomial> minimalize_monomials(std::vector<Monomial> gens, const MonomialOrder& order);

/// Polynomial ideal with lazily computed, per-order cached bases. Copies
/// share the cache; the cache is guarded so concurrent readers are safe.
class Ideal {
 public:
  Ideal() = default;
  Ideal(Field field, int nvars, std::vector<Poly> gens = {});

  static Ideal unit(Field field, int nvars);
  /// The maximal ideal of the origin, (x_1, ..., x_n).
  static Ideal maximal(Field field, int nvars);

  Field field() const { return field_; }
  int nvars() const { return nvars_; }
  const std::vector<Poly>& generators() const { return gens_; }

  /// Reduced Gröbner basis for a global order (cached).
  const std::vector<Poly>& groebner(OrderKind kind = OrderKind::grevlex) const;
  /// Local standard basis at the origin (cached).
  const LocalStandardBasis& standard_basis_local() const;

  Poly normal_form(const Poly& p, OrderKind kind = OrderKind::grevlex) const;
  bool contains(const Poly& p) const;
  bool contains(const Ideal& other) const;
  bool equals(const Ideal& other) const { return contains(other) && other.contains(*this); }
  /// Membership in the localization at the origin.
  bool contains_locally(const Poly& p) const;

  bool is_unit() const;
  /// Some generator is a local unit.
  bool is_unit_locally() const;
  /// All generators vanish at the origin.
  bool inside_maximal() const { return !is_unit_locally(); }

  std::vector<Monomial> lead_monomials(OrderKind kind = OrderKind::grevlex) const;
  int dim_global(OrderKind kind = OrderKind::grevlex) const;
  int dim_local_at_origin() const;

  Ideal operator+(const Ideal& other) const;
  Ideal with(const std::vector<Poly>& extra) const;
  Ideal translate(std::span<const FieldElem> point) const;

 private:
  struct Cache {
    std::mutex mu;
    std::map<OrderKind, std::vector<Poly>> global;
    std::unique_ptr<LocalStandardBasis> local;
  };

  Field field_ = Field::rationals();
  int nvars_ = 0;
  std::vector<Poly> gens_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

Ideal colon(const Ideal& i, const Poly& f);
Ideal colon_ideal(const Ideal& i, const Ideal& j);
Ideal intersect(const Ideal& i, const Ideal& j);

struct SaturationOptions {
  int max_steps = 64;
};
/// (I : f^infinity) by iterated colons; BudgetExceeded past max_steps.
Ideal saturate(const Ideal& i, const Poly& f, const SaturationOptions& opts = {});

/// f in sqrt(I), via 1 in I + (1 - t f) in S[t].
bool radical_membership(const Poly& f, const Ideal& i);
/// f in sqrt(I * S_(x)): the saturation (I : f^infinity) contains a local unit.
bool local_radical_membership(const Poly& f, const Ideal& i);

}  // namespace seqreg
