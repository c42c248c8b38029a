#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "seqreg/poly.hpp"

namespace seqreg {

/// A term of a vector in a free module S^r: monomial times basis vector e_comp.
struct ModTerm {
  Monomial mono;
  std::uint32_t comp = 0;
  FieldElem coeff;
};

/// Term-over-position module order refined by an elimination block: every
/// component index below `elim_block` is larger than every component at or
/// above it. elim_block == 0 means plain term-over-position.
class ModuleOrder {
 public:
  ModuleOrder() = default;
  explicit ModuleOrder(MonomialOrder mono, std::uint32_t elim_block = 0) : mono_(mono), elim_(elim_block) {}

  const MonomialOrder& monomial_order() const { return mono_; }
  std::uint32_t elim_block() const { return elim_; }

  int compare(const Monomial& a, std::uint32_t ca, const Monomial& b, std::uint32_t cb) const {
    if (elim_ != 0) {
      bool ha = ca >= elim_, hb = cb >= elim_;
      if (ha != hb) return hb ? 1 : -1;
    }
    int c = mono_.compare(a, b);
    if (c != 0) return c;
    if (ca != cb) return ca < cb ? 1 : -1;
    return 0;
  }
  int compare(const ModTerm& a, const ModTerm& b) const { return compare(a.mono, a.comp, b.mono, b.comp); }

 private:
  MonomialOrder mono_;
  std::uint32_t elim_ = 0;
};

/// Sparse module vector, terms strictly descending under a ModuleOrder.
using ModVec = std::vector<ModTerm>;

/// Column vector of polynomials (an element of S^r).
using Column = std::vector<Poly>;

ModVec to_modvec(std::span<const Poly> column, const ModuleOrder& order, std::uint32_t comp_offset = 0);
ModVec to_modvec(const Poly& p, const ModuleOrder& order, std::uint32_t comp = 0);
/// Components in [comp_offset, comp_offset + rank) are returned; others dropped.
Column from_modvec(const ModVec& v, Field field, int nvars, std::size_t rank, std::uint32_t comp_offset = 0);
Poly poly_from_modvec(const ModVec& v, Field field, int nvars);

/// h - c * m * g, all under `order`.
ModVec sub_scaled(const ModVec& h, const FieldElem& c, const Monomial& m, const ModVec& g, const ModuleOrder& order);
/// Sorts arbitrary terms and combines duplicates.
ModVec normalize_terms(std::vector<ModTerm> terms, const ModuleOrder& order);
/// Maximal total degree over terms.
int max_degree(const ModVec& v);

struct GroebnerOptions {
  std::size_t max_pairs = 2'000'000;
};

/// A reduced Gröbner basis of a submodule of S^r under a global ModuleOrder,
/// built by Buchberger's algorithm with normal selection on sugar degree and
/// the Gebauer–Möller criteria. Deterministic given generator order.
class GroebnerBasis {
 public:
  GroebnerBasis(Field field, int nvars, ModuleOrder order) : field_(field), nvars_(nvars), order_(order) {}

  static GroebnerBasis compute(Field field, int nvars, const ModuleOrder& order, std::vector<ModVec> gens,
                               const GroebnerOptions& opts = {});

  Field field() const { return field_; }
  int nvars() const { return nvars_; }
  const ModuleOrder& order() const { return order_; }
  /// Monic, sorted by ascending leading term.
  const std::vector<ModVec>& elements() const { return elems_; }

  /// Full normal form (fully reduced remainder).
  ModVec reduce(ModVec f) const;
  /// Rank-1 case: the basis is {1}.
  bool is_unit_ideal() const;

  std::size_t pairs_processed() const { return pairs_processed_; }

 private:
  Field field_;
  int nvars_;
  ModuleOrder order_;
  std::vector<ModVec> elems_;
  std::size_t pairs_processed_ = 0;
};

/// Reduces f by `reducers` (each monic, nonzero). Full reduction.
ModVec reduce_by(ModVec f, std::span<const ModVec> reducers, const ModuleOrder& order);

}  // namespace seqreg
