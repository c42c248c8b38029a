#pragma once

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "seqreg/ideal.hpp"
#include "seqreg/submodule.hpp"

namespace seqreg {

/// A prime of S given by generators the caller asserts to be prime, or the
/// maximal ideal of a rational point. Primality is not verified.
struct PrimeIdealSpec {
  std::vector<Poly> generators;
  std::optional<std::vector<FieldElem>> point;

  static PrimeIdealSpec at_point(Field field, std::vector<FieldElem> coords);
  static PrimeIdealSpec asserted(std::vector<Poly> gens);
};

/// Finitely presented module over S/J: coker of a relation matrix whose
/// columns live in S^g. The stored relations always include J * e_i for
/// every generator.
class PresentedModule {
 public:
  PresentedModule() = default;
  PresentedModule(Ideal ambient, PolyMatrix relations);

  static PresentedModule free(Ideal ambient, std::size_t rank);
  /// S / (J + I).
  static PresentedModule cyclic(Ideal ambient, const std::vector<Poly>& ideal_gens);
  static PresentedModule zero(Ideal ambient) { return free(std::move(ambient), 0); }
  static PresentedModule direct_sum(const PresentedModule& a, const PresentedModule& b);

  const Ideal& ambient() const { return ambient_; }
  Field field() const { return ambient_.field(); }
  int nvars() const { return ambient_.nvars(); }
  std::size_t ngens() const { return relations_.rows(); }
  const PolyMatrix& relations() const { return relations_; }

  /// Whether v in S^g maps to zero in the module.
  bool is_relation(const Column& v) const;
  const SubmoduleBasis& relation_basis() const;

  PresentedModule translate(std::span<const FieldElem> point) const;

 private:
  Ideal ambient_;
  PolyMatrix relations_;
  struct Cache {
    std::mutex mu;
    std::unique_ptr<SubmoduleBasis> basis;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// A homomorphism given by its matrix on generators (rows index target
/// generators). Construction checks that source relations map into target
/// relations.
class ModuleMap {
 public:
  ModuleMap(PresentedModule source, PresentedModule target, PolyMatrix matrix);

  const PresentedModule& source() const { return source_; }
  const PresentedModule& target() const { return target_; }
  const PolyMatrix& matrix() const { return matrix_; }

  /// Every source generator maps to zero.
  bool is_zero() const;

 private:
  PresentedModule source_;
  PresentedModule target_;
  PolyMatrix matrix_;
};

/// Bounded cochain complex of presented modules in degrees <= 0, with
/// d^i : C^i -> C^{i+1}. Well-definedness of every differential and
/// d^{i+1} d^i = 0 are verified at construction.
class ComplexOfModules {
 public:
  ComplexOfModules() = default;
  /// Missing differentials are zero; missing terms between the extreme
  /// degrees are the zero module.
  ComplexOfModules(std::map<int, PresentedModule> terms, std::map<int, PolyMatrix> differentials);

  static ComplexOfModules single(PresentedModule m, int degree = 0);

  int lowest_degree() const { return lo_; }
  int highest_degree() const { return hi_; }
  /// The zero module (over the ambient ring) outside the stored range.
  const PresentedModule& term(int i) const;
  /// Matrix of d^i (rows: generators of C^{i+1}).
  PolyMatrix differential(int i) const;
  const Ideal& ambient() const { return ambient_; }

 private:
  Ideal ambient_;
  int lo_ = 0;
  int hi_ = 0;
  std::map<int, PresentedModule> terms_;
  std::map<int, PolyMatrix> diffs_;
  PresentedModule zero_;
};

/// ker(d^i) / im(d^{i-1}), pruned.
PresentedModule homology_at(const ComplexOfModules& c, int i);

/// Removes generators killed by relations with a nonzero constant entry.
/// The result is isomorphic over S.
PresentedModule prune(const PresentedModule& m);

/// Ann(M) as an ideal of S (contains J).
Ideal annihilator(const PresentedModule& m);

/// Minimal number of generators of M localized at the origin (Nakayama).
int min_generators_at_origin(const PresentedModule& m);
bool is_locally_zero(const PresentedModule& m);
/// M localized at p is zero, i.e. Ann(M) is not contained in p.
bool is_locally_zero(const PresentedModule& m, const PrimeIdealSpec& p);

/// dim_k M / m^k M for k = 1..depth, m the maximal ideal of the origin.
std::vector<long> madic_dimensions(const PresentedModule& m, int depth = 4);

/// Isomorphism invariants of M localized at the origin. Equality of
/// fingerprints is the working notion of "isomorphic".
struct ModuleFingerprint {
  int min_generators = 0;
  /// Minimal generators of the local lead ideal of Ann(M).
  std::vector<Monomial> annihilator_lead;
  int annihilator_dim = kEmptySpectrum;
  std::vector<long> madic_dims;

  friend bool operator==(const ModuleFingerprint&, const ModuleFingerprint&) = default;
  std::string to_string(const std::vector<std::string>& names) const;
};

ModuleFingerprint fingerprint(const PresentedModule& m, int depth = 4);

/// M (x)_{S/J} S/J' for J contained in J'.
PresentedModule base_change(const PresentedModule& m, const Ideal& target_ambient);

}  // namespace seqreg
