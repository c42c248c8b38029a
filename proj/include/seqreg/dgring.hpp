#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "seqreg/module.hpp"

namespace seqreg {

struct KoszulStep {
  std::vector<Poly> elements;
};

/// Square-zero extension by a module placed in degree -shift.
struct TrivExtStep {
  PresentedModule module;
  int shift = 1;
};

using TowerStep = std::variant<KoszulStep, TrivExtStep>;

/// A DG-ring given as a tower over a quotient S/J: Koszul extensions and
/// trivial extensions, optionally based at a rational point other than the
/// origin. Validation happens when the tower is realized.
class DGRingSpec {
 public:
  DGRingSpec() = default;
  DGRingSpec(Field field, std::vector<std::string> vars, std::vector<Poly> base_ideal);

  Field field() const { return field_; }
  const std::vector<std::string>& vars() const { return vars_; }
  int nvars() const { return static_cast<int>(vars_.size()); }
  const std::vector<Poly>& base_ideal() const { return base_; }
  const std::vector<TowerStep>& steps() const { return steps_; }
  const std::optional<std::vector<FieldElem>>& point() const { return point_; }
  const std::string& label() const { return label_; }

  DGRingSpec& add_koszul(std::vector<Poly> elements);
  DGRingSpec& add_trivext(PresentedModule module, int shift);
  DGRingSpec& set_point(std::vector<FieldElem> point);
  DGRingSpec& set_label(std::string label);

  /// Generators of J plus every Koszul element, in the spec's coordinates.
  std::vector<Poly> h0_generators() const;
  /// Every defining polynomial translated so the base point becomes the
  /// origin; the result has no point.
  DGRingSpec localized() const;

  std::string describe() const;

 private:
  Field field_ = Field::rationals();
  std::vector<std::string> vars_;
  std::vector<Poly> base_;
  std::vector<TowerStep> steps_;
  std::optional<std::vector<FieldElem>> point_;
  std::string label_;
};

DGRingSpec koszul(const DGRingSpec& spec, std::vector<Poly> elements);
/// Re-bases the tower at `point` (given in the original coordinates of the
/// spec, ignoring any previous base point) and translates it to the origin.
DGRingSpec localize_at_point(const DGRingSpec& spec, std::vector<FieldElem> point);

/// Cone of multiplication by a on a complex: K^i = C^i + C^{i+1} with
/// d = [[d^i, a], [0, -d^{i+1}]].
ComplexOfModules koszul_cone(const ComplexOfModules& c, const Poly& a);

struct AmplitudeProfile {
  int inf = 0;
  int sup = 0;
  int amp() const { return sup - inf; }
  friend bool operator==(const AmplitudeProfile&, const AmplitudeProfile&) = default;
};

/// The explicit complex of a tower localized at the origin, with its H^0
/// ideal and lazily cached cohomology.
class DGRingRealization {
 public:
  static DGRingRealization realize(const DGRingSpec& spec);

  /// The localized spec that was realized.
  const DGRingSpec& spec() const { return spec_; }
  Field field() const { return spec_.field(); }
  int nvars() const { return spec_.nvars(); }
  const ComplexOfModules& complex() const { return complex_; }
  /// J_A, the ideal with H^0(A) = S/J_A.
  const Ideal& h0_ideal() const { return h0_; }
  /// H^0 ideal after cross-checking S/J_A against homology in degree 0;
  /// throws InternalError on mismatch.
  const Ideal& h0() const;

  const PresentedModule& cohomology(int i) const;
  bool cohomology_locally_nonzero(int i) const;
  AmplitudeProfile amplitude() const;
  /// H^{inf}(A).
  const PresentedModule& bottom_cohomology() const { return cohomology(amplitude().inf); }

 private:
  DGRingSpec spec_;
  ComplexOfModules complex_;
  Ideal h0_;
  struct Cache {
    std::mutex mu;
    std::map<int, PresentedModule> cohomology;
    std::optional<AmplitudeProfile> amplitude;
    bool h0_checked = false;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

inline DGRingRealization realize(const DGRingSpec& spec) { return DGRingRealization::realize(spec); }

/// Supp(H^inf) = Spec(H^0) locally at the origin: every generator of
/// Ann(H^inf) lies in the radical of J_A localized at the origin.
bool has_constant_amplitude(const DGRingRealization& a);

/// Cohomology fingerprints in every degree of the complex.
std::map<int, ModuleFingerprint> cohomology_fingerprints(const ComplexOfModules& c);
/// Every cohomology module of the complex vanishes at the origin.
bool is_acyclic_at_origin(const ComplexOfModules& c);

}  // namespace seqreg
