#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "seqreg/dgring.hpp"

namespace seqreg {

struct RegularityOptions {
  /// Random combinations tried per stage of the seq.depth search.
  int trials = 32;
  std::uint64_t seed = 0;
};

/// Elements below are always in the coordinates of the realization, i.e.
/// with the base point moved to the origin.

/// Multiplication by f is injective on H^inf(A) at the origin. Throws
/// InvalidInput when f is a local unit.
bool is_regular_element(const DGRingRealization& a, const Poly& f);
/// Index of the first element that fails, or nullopt if the sequence is regular.
std::optional<std::size_t> first_irregular(const DGRingRealization& a, const std::vector<Poly>& seq);
bool is_regular_sequence(const DGRingRealization& a, const std::vector<Poly>& seq);
/// Exact test: some element of the maximal ideal is A-regular, i.e. the
/// socle (0 :_N m) of N = H^inf(A) vanishes at the origin.
bool admits_regular_element(const DGRingRealization& a);

struct SeqDepthResult {
  int depth = 0;
  std::vector<Poly> witness;
  /// False when the random search gave up although a regular element exists,
  /// so depth is only a lower bound.
  bool certified = false;
};
SeqDepthResult seq_depth(const DGRingRealization& a, const RegularityOptions& opts = {});

int local_dim(const DGRingRealization& a);
/// n minus the rank of the linear parts of the generators of J_A.
int embdim(const DGRingRealization& a);
/// Variables whose images form a minimal generating sequence of the maximal
/// ideal of H^0(A) (non-pivot columns of the reduced linear parts of J_A).
std::vector<Poly> minimal_generators(const DGRingRealization& a);
/// Whether `seq` is a minimal generating sequence of the maximal ideal.
bool is_minimal_generating_sequence(const DGRingRealization& a, const std::vector<Poly>& seq);

struct CMVerdict {
  bool value = false;
  bool certified = false;
  SeqDepthResult depth;
};
CMVerdict is_local_cm(const DGRingRealization& a, const RegularityOptions& opts = {});
bool h0_is_regular_local(const DGRingRealization& a);

struct SequenceRegularVerdict {
  bool value = false;
  /// The minimal generating sequence that was tested.
  std::vector<Poly> witness;
  std::optional<std::size_t> failed_at;
};
SequenceRegularVerdict is_sequence_regular(const DGRingRealization& a);

struct ResidueDGField {
  DGRingSpec spec;
  std::vector<Poly> parameters;
  int flat_dimension = 0;
  AmplitudeProfile amplitude;
  bool amplitude_matches = false;
  /// J of kappa(A) has local dimension 0 and embedding dimension 0.
  bool h0_is_residue_field = false;
  /// K(H^0(A); parameters) is the residue field concentrated in degree 0.
  bool reduction_is_residue_field = false;
  bool flat_dimension_matches = false;
  bool all_checks_pass() const {
    return amplitude_matches && h0_is_residue_field && reduction_is_residue_field && flat_dimension_matches;
  }
};
/// kappa(A) from the given regular system of parameters (default: the one
/// found by is_sequence_regular). Throws InvalidInput unless A is
/// sequence-regular.
ResidueDGField residue_dg_field(const DGRingRealization& a, std::optional<std::vector<Poly>> parameters = {});

/// Row i expresses target_i as (sum_j numerators(i, j) source_j) / denominators[i]
/// modulo J_A, valid in the local ring.
struct ParameterChangeMatrix {
  std::vector<Poly> source;
  std::vector<Poly> target;
  PolyMatrix numerators;
  std::vector<Poly> denominators;
  Poly determinant_numerator;
  bool determinant_is_unit() const { return determinant_numerator.is_local_unit(); }
};
ParameterChangeMatrix parameter_change_matrix(const DGRingRealization& a, const std::vector<Poly>& source,
                                              const std::vector<Poly>& target);

Poly determinant(const PolyMatrix& m);
/// T * a for a square matrix T and a column of elements.
std::vector<Poly> apply_matrix(const PolyMatrix& t, const std::vector<Poly>& a);
/// Cohomology fingerprints of K(A; a) and K(A; T a) agree. Throws
/// InvalidInput unless det(T) is a local unit.
bool verify_gl_invariance(const DGRingRealization& a, const std::vector<Poly>& elements, const PolyMatrix& t);

struct HypothesisCheck {
  bool local_cm = false;
  bool cm_certified = false;
  bool constant_amplitude = false;
  bool holds() const { return local_cm && constant_amplitude; }
};
HypothesisCheck check_cm_hypotheses(const DGRingRealization& a, const RegularityOptions& opts = {});

struct KosAmpRecord {
  HypothesisCheck hypotheses;
  int n = 0;
  int dim_h0 = 0;
  int dim_quotient = 0;
  int amp_a = 0;
  int predicted = 0;
  int computed = 0;
  bool equal() const { return predicted == computed; }
};
KosAmpRecord verify_kos_amp(const DGRingRealization& a, const std::vector<Poly>& elements,
                            const RegularityOptions& opts = {});

struct BiconditionalRecord {
  HypothesisCheck hypotheses;
  /// Extra hypothesis of the double-CM check: H^0(A) is Cohen-Macaulay.
  bool h0_cm = true;
  bool lhs = false;
  bool rhs = false;
  bool holds() const { return lhs == rhs; }
};
/// Regular sequence iff dim H^0(A)/(x) = dim H^0(A) - n.
BiconditionalRecord verify_sop(const DGRingRealization& a, const std::vector<Poly>& elements,
                               const RegularityOptions& opts = {});
/// A-regular iff H^0(A)-regular.
BiconditionalRecord verify_double_cm(const DGRingRealization& a, const std::vector<Poly>& elements,
                                     const RegularityOptions& opts = {});

struct MainRecord {
  bool sequence_regular = false;
  bool local_cm = false;
  bool cm_certified = false;
  bool h0_regular = false;
  bool constant_amplitude = false;
  bool holds() const { return sequence_regular == (local_cm && h0_regular); }
};
MainRecord verify_main(const DGRingRealization& a, const RegularityOptions& opts = {});

struct DerivedQuotientRecord {
  /// K(A; elements) is sequence-regular.
  bool lhs = false;
  /// H^0(A)/(elements) is a regular local ring.
  bool rhs = false;
  /// When rhs holds: minimal generators of the ideal extended to a regular
  /// system of parameters.
  std::vector<Poly> extension;
  bool holds() const { return lhs == rhs; }
};
DerivedQuotientRecord verify_derived_quotient(const DGRingRealization& a, const std::vector<Poly>& elements);

struct PointVerdict {
  std::vector<FieldElem> point;
  bool sequence_regular = false;
  /// Jacobian criterion for H^0 at the point (independent of the tower).
  bool jacobian_regular = false;
  bool h0_regular = false;
};
/// Points are in the coordinates of `spec` (ignoring its base point); each
/// must lie on V(J_A).
std::vector<PointVerdict> seq_regular_at_points(const DGRingSpec& spec,
                                                const std::vector<std::vector<FieldElem>>& points);

struct NakayamaRecord {
  bool module_zero = false;
  bool kappa_tensor_zero = false;
  bool holds() const { return module_zero == kappa_tensor_zero; }
};
/// M = K(A; elements) as a DG-module (elements may be units).
NakayamaRecord nakayama_check(const DGRingRealization& a, const std::vector<Poly>& module_elements);
/// M (x) kappa(A, p) is nonzero at the rational point p (spec coordinates).
bool in_small_support(const DGRingSpec& spec, const std::vector<Poly>& module_elements,
                      const std::vector<FieldElem>& point);

/// Complex of the DG-module K(A; elements) over the realization.
ComplexOfModules koszul_module(const DGRingRealization& a, const std::vector<Poly>& elements);

struct RegularityReport {
  AmplitudeProfile amplitude;
  int local_dim = 0;
  int embdim = 0;
  SeqDepthResult seq_depth;
  int depth = 0;
  bool is_local_cm = false;
  bool h0_is_regular_local = false;
  SequenceRegularVerdict sequence_regular;
  bool constant_amplitude = false;
  std::optional<ResidueDGField> kappa;
  std::vector<std::string> caveats;
};
RegularityReport regularity_report(const DGRingRealization& a, const RegularityOptions& opts = {});

}  // namespace seqreg
