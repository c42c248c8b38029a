#include "seqreg/regularity.hpp"

#include <random>

#include "seqreg/errors.hpp"
#include "seqreg/linalg.hpp"

namespace seqreg {

namespace {

void require_in_maximal(const Poly& f, const DGRingSpec& spec) {
  if (f.is_local_unit()) throw InvalidInput("element " + f.to_string(spec.vars()) + " is not in the maximal ideal");
}

// Submodule K/Rel of N (K given by columns in S^g) as a presented module.
PresentedModule subquotient(const PresentedModule& n, const std::vector<Column>& k) {
  PolyMatrix km(n.field(), n.nvars(), n.ngens(), k);
  PolyMatrix rel(n.field(), n.nvars(), k.size(), preimage(km, n.relations()));
  return PresentedModule(n.ambient(), std::move(rel));
}

DGRingRealization extend(const DGRingRealization& a, const Poly& f) { return realize(koszul(a.spec(), {f})); }

DenseMatrix linear_part_rows(const std::vector<Poly>& polys, int n, Field field) {
  DenseMatrix m(field, polys.size(), static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < polys.size(); ++i) {
    auto coeffs = linear_coefficients(polys[i]);
    for (int j = 0; j < n; ++j) m.at(i, static_cast<std::size_t>(j)) = coeffs[static_cast<std::size_t>(j)];
  }
  return m;
}

FieldElem random_scalar(Field field, std::mt19937_64& rng) {
  if (field.is_rational()) {
    std::uniform_int_distribution<int> d(-100, 100);
    int v = 0;
    while (v == 0) v = d(rng);
    return field.from_int(v);
  }
  std::uniform_int_distribution<std::uint32_t> d(1, field.characteristic() - 1);
  return field.from_int(d(rng));
}

Poly derivative(const Poly& p, int var) {
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    int e = t.mono.exponent(var);
    if (e == 0) continue;
    Monomial m = t.mono;
    m.set_exponent(var, e - 1);
    out.push_back({m, t.coeff * p.field().from_int(e)});
  }
  return Poly::from_terms(p.field(), p.nvars(), std::move(out));
}

std::vector<Poly> concat(std::vector<Poly> a, const std::vector<Poly>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

bool is_regular_element(const DGRingRealization& a, const Poly& f) {
  require_in_maximal(f, a.spec());
  const PresentedModule& n = a.bottom_cohomology();
  auto ker = preimage(PolyMatrix::scalar(f, n.ngens()), n.relations());
  if (ker.empty()) return true;
  return is_locally_zero(subquotient(n, ker));
}

std::optional<std::size_t> first_irregular(const DGRingRealization& a, const std::vector<Poly>& seq) {
  std::optional<DGRingRealization> cur;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const DGRingRealization& here = cur ? *cur : a;
    if (!is_regular_element(here, seq[i])) return i;
    if (i + 1 < seq.size()) cur = extend(here, seq[i]);
  }
  return std::nullopt;
}

bool is_regular_sequence(const DGRingRealization& a, const std::vector<Poly>& seq) {
  return !first_irregular(a, seq).has_value();
}

bool admits_regular_element(const DGRingRealization& a) {
  const PresentedModule& n = a.bottom_cohomology();
  const std::size_t g = n.ngens();
  const int nv = a.nvars();
  Field f = a.field();
  PolyMatrix x(f, nv, g * static_cast<std::size_t>(nv));
  for (std::size_t j = 0; j < g; ++j) {
    Column c = x.zero_column();
    for (int i = 0; i < nv; ++i) c[static_cast<std::size_t>(i) * g + j] = Poly::variable(f, nv, i);
    x.add_column(std::move(c));
  }
  PolyMatrix rel = n.relations();
  for (int i = 1; i < nv; ++i) rel = PolyMatrix::direct_sum(rel, n.relations());
  auto socle = preimage(x, rel);
  if (socle.empty()) return true;
  return is_locally_zero(subquotient(n, socle));
}

int local_dim(const DGRingRealization& a) { return a.h0_ideal().dim_local_at_origin(); }

int embdim(const DGRingRealization& a) {
  return a.nvars() - static_cast<int>(linear_part_rows(a.h0_ideal().generators(), a.nvars(), a.field()).rank());
}

std::vector<Poly> minimal_generators(const DGRingRealization& a) {
  DenseMatrix m = linear_part_rows(a.h0_ideal().generators(), a.nvars(), a.field());
  auto pivots = m.row_reduce();
  std::vector<Poly> out;
  for (int j = 0; j < a.nvars(); ++j) {
    if (std::find(pivots.begin(), pivots.end(), static_cast<std::size_t>(j)) == pivots.end()) {
      out.push_back(Poly::variable(a.field(), a.nvars(), j));
    }
  }
  return out;
}

bool is_minimal_generating_sequence(const DGRingRealization& a, const std::vector<Poly>& seq) {
  if (static_cast<int>(seq.size()) != embdim(a)) return false;
  for (const auto& s : seq) {
    if (s.is_local_unit()) return false;
  }
  auto rows = concat(a.h0_ideal().generators(), seq);
  return static_cast<int>(linear_part_rows(rows, a.nvars(), a.field()).rank()) == a.nvars();
}

SeqDepthResult seq_depth(const DGRingRealization& a, const RegularityOptions& opts) {
  SeqDepthResult out;
  std::mt19937_64 rng(opts.seed);
  const int dim = local_dim(a);
  std::optional<DGRingRealization> cur;
  while (true) {
    const DGRingRealization& here = cur ? *cur : a;
    if (out.depth >= dim || !admits_regular_element(here)) {
      out.certified = true;
      return out;
    }
    auto gens = minimal_generators(here);
    std::optional<Poly> found;
    for (const auto& g : gens) {
      if (is_regular_element(here, g)) {
        found = g;
        break;
      }
    }
    for (int t = 0; !found && t < opts.trials && !gens.empty(); ++t) {
      Poly c(a.field(), a.nvars());
      for (const auto& g : gens) c += g.scaled(random_scalar(a.field(), rng));
      if (c.is_zero()) continue;
      if (is_regular_element(here, c)) found = c;
    }
    if (!found) {
      out.certified = false;
      return out;
    }
    out.witness.push_back(*found);
    ++out.depth;
    cur = extend(here, *found);
  }
}

CMVerdict is_local_cm(const DGRingRealization& a, const RegularityOptions& opts) {
  CMVerdict v;
  v.depth = seq_depth(a, opts);
  v.value = v.depth.depth == local_dim(a);
  v.certified = v.value || v.depth.certified;
  return v;
}

bool h0_is_regular_local(const DGRingRealization& a) { return embdim(a) == local_dim(a); }

SequenceRegularVerdict is_sequence_regular(const DGRingRealization& a) {
  SequenceRegularVerdict v;
  v.witness = minimal_generators(a);
  v.failed_at = first_irregular(a, v.witness);
  v.value = !v.failed_at.has_value();
  return v;
}

ResidueDGField residue_dg_field(const DGRingRealization& a, std::optional<std::vector<Poly>> parameters) {
  auto verdict = is_sequence_regular(a);
  if (!verdict.value) throw InvalidInput("residue DG-fields are available only in the sequence-regular case");
  ResidueDGField out;
  if (parameters) {
    if (!is_minimal_generating_sequence(a, *parameters)) {
      throw InvalidInput("parameters are not a minimal generating sequence of the maximal ideal");
    }
    out.parameters = *parameters;
  } else {
    out.parameters = verdict.witness;
  }
  out.spec = out.parameters.empty() ? a.spec() : koszul(a.spec(), out.parameters);
  DGRingRealization k = realize(out.spec);
  out.amplitude = k.amplitude();
  out.amplitude_matches = out.amplitude.amp() == a.amplitude().amp();
  out.h0_is_residue_field = local_dim(k) == 0 && embdim(k) == 0;

  DGRingSpec reduction(a.field(), a.spec().vars(), a.h0_ideal().generators());
  if (!out.parameters.empty()) reduction.add_koszul(out.parameters);
  DGRingRealization red = realize(reduction);
  const Ideal zero(a.field(), a.nvars(), {});
  PresentedModule residue = PresentedModule::cyclic(zero, Ideal::maximal(a.field(), a.nvars()).generators());
  bool ok = fingerprint(red.cohomology(0)) == fingerprint(residue);
  for (int i = red.complex().lowest_degree(); ok && i < 0; ++i) ok = !red.cohomology_locally_nonzero(i);
  out.reduction_is_residue_field = ok;

  out.flat_dimension = static_cast<int>(out.parameters.size());
  out.flat_dimension_matches = out.flat_dimension == local_dim(a);
  return out;
}

Poly determinant(const PolyMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw InvalidInput("determinant of a non-square matrix");
  if (n == 0) return Poly::constant(m.field(), m.nvars(), 1);
  if (n == 1) return m.at(0, 0);
  Poly det(m.field(), m.nvars());
  for (std::size_t j = 0; j < n; ++j) {
    if (m.at(0, j).is_zero()) continue;
    PolyMatrix minor(m.field(), m.nvars(), n - 1);
    for (std::size_t c = 0; c < n; ++c) {
      if (c == j) continue;
      Column col(m.column(c).begin() + 1, m.column(c).end());
      minor.add_column(std::move(col));
    }
    Poly term = m.at(0, j) * determinant(minor);
    det = (j % 2 == 0) ? det + term : det - term;
  }
  return det;
}

std::vector<Poly> apply_matrix(const PolyMatrix& t, const std::vector<Poly>& a) { return t.apply(a); }

ParameterChangeMatrix parameter_change_matrix(const DGRingRealization& a, const std::vector<Poly>& source,
                                              const std::vector<Poly>& target) {
  if (!is_minimal_generating_sequence(a, source) || !is_minimal_generating_sequence(a, target)) {
    throw InvalidInput("parameter change requires two minimal generating sequences of the maximal ideal");
  }
  Field f = a.field();
  const int nv = a.nvars();
  const std::size_t n = source.size();
  ParameterChangeMatrix out;
  out.source = source;
  out.target = target;
  PolyMatrix gens(f, nv, 1);
  for (const auto& s : source) gens.add_column({s});
  PolyMatrix rel(f, nv, 1);
  for (const auto& g : a.h0_ideal().generators()) rel.add_column({g});
  Lifter lifter(gens, rel);
  Ideal span = a.h0_ideal().with(source);
  std::vector<Column> rows;
  for (const auto& b : target) {
    Poly u = Poly::constant(f, nv, 1);
    if (!span.contains(b)) {
      Ideal c = colon(span, b);
      auto it = std::find_if(c.generators().begin(), c.generators().end(),
                             [](const Poly& g) { return g.is_local_unit(); });
      if (it == c.generators().end()) throw NotInSpan("target element is not in the ideal of the source sequence");
      u = *it;
    }
    Column coeffs = lifter.lift_or_throw({u * b});
    rows.push_back(std::move(coeffs));
    out.denominators.push_back(u);
  }
  out.numerators = PolyMatrix::zero(f, nv, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.numerators.at(i, j) = rows[i][j];
  }
  out.determinant_numerator = determinant(out.numerators);
  if (!out.determinant_is_unit()) throw InternalError("parameter change matrix is not invertible");
  return out;
}

bool verify_gl_invariance(const DGRingRealization& a, const std::vector<Poly>& elements, const PolyMatrix& t) {
  if (t.rows() != elements.size() || t.cols() != elements.size()) throw InvalidInput("matrix size mismatch");
  if (!determinant(t).is_local_unit()) throw InvalidInput("matrix is not invertible in the local ring");
  auto lhs = cohomology_fingerprints(realize(koszul(a.spec(), elements)).complex());
  auto rhs = cohomology_fingerprints(realize(koszul(a.spec(), apply_matrix(t, elements))).complex());
  return lhs == rhs;
}

HypothesisCheck check_cm_hypotheses(const DGRingRealization& a, const RegularityOptions& opts) {
  HypothesisCheck h;
  CMVerdict cm = is_local_cm(a, opts);
  h.local_cm = cm.value;
  h.cm_certified = cm.certified;
  h.constant_amplitude = has_constant_amplitude(a);
  return h;
}

KosAmpRecord verify_kos_amp(const DGRingRealization& a, const std::vector<Poly>& elements,
                            const RegularityOptions& opts) {
  for (const auto& e : elements) require_in_maximal(e, a.spec());
  KosAmpRecord r;
  r.hypotheses = check_cm_hypotheses(a, opts);
  r.n = static_cast<int>(elements.size());
  r.dim_h0 = local_dim(a);
  r.dim_quotient = a.h0_ideal().with(elements).dim_local_at_origin();
  r.amp_a = a.amplitude().amp();
  r.predicted = r.n - r.dim_h0 + r.dim_quotient + r.amp_a;
  r.computed = realize(koszul(a.spec(), elements)).amplitude().amp();
  return r;
}

BiconditionalRecord verify_sop(const DGRingRealization& a, const std::vector<Poly>& elements,
                               const RegularityOptions& opts) {
  BiconditionalRecord r;
  r.hypotheses = check_cm_hypotheses(a, opts);
  r.lhs = is_regular_sequence(a, elements);
  r.rhs = a.h0_ideal().with(elements).dim_local_at_origin() == local_dim(a) - static_cast<int>(elements.size());
  return r;
}

BiconditionalRecord verify_double_cm(const DGRingRealization& a, const std::vector<Poly>& elements,
                                     const RegularityOptions& opts) {
  BiconditionalRecord r;
  r.hypotheses = check_cm_hypotheses(a, opts);
  DGRingRealization h0 = realize(DGRingSpec(a.field(), a.spec().vars(), a.h0_ideal().generators()));
  r.h0_cm = is_local_cm(h0, opts).value;
  r.lhs = is_regular_sequence(a, elements);
  r.rhs = is_regular_sequence(h0, elements);
  return r;
}

MainRecord verify_main(const DGRingRealization& a, const RegularityOptions& opts) {
  MainRecord r;
  r.sequence_regular = is_sequence_regular(a).value;
  CMVerdict cm = is_local_cm(a, opts);
  r.local_cm = cm.value;
  r.cm_certified = cm.certified;
  r.h0_regular = h0_is_regular_local(a);
  r.constant_amplitude = has_constant_amplitude(a);
  return r;
}

DerivedQuotientRecord verify_derived_quotient(const DGRingRealization& a, const std::vector<Poly>& elements) {
  if (!is_sequence_regular(a).value) throw InvalidInput("derived quotients are checked over sequence-regular rings");
  for (const auto& e : elements) require_in_maximal(e, a.spec());
  DerivedQuotientRecord r;
  r.lhs = is_sequence_regular(realize(koszul(a.spec(), elements))).value;
  DGRingRealization q = realize(DGRingSpec(a.field(), a.spec().vars(), a.h0_ideal().with(elements).generators()));
  r.rhs = h0_is_regular_local(q);
  if (r.rhs) {
    const int n = a.nvars();
    std::vector<Poly> rows = a.h0_ideal().generators();
    std::size_t rank = linear_part_rows(rows, n, a.field()).rank();
    auto try_add = [&](const Poly& p) {
      rows.push_back(p);
      std::size_t next = linear_part_rows(rows, n, a.field()).rank();
      if (next > rank) {
        rank = next;
        r.extension.push_back(p);
      } else {
        rows.pop_back();
      }
    };
    for (const auto& e : elements) try_add(e);
    for (int j = 0; j < n; ++j) try_add(Poly::variable(a.field(), n, j));
  }
  return r;
}

std::vector<PointVerdict> seq_regular_at_points(const DGRingSpec& spec,
                                                const std::vector<std::vector<FieldElem>>& points) {
  std::vector<PointVerdict> out;
  const auto h0 = spec.h0_generators();
  const int n = spec.nvars();
  for (const auto& p : points) {
    for (const auto& g : h0) {
      if (!g.eval(p).is_zero()) throw InvalidInput("point is not on the locus of H^0");
    }
    PointVerdict v;
    v.point = p;
    DGRingRealization local = realize(localize_at_point(spec, p));
    v.sequence_regular = is_sequence_regular(local).value;
    v.h0_regular = h0_is_regular_local(local);
    DenseMatrix jac(spec.field(), h0.size(), static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < h0.size(); ++i) {
      for (int j = 0; j < n; ++j) jac.at(i, static_cast<std::size_t>(j)) = derivative(h0[i], j).eval(p);
    }
    v.jacobian_regular = n - static_cast<int>(jac.rank()) == local_dim(local);
    out.push_back(std::move(v));
  }
  return out;
}

ComplexOfModules koszul_module(const DGRingRealization& a, const std::vector<Poly>& elements) {
  ComplexOfModules c = a.complex();
  for (const auto& e : elements) c = koszul_cone(c, e);
  return c;
}

NakayamaRecord nakayama_check(const DGRingRealization& a, const std::vector<Poly>& module_elements) {
  auto verdict = is_sequence_regular(a);
  if (!verdict.value) throw InvalidInput("the Nakayama check needs a sequence-regular DG-ring");
  NakayamaRecord r;
  r.module_zero = is_acyclic_at_origin(koszul_module(a, module_elements));
  r.kappa_tensor_zero = is_acyclic_at_origin(koszul_module(a, concat(verdict.witness, module_elements)));
  return r;
}

bool in_small_support(const DGRingSpec& spec, const std::vector<Poly>& module_elements,
                      const std::vector<FieldElem>& point) {
  DGRingRealization local = realize(localize_at_point(spec, point));
  auto verdict = is_sequence_regular(local);
  if (!verdict.value) throw InvalidInput("small support is computed at sequence-regular points only");
  std::vector<Poly> moved;
  for (const auto& e : module_elements) moved.push_back(e.translate(point));
  return !is_acyclic_at_origin(koszul_module(local, concat(verdict.witness, moved)));
}

RegularityReport regularity_report(const DGRingRealization& a, const RegularityOptions& opts) {
  RegularityReport r;
  r.amplitude = a.amplitude();
  a.h0();
  r.local_dim = local_dim(a);
  r.embdim = embdim(a);
  r.seq_depth = seq_depth(a, opts);
  r.depth = r.seq_depth.depth + r.amplitude.inf;
  r.is_local_cm = r.seq_depth.depth == r.local_dim;
  r.h0_is_regular_local = r.embdim == r.local_dim;
  r.sequence_regular = is_sequence_regular(a);
  r.constant_amplitude = has_constant_amplitude(a);
  if (r.sequence_regular.value) r.kappa = residue_dg_field(a);
  if (!r.seq_depth.certified) {
    r.caveats.push_back("seq.depth is a lower bound: " + std::to_string(opts.trials) +
                        " random trials failed although a regular element exists");
  }
  if (r.is_local_cm && r.constant_amplitude) {
    r.caveats.push_back("Cohen-Macaulay at every prime is inferred from local-CM plus constant amplitude "
                        "over a catenary H^0, not checked prime by prime");
  }
  r.caveats.push_back("isomorphisms of cohomology are certified by fingerprints only");
  return r;
}

}  // namespace seqreg
