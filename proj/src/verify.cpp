#include "seqreg/verify.hpp"

#include <random>

#include "seqreg/errors.hpp"
#include "seqreg/points.hpp"

namespace seqreg {

namespace {

constexpr std::pair<Property, std::string_view> kNames[] = {
    {Property::main, "main"},
    {Property::kos_amp, "kos-amp"},
    {Property::sop, "sop"},
    {Property::double_cm, "double-cm"},
    {Property::gl, "gl"},
    {Property::derived_quotient, "derived-quotient"},
    {Property::redka, "redka"},
    {Property::nakayama, "nakayama"},
    {Property::serre_points, "serre-points"},
    {Property::engine, "engine"},
};

std::vector<std::string> names_of(const std::vector<Poly>& ps, const std::vector<std::string>& vars) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string(vars));
  return out;
}

std::string point_string(const std::vector<FieldElem>& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? ", " : "") + p[i].to_string();
  return s + ")";
}

std::vector<Poly> localized_elements(const TowerDocument& doc) {
  if (!doc.spec.point()) return doc.elements;
  std::vector<Poly> out;
  for (const auto& e : doc.elements) out.push_back(e.translate(*doc.spec.point()));
  return out;
}

const std::vector<Poly>& require_elements(const TowerDocument& doc, Property p) {
  if (doc.elements.empty()) {
    throw InvalidInput("property " + std::string(property_name(p)) + " needs an 'elements' line");
  }
  return doc.elements;
}

FieldElem nonzero_scalar(Field f, std::mt19937_64& rng) {
  if (f.is_rational()) {
    std::uniform_int_distribution<int> d(1, 9);
    std::bernoulli_distribution sign(0.5);
    return f.from_int(sign(rng) ? d(rng) : -d(rng));
  }
  std::uniform_int_distribution<std::uint32_t> d(1, f.characteristic() - 1);
  return f.from_int(d(rng));
}

Poly random_term(Field f, int n, int degree, std::mt19937_64& rng) {
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  std::uniform_int_distribution<int> var(0, n - 1);
  for (int k = 0; k < degree; ++k) ++e[static_cast<std::size_t>(var(rng))];
  return Poly::monomial(f, n, Monomial(e), nonzero_scalar(f, rng));
}

// Invertible over the local ring: an invertible constant matrix plus
// entries from the maximal ideal.
PolyMatrix random_local_gl(Field f, int nvars, std::size_t size, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  while (true) {
    PolyMatrix t = PolyMatrix::zero(f, nvars, size, size);
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = 0; j < size; ++j) {
        if (coin(rng) || i == j) t.at(i, j) = Poly::constant(f, nvars, nonzero_scalar(f, rng));
        if (nvars > 0 && coin(rng)) t.at(i, j) += random_term(f, nvars, 1 + static_cast<int>(coin(rng)), rng);
      }
    }
    if (determinant(t).is_local_unit()) return t;
  }
}

PropertyVerdict verdict(Property p) {
  PropertyVerdict v;
  v.property = p;
  return v;
}

void hypotheses_details(PropertyVerdict& v, const HypothesisCheck& h) {
  v.details.emplace_back("local_cm", h.local_cm);
  v.details.emplace_back("cm_certified", h.cm_certified);
  v.details.emplace_back("constant_amplitude", h.constant_amplitude);
  v.certified = h.cm_certified;
}

// Shared shape of the biconditional checks: hypotheses first, then the
// two sides.
PropertyVerdict biconditional(Property p, const BiconditionalRecord& r) {
  PropertyVerdict v = verdict(p);
  hypotheses_details(v, r.hypotheses);
  if (p == Property::double_cm) v.details.emplace_back("h0_cm", r.h0_cm);
  v.details.emplace_back("lhs", r.lhs);
  v.details.emplace_back("rhs", r.rhs);
  const bool hyp = r.hypotheses.holds() && (p != Property::double_cm || r.h0_cm);
  if (!hyp) {
    v.outcome = Outcome::not_applicable;
    v.message = "hypotheses not met";
  } else if (r.holds()) {
    v.outcome = Outcome::pass;
  } else {
    v.outcome = Outcome::counterexample;
    v.message = "the two sides of the equivalence differ";
  }
  return v;
}

PropertyVerdict run_main(const DGRingRealization& a, const VerifyOptions& opts) {
  PropertyVerdict v = verdict(Property::main);
  MainRecord r = verify_main(a, opts.regularity);
  SeqDepthResult d = seq_depth(a, opts.regularity);
  const int dim = local_dim(a);
  v.certified = r.cm_certified;
  v.details.emplace_back("sequence_regular", r.sequence_regular);
  v.details.emplace_back("local_cm", r.local_cm);
  v.details.emplace_back("h0_regular", r.h0_regular);
  v.details.emplace_back("constant_amplitude", r.constant_amplitude);
  v.details.emplace_back("seq_depth", std::int64_t{d.depth});
  v.details.emplace_back("local_dim", std::int64_t{dim});
  if (d.depth > dim) {
    v.outcome = Outcome::counterexample;
    v.message = "seq.depth exceeds the dimension of H^0";
  } else if (r.sequence_regular && !r.constant_amplitude) {
    v.outcome = Outcome::counterexample;
    v.message = "sequence-regular without constant amplitude";
  } else if (r.holds()) {
    v.outcome = Outcome::pass;
  } else if (r.cm_certified) {
    v.outcome = Outcome::counterexample;
    v.message = "sequence-regularity differs from (local-CM and H^0 regular)";
  } else {
    v.outcome = Outcome::inconclusive;
    v.message = "depth search exhausted without a certificate";
  }
  return v;
}

PropertyVerdict run_kos_amp(const DGRingRealization& a, const std::vector<Poly>& elems, const VerifyOptions& opts) {
  PropertyVerdict v = verdict(Property::kos_amp);
  KosAmpRecord r = verify_kos_amp(a, elems, opts.regularity);
  hypotheses_details(v, r.hypotheses);
  v.details.emplace_back("n", std::int64_t{r.n});
  v.details.emplace_back("dim_h0", std::int64_t{r.dim_h0});
  v.details.emplace_back("dim_quotient", std::int64_t{r.dim_quotient});
  v.details.emplace_back("amp", std::int64_t{r.amp_a});
  v.details.emplace_back("predicted", std::int64_t{r.predicted});
  v.details.emplace_back("computed", std::int64_t{r.computed});
  if (!r.hypotheses.holds()) {
    v.outcome = Outcome::not_applicable;
    v.message = "hypotheses not met";
  } else if (r.equal()) {
    v.outcome = Outcome::pass;
  } else {
    v.outcome = Outcome::counterexample;
    v.message = "amplitude formula differs from the computed amplitude";
  }
  return v;
}

PropertyVerdict run_gl(const DGRingRealization& a, const TowerDocument& doc, const VerifyOptions& opts) {
  PropertyVerdict v = verdict(Property::gl);
  std::mt19937_64 rng(opts.regularity.seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<Poly> elems = localized_elements(doc);
  auto seq = is_sequence_regular(a);
  if (elems.empty()) elems = seq.witness;
  if (elems.empty()) {
    v.outcome = Outcome::not_applicable;
    v.message = "no elements to transform";
    return v;
  }
  std::vector<PolyMatrix> ts = doc.matrices;
  if (ts.empty()) {
    for (int k = 0; k < opts.matrices; ++k) ts.push_back(random_local_gl(a.field(), a.nvars(), elems.size(), rng));
  }
  std::int64_t agree = 0;
  for (const auto& t : ts) agree += verify_gl_invariance(a, elems, t) ? 1 : 0;
  v.details.emplace_back("matrices", static_cast<std::int64_t>(ts.size()));
  v.details.emplace_back("agreeing", agree);
  bool ok = agree == static_cast<std::int64_t>(ts.size());
  if (seq.value && !seq.witness.empty()) {
    // A second minimal generating sequence: a local GL-transform of the
    // first plus terms of order two.
    PolyMatrix t = random_local_gl(a.field(), a.nvars(), seq.witness.size(), rng);
    std::vector<Poly> other = apply_matrix(t, seq.witness);
    std::bernoulli_distribution coin(0.5);
    for (auto& b : other) {
      if (coin(rng)) b += random_term(a.field(), a.nvars(), 2, rng);
    }
    ResidueDGField k1 = residue_dg_field(a);
    ResidueDGField k2 = residue_dg_field(a, other);
    bool same = cohomology_fingerprints(realize(k1.spec).complex()) ==
                cohomology_fingerprints(realize(k2.spec).complex());
    v.details.emplace_back("second_parameters", names_of(other, a.spec().vars()));
    v.details.emplace_back("residue_fields_agree", same);
    ok = ok && same;
  }
  v.outcome = ok ? Outcome::pass : Outcome::counterexample;
  if (!ok) v.message = "cohomology fingerprints differ";
  return v;
}

PropertyVerdict run_redka(const DGRingRealization& a) {
  PropertyVerdict v = verdict(Property::redka);
  if (!is_sequence_regular(a).value) {
    v.outcome = Outcome::not_applicable;
    v.message = "not sequence-regular";
    return v;
  }
  ResidueDGField k = residue_dg_field(a);
  v.details.emplace_back("parameters", names_of(k.parameters, a.spec().vars()));
  v.details.emplace_back("flat_dimension", std::int64_t{k.flat_dimension});
  v.details.emplace_back("local_dim", std::int64_t{local_dim(a)});
  v.details.emplace_back("amplitude_matches", k.amplitude_matches);
  v.details.emplace_back("h0_is_residue_field", k.h0_is_residue_field);
  v.details.emplace_back("reduction_is_residue_field", k.reduction_is_residue_field);
  v.outcome = k.all_checks_pass() ? Outcome::pass : Outcome::counterexample;
  if (!k.all_checks_pass()) v.message = "residue DG-field checks failed";
  return v;
}

PropertyVerdict run_derived_quotient(const DGRingRealization& a, const std::vector<Poly>& elems) {
  PropertyVerdict v = verdict(Property::derived_quotient);
  if (!is_sequence_regular(a).value) {
    v.outcome = Outcome::not_applicable;
    v.message = "not sequence-regular";
    return v;
  }
  DerivedQuotientRecord r = verify_derived_quotient(a, elems);
  v.details.emplace_back("koszul_sequence_regular", r.lhs);
  v.details.emplace_back("quotient_regular", r.rhs);
  v.details.emplace_back("extension", names_of(r.extension, a.spec().vars()));
  bool ok = r.holds();
  if (ok && r.rhs && !is_minimal_generating_sequence(a, r.extension)) ok = false;
  v.outcome = ok ? Outcome::pass : Outcome::counterexample;
  if (!ok) v.message = r.holds() ? "extension is not a regular system of parameters" : "the two sides differ";
  return v;
}

std::vector<std::vector<FieldElem>> points_for(const TowerDocument& doc, const VerifyOptions& opts,
                                               std::uint64_t salt) {
  if (!doc.points.empty()) return doc.points;
  std::mt19937_64 rng(opts.regularity.seed ^ salt);
  Ideal locus(doc.spec.field(), doc.spec.nvars(), doc.spec.h0_generators());
  return sample_points(locus, static_cast<std::size_t>(opts.points), rng);
}

PropertyVerdict run_nakayama(const DGRingRealization& a, const TowerDocument& doc, const VerifyOptions& opts) {
  PropertyVerdict v = verdict(Property::nakayama);
  if (!is_sequence_regular(a).value) {
    v.outcome = Outcome::not_applicable;
    v.message = "not sequence-regular";
    return v;
  }
  NakayamaRecord r = nakayama_check(a, localized_elements(doc));
  v.details.emplace_back("module_zero", r.module_zero);
  v.details.emplace_back("kappa_tensor_zero", r.kappa_tensor_zero);
  bool ok = r.holds();
  // Small support at sampled points: K(A; e) is supported exactly where
  // every element vanishes.
  std::int64_t checked = 0;
  std::vector<std::string> mismatches;
  for (const auto& p : points_for(doc, opts, 0x5bd1e995ULL)) {
    if (!is_sequence_regular(realize(localize_at_point(doc.spec, p))).value) continue;
    bool expected = true;
    for (const auto& e : doc.elements) expected = expected && e.eval(p).is_zero();
    bool got = in_small_support(doc.spec, doc.elements, p);
    ++checked;
    if (got != expected) mismatches.push_back(point_string(p));
  }
  v.details.emplace_back("support_points_checked", checked);
  v.details.emplace_back("support_mismatches", mismatches);
  ok = ok && mismatches.empty();
  v.outcome = ok ? Outcome::pass : Outcome::counterexample;
  if (!ok) v.message = r.holds() ? "small support disagrees with the vanishing locus" : "Nakayama equivalence fails";
  return v;
}

PropertyVerdict run_serre(const DGRingRealization& a, const TowerDocument& doc, const VerifyOptions& opts) {
  PropertyVerdict v = verdict(Property::serre_points);
  if (!is_sequence_regular(a).value) {
    v.outcome = Outcome::not_applicable;
    v.message = "not sequence-regular at the base point";
    return v;
  }
  auto pts = points_for(doc, opts, 0xc2b2ae35ULL);
  auto verdicts = seq_regular_at_points(doc.spec, pts);
  std::vector<std::string> failing, jacobian_mismatch, sampled;
  for (const auto& pv : verdicts) {
    sampled.push_back(point_string(pv.point));
    if (!pv.sequence_regular) failing.push_back(point_string(pv.point));
    if (pv.jacobian_regular != pv.h0_regular) jacobian_mismatch.push_back(point_string(pv.point));
  }
  v.details.emplace_back("points", sampled);
  v.details.emplace_back("not_sequence_regular", failing);
  v.details.emplace_back("jacobian_mismatch", jacobian_mismatch);
  bool ok = failing.empty() && jacobian_mismatch.empty();
  v.outcome = ok ? Outcome::pass : Outcome::counterexample;
  if (!failing.empty()) v.message = "sequence-regularity fails at a sampled point";
  else if (!jacobian_mismatch.empty()) v.message = "Jacobian criterion disagrees with the local computation";
  return v;
}

PropertyVerdict run_engine(const DGRingRealization& a) {
  PropertyVerdict v = verdict(Property::engine);
  const Ideal& j = a.h0_ideal();
  const auto& gens = j.generators();
  Field f = a.field();
  const int n = a.nvars();
  std::vector<std::string> failures;

  PolyMatrix row(f, n, 1);
  for (const auto& g : gens) row.add_column({g});
  for (OrderKind kind : {OrderKind::grevlex, OrderKind::lex}) {
    const auto& gb = j.groebner(kind);
    for (const auto& g : gens) {
      if (!j.normal_form(g, kind).is_zero()) failures.push_back("generator not reduced to zero by its basis");
    }
    Lifter lifter(row, PolyMatrix(f, n, 1));
    for (const auto& b : gb) {
      auto c = lifter.lift({b});
      if (!c) {
        failures.push_back("basis element outside the ideal");
        continue;
      }
      Poly sum(f, n);
      for (std::size_t i = 0; i < gens.size(); ++i) sum += (*c)[i] * gens[i];
      if (sum != b) failures.push_back("membership certificate does not reproduce the basis element");
    }
  }
  auto syz = syzygies(row);
  for (const auto& s : syz) {
    Poly sum(f, n);
    for (std::size_t i = 0; i < gens.size(); ++i) sum += s[i] * gens[i];
    if (!sum.is_zero()) failures.push_back("syzygy does not vanish");
  }
  const auto& c = a.complex();
  for (int i = c.lowest_degree(); i + 1 < c.highest_degree(); ++i) {
    PolyMatrix dd = c.differential(i + 1) * c.differential(i);
    for (const auto& col : dd.columns()) {
      if (!c.term(i + 2).is_relation(col)) failures.push_back("d o d is nonzero in degree " + std::to_string(i));
    }
  }
  int dg = j.dim_global(OrderKind::grevlex), dl = j.dim_global(OrderKind::lex);
  if (dg != dl) failures.push_back("grevlex and lex dimensions differ");
  v.details.emplace_back("generators", static_cast<std::int64_t>(gens.size()));
  v.details.emplace_back("syzygies", static_cast<std::int64_t>(syz.size()));
  v.details.emplace_back("dim_grevlex", std::int64_t{dg});
  v.details.emplace_back("dim_lex", std::int64_t{dl});
  v.details.emplace_back("failures", failures);
  v.outcome = failures.empty() ? Outcome::pass : Outcome::counterexample;
  if (!failures.empty()) v.message = failures.front();
  return v;
}

}  // namespace

std::string_view property_name(Property p) {
  for (const auto& [k, name] : kNames) {
    if (k == p) return name;
  }
  return "?";
}

std::optional<Property> parse_property(std::string_view name) {
  for (const auto& [k, n] : kNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

const std::vector<Property>& all_properties() {
  static const std::vector<Property> all = [] {
    std::vector<Property> v;
    for (const auto& kn : kNames) v.push_back(kn.first);
    return v;
  }();
  return all;
}

std::string_view outcome_name(Outcome o) {
  switch (o) {
    case Outcome::pass:
      return "pass";
    case Outcome::counterexample:
      return "counterexample";
    case Outcome::inconclusive:
      return "inconclusive";
    case Outcome::not_applicable:
      return "not-applicable";
    case Outcome::budget:
      return "budget";
  }
  return "?";
}

PropertyVerdict run_property(Property p, const TowerDocument& doc, const VerifyOptions& opts) {
  try {
    DGRingRealization a = realize(doc.spec);
    switch (p) {
      case Property::main:
        return run_main(a, opts);
      case Property::kos_amp:
        require_elements(doc, p);
        return run_kos_amp(a, localized_elements(doc), opts);
      case Property::sop:
        require_elements(doc, p);
        return biconditional(p, verify_sop(a, localized_elements(doc), opts.regularity));
      case Property::double_cm:
        require_elements(doc, p);
        return biconditional(p, verify_double_cm(a, localized_elements(doc), opts.regularity));
      case Property::gl:
        return run_gl(a, doc, opts);
      case Property::derived_quotient:
        require_elements(doc, p);
        return run_derived_quotient(a, localized_elements(doc));
      case Property::redka:
        return run_redka(a);
      case Property::nakayama:
        require_elements(doc, p);
        return run_nakayama(a, doc, opts);
      case Property::serre_points:
        return run_serre(a, doc, opts);
      case Property::engine:
        return run_engine(a);
    }
  } catch (const BudgetExceeded& e) {
    PropertyVerdict v = verdict(p);
    v.outcome = Outcome::budget;
    v.message = e.what();
    return v;
  }
  throw InternalError("unknown property");
}

}  // namespace seqreg
