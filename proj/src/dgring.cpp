#include "seqreg/dgring.hpp"

#include <sstream>

#include "seqreg/errors.hpp"

namespace seqreg {

DGRingSpec::DGRingSpec(Field field, std::vector<std::string> vars, std::vector<Poly> base_ideal)
    : field_(field), vars_(std::move(vars)), base_(std::move(base_ideal)) {
  if (vars_.empty()) throw InvalidInput("a tower needs at least one variable");
  if (static_cast<int>(vars_.size()) > kMaxVars - 1) {
    throw InvalidInput("at most " + std::to_string(kMaxVars - 1) + " variables are supported");
  }
  for (const auto& p : base_) {
    if (p.field() != field_ || p.nvars() != nvars()) throw InvalidInput("base ideal generator from a different ring");
  }
}

DGRingSpec& DGRingSpec::add_koszul(std::vector<Poly> elements) {
  for (const auto& p : elements) {
    if (p.field() != field_ || p.nvars() != nvars()) throw InvalidInput("Koszul element from a different ring");
  }
  steps_.emplace_back(KoszulStep{std::move(elements)});
  return *this;
}

DGRingSpec& DGRingSpec::add_trivext(PresentedModule module, int shift) {
  if (shift < 1) throw InvalidInput("trivial extension shift must be at least 1");
  if (module.field() != field_ || module.nvars() != nvars()) throw InvalidInput("module over a different ring");
  steps_.emplace_back(TrivExtStep{std::move(module), shift});
  return *this;
}

DGRingSpec& DGRingSpec::set_point(std::vector<FieldElem> point) {
  if (static_cast<int>(point.size()) != nvars()) throw InvalidInput("point has the wrong number of coordinates");
  for (const auto& c : point) {
    if (c.field() != field_) throw InvalidInput("point coordinate from a different field");
  }
  point_ = std::move(point);
  return *this;
}

DGRingSpec& DGRingSpec::set_label(std::string label) {
  label_ = std::move(label);
  return *this;
}

std::vector<Poly> DGRingSpec::h0_generators() const {
  std::vector<Poly> out = base_;
  for (const auto& s : steps_) {
    if (const auto* k = std::get_if<KoszulStep>(&s)) out.insert(out.end(), k->elements.begin(), k->elements.end());
  }
  return out;
}

DGRingSpec DGRingSpec::localized() const {
  if (!point_) return *this;
  const auto& c = *point_;
  DGRingSpec out(field_, vars_, {});
  out.label_ = label_;
  for (const auto& p : base_) out.base_.push_back(p.translate(c));
  for (const auto& s : steps_) {
    if (const auto* k = std::get_if<KoszulStep>(&s)) {
      std::vector<Poly> moved;
      for (const auto& p : k->elements) moved.push_back(p.translate(c));
      out.steps_.emplace_back(KoszulStep{std::move(moved)});
    } else {
      const auto& t = std::get<TrivExtStep>(s);
      out.steps_.emplace_back(TrivExtStep{t.module.translate(c), t.shift});
    }
  }
  return out;
}

namespace {

std::string poly_list(const std::vector<Poly>& ps, const std::vector<std::string>& names) {
  std::string s = "[";
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i > 0) s += ", ";
    s += ps[i].to_string(names);
  }
  return s + "]";
}

}  // namespace

std::string DGRingSpec::describe() const {
  std::ostringstream os;
  os << "S/" << poly_list(base_, vars_);
  for (const auto& s : steps_) {
    if (const auto* k = std::get_if<KoszulStep>(&s)) {
      os << " -> K(" << poly_list(k->elements, vars_) << ")";
    } else {
      const auto& t = std::get<TrivExtStep>(s);
      os << " -> trivext(" << t.module.ngens() << " gens, shift " << t.shift << ")";
    }
  }
  if (point_) {
    os << " at (";
    for (std::size_t i = 0; i < point_->size(); ++i) os << (i ? ", " : "") << (*point_)[i].to_string();
    os << ")";
  }
  return os.str();
}

DGRingSpec koszul(const DGRingSpec& spec, std::vector<Poly> elements) {
  DGRingSpec out = spec;
  out.add_koszul(std::move(elements));
  return out;
}

DGRingSpec localize_at_point(const DGRingSpec& spec, std::vector<FieldElem> point) {
  DGRingSpec s = spec;
  s.set_point(std::move(point));
  return s.localized();
}

ComplexOfModules koszul_cone(const ComplexOfModules& c, const Poly& a) {
  const int lo = c.lowest_degree() - 1;
  const int hi = c.highest_degree();
  Field f = a.field();
  const int n = a.nvars();
  std::map<int, PresentedModule> terms;
  for (int i = lo; i <= hi; ++i) terms.emplace(i, PresentedModule::direct_sum(c.term(i), c.term(i + 1)));
  std::map<int, PolyMatrix> diffs;
  for (int i = lo; i < hi; ++i) {
    const std::size_t gi = c.term(i).ngens(), g1 = c.term(i + 1).ngens(), g2 = c.term(i + 2).ngens();
    PolyMatrix di = c.differential(i);
    PolyMatrix d1 = c.differential(i + 1);
    PolyMatrix m(f, n, g1 + g2);
    for (std::size_t j = 0; j < gi; ++j) {
      Column col = di.column(j);
      col.resize(g1 + g2, Poly(f, n));
      m.add_column(std::move(col));
    }
    for (std::size_t j = 0; j < g1; ++j) {
      Column col(g1, Poly(f, n));
      col[j] = a;
      for (std::size_t k = 0; k < g2; ++k) col.push_back(-d1.at(k, j));
      m.add_column(std::move(col));
    }
    diffs.emplace(i, std::move(m));
  }
  return ComplexOfModules(std::move(terms), std::move(diffs));
}

namespace {

// Adds `m` in degree `deg` with zero differentials in and out.
ComplexOfModules add_summand(const ComplexOfModules& c, const PresentedModule& m, int deg) {
  const int lo = std::min(c.lowest_degree(), deg);
  const int hi = c.highest_degree();
  Field f = m.field();
  const int n = m.nvars();
  std::map<int, PresentedModule> terms;
  for (int i = lo; i <= hi; ++i) {
    terms.emplace(i, i == deg ? PresentedModule::direct_sum(c.term(i), m) : c.term(i));
  }
  std::map<int, PolyMatrix> diffs;
  for (int i = lo; i < hi; ++i) {
    PolyMatrix d = c.differential(i);
    if (i == deg) {
      for (std::size_t j = 0; j < m.ngens(); ++j) d.add_column(d.zero_column());
    } else if (i + 1 == deg) {
      PolyMatrix padded(f, n, d.rows() + m.ngens());
      for (auto col : d.columns()) {
        col.resize(padded.rows(), Poly(f, n));
        padded.add_column(std::move(col));
      }
      d = std::move(padded);
    }
    diffs.emplace(i, std::move(d));
  }
  return ComplexOfModules(std::move(terms), std::move(diffs));
}

}  // namespace

DGRingRealization DGRingRealization::realize(const DGRingSpec& input) {
  DGRingRealization r;
  r.spec_ = input.localized();
  const DGRingSpec& s = r.spec_;
  Field f = s.field();
  const int n = s.nvars();
  for (const auto& p : s.base_ideal()) {
    if (p.is_local_unit()) {
      throw InvalidInput("quotient generator " + p.to_string(s.vars()) +
                         " does not vanish at the base point; the local ring would be zero");
    }
  }
  Ideal base(f, n, s.base_ideal());
  ComplexOfModules c = ComplexOfModules::single(PresentedModule::free(base, 1), 0);
  Ideal ja = base;
  for (const auto& step : s.steps()) {
    if (const auto* k = std::get_if<KoszulStep>(&step)) {
      for (const auto& a : k->elements) {
        if (a.is_local_unit()) {
          throw InvalidInput("Koszul element " + a.to_string(s.vars()) + " is not in the maximal ideal");
        }
        c = koszul_cone(c, a);
        ja = ja.with({a});
      }
    } else {
      const auto& t = std::get<TrivExtStep>(step);
      if (t.shift < 1) throw InvalidInput("trivial extension shift must be at least 1");
      PresentedModule m(ja, t.module.relations());
      c = add_summand(c, m, -t.shift);
    }
  }
  r.complex_ = std::move(c);
  r.h0_ = std::move(ja);
  return r;
}

const PresentedModule& DGRingRealization::cohomology(int i) const {
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->cohomology.find(i);
    if (it != cache_->cohomology.end()) return it->second;
  }
  PresentedModule h = homology_at(complex_, i);
  std::lock_guard<std::mutex> lock(cache_->mu);
  return cache_->cohomology.emplace(i, std::move(h)).first->second;
}

bool DGRingRealization::cohomology_locally_nonzero(int i) const { return !is_locally_zero(cohomology(i)); }

const Ideal& DGRingRealization::h0() const {
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (cache_->h0_checked) return h0_;
  }
  const PresentedModule& h = cohomology(0);
  PresentedModule expected = PresentedModule::cyclic(h0_, {});
  if (!(fingerprint(h) == fingerprint(expected)) || !annihilator(h).equals(h0_)) {
    throw InternalError("homology in degree 0 does not match S/J_A");
  }
  std::lock_guard<std::mutex> lock(cache_->mu);
  cache_->h0_checked = true;
  return h0_;
}

AmplitudeProfile DGRingRealization::amplitude() const {
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (cache_->amplitude) return *cache_->amplitude;
  }
  if (!cohomology_locally_nonzero(0)) throw InvalidInput("the DG-ring is zero at the base point");
  AmplitudeProfile p;
  p.sup = 0;
  p.inf = 0;
  for (int i = complex_.lowest_degree(); i < 0; ++i) {
    if (cohomology_locally_nonzero(i)) {
      p.inf = i;
      break;
    }
  }
  std::lock_guard<std::mutex> lock(cache_->mu);
  cache_->amplitude = p;
  return p;
}

bool has_constant_amplitude(const DGRingRealization& a) {
  Ideal ann = annihilator(a.bottom_cohomology());
  for (const auto& g : ann.generators()) {
    if (!local_radical_membership(g, a.h0_ideal())) return false;
  }
  return true;
}

std::map<int, ModuleFingerprint> cohomology_fingerprints(const ComplexOfModules& c) {
  std::map<int, ModuleFingerprint> out;
  for (int i = c.lowest_degree(); i <= c.highest_degree(); ++i) out.emplace(i, fingerprint(homology_at(c, i)));
  return out;
}

bool is_acyclic_at_origin(const ComplexOfModules& c) {
  for (int i = c.lowest_degree(); i <= c.highest_degree(); ++i) {
    if (!is_locally_zero(homology_at(c, i))) return false;
  }
  return true;
}

}  // namespace seqreg
