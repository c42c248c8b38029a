#include "seqreg/ideal.hpp"

#include <algorithm>

#include "seqreg/errors.hpp"
#include "seqreg/submodule.hpp"

namespace seqreg {

namespace {

ModuleOrder local_order(int nvars) { return ModuleOrder(MonomialOrder(OrderKind::neg_grevlex_local, nvars), 0); }

int ecart(const ModVec& v) { return max_degree(v) - v.front().mono.degree(); }

void make_monic(ModVec& v) {
  if (v.empty() || v.front().coeff.is_one()) return;
  FieldElem inv = v.front().coeff.inverse();
  for (auto& t : v) t.coeff *= inv;
}

struct Tracked {
  ModVec v;
  int ecart;
};

ModVec mora_reduce(ModVec h, const std::vector<ModVec>& basis, const ModuleOrder& order, const LocalOptions& opts) {
  std::vector<Tracked> t;
  t.reserve(basis.size());
  for (const auto& g : basis) t.push_back({g, ecart(g)});
  std::size_t steps = 0;
  while (!h.empty()) {
    const ModTerm& lead = h.front();
    const Tracked* best = nullptr;
    for (const auto& g : t) {
      if (g.v.front().mono.divides(lead.mono) && (best == nullptr || g.ecart < best->ecart)) best = &g;
    }
    if (best == nullptr) return h;
    if (++steps > opts.max_reduction_steps) {
      throw BudgetExceeded("Mora reduction exceeded " + std::to_string(opts.max_reduction_steps) + " steps");
    }
    int eh = ecart(h);
    Monomial m = best->v.front().mono.quotient_of(lead.mono);
    FieldElem c = lead.coeff / best->v.front().coeff;
    ModVec g = best->v;  // copy: t may grow below
    if (best->ecart > eh) t.push_back({h, eh});
    h = sub_scaled(h, c, m, g, order);
  }
  return h;
}

}  // namespace

Poly mora_normal_form(const Poly& f, const std::vector<Poly>& basis, const LocalOptions& opts) {
  ModuleOrder order = local_order(f.nvars());
  std::vector<ModVec> b;
  for (const auto& g : basis) {
    if (!g.is_zero()) b.push_back(to_modvec(g, order));
  }
  return poly_from_modvec(mora_reduce(to_modvec(f, order), b, order, opts), f.field(), f.nvars());
}

LocalStandardBasis LocalStandardBasis::compute(Field field, int nvars, const std::vector<Poly>& gens,
                                               const LocalOptions& opts) {
  LocalStandardBasis sb;
  sb.field_ = field;
  sb.nvars_ = nvars;
  sb.opts_ = opts;
  if (nvars + 1 > kMaxVars) throw InvalidInput("too many variables for a local standard basis");

  auto set_unit = [&]() {
    sb.elems_ = {Poly::constant(field, nvars, 1)};
    sb.leads_ = {Monomial()};
  };

  // Lazard's method: a Gröbner basis of the homogenized generators under
  // homogenizing_local dehomogenizes to a standard basis for the local
  // degree order.
  const int t = nvars;
  ModuleOrder horder(MonomialOrder(OrderKind::homogenizing_local, nvars + 1), 0);
  std::vector<ModVec> hgens;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (g.is_local_unit()) {
      set_unit();
      return sb;
    }
    const int d = g.total_degree();
    std::vector<ModTerm> terms;
    for (const auto& term : g.terms()) {
      Monomial m = term.mono;
      m.set_exponent(t, d - term.mono.degree());
      terms.push_back({m, 0, term.coeff});
    }
    hgens.push_back(normalize_terms(std::move(terms), horder));
  }
  GroebnerOptions gopts;
  gopts.max_pairs = opts.max_pairs;
  GroebnerBasis gb = GroebnerBasis::compute(field, nvars + 1, horder, std::move(hgens), gopts);

  ModuleOrder order = local_order(nvars);
  std::vector<ModVec> basis;
  for (const auto& v : gb.elements()) {
    std::vector<ModTerm> terms;
    for (const auto& term : v) {
      Monomial m = term.mono;
      m.set_exponent(t, 0);
      terms.push_back({m, 0, term.coeff});
    }
    ModVec d = normalize_terms(std::move(terms), order);
    if (d.empty()) continue;
    if (d.front().mono.is_one()) {
      set_unit();
      return sb;
    }
    make_monic(d);
    basis.push_back(std::move(d));
  }

  // Keep elements with minimal leads.
  std::vector<bool> keep(basis.size(), true);
  for (std::size_t a = 0; a < basis.size(); ++a) {
    for (std::size_t b = 0; b < basis.size() && keep[a]; ++b) {
      if (a == b || !keep[b]) continue;
      const Monomial& la = basis[a].front().mono;
      const Monomial& lb = basis[b].front().mono;
      if (lb.divides(la) && (lb != la || b < a)) keep[a] = false;
    }
  }
  std::vector<Monomial> leads;
  for (std::size_t a = 0; a < basis.size(); ++a) {
    if (!keep[a]) continue;
    sb.elems_.push_back(poly_from_modvec(basis[a], field, nvars));
    leads.push_back(basis[a].front().mono);
  }
  sb.leads_ = minimalize_monomials(std::move(leads), MonomialOrder(OrderKind::grevlex, nvars));
  return sb;
}

Poly LocalStandardBasis::weak_normal_form(const Poly& p) const { return mora_normal_form(p, elems_, opts_); }

std::vector<Monomial> minimalize_monomials(std::vector<Monomial> gens, const MonomialOrder& order) {
  std::sort(gens.begin(), gens.end(), [&](const Monomial& a, const Monomial& b) { return order.compare(a, b) < 0; });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& o : out) {
      if (o.divides(g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) {
      // Later (larger) elements cannot divide earlier ones unless equal degree
      // ties break; re-check both directions.
      std::erase_if(out, [&](const Monomial& o) { return g.divides(o); });
      out.push_back(g);
    }
  }
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return order.compare(a, b) < 0; });
  return out;
}

int monomial_ideal_dimension(const std::vector<Monomial>& gens, int nvars) {
  std::vector<int> masks;
  for (const auto& g : gens) {
    if (g.is_one()) return kEmptySpectrum;
    masks.push_back(g.support_mask());
  }
  int best = 0;
  for (int subset = 0; subset < (1 << nvars); ++subset) {
    int size = __builtin_popcount(static_cast<unsigned>(subset));
    if (size <= best) continue;
    bool independent = true;
    for (int m : masks) {
      if ((m & ~subset) == 0) {
        independent = false;
        break;
      }
    }
    if (independent) best = size;
  }
  return best;
}

Ideal::Ideal(Field field, int nvars, std::vector<Poly> gens) : field_(field), nvars_(nvars) {
  for (auto& g : gens) {
    if (g.field() != field || g.nvars() != nvars) throw InvalidInput("ideal generator from a different ring");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(Field field, int nvars) { return Ideal(field, nvars, {Poly::constant(field, nvars, 1)}); }

Ideal Ideal::maximal(Field field, int nvars) {
  std::vector<Poly> gens;
  for (int i = 0; i < nvars; ++i) gens.push_back(Poly::variable(field, nvars, i));
  return Ideal(field, nvars, std::move(gens));
}

const std::vector<Poly>& Ideal::groebner(OrderKind kind) const {
  if (kind == OrderKind::neg_grevlex_local) throw InvalidInput("use standard_basis_local for the local order");
  std::lock_guard<std::mutex> lock(cache_->mu);
  auto it = cache_->global.find(kind);
  if (it != cache_->global.end()) return it->second;
  ModuleOrder order(MonomialOrder(kind, nvars_), 0);
  std::vector<ModVec> vs;
  vs.reserve(gens_.size());
  for (const auto& g : gens_) vs.push_back(to_modvec(g, order));
  auto gb = GroebnerBasis::compute(field_, nvars_, order, std::move(vs));
  std::vector<Poly> out;
  for (const auto& v : gb.elements()) out.push_back(poly_from_modvec(v, field_, nvars_));
  return cache_->global.emplace(kind, std::move(out)).first->second;
}

const LocalStandardBasis& Ideal::standard_basis_local() const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (!cache_->local) {
    cache_->local = std::make_unique<LocalStandardBasis>(LocalStandardBasis::compute(field_, nvars_, gens_));
  }
  return *cache_->local;
}

Poly Ideal::normal_form(const Poly& p, OrderKind kind) const {
  if (p.field() != field_ || p.nvars() != nvars_) throw InvalidInput("polynomial from a different ring");
  if (kind == OrderKind::neg_grevlex_local) return standard_basis_local().weak_normal_form(p);
  const auto& gb = groebner(kind);
  ModuleOrder order(MonomialOrder(kind, nvars_), 0);
  std::vector<ModVec> reducers;
  reducers.reserve(gb.size());
  for (const auto& g : gb) reducers.push_back(to_modvec(g, order));
  return poly_from_modvec(reduce_by(to_modvec(p, order), reducers, order), field_, nvars_);
}

bool Ideal::contains(const Poly& p) const { return normal_form(p).is_zero(); }

bool Ideal::contains(const Ideal& other) const {
  for (const auto& g : other.gens_) {
    if (!contains(g)) return false;
  }
  return true;
}

bool Ideal::contains_locally(const Poly& p) const {
  if (p.is_zero()) return true;
  return normal_form(p, OrderKind::neg_grevlex_local).is_zero();
}

bool Ideal::is_unit() const {
  const auto& gb = groebner();
  return gb.size() == 1 && gb[0].is_constant() && !gb[0].is_zero();
}

bool Ideal::is_unit_locally() const {
  return std::any_of(gens_.begin(), gens_.end(), [](const Poly& g) { return g.is_local_unit(); });
}

std::vector<Monomial> Ideal::lead_monomials(OrderKind kind) const {
  if (kind == OrderKind::neg_grevlex_local) return standard_basis_local().lead_ideal();
  std::vector<Monomial> leads;
  for (const auto& g : groebner(kind)) {
    // Poly stores grevlex-descending terms; recompute the lead for `kind`.
    MonomialOrder order(kind, nvars_);
    const Monomial* best = nullptr;
    for (const auto& t : g.terms()) {
      if (best == nullptr || order.compare(t.mono, *best) > 0) best = &t.mono;
    }
    leads.push_back(*best);
  }
  return minimalize_monomials(std::move(leads), MonomialOrder(kind, nvars_));
}

int Ideal::dim_global(OrderKind kind) const { return monomial_ideal_dimension(lead_monomials(kind), nvars_); }

int Ideal::dim_local_at_origin() const {
  if (is_unit_locally()) return kEmptySpectrum;
  return monomial_ideal_dimension(standard_basis_local().lead_ideal(), nvars_);
}

Ideal Ideal::operator+(const Ideal& other) const { return with(other.gens_); }

Ideal Ideal::with(const std::vector<Poly>& extra) const {
  std::vector<Poly> g = gens_;
  g.insert(g.end(), extra.begin(), extra.end());
  return Ideal(field_, nvars_, std::move(g));
}

Ideal Ideal::translate(std::span<const FieldElem> point) const {
  std::vector<Poly> g;
  for (const auto& p : gens_) g.push_back(p.translate(point));
  return Ideal(field_, nvars_, std::move(g));
}

namespace {

PolyMatrix row_of(const Ideal& i) {
  PolyMatrix m(i.field(), i.nvars(), 1);
  for (const auto& g : i.generators()) m.add_column({g});
  return m;
}

Ideal ideal_from_columns(Field field, int nvars, const std::vector<Column>& cols) {
  std::vector<Poly> gens;
  for (const auto& c : cols) gens.push_back(c.at(0));
  return Ideal(field, nvars, std::move(gens));
}

}  // namespace

Ideal colon(const Ideal& i, const Poly& f) {
  if (f.is_zero()) return Ideal::unit(i.field(), i.nvars());
  PolyMatrix m(i.field(), i.nvars(), 1);
  m.add_column({f});
  return ideal_from_columns(i.field(), i.nvars(), preimage(m, row_of(i)));
}

Ideal colon_ideal(const Ideal& i, const Ideal& j) {
  Ideal acc = Ideal::unit(i.field(), i.nvars());
  for (const auto& g : j.generators()) acc = intersect(acc, colon(i, g));
  return acc;
}

Ideal intersect(const Ideal& i, const Ideal& j) {
  Field f = i.field();
  int n = i.nvars();
  PolyMatrix m(f, n, 2);
  m.add_column({Poly::constant(f, n, 1), Poly::constant(f, n, 1)});
  PolyMatrix rel(f, n, 2);
  for (const auto& g : i.generators()) rel.add_column({g, Poly(f, n)});
  for (const auto& g : j.generators()) rel.add_column({Poly(f, n), g});
  return ideal_from_columns(f, n, preimage(m, rel));
}

Ideal saturate(const Ideal& i, const Poly& f, const SaturationOptions& opts) {
  Ideal cur = i;
  for (int step = 0; step < opts.max_steps; ++step) {
    Ideal next = colon(cur, f);
    if (cur.contains(next)) return cur;
    cur = next;
  }
  throw BudgetExceeded("saturation did not stabilize within " + std::to_string(opts.max_steps) + " colon steps");
}

bool radical_membership(const Poly& f, const Ideal& i) {
  const int n = i.nvars();
  if (n + 1 > kMaxVars) throw InvalidInput("no room for the Rabinowitsch variable");
  Field fld = i.field();
  std::vector<Poly> gens;
  for (const auto& g : i.generators()) gens.push_back(g.extend_vars(n + 1));
  Poly t = Poly::variable(fld, n + 1, n);
  gens.push_back(Poly::constant(fld, n + 1, 1) - t * f.extend_vars(n + 1));
  return Ideal(fld, n + 1, std::move(gens)).is_unit();
}

bool local_radical_membership(const Poly& f, const Ideal& i) {
  if (i.is_unit_locally()) return true;
  Ideal sat = saturate(i, f);
  return sat.is_unit_locally();
}

}  // namespace seqreg
