#include "seqreg/groebner.hpp"

#include <algorithm>

#include "seqreg/errors.hpp"

namespace seqreg {

namespace {

ModVec sub_scaled_span(std::span<const ModTerm> h, const FieldElem& c, const Monomial& m, const ModVec& g,
                       const ModuleOrder& order) {
  ModVec out;
  out.reserve(h.size() + g.size());
  std::size_t i = 0, j = 0;
  Monomial gm;
  bool have_gm = false;
  while (i < h.size() && j < g.size()) {
    if (!have_gm) {
      gm = g[j].mono * m;
      have_gm = true;
    }
    int cmp = order.compare(h[i].mono, h[i].comp, gm, g[j].comp);
    if (cmp > 0) {
      out.push_back(h[i++]);
    } else if (cmp < 0) {
      out.push_back({gm, g[j].comp, -(c * g[j].coeff)});
      ++j;
      have_gm = false;
    } else {
      FieldElem s = h[i].coeff - c * g[j].coeff;
      if (!s.is_zero()) out.push_back({gm, g[j].comp, std::move(s)});
      ++i;
      ++j;
      have_gm = false;
    }
  }
  for (; i < h.size(); ++i) out.push_back(h[i]);
  for (; j < g.size(); ++j) out.push_back({g[j].mono * m, g[j].comp, -(c * g[j].coeff)});
  return out;
}

void make_monic(ModVec& v) {
  if (v.empty() || v.front().coeff.is_one()) return;
  FieldElem inv = v.front().coeff.inverse();
  for (auto& t : v) t.coeff *= inv;
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  std::uint32_t comp;
  int sugar;
};

}  // namespace

ModVec to_modvec(std::span<const Poly> column, const ModuleOrder& order, std::uint32_t comp_offset) {
  std::vector<ModTerm> terms;
  for (std::size_t k = 0; k < column.size(); ++k) {
    for (const auto& t : column[k].terms()) {
      terms.push_back({t.mono, static_cast<std::uint32_t>(k) + comp_offset, t.coeff});
    }
  }
  return normalize_terms(std::move(terms), order);
}

ModVec to_modvec(const Poly& p, const ModuleOrder& order, std::uint32_t comp) {
  std::vector<ModTerm> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) terms.push_back({t.mono, comp, t.coeff});
  return normalize_terms(std::move(terms), order);
}

Column from_modvec(const ModVec& v, Field field, int nvars, std::size_t rank, std::uint32_t comp_offset) {
  std::vector<std::vector<Term>> parts(rank);
  for (const auto& t : v) {
    if (t.comp < comp_offset || t.comp >= comp_offset + rank) continue;
    parts[t.comp - comp_offset].push_back({t.mono, t.coeff});
  }
  Column out;
  out.reserve(rank);
  for (auto& p : parts) out.push_back(Poly::from_terms(field, nvars, std::move(p)));
  return out;
}

Poly poly_from_modvec(const ModVec& v, Field field, int nvars) {
  std::vector<Term> terms;
  terms.reserve(v.size());
  for (const auto& t : v) terms.push_back({t.mono, t.coeff});
  return Poly::from_terms(field, nvars, std::move(terms));
}

ModVec sub_scaled(const ModVec& h, const FieldElem& c, const Monomial& m, const ModVec& g, const ModuleOrder& order) {
  return sub_scaled_span(h, c, m, g, order);
}

ModVec normalize_terms(std::vector<ModTerm> terms, const ModuleOrder& order) {
  std::sort(terms.begin(), terms.end(), [&](const ModTerm& a, const ModTerm& b) { return order.compare(a, b) > 0; });
  ModVec out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono && out.back().comp == t.comp) {
      out.back().coeff += t.coeff;
      if (out.back().coeff.is_zero()) out.pop_back();
    } else if (!t.coeff.is_zero()) {
      out.push_back(std::move(t));
    }
  }
  return out;
}

int max_degree(const ModVec& v) {
  int d = 0;
  for (const auto& t : v) d = std::max(d, t.mono.degree());
  return d;
}

namespace {

ModVec reduce_by_ptrs(ModVec f, const std::vector<const ModVec*>& reducers, const ModuleOrder& order) {
  ModVec rem;
  std::size_t start = 0;
  while (start < f.size()) {
    const ModTerm& t = f[start];
    const ModVec* best = nullptr;
    for (const ModVec* g : reducers) {
      const ModTerm& lt = g->front();
      if (lt.comp == t.comp && lt.mono.divides(t.mono) && (best == nullptr || g->size() < best->size())) best = g;
    }
    if (best == nullptr) {
      rem.push_back(t);
      ++start;
      continue;
    }
    Monomial m = best->front().mono.quotient_of(t.mono);
    FieldElem c = t.coeff / best->front().coeff;
    f = sub_scaled_span(std::span<const ModTerm>(f).subspan(start), c, m, *best, order);
    start = 0;
  }
  return rem;
}

}  // namespace

ModVec reduce_by(ModVec f, std::span<const ModVec> reducers, const ModuleOrder& order) {
  std::vector<const ModVec*> ptrs;
  ptrs.reserve(reducers.size());
  for (const auto& g : reducers) ptrs.push_back(&g);
  return reduce_by_ptrs(std::move(f), ptrs, order);
}

ModVec GroebnerBasis::reduce(ModVec f) const { return reduce_by(std::move(f), elems_, order_); }

bool GroebnerBasis::is_unit_ideal() const {
  return elems_.size() == 1 && elems_[0].size() == 1 && elems_[0][0].mono.is_one();
}

GroebnerBasis GroebnerBasis::compute(Field field, int nvars, const ModuleOrder& order, std::vector<ModVec> gens,
                                     const GroebnerOptions& opts) {
  if (!order.monomial_order().is_global()) throw InvalidInput("Buchberger requires a global monomial order");
  GroebnerBasis gb(field, nvars, order);

  // Product criterion is only valid for ideals.
  std::uint32_t max_comp = 0;
  for (const auto& g : gens) {
    for (const auto& t : g) max_comp = std::max(max_comp, t.comp);
  }
  const bool ideal_case = max_comp == 0;

  std::vector<ModVec> store;
  std::vector<int> sugar;
  std::vector<std::size_t> active;
  std::vector<Pair> pairs;

  auto active_reducers = [&]() {
    std::vector<const ModVec*> r;
    r.reserve(active.size());
    for (auto k : active) r.push_back(&store[k]);
    return r;
  };

  auto lead = [&](std::size_t k) -> const ModTerm& { return store[k].front(); };

  auto update = [&](std::size_t h) {
    const Monomial& hm = lead(h).mono;
    const std::uint32_t hc = lead(h).comp;
    std::vector<Pair> cands;
    for (auto g : active) {
      if (lead(g).comp != hc) continue;
      const Monomial& gm = lead(g).mono;
      Monomial l = Monomial::lcm(hm, gm);
      int s = std::max(sugar[h] + l.degree() - hm.degree(), sugar[g] + l.degree() - gm.degree());
      cands.push_back({g, h, l, hc, s});
    }
    // Gebauer–Möller: drop (h, g1) if another (h, g2) has an lcm dividing it.
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < cands.size(); ++a) {
      const Pair& p = cands[a];
      bool coprime = ideal_case && lead(p.i).mono.coprime(hm);
      bool dominated = false;
      if (!coprime) {
        for (std::size_t b = a + 1; b < cands.size() && !dominated; ++b) {
          if (cands[b].lcm.divides(p.lcm)) dominated = true;
        }
        for (std::size_t b = 0; b < kept.size() && !dominated; ++b) {
          if (kept[b].lcm.divides(p.lcm)) dominated = true;
        }
      }
      if (!dominated) kept.push_back(p);
    }
    std::vector<Pair> fresh;
    for (const auto& p : kept) {
      if (ideal_case && lead(p.i).mono.coprime(hm)) continue;
      fresh.push_back(p);
    }
    // Old pairs made redundant by h.
    std::vector<Pair> remaining;
    remaining.reserve(pairs.size());
    for (const auto& p : pairs) {
      if (p.comp == hc && hm.divides(p.lcm)) {
        Monomial l1 = Monomial::lcm(lead(p.i).mono, hm);
        Monomial l2 = Monomial::lcm(lead(p.j).mono, hm);
        if (l1 != p.lcm && l2 != p.lcm) continue;
      }
      remaining.push_back(p);
    }
    pairs = std::move(remaining);
    for (auto& p : fresh) pairs.push_back(p);
    std::vector<std::size_t> next_active;
    for (auto g : active) {
      if (lead(g).comp == hc && hm.divides(lead(g).mono)) continue;
      next_active.push_back(g);
    }
    next_active.push_back(h);
    active = std::move(next_active);
  };

  auto insert = [&](ModVec v, int s) {
    make_monic(v);
    store.push_back(std::move(v));
    sugar.push_back(s);
    update(store.size() - 1);
  };

  for (auto& g : gens) {
    int s = max_degree(g);
    auto reducers = active_reducers();
    ModVec h = reduce_by_ptrs(std::move(g), reducers, order);
    if (!h.empty()) insert(std::move(h), s);
  }

  while (!pairs.empty()) {
    if (++gb.pairs_processed_ > opts.max_pairs) {
      throw BudgetExceeded("Groebner basis pair budget exceeded (" + std::to_string(opts.max_pairs) + ")");
    }
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      const Pair& a = pairs[k];
      const Pair& b = pairs[best];
      if (a.sugar != b.sugar) {
        if (a.sugar < b.sugar) best = k;
        continue;
      }
      if (order.compare(a.lcm, a.comp, b.lcm, b.comp) < 0) best = k;
    }
    Pair p = pairs[best];
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));

    const ModVec& f = store[p.i];
    const ModVec& g = store[p.j];
    Monomial mf = f.front().mono.quotient_of(p.lcm);
    Monomial mg = g.front().mono.quotient_of(p.lcm);
    ModVec s;
    {
      std::vector<ModTerm> scaled;
      scaled.reserve(f.size());
      for (const auto& t : f) scaled.push_back({t.mono * mf, t.comp, t.coeff});
      s = sub_scaled(scaled, field.one(), mg, g, order);
    }
    auto reducers = active_reducers();
    ModVec h = reduce_by_ptrs(std::move(s), reducers, order);
    if (!h.empty()) insert(std::move(h), p.sugar);
  }

  // Interreduce the minimal basis.
  std::vector<ModVec> minimal;
  for (auto k : active) minimal.push_back(store[k]);
  std::vector<ModVec> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<const ModVec*> others;
    for (std::size_t l = 0; l < minimal.size(); ++l) {
      if (l != k) others.push_back(&minimal[l]);
    }
    ModVec head{minimal[k].front()};
    ModVec tail(minimal[k].begin() + 1, minimal[k].end());
    ModVec r = reduce_by_ptrs(std::move(tail), others, order);
    head.insert(head.end(), r.begin(), r.end());
    make_monic(head);
    reduced.push_back(std::move(head));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const ModVec& a, const ModVec& b) { return order.compare(a.front(), b.front()) < 0; });
  gb.elems_ = std::move(reduced);
  return gb;
}

}  // namespace seqreg
