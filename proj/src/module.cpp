#include "seqreg/module.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "seqreg/errors.hpp"
#include "seqreg/linalg.hpp"

namespace seqreg {

PrimeIdealSpec PrimeIdealSpec::at_point(Field field, std::vector<FieldElem> coords) {
  PrimeIdealSpec p;
  const int n = static_cast<int>(coords.size());
  for (int i = 0; i < n; ++i) {
    p.generators.push_back(Poly::variable(field, n, i) - Poly::constant(field, n, coords[static_cast<std::size_t>(i)]));
  }
  p.point = std::move(coords);
  return p;
}

PrimeIdealSpec PrimeIdealSpec::asserted(std::vector<Poly> gens) {
  PrimeIdealSpec p;
  p.generators = std::move(gens);
  return p;
}

namespace {

bool same_ring(const Ideal& a, const Ideal& b) { return a.field() == b.field() && a.nvars() == b.nvars(); }

bool same_generators(const Ideal& a, const Ideal& b) { return a.generators() == b.generators(); }

bool is_zero_column(const Column& c) {
  return std::all_of(c.begin(), c.end(), [](const Poly& p) { return p.is_zero(); });
}

void push_unique(std::vector<Column>& cols, Column c) {
  if (is_zero_column(c)) return;
  if (std::find(cols.begin(), cols.end(), c) != cols.end()) return;
  cols.push_back(std::move(c));
}

}  // namespace

PresentedModule::PresentedModule(Ideal ambient, PolyMatrix relations) : ambient_(std::move(ambient)) {
  if (relations.field() != ambient_.field() || relations.nvars() != ambient_.nvars()) {
    throw InvalidInput("relations and ambient ideal live in different rings");
  }
  const std::size_t g = relations.rows();
  std::vector<Column> cols;
  for (const auto& c : relations.columns()) push_unique(cols, c);
  for (std::size_t i = 0; i < g; ++i) {
    for (const auto& f : ambient_.generators()) {
      Column c = relations.zero_column();
      c[i] = f;
      push_unique(cols, std::move(c));
    }
  }
  relations_ = PolyMatrix(ambient_.field(), ambient_.nvars(), g, std::move(cols));
}

PresentedModule PresentedModule::free(Ideal ambient, std::size_t rank) {
  PolyMatrix rel(ambient.field(), ambient.nvars(), rank);
  return PresentedModule(std::move(ambient), std::move(rel));
}

PresentedModule PresentedModule::cyclic(Ideal ambient, const std::vector<Poly>& ideal_gens) {
  PolyMatrix rel(ambient.field(), ambient.nvars(), 1);
  for (const auto& f : ideal_gens) {
    if (!f.is_zero()) rel.add_column({f});
  }
  return PresentedModule(std::move(ambient), std::move(rel));
}

PresentedModule PresentedModule::direct_sum(const PresentedModule& a, const PresentedModule& b) {
  if (!same_ring(a.ambient(), b.ambient())) throw InvalidInput("direct sum of modules over different rings");
  if (!same_generators(a.ambient(), b.ambient()) && !b.ambient().contains(a.ambient())) {
    throw InvalidInput("direct sum: second summand is not a module over the first ambient ring");
  }
  return PresentedModule(a.ambient(), PolyMatrix::direct_sum(a.relations(), b.relations()));
}

const SubmoduleBasis& PresentedModule::relation_basis() const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (!cache_->basis) cache_->basis = std::make_unique<SubmoduleBasis>(relations_);
  return *cache_->basis;
}

bool PresentedModule::is_relation(const Column& v) const {
  if (v.size() != ngens()) throw InvalidInput("vector length does not match the generator count");
  if (is_zero_column(v)) return true;
  return relation_basis().contains(v);
}

PresentedModule PresentedModule::translate(std::span<const FieldElem> point) const {
  return PresentedModule(ambient_.translate(point), relations_.translate(point));
}

ModuleMap::ModuleMap(PresentedModule source, PresentedModule target, PolyMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != target_.ngens() || matrix_.cols() != source_.ngens()) {
    throw InvalidInput("map matrix has shape " + std::to_string(matrix_.rows()) + "x" +
                       std::to_string(matrix_.cols()) + ", expected " + std::to_string(target_.ngens()) + "x" +
                       std::to_string(source_.ngens()));
  }
  if (target_.ngens() == 0) return;
  for (const auto& r : source_.relations().columns()) {
    if (!target_.is_relation(matrix_.apply(r))) throw InvalidInput("map does not respect the source relations");
  }
}

bool ModuleMap::is_zero() const {
  return std::all_of(matrix_.columns().begin(), matrix_.columns().end(),
                     [&](const Column& c) { return target_.is_relation(c); });
}

ComplexOfModules::ComplexOfModules(std::map<int, PresentedModule> terms, std::map<int, PolyMatrix> differentials)
    : terms_(std::move(terms)), diffs_(std::move(differentials)) {
  if (terms_.empty()) throw InvalidInput("a complex needs at least one term");
  ambient_ = terms_.begin()->second.ambient();
  lo_ = terms_.begin()->first;
  hi_ = terms_.rbegin()->first;
  if (hi_ > 0) throw InvalidInput("complex terms must sit in degrees <= 0");
  for (const auto& [deg, m] : terms_) {
    if (!same_ring(m.ambient(), ambient_)) throw InvalidInput("complex terms over different rings");
  }
  zero_ = PresentedModule::zero(ambient_);
  for (const auto& [deg, d] : diffs_) {
    if (deg < lo_ || deg >= hi_) {
      if (!d.is_zero()) throw InvalidInput("differential outside the term range");
      continue;
    }
    ModuleMap check(term(deg), term(deg + 1), d);
  }
  for (int i = lo_; i + 2 <= hi_; ++i) {
    auto a = diffs_.find(i);
    auto b = diffs_.find(i + 1);
    if (a == diffs_.end() || b == diffs_.end()) continue;
    PolyMatrix comp = b->second * a->second;
    for (const auto& c : comp.columns()) {
      if (!term(i + 2).is_relation(c)) {
        throw InvalidInput("d^" + std::to_string(i + 1) + " d^" + std::to_string(i) + " is not zero");
      }
    }
  }
}

ComplexOfModules ComplexOfModules::single(PresentedModule m, int degree) {
  std::map<int, PresentedModule> t;
  t.emplace(degree, std::move(m));
  return ComplexOfModules(std::move(t), {});
}

const PresentedModule& ComplexOfModules::term(int i) const {
  auto it = terms_.find(i);
  return it == terms_.end() ? zero_ : it->second;
}

PolyMatrix ComplexOfModules::differential(int i) const {
  auto it = diffs_.find(i);
  if (it != diffs_.end()) return it->second;
  return PolyMatrix::zero(ambient_.field(), ambient_.nvars(), term(i + 1).ngens(), term(i).ngens());
}

PresentedModule prune(const PresentedModule& m) {
  std::size_t g = m.ngens();
  std::vector<Column> cols = m.relations().columns();
  while (true) {
    std::size_t pick_col = cols.size(), pick_row = 0;
    for (std::size_t c = 0; c < cols.size() && pick_col == cols.size(); ++c) {
      for (std::size_t j = 0; j < g; ++j) {
        const Poly& e = cols[c][j];
        if (!e.is_zero() && e.is_constant()) {
          pick_col = c;
          pick_row = j;
          break;
        }
      }
    }
    if (pick_col == cols.size()) break;
    Column r = cols[pick_col];
    FieldElem inv = r[pick_row].constant_term().inverse();
    std::vector<Column> next;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (c == pick_col) continue;
      Column s = cols[c];
      if (!s[pick_row].is_zero()) {
        Poly factor = s[pick_row].scaled(inv);
        for (std::size_t j = 0; j < g; ++j) {
          if (!r[j].is_zero()) s[j] -= factor * r[j];
        }
      }
      s.erase(s.begin() + static_cast<std::ptrdiff_t>(pick_row));
      push_unique(next, std::move(s));
    }
    cols = std::move(next);
    --g;
  }
  return PresentedModule(m.ambient(), PolyMatrix(m.field(), m.nvars(), g, std::move(cols)));
}

PresentedModule homology_at(const ComplexOfModules& c, int i) {
  const PresentedModule& here = c.term(i);
  const std::size_t g = here.ngens();
  if (g == 0) return PresentedModule::zero(c.ambient());
  Field f = here.field();
  const int n = here.nvars();

  std::vector<Column> cycles;
  const PresentedModule& next = c.term(i + 1);
  if (next.ngens() == 0) {
    cycles = PolyMatrix::identity(f, n, g).columns();
  } else {
    cycles = preimage(c.differential(i), next.relations());
  }
  if (cycles.empty()) return PresentedModule::zero(c.ambient());
  PolyMatrix z(f, n, g, cycles);

  PolyMatrix boundaries(f, n, g);
  if (c.term(i - 1).ngens() > 0) boundaries.append(c.differential(i - 1));
  boundaries.append(here.relations());

  PolyMatrix rel(f, n, z.cols(), preimage(z, boundaries));
  return prune(PresentedModule(here.ambient(), std::move(rel)));
}

Ideal annihilator(const PresentedModule& m) {
  const std::size_t g = m.ngens();
  if (g == 0) return Ideal::unit(m.field(), m.nvars());
  Ideal acc;
  for (std::size_t j = 0; j < g; ++j) {
    PolyMatrix e = PolyMatrix::zero(m.field(), m.nvars(), g, 1);
    e.at(j, 0) = Poly::constant(m.field(), m.nvars(), 1);
    std::vector<Poly> gens;
    for (const auto& col : preimage(e, m.relations())) gens.push_back(col[0]);
    Ideal colon_j(m.field(), m.nvars(), std::move(gens));
    acc = j == 0 ? colon_j : intersect(acc, colon_j);
  }
  return acc;
}

int min_generators_at_origin(const PresentedModule& m) {
  const std::size_t g = m.ngens();
  if (g == 0) return 0;
  const auto& cols = m.relations().columns();
  DenseMatrix a(m.field(), cols.size(), g);
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (std::size_t j = 0; j < g; ++j) a.at(c, j) = cols[c][j].constant_term();
  }
  return static_cast<int>(g - a.rank());
}

bool is_locally_zero(const PresentedModule& m) { return min_generators_at_origin(m) == 0; }

bool is_locally_zero(const PresentedModule& m, const PrimeIdealSpec& p) {
  if (m.ngens() == 0) return true;
  if (p.point) return is_locally_zero(m.translate(*p.point));
  Ideal prime(m.field(), m.nvars(), p.generators);
  Ideal ann = annihilator(m);
  return std::any_of(ann.generators().begin(), ann.generators().end(),
                     [&](const Poly& a) { return !prime.contains(a); });
}

std::vector<long> madic_dimensions(const PresentedModule& module, int depth) {
  PresentedModule m = prune(module);
  const std::size_t g = m.ngens();
  const int n = m.nvars();
  std::vector<long> out;
  for (int k = 1; k <= depth; ++k) {
    if (g == 0) {
      out.push_back(0);
      continue;
    }
    std::map<std::array<std::uint16_t, kMaxVars>, std::size_t> index;
    std::vector<Monomial> monos;
    for (int d = 0; d < k; ++d) {
      for (const auto& u : monomials_of_degree(n, d)) {
        index.emplace(u.exponents(), monos.size());
        monos.push_back(u);
      }
    }
    const std::size_t width = monos.size();
    std::vector<std::vector<std::pair<std::size_t, FieldElem>>> rows;
    for (const auto& col : m.relations().columns()) {
      int low = -1;
      for (const auto& p : col) {
        if (p.is_zero()) continue;
        int l = p.low_degree();
        low = low < 0 ? l : std::min(low, l);
      }
      if (low < 0 || low >= k) continue;
      for (const auto& u : monos) {
        if (u.degree() + low >= k) continue;
        std::vector<std::pair<std::size_t, FieldElem>> row;
        for (std::size_t j = 0; j < g; ++j) {
          for (const auto& t : col[j].terms()) {
            Monomial w = t.mono * u;
            if (w.degree() >= k) continue;
            row.emplace_back(j * width + index.at(w.exponents()), t.coeff);
          }
        }
        if (!row.empty()) rows.push_back(std::move(row));
      }
    }
    DenseMatrix a(m.field(), rows.size(), g * width);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (auto& [c, v] : rows[r]) a.at(r, c) = v;
    }
    out.push_back(static_cast<long>(g * width) - static_cast<long>(a.rank()));
  }
  return out;
}

ModuleFingerprint fingerprint(const PresentedModule& m, int depth) {
  ModuleFingerprint fp;
  fp.min_generators = min_generators_at_origin(m);
  if (fp.min_generators == 0) {
    fp.annihilator_lead = {Monomial()};
    fp.annihilator_dim = kEmptySpectrum;
    fp.madic_dims.assign(static_cast<std::size_t>(depth), 0);
    return fp;
  }
  Ideal ann = annihilator(m);
  fp.annihilator_lead = ann.standard_basis_local().lead_ideal();
  fp.annihilator_dim = ann.dim_local_at_origin();
  fp.madic_dims = madic_dimensions(m, depth);
  return fp;
}

std::string ModuleFingerprint::to_string(const std::vector<std::string>& names) const {
  std::ostringstream os;
  os << "gens=" << min_generators << " ann_lead=(";
  for (std::size_t i = 0; i < annihilator_lead.size(); ++i) {
    if (i > 0) os << ",";
    os << annihilator_lead[i].to_string(names);
  }
  os << ") ann_dim=" << annihilator_dim << " madic=[";
  for (std::size_t i = 0; i < madic_dims.size(); ++i) {
    if (i > 0) os << ",";
    os << madic_dims[i];
  }
  os << "]";
  return os.str();
}

PresentedModule base_change(const PresentedModule& m, const Ideal& target_ambient) {
  if (!same_ring(m.ambient(), target_ambient)) throw InvalidInput("base change to a different polynomial ring");
  if (!target_ambient.contains(m.ambient())) {
    throw InvalidInput("base change requires the source ideal to be contained in the target ideal");
  }
  return PresentedModule(target_ambient, m.relations());
}

}  // namespace seqreg
