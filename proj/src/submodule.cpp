#include "seqreg/submodule.hpp"

#include "seqreg/errors.hpp"

namespace seqreg {

PolyMatrix::PolyMatrix(Field field, int nvars, std::size_t rows, std::vector<Column> cols)
    : field_(field), nvars_(nvars), rows_(rows) {
  for (auto& c : cols) add_column(std::move(c));
}

PolyMatrix PolyMatrix::identity(Field field, int nvars, std::size_t n) {
  PolyMatrix m = zero(field, nvars, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Poly::constant(field, nvars, 1);
  return m;
}

PolyMatrix PolyMatrix::zero(Field field, int nvars, std::size_t rows, std::size_t cols) {
  PolyMatrix m(field, nvars, rows);
  for (std::size_t j = 0; j < cols; ++j) m.add_column(m.zero_column());
  return m;
}

PolyMatrix PolyMatrix::scalar(const Poly& a, std::size_t n) {
  PolyMatrix m = zero(a.field(), a.nvars(), n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = a;
  return m;
}

void PolyMatrix::add_column(Column c) {
  if (c.size() != rows_) throw InvalidInput("column length does not match the row count");
  for (const auto& p : c) {
    if (p.field() != field_ || p.nvars() != nvars_) throw InvalidInput("matrix entry from a different ring");
  }
  cols_.push_back(std::move(c));
}

void PolyMatrix::append(const PolyMatrix& other) {
  if (other.rows_ != rows_) throw InvalidInput("row count mismatch in append");
  for (const auto& c : other.cols_) add_column(c);
}

bool PolyMatrix::is_zero() const {
  for (const auto& c : cols_) {
    for (const auto& p : c) {
      if (!p.is_zero()) return false;
    }
  }
  return true;
}

Column PolyMatrix::apply(const Column& v) const {
  if (v.size() != cols_.size()) throw InvalidInput("vector length does not match the column count");
  Column out = zero_column();
  for (std::size_t j = 0; j < cols_.size(); ++j) {
    if (v[j].is_zero()) continue;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (!cols_[j][i].is_zero()) out[i] += cols_[j][i] * v[j];
    }
  }
  return out;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.rows()) throw InvalidInput("matrix dimension mismatch in product");
  PolyMatrix out(a.field(), a.nvars(), a.rows());
  for (const auto& c : b.columns()) out.add_column(a.apply(c));
  return out;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t = zero(field_, nvars_, cols_.size(), rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_.size(); ++j) t.at(j, i) = at(i, j);
  }
  return t;
}

PolyMatrix PolyMatrix::direct_sum(const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix out(a.field(), a.nvars(), a.rows() + b.rows());
  for (const auto& c : a.columns()) {
    Column col = c;
    col.resize(out.rows(), a.zero_poly());
    out.add_column(std::move(col));
  }
  for (const auto& c : b.columns()) {
    Column col(a.rows(), a.zero_poly());
    col.insert(col.end(), c.begin(), c.end());
    out.add_column(std::move(col));
  }
  return out;
}

PolyMatrix PolyMatrix::stack(const PolyMatrix& top, const PolyMatrix& bottom) {
  if (top.cols() != bottom.cols()) throw InvalidInput("column count mismatch in stack");
  PolyMatrix out(top.field(), top.nvars(), top.rows() + bottom.rows());
  for (std::size_t j = 0; j < top.cols(); ++j) {
    Column col = top.column(j);
    col.insert(col.end(), bottom.column(j).begin(), bottom.column(j).end());
    out.add_column(std::move(col));
  }
  return out;
}

PolyMatrix PolyMatrix::translate(std::span<const FieldElem> point) const {
  PolyMatrix out(field_, nvars_, rows_);
  for (const auto& c : cols_) {
    Column col;
    col.reserve(c.size());
    for (const auto& p : c) col.push_back(p.translate(point));
    out.add_column(std::move(col));
  }
  return out;
}

namespace {

// Generators (M_j ; e_j) followed by (R_k ; 0) in S^{r+m}, first block eliminated.
std::shared_ptr<const GroebnerBasis> augmented_basis(const PolyMatrix& m, const PolyMatrix& relations) {
  if (relations.cols() > 0 && relations.rows() != m.rows()) throw InvalidInput("relation rank mismatch");
  const auto r = static_cast<std::uint32_t>(m.rows());
  ModuleOrder order(MonomialOrder(OrderKind::grevlex, m.nvars()), r);
  std::vector<ModVec> gens;
  gens.reserve(m.cols() + relations.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    ModVec v = to_modvec(m.column(j), order, 0);
    v.push_back({Monomial(), r + static_cast<std::uint32_t>(j), m.field().one()});
    gens.push_back(normalize_terms(std::move(v), order));
  }
  for (const auto& c : relations.columns()) {
    ModVec v = to_modvec(c, order, 0);
    if (!v.empty()) gens.push_back(std::move(v));
  }
  return std::make_shared<const GroebnerBasis>(
      GroebnerBasis::compute(m.field(), m.nvars(), order, std::move(gens)));
}

}  // namespace

std::vector<Column> preimage(const PolyMatrix& m, const PolyMatrix& relations) {
  std::vector<Column> out;
  if (m.cols() == 0) return out;
  auto gb = augmented_basis(m, relations);
  const auto r = static_cast<std::uint32_t>(m.rows());
  for (const auto& v : gb->elements()) {
    if (v.front().comp >= r) out.push_back(from_modvec(v, m.field(), m.nvars(), m.cols(), r));
  }
  return out;
}

std::vector<Column> syzygies(const PolyMatrix& gens) {
  return preimage(gens, PolyMatrix(gens.field(), gens.nvars(), gens.rows()));
}

std::vector<Column> kernel_of_matrix(const PolyMatrix& m, const std::vector<Poly>& ideal_gens) {
  PolyMatrix rel(m.field(), m.nvars(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (const auto& f : ideal_gens) {
      if (f.is_zero()) continue;
      Column c = rel.zero_column();
      c[i] = f;
      rel.add_column(std::move(c));
    }
  }
  return preimage(m, rel);
}

Lifter::Lifter(const PolyMatrix& gens, const PolyMatrix& relations)
    : rank_(gens.rows()),
      ngens_(gens.cols()),
      field_(gens.field()),
      nvars_(gens.nvars()),
      gb_(augmented_basis(gens, relations)) {}

std::optional<Column> Lifter::lift(const Column& v) const {
  if (v.size() != rank_) throw InvalidInput("vector rank mismatch in lift");
  ModVec f = to_modvec(v, gb_->order(), 0);
  ModVec rem = gb_->reduce(std::move(f));
  const auto r = static_cast<std::uint32_t>(rank_);
  for (const auto& t : rem) {
    if (t.comp < r) return std::nullopt;
  }
  Column c = from_modvec(rem, field_, nvars_, ngens_, r);
  for (auto& p : c) p = -p;
  return c;
}

Column Lifter::lift_or_throw(const Column& v) const {
  auto c = lift(v);
  if (!c) throw NotInSpan("vector is not in the span of the generators");
  return *c;
}

bool Lifter::contains(const Column& v) const { return lift(v).has_value(); }

SubmoduleBasis::SubmoduleBasis(const PolyMatrix& gens, OrderKind kind) : rank_(gens.rows()) {
  ModuleOrder order(MonomialOrder(kind, gens.nvars()), 0);
  std::vector<ModVec> vs;
  for (const auto& c : gens.columns()) {
    ModVec v = to_modvec(c, order, 0);
    if (!v.empty()) vs.push_back(std::move(v));
  }
  gb_ = std::make_shared<const GroebnerBasis>(GroebnerBasis::compute(gens.field(), gens.nvars(), order, std::move(vs)));
}

bool SubmoduleBasis::contains(const Column& v) const {
  if (v.size() != rank_) throw InvalidInput("vector rank mismatch in membership");
  return gb_->reduce(to_modvec(v, gb_->order(), 0)).empty();
}

Column SubmoduleBasis::normal_form(const Column& v) const {
  if (v.size() != rank_) throw InvalidInput("vector rank mismatch in normal form");
  ModVec rem = gb_->reduce(to_modvec(v, gb_->order(), 0));
  return from_modvec(rem, gb_->field(), gb_->nvars(), rank_, 0);
}

}  // namespace seqreg
