#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "seqreg/groebner.hpp"

namespace seqreg {

/// A matrix over S = k[x_1..x_n], stored as columns of length `rows`.
/// Also serves as a generator list of a submodule of S^rows.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(Field field, int nvars, std::size_t rows) : field_(field), nvars_(nvars), rows_(rows) {}
  PolyMatrix(Field field, int nvars, std::size_t rows, std::vector<Column> cols);

  static PolyMatrix identity(Field field, int nvars, std::size_t n);
  static PolyMatrix zero(Field field, int nvars, std::size_t rows, std::size_t cols);
  /// Diagonal block matrix a * I_n.
  static PolyMatrix scalar(const Poly& a, std::size_t n);

  Field field() const { return field_; }
  int nvars() const { return nvars_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_.size(); }
  const std::vector<Column>& columns() const { return cols_; }
  const Column& column(std::size_t j) const { return cols_[j]; }
  const Poly& at(std::size_t i, std::size_t j) const { return cols_[j][i]; }
  Poly& at(std::size_t i, std::size_t j) { return cols_[j][i]; }

  void add_column(Column c);
  void append(const PolyMatrix& other);  // same row count

  Poly zero_poly() const { return Poly(field_, nvars_); }
  Column zero_column() const { return Column(rows_, zero_poly()); }
  bool is_zero() const;

  Column apply(const Column& v) const;
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  PolyMatrix transpose() const;

  /// Block matrix [[a, 0], [0, b]].
  static PolyMatrix direct_sum(const PolyMatrix& a, const PolyMatrix& b);
  /// Block matrix [[a], [b]] stacking rows (equal column counts).
  static PolyMatrix stack(const PolyMatrix& top, const PolyMatrix& bottom);

  PolyMatrix translate(std::span<const FieldElem> point) const;

 private:
  Field field_ = Field::rationals();
  int nvars_ = 0;
  std::size_t rows_ = 0;
  std::vector<Column> cols_;
};

/// {c in S^m : M c in image(R)} for M: S^m -> S^r and relation columns R
/// in S^r. Generators come from an elimination Gröbner basis of the
/// augmented module; the result is a reduced basis of the preimage.
std::vector<Column> preimage(const PolyMatrix& m, const PolyMatrix& relations);

/// Syzygies among the columns of `gens`.
std::vector<Column> syzygies(const PolyMatrix& gens);

/// Kernel of M viewed as a map of free S/J-modules, J given by generators;
/// lifted to S (each returned column maps into J * S^rows).
std::vector<Column> kernel_of_matrix(const PolyMatrix& m, const std::vector<Poly>& ideal_gens);

/// Expresses vectors as S-combinations of generator columns modulo
/// relation columns. The augmented Gröbner basis is computed once.
class Lifter {
 public:
  Lifter(const PolyMatrix& gens, const PolyMatrix& relations);

  /// Coefficients c with gens * c - v in image(relations), or nullopt.
  std::optional<Column> lift(const Column& v) const;
  /// Throws NotInSpan when lift() fails.
  Column lift_or_throw(const Column& v) const;
  bool contains(const Column& v) const;

 private:
  std::size_t rank_;
  std::size_t ngens_;
  Field field_;
  int nvars_;
  std::shared_ptr<const GroebnerBasis> gb_;
};

/// Membership in a submodule of S^r (term-over-position Gröbner basis).
class SubmoduleBasis {
 public:
  explicit SubmoduleBasis(const PolyMatrix& gens, OrderKind kind = OrderKind::grevlex);

  bool contains(const Column& v) const;
  Column normal_form(const Column& v) const;
  const GroebnerBasis& basis() const { return *gb_; }
  std::size_t rank() const { return rank_; }

 private:
  std::size_t rank_;
  std::shared_ptr<const GroebnerBasis> gb_;
};

}  // namespace seqreg
