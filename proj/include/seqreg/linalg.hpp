#pragma once

#include <cstddef>
#include <vector>

#include "seqreg/field.hpp"

namespace seqreg {

/// Dense row-major matrix over a Field, for the small constant-coefficient
/// problems that arise in local computations (Nakayama ranks, truncations).
class DenseMatrix {
 public:
  DenseMatrix(Field field, std::size_t rows, std::size_t cols);

  Field field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  FieldElem& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const FieldElem& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  /// In-place reduced row echelon form; returns the pivot column of each
  /// nonzero row, in order.
  std::vector<std::size_t> row_reduce();
  std::size_t rank() const;

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<FieldElem> data_;
};

}  // namespace seqreg
