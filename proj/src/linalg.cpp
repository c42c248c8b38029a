#include "seqreg/linalg.hpp"

#include <utility>

namespace seqreg {

DenseMatrix::DenseMatrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

std::vector<std::size_t> DenseMatrix::row_reduce() {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t p = r;
    while (p < rows_ && at(p, c).is_zero()) ++p;
    if (p == rows_) continue;
    if (p != r) {
      for (std::size_t j = c; j < cols_; ++j) std::swap(at(p, j), at(r, j));
    }
    FieldElem inv = at(r, c).inverse();
    for (std::size_t j = c; j < cols_; ++j) at(r, j) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || at(i, c).is_zero()) continue;
      FieldElem f = at(i, c);
      for (std::size_t j = c; j < cols_; ++j) {
        if (!at(r, j).is_zero()) at(i, j) -= f * at(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t DenseMatrix::rank() const {
  DenseMatrix copy = *this;
  return copy.row_reduce().size();
}

}  // namespace seqreg
