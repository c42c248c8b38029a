#pragma once

#include <random>
#include <vector>

#include "seqreg/ideal.hpp"

namespace seqreg {

struct PointSamplerOptions {
  /// Restarts allowed per requested point before BudgetExceeded.
  int max_restarts = 200;
  /// Over the rationals, coordinates are drawn from [-range, range].
  int rational_range = 50;
};

/// Rational points of V(I), found one coordinate at a time from the last
/// variable to the first: a lex Gröbner basis of I plus the coordinates
/// already fixed either contains a univariate polynomial in the current
/// variable (a random root is chosen, found by exhaustive search over F_p or
/// over a bounded integer range for Q) or leaves that variable free (a
/// random value is chosen). Dead ends restart the point.
std::vector<std::vector<FieldElem>> sample_points(const Ideal& ideal, std::size_t count, std::mt19937_64& rng,
                                                  const PointSamplerOptions& opts = {});

/// Roots of a polynomial in the single variable `var` among the candidate
/// values (all of F_p, or integers in [-range, range] over Q).
std::vector<FieldElem> univariate_roots(const Poly& p, int var, int rational_range = 50);

}  // namespace seqreg
