#pragma once

#include <string>
#include <vector>

#include "seqreg/ideal.hpp"
#include "seqreg/poly_parse.hpp"

namespace seqreg::testing {

/// Small fixture: a polynomial ring with named variables and a parser.
struct Ring {
  Field field;
  std::vector<std::string> vars;

  Ring(Field f, std::vector<std::string> v) : field(f), vars(std::move(v)) {}
  static Ring qq(std::vector<std::string> v) { return Ring(Field::rationals(), std::move(v)); }
  static Ring fp(std::vector<std::string> v, std::uint64_t p = 32003) { return Ring(Field::prime(p), std::move(v)); }

  int n() const { return static_cast<int>(vars.size()); }
  Poly operator()(const std::string& text) const { return parse_poly(text, field, vars); }
  Ideal ideal(const std::vector<std::string>& gens) const {
    std::vector<Poly> ps;
    for (const auto& g : gens) ps.push_back((*this)(g));
    return Ideal(field, n(), std::move(ps));
  }
  std::vector<FieldElem> point(const std::vector<std::int64_t>& coords) const {
    std::vector<FieldElem> out;
    for (auto c : coords) out.push_back(field.from_int(c));
    return out;
  }
};

}  // namespace seqreg::testing

#include <random>

namespace seqreg::testing {

/// Random polynomial with up to `terms` terms of degree <= `max_deg` and
/// small integer coefficients.
inline Poly random_poly(const Ring& r, std::mt19937_64& rng, int terms = 4, int max_deg = 3) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::vector<Term> ts;
  for (int k = 0; k < terms; ++k) {
    std::vector<int> e(static_cast<std::size_t>(r.n()), 0);
    int d = deg(rng);
    std::uniform_int_distribution<int> var(0, r.n() - 1);
    for (int s = 0; s < d; ++s) ++e[static_cast<std::size_t>(var(rng))];
    ts.push_back({Monomial(e), r.field.from_int(coeff(rng))});
  }
  return Poly::from_terms(r.field, r.n(), std::move(ts));
}

}  // namespace seqreg::testing
