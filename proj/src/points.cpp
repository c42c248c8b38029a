#include "seqreg/points.hpp"

#include <optional>

#include "seqreg/errors.hpp"

namespace seqreg {

namespace {

std::uint64_t support(const Poly& p) {
  std::uint64_t mask = 0;
  for (const auto& t : p.terms()) mask |= t.mono.support_mask();
  return mask;
}

FieldElem random_value(Field field, std::mt19937_64& rng, int range) {
  if (field.is_rational()) {
    std::uniform_int_distribution<int> d(-range, range);
    return field.from_int(d(rng));
  }
  std::uniform_int_distribution<std::uint32_t> d(0, field.characteristic() - 1);
  return field.from_int(d(rng));
}

std::optional<std::vector<FieldElem>> try_point(const Ideal& ideal, std::mt19937_64& rng, int range) {
  const int n = ideal.nvars();
  Field f = ideal.field();
  std::vector<FieldElem> point(static_cast<std::size_t>(n), f.zero());
  std::vector<Poly> fixed;
  for (int j = n - 1; j >= 0; --j) {
    Ideal current = ideal.with(fixed);
    const auto& gb = current.groebner(OrderKind::lex);
    if (gb.size() == 1 && gb[0].is_constant() && !gb[0].is_zero()) return std::nullopt;
    const std::uint64_t mine = std::uint64_t{1} << j;
    std::optional<Poly> univariate;
    for (const auto& g : gb) {
      if (support(g) == mine) {
        univariate = g;
        break;
      }
    }
    FieldElem value = f.zero();
    if (univariate) {
      auto roots = univariate_roots(*univariate, j, range);
      if (roots.empty()) return std::nullopt;
      std::uniform_int_distribution<std::size_t> pick(0, roots.size() - 1);
      value = roots[pick(rng)];
    } else {
      value = random_value(f, rng, range);
    }
    point[static_cast<std::size_t>(j)] = value;
    fixed.push_back(Poly::variable(f, n, j) - Poly::constant(f, n, value));
  }
  for (const auto& g : ideal.generators()) {
    if (!g.eval(point).is_zero()) throw InternalError("sampled point is not on the variety");
  }
  return point;
}

}  // namespace

std::vector<FieldElem> univariate_roots(const Poly& p, int var, int rational_range) {
  Field f = p.field();
  std::vector<std::pair<int, FieldElem>> terms;
  for (const auto& t : p.terms()) terms.emplace_back(t.mono.exponent(var), t.coeff);
  auto eval = [&](const FieldElem& v) {
    // Terms are sorted by decreasing degree, so Horner applies directly.
    FieldElem acc = f.zero();
    int deg = terms.empty() ? 0 : terms.front().first;
    std::size_t k = 0;
    for (int e = deg; e >= 0; --e) {
      acc *= v;
      if (k < terms.size() && terms[k].first == e) acc += terms[k++].second;
    }
    return acc;
  };
  std::vector<FieldElem> roots;
  if (f.is_rational()) {
    for (int v = -rational_range; v <= rational_range; ++v) {
      FieldElem x = f.from_int(v);
      if (eval(x).is_zero()) roots.push_back(x);
    }
  } else {
    for (std::uint32_t v = 0; v < f.characteristic(); ++v) {
      FieldElem x = f.from_int(v);
      if (eval(x).is_zero()) roots.push_back(x);
    }
  }
  return roots;
}

std::vector<std::vector<FieldElem>> sample_points(const Ideal& ideal, std::size_t count, std::mt19937_64& rng,
                                                  const PointSamplerOptions& opts) {
  std::vector<std::vector<FieldElem>> out;
  while (out.size() < count) {
    std::optional<std::vector<FieldElem>> p;
    for (int attempt = 0; attempt <= opts.max_restarts && !p; ++attempt) p = try_point(ideal, rng, opts.rational_range);
    if (!p) throw BudgetExceeded("no rational point found after " + std::to_string(opts.max_restarts) + " restarts");
    out.push_back(std::move(*p));
  }
  return out;
}

}  // namespace seqreg
