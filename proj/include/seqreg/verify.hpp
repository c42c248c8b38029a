#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "seqreg/dsl.hpp"
#include "seqreg/regularity.hpp"

namespace seqreg {

enum class Property { main, kos_amp, sop, double_cm, gl, derived_quotient, redka, nakayama, serre_points, engine };

std::string_view property_name(Property p);
std::optional<Property> parse_property(std::string_view name);
const std::vector<Property>& all_properties();

enum class Outcome {
  pass,
  counterexample,
  /// A probabilistic search came up short; neither a pass nor a counterexample.
  inconclusive,
  /// The instance does not satisfy the property's hypotheses.
  not_applicable,
  budget,
};

std::string_view outcome_name(Outcome o);

using DetailValue = std::variant<bool, std::int64_t, std::string, std::vector<std::string>>;

struct PropertyVerdict {
  Property property = Property::main;
  Outcome outcome = Outcome::pass;
  /// False when the verdict rests on a randomized depth search.
  bool certified = true;
  std::string message;
  std::vector<std::pair<std::string, DetailValue>> details;
};

struct VerifyOptions {
  RegularityOptions regularity;
  /// Random matrices drawn by `gl` when the document supplies none.
  int matrices = 50;
  /// Points sampled by `serre-points` and `nakayama` when none are given.
  int points = 10;
};

/// Runs one property on a document. Elements, matrices and points in the
/// document use its original coordinates; a base point is handled here.
/// Budget exhaustion is reported as Outcome::budget rather than thrown.
PropertyVerdict run_property(Property p, const TowerDocument& doc, const VerifyOptions& opts = {});

}  // namespace seqreg
