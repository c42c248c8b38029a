#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "seqreg/dgring.hpp"

namespace seqreg {

/// A parsed tower description. The line-oriented format:
///
///   # comment
///   field 32003            (or: field Q)
///   vars x y
///   quotient [x*y]
///   koszul [x]
///   trivext 2 [x]          cyclic module H^0/(x) in degree -2
///   trivext 1 free 2       free H^0-module of rank 2
///   trivext 1 module 2 [[x, 0], [0, y]]   relation columns
///   point [0, 1]
///   label any text
///
/// Inputs for the verifiers may follow: `elements [..]`, `matrix [[..]]`
/// (given by rows) and `points [[..], ..]`.
struct TowerDocument {
  DGRingSpec spec;
  std::vector<Poly> elements;
  std::vector<PolyMatrix> matrices;
  std::vector<std::vector<FieldElem>> points;
};

TowerDocument parse_tower(std::string_view text);
TowerDocument parse_tower_file(const std::string& path);

/// Serializes a spec (plus verifier inputs) back to the text format.
std::string format_tower(const TowerDocument& doc);

}  // namespace seqreg
