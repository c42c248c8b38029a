#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "seqreg/corpus.hpp"

namespace seqreg {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kReportSchemaVersion = 1;

/// Everything `seqreg report` prints for one tower.
struct TowerReport {
  TowerDocument doc;
  std::uint64_t seed = 0;
  int trials = 32;
  RegularityReport regularity;
  PropertyVerdict main;
  /// FNV-1a hashes of the H^0 bases, for reproducibility audits.
  std::string h0_groebner_hash;
  std::string h0_local_basis_hash;
  std::optional<double> seconds;
};

TowerReport run_report(const TowerDocument& doc, const RegularityOptions& opts);

std::string fnv1a_hex(const std::string& data);

/// Renderers. JSON output is deterministic: timing appears only when the
/// report carries it.
std::string render_json(const TowerReport& r);
std::string render_text(const TowerReport& r);

struct VerifyReport {
  TowerDocument doc;
  std::uint64_t seed = 0;
  int trials = 32;
  /// Set when the tower came from `--random`.
  std::optional<std::string> reproduction;
  PropertyVerdict verdict;
  std::optional<double> seconds;
};

std::string render_json(const VerifyReport& r);
std::string render_text(const VerifyReport& r);

std::string render_json(const CorpusSummary& s, std::optional<double> seconds = std::nullopt);
std::string render_text(const CorpusSummary& s);

/// κ(A) as a tower document plus its checks.
std::string render_kappa_text(const TowerDocument& doc, const ResidueDGField& k);
std::string render_kappa_json(const TowerDocument& doc, const ResidueDGField& k);

/// Process exit code for a verdict: 0 unless a counterexample (1) or an
/// exhausted budget (2).
int exit_code(Outcome o);

}  // namespace seqreg
