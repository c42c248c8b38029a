#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "seqreg/verify.hpp"

namespace seqreg {

/// Field, variable, degree and depth limits of generated towers.
inline constexpr std::uint32_t kCorpusPrime = 32003;
inline constexpr int kCorpusMaxVars = 3;
inline constexpr int kCorpusMaxDegree = 3;
inline constexpr int kCorpusMaxSteps = 2;

/// The random instance a profile draws from `seed`. Each profile has its
/// own tower family: `kos-amp`, `sop` and `double-cm` use complete
/// intersections with an optional Koszul step; `redka`, `derived-quotient`,
/// `nakayama` and `gl` lean towards sequence-regular towers; `serre-points`
/// uses homogeneous sequence-regular towers, whose local behaviour at every
/// point of the cone is governed by the origin; `main` and `engine` mix all
/// families.
TowerDocument generate_instance(Property profile, std::uint64_t seed);

/// Seed of the index-th instance of a corpus run.
std::uint64_t instance_seed(std::uint64_t corpus_seed, std::size_t index);

/// Command that replays a single instance.
std::string reproduction_command(Property profile, std::uint64_t seed);

struct CorpusOptions {
  /// Applicable instances wanted; 0 selects the profile default.
  std::size_t count = 0;
  std::uint64_t seed = 0;
  int trials = 32;
  /// Worker threads; 0 uses the hardware concurrency.
  unsigned threads = 0;
  /// Keep every instance outcome, not just the failures.
  bool keep_all = false;
};

struct InstanceOutcome {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  std::string tower;
  PropertyVerdict verdict;
};

struct CorpusSummary {
  Property profile = Property::main;
  std::uint64_t seed = 0;
  std::size_t requested = 0;
  std::size_t generated = 0;
  std::size_t applicable = 0;
  std::size_t passed = 0;
  std::size_t counterexamples = 0;
  std::size_t inconclusive = 0;
  std::size_t budget = 0;
  /// Instances that passed with a certified verdict.
  std::size_t certified = 0;
  std::vector<InstanceOutcome> failures;
  std::vector<InstanceOutcome> instances;

  bool clean() const { return counterexamples == 0 && budget == 0 && applicable >= requested; }
};

std::size_t default_corpus_count(Property profile);

/// Generates instances until `count` applicable ones have been run (or the
/// attempt cap of 25 per requested instance is reached) and aggregates
/// their verdicts. Instances are independent and run in parallel batches;
/// the summary does not depend on the thread count.
CorpusSummary run_corpus(Property profile, const CorpusOptions& opts = {});

}  // namespace seqreg
