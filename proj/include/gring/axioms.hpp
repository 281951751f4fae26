#pragma once

#include <cstdint>
#include <deque>
#include <string>
#include <vector>

#include "gring/model.hpp"

namespace gring {

struct CheckWitness {
  std::string context;  // the maps/elements involved
  std::string lhs;
  std::string rhs;
};

struct CheckEntry {
  std::string check;
  std::uint64_t checked = 0;
  std::uint64_t violation_count = 0;
  std::vector<CheckWitness> witnesses;  // capped; violation_count has the true total

  void record_violation(CheckWitness w);
};

struct CheckReport {
  // deque: entry() hands out references that must survive later insertions
  std::deque<CheckEntry> entries;

  CheckEntry& entry(const std::string& name);
  std::uint64_t checked_total() const;
  std::uint64_t violation_total() const;
  bool pass() const { return violation_total() == 0; }
};

enum class CheckMode { exhaustive, sample };

struct AxiomCheckConfig {
  int n_max = 3;
  CheckMode mode = CheckMode::exhaustive;
  std::uint64_t seed = 0;
  int bound = 3;     // entry bound for generated elements of unbounded carriers
  int samples = 200; // sample budget per associativity cell and per sampled check
};

// Verifies the functor laws, naturality of multiplication, associativity and
// both unit laws, recording counterexamples. Exhaustive mode walks all maps
// with levels <= n_max (naturality caps map levels at 2); associativity is
// sampled over triples whose product level stays within 16.
CheckReport check_axioms(const GammaRingModel& model, const AxiomCheckConfig& config);

}  // namespace gring
