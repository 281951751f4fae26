#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gring/axioms.hpp"
#include "gring/model.hpp"
#include "gring/parity.hpp"

namespace gring {

struct LawConditionResult {
  std::string name;  // "condition-1" .. "condition-4"
  bool pass = true;
  std::uint64_t checked = 0;
  std::vector<CheckWitness> failures;
};

// The outcome of checking the sum-law or difference-law conditions up to a
// power bound; verdict is pass iff every condition passes.
struct LawCertificate {
  std::string model;
  Element law;
  std::string law_text;
  LawKind kind = LawKind::sum;
  int k_max = 0;
  bool verdict = false;
  std::vector<LawConditionResult> conditions;

  std::uint64_t checked_total() const;
  const LawConditionResult* condition(const std::string& name) const;
};

// Sum law: both restrictions of w are the unit and every power w^k is fixed
// by the adjacent transpositions of Σ_{2^k}, k = 1..k_max.
LawCertificate check_sum_law(const GammaRingModel& model, const Element& w, int k_max);

// Difference law: the four conditions, with invariance reduced to the
// special-action generators and the cancellation identities over all mixed
// parity pairs and every l.
LawCertificate check_difference_law(const GammaRingModel& model, const Element& r, int k_max);

struct Condition4Triple {
  int i, j, l;
  friend bool operator==(const Condition4Triple&, const Condition4Triple&) = default;
};

// Lexicographic (i, j, l) with i < j in opposite parity classes of [2^k]
// and 1 <= l <= 2^k - 1.
std::vector<Condition4Triple> condition4_triples(int k);

struct NegUnit {
  Element value;              // p^2_1(r)
  bool squares_to_unit = false;
};

// Requires condition 1 to hold; reports whether the value squares to the unit.
NegUnit neg_unit(const GammaRingModel& model, const Element& r);

// w = p^3_2 ∘ p^4_2 (r^2), the sum law derived from a difference law.
Element sum_from_difference(const GammaRingModel& model, const Element& r);

struct FoundLaw {
  Element law;
  LawCertificate certificate;
};

// All elements of R[2] passing the full check at k_max, in deterministic
// order. Ring-style models go through the candidates forced by condition 1;
// other models need a finite R[2].
std::vector<FoundLaw> enumerate_laws(const GammaRingModel& model, LawKind kind, int k_max);

}  // namespace gring
