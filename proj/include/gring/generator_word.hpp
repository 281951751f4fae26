#pragma once

#include <string>
#include <vector>

#include "gring/pointed_map.hpp"

namespace gring {

enum class StepKind { transposition, restriction, summing, degeneracy };

// One named generator: t^n_i, p^n_i, s^n_{i,i+1,i} or d^n_j. `level` is the
// superscript n; degeneracies go [n-1] -> [n], the others start at [n].
struct GeneratorStep {
  StepKind kind;
  int level;
  int index;

  PointedMap map() const;
  std::string str() const;

  friend bool operator==(const GeneratorStep&, const GeneratorStep&) = default;
};

// A composable sequence of generator steps in application order: steps.front()
// is applied first, so the word evaluates to steps.back().map() ∘ ... ∘
// steps.front().map().
struct GeneratorWord {
  int source = 0;
  int target = 0;
  std::vector<GeneratorStep> steps;

  PointedMap evaluate() const;
  std::string str() const;  // "t3_2; s3_1; p2_2; d2_1", empty word renders "id"
};

// Factor an arbitrary map into generators: a permutation sorts the domain so
// nonzero fibers are contiguous blocks in target order with the 0-fiber last,
// adjacent summings merge each fiber, restrictions delete the 0-fiber, and
// degeneracies insert the missed targets.
GeneratorWord factor_map(const PointedMap& f);

}  // namespace gring
