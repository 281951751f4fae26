#include "gring/generator_word.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace gring {

PointedMap GeneratorStep::map() const {
  switch (kind) {
    case StepKind::transposition: return transposition(level, index);
    case StepKind::restriction: return restriction(level, index);
    case StepKind::summing: return summing(level, index, index + 1, index);
    case StepKind::degeneracy: return degeneracy(level, index);
  }
  throw input_error("generator step: unknown kind");
}

std::string GeneratorStep::str() const {
  const char* tag = nullptr;
  switch (kind) {
    case StepKind::transposition: tag = "t"; break;
    case StepKind::restriction: tag = "p"; break;
    case StepKind::summing: tag = "s"; break;
    case StepKind::degeneracy: tag = "d"; break;
  }
  return std::string(tag) + std::to_string(level) + "_" + std::to_string(index);
}

PointedMap GeneratorWord::evaluate() const {
  PointedMap acc = identity(source);
  for (const auto& step : steps) acc = compose(step.map(), acc);
  if (acc.target() != target)
    throw input_error("generator word: steps do not reach the stated target level");
  return acc;
}

std::string GeneratorWord::str() const {
  if (steps.empty()) return "id";
  std::ostringstream os;
  for (std::size_t s = 0; s < steps.size(); ++s) {
    if (s) os << "; ";
    os << steps[s].str();
  }
  return os.str();
}

GeneratorWord factor_map(const PointedMap& f) {
  const int n = f.source(), m = f.target();
  GeneratorWord word{n, m, {}};

  // Stable sort of domain positions: nonzero fibers by target, 0-fiber last.
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    const int ka = f(a) == 0 ? m + 1 : f(a);
    const int kb = f(b) == 0 ? m + 1 : f(b);
    return ka < kb;
  });

  // pi = order^{-1}; bubble-sorting pi's image sequence records adjacent
  // transpositions whose composite (in application order) is pi.
  std::vector<int> seq(static_cast<std::size_t>(n));
  for (int p = 1; p <= n; ++p) seq[order[p - 1] - 1] = p;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int t = 1; t <= n - 1; ++t) {
      if (seq[t - 1] > seq[t]) {
        std::swap(seq[t - 1], seq[t]);
        word.steps.push_back({StepKind::transposition, n, t});
        moved = true;
      }
    }
  }

  // Fiber sizes in sorted order.
  std::vector<int> sorted_targets(static_cast<std::size_t>(n));
  for (int p = 1; p <= n; ++p) sorted_targets[p - 1] = f(order[p - 1]);

  int level = n;
  int block = 1;  // start of the current fiber at the current level
  std::vector<int> hit_targets;
  std::size_t p = 0;
  while (p < sorted_targets.size() && sorted_targets[p] != 0) {
    const int value = sorted_targets[p];
    std::size_t q = p;
    while (q < sorted_targets.size() && sorted_targets[q] == value) ++q;
    for (std::size_t rep = p + 1; rep < q; ++rep) {
      word.steps.push_back({StepKind::summing, level, block});
      --level;
    }
    hit_targets.push_back(value);
    ++block;
    p = q;
  }

  // Delete the 0-fiber block, one restriction per zero.
  const int t_count = static_cast<int>(hit_targets.size());
  while (level > t_count) {
    word.steps.push_back({StepKind::restriction, level, t_count + 1});
    --level;
  }

  // Insert missed targets in increasing order.
  std::size_t next_hit = 0;
  for (int v = 1; v <= m; ++v) {
    if (next_hit < hit_targets.size() && hit_targets[next_hit] == v) {
      ++next_hit;
      continue;
    }
    ++level;
    word.steps.push_back({StepKind::degeneracy, level, v});
  }
  return word;
}

}  // namespace gring
