#pragma once

#include <vector>

#include "gring/pointed_map.hpp"

namespace gring {

// Splitting of {1,...,2^k}: i sits in `plus` iff the binary expansion of
// i-1 has an even number of 1-digits. Equivalently, identifying [2^k] with
// subsets of {1..k}, `plus` holds the even-order subsets.
struct ParitySplit {
  int exponent = 0;
  std::vector<int> plus;   // increasing
  std::vector<int> minus;  // increasing
  static bool is_plus(int i);
};

ParitySplit parity_split(int k);

// The permutation of [2^k] acting as `a` on the plus block and `b` on the
// minus block. Both are permutations of positions {1..2^{k-1}} into the
// ordered blocks: block element at position p moves to position a[p-1].
PointedMap special_perm(int k, const std::vector<int>& a, const std::vector<int>& b);

// Adjacent transpositions within each block; they generate the whole
// special action group Σ_{2^{k-1}} × Σ_{2^{k-1}}.
std::vector<PointedMap> special_generators(int k);

}  // namespace gring
