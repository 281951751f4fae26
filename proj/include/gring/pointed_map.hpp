#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "gring/errors.hpp"

namespace gring {

// A basepoint-preserving map [n] -> [m], where [n] = {0,1,...,n} with
// basepoint 0. Stored as the images of 1..n; f(0) = 0 always.
class PointedMap {
 public:
  PointedMap(int source, int target, std::vector<int> images);

  int source() const { return source_; }
  int target() const { return target_; }
  const std::vector<int>& images() const { return images_; }

  // f(i) for 0 <= i <= source.
  int operator()(int i) const;

  bool is_identity() const;
  bool is_permutation() const;

  std::string str() const;

  friend bool operator==(const PointedMap&, const PointedMap&) = default;
  friend auto operator<=>(const PointedMap&, const PointedMap&) = default;

 private:
  int source_;
  int target_;
  std::vector<int> images_;
};

PointedMap identity(int n);

// (f∘g)(i) = f(g(i)); requires source(f) == target(g).
PointedMap compose(const PointedMap& f, const PointedMap& g);

// The generator families of pointed maps.
PointedMap restriction(int n, int i);             // p_i^n : [n] -> [n-1]
PointedMap summing(int n, int i, int j, int k);   // s_{i,j,k}^n : [n] -> [n-1]
PointedMap degeneracy(int n, int j);              // d_j^n : [n-1] -> [n], misses j
PointedMap transposition(int n, int i);           // swaps i and i+1
PointedMap permutation(std::vector<int> images);  // bijection of {1..n}, fixes 0

// Colexicographic identification [n]∧[m] = [nm]: (i,j) -> (j-1)n + i.
// The last coordinate is most significant, which makes the identification
// strictly associative.
int smash_index(int n, int m, int i, int j);
PointedMap smash(const PointedMap& f, const PointedMap& g);

// All (m+1)^n maps [n] -> [m], in lexicographic image order.
std::vector<PointedMap> all_maps(int n, int m);
std::vector<PointedMap> sample_maps(int n, int m, int count, std::uint64_t seed);

}  // namespace gring
