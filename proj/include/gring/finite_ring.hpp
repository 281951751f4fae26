#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gring/errors.hpp"

namespace gring {

// A finite unital ring given by element tables. Axioms are checked
// exhaustively on construction via validate().
struct FiniteRing {
  std::string label;
  int size = 0;
  int zero = 0;
  int one = 0;
  std::vector<std::string> names;
  std::vector<int> add;  // size*size, row-major
  std::vector<int> mul;
  std::vector<int> neg;  // derived by validate()

  int add_at(int a, int b) const { return add[static_cast<std::size_t>(a) * size + b]; }
  int mul_at(int a, int b) const { return mul[static_cast<std::size_t>(a) * size + b]; }

  // Image of an integer under the unique unital ring map from the integers.
  int int_image(std::int64_t v) const;

  void validate();
};

FiniteRing zmod_ring(int n);

// End(Z/d1 ⊕ ... ⊕ Z/dt): t×t integer matrices where entry (a,b) is a
// multiple of d_a/gcd(d_a,d_b) reduced mod d_a. Composition is matrix
// multiplication. `size_cap` bounds the materialized element count.
FiniteRing end_ring(const std::vector<int>& ds, std::uint64_t size_cap = 65536);

// A finite monoid given by a table; associativity and the two-sided unit
// are checked on construction.
struct FiniteMonoid {
  std::string label;
  int size = 0;
  int unit = 0;
  std::vector<std::string> names;
  std::vector<int> table;  // size*size, row-major

  int at(int a, int b) const { return table[static_cast<std::size_t>(a) * size + b]; }

  void validate() const;
};

}  // namespace gring
