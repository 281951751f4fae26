#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace gring {

// A member of a model carrier R[n]. The payload layout is model-specific
// (entry vector, ring-element indices, monoid element + position, carrier
// index); equality is meaningful between elements of the same model only.
struct Element {
  int level = 0;
  std::vector<std::int64_t> data;

  friend bool operator==(const Element&, const Element&) = default;
  friend auto operator<=>(const Element&, const Element&) = default;
};

}  // namespace gring
