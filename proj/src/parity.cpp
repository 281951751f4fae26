#include "gring/parity.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace gring {

namespace {

void check_position_perm(const std::vector<int>& p, int half, const char* which) {
  if (static_cast<int>(p.size()) != half)
    throw input_error(std::string("special_perm: ") + which + " has wrong size");
  std::vector<bool> hit(static_cast<std::size_t>(half) + 1, false);
  for (int v : p) {
    if (v < 1 || v > half || hit[v])
      throw input_error(std::string("special_perm: ") + which + " is not a permutation");
    hit[v] = true;
  }
}

}  // namespace

bool ParitySplit::is_plus(int i) {
  return std::popcount(static_cast<unsigned>(i - 1)) % 2 == 0;
}

ParitySplit parity_split(int k) {
  if (k < 0 || k > 26) throw input_error("parity_split: k out of range");
  ParitySplit out;
  out.exponent = k;
  const int size = 1 << k;
  for (int i = 1; i <= size; ++i)
    (out.is_plus(i) ? out.plus : out.minus).push_back(i);
  return out;
}

PointedMap special_perm(int k, const std::vector<int>& a, const std::vector<int>& b) {
  if (k < 1) throw input_error("special_perm: need k >= 1");
  const auto split = parity_split(k);
  const int half = 1 << (k - 1);
  check_position_perm(a, half, "a");
  check_position_perm(b, half, "b");
  std::vector<int> img(static_cast<std::size_t>(1) << k);
  for (int p = 1; p <= half; ++p) {
    img[split.plus[p - 1] - 1] = split.plus[a[p - 1] - 1];
    img[split.minus[p - 1] - 1] = split.minus[b[p - 1] - 1];
  }
  return permutation(std::move(img));
}

std::vector<PointedMap> special_generators(int k) {
  if (k < 1) throw input_error("special_generators: need k >= 1");
  const int half = 1 << (k - 1);
  std::vector<int> id(static_cast<std::size_t>(half));
  std::iota(id.begin(), id.end(), 1);
  std::vector<PointedMap> out;
  for (int t = 1; t <= half - 1; ++t) {
    auto swapped = id;
    std::swap(swapped[t - 1], swapped[t]);
    out.push_back(special_perm(k, swapped, id));
  }
  for (int t = 1; t <= half - 1; ++t) {
    auto swapped = id;
    std::swap(swapped[t - 1], swapped[t]);
    out.push_back(special_perm(k, id, swapped));
  }
  return out;
}

}  // namespace gring
