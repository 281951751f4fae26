#include "gring/pointed_map.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace gring {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw input_error(msg);
}

}  // namespace

PointedMap::PointedMap(int source, int target, std::vector<int> images)
    : source_(source), target_(target), images_(std::move(images)) {
  require(source_ >= 0 && target_ >= 0, "pointed map: negative level");
  require(static_cast<int>(images_.size()) == source_,
          "pointed map: expected " + std::to_string(source_) + " images, got " +
              std::to_string(images_.size()));
  for (int v : images_)
    require(v >= 0 && v <= target_,
            "pointed map: image " + std::to_string(v) + " outside [0," + std::to_string(target_) + "]");
}

int PointedMap::operator()(int i) const {
  require(i >= 0 && i <= source_, "pointed map: argument " + std::to_string(i) + " out of range");
  return i == 0 ? 0 : images_[static_cast<std::size_t>(i) - 1];
}

bool PointedMap::is_identity() const {
  if (source_ != target_) return false;
  for (int i = 1; i <= source_; ++i)
    if (images_[i - 1] != i) return false;
  return true;
}

bool PointedMap::is_permutation() const {
  if (source_ != target_) return false;
  std::vector<bool> hit(static_cast<std::size_t>(source_) + 1, false);
  for (int v : images_) {
    if (v == 0 || hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

std::string PointedMap::str() const {
  std::ostringstream os;
  os << source_ << "->" << target_ << ":(";
  for (int i = 0; i < source_; ++i) {
    if (i) os << ",";
    os << images_[i];
  }
  os << ")";
  return os.str();
}

PointedMap identity(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  return {n, n, std::move(img)};
}

PointedMap compose(const PointedMap& f, const PointedMap& g) {
  require(f.source() == g.target(), "compose: level mismatch (" + std::to_string(g.target()) +
                                        " vs " + std::to_string(f.source()) + ")");
  std::vector<int> img(static_cast<std::size_t>(g.source()));
  for (int i = 1; i <= g.source(); ++i) {
    const int v = g(i);
    img[i - 1] = v == 0 ? 0 : f(v);
  }
  return {g.source(), f.target(), std::move(img)};
}

PointedMap restriction(int n, int i) {
  require(n >= 1 && i >= 1 && i <= n, "restriction: need 1 <= i <= n");
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) img[j - 1] = j < i ? j : (j == i ? 0 : j - 1);
  return {n, n - 1, std::move(img)};
}

PointedMap summing(int n, int i, int j, int k) {
  require(n >= 2 && i >= 1 && i < j && j <= n, "summing: need 1 <= i < j <= n");
  require(k >= 1 && k <= n - 1, "summing: need 1 <= k <= n-1");
  std::vector<int> img(static_cast<std::size_t>(n));
  img[i - 1] = k;
  img[j - 1] = k;
  // The remaining elements land on [n-1] \ {k}, order preserved.
  int next = 1;
  for (int a = 1; a <= n; ++a) {
    if (a == i || a == j) continue;
    if (next == k) ++next;
    img[a - 1] = next++;
  }
  return {n, n - 1, std::move(img)};
}

PointedMap degeneracy(int n, int j) {
  require(n >= 1 && j >= 1 && j <= n, "degeneracy: need 1 <= j <= n");
  std::vector<int> img(static_cast<std::size_t>(n) - 1);
  for (int a = 1; a <= n - 1; ++a) img[a - 1] = a < j ? a : a + 1;
  return {n - 1, n, std::move(img)};
}

PointedMap transposition(int n, int i) {
  require(n >= 2 && i >= 1 && i <= n - 1, "transposition: need 1 <= i <= n-1");
  auto m = identity(n);
  std::vector<int> img = m.images();
  std::swap(img[i - 1], img[i]);
  return {n, n, std::move(img)};
}

PointedMap permutation(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  PointedMap m{n, n, std::move(images)};
  require(m.is_permutation(), "permutation: images are not a bijection of {1..n}");
  return m;
}

int smash_index(int n, int m, int i, int j) {
  require(i >= 1 && i <= n && j >= 1 && j <= m, "smash_index: coordinates out of range");
  return (j - 1) * n + i;
}

PointedMap smash(const PointedMap& f, const PointedMap& g) {
  const int n = f.source(), np = f.target();
  const int m = g.source(), mp = g.target();
  require(static_cast<std::int64_t>(n) * m <= 1 << 26, "smash: source level too large");
  require(static_cast<std::int64_t>(np) * mp <= 1 << 26, "smash: target level too large");
  std::vector<int> img(static_cast<std::size_t>(n) * m);
  for (int j = 1; j <= m; ++j) {
    const int w = g(j);
    for (int i = 1; i <= n; ++i) {
      const int v = f(i);
      img[static_cast<std::size_t>(j - 1) * n + i - 1] =
          (v == 0 || w == 0) ? 0 : (w - 1) * np + v;
    }
  }
  return {n * m, np * mp, std::move(img)};
}

std::vector<PointedMap> all_maps(int n, int m) {
  require(n >= 0 && m >= 0, "all_maps: negative level");
  std::vector<PointedMap> out;
  std::vector<int> img(static_cast<std::size_t>(n), 0);
  while (true) {
    out.emplace_back(n, m, img);
    int pos = n - 1;
    while (pos >= 0 && img[pos] == m) img[pos--] = 0;
    if (pos < 0) break;
    ++img[pos];
  }
  return out;
}

std::vector<PointedMap> sample_maps(int n, int m, int count, std::uint64_t seed) {
  require(n >= 0 && m >= 0 && count >= 0, "sample_maps: bad arguments");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, m);
  std::vector<PointedMap> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int c = 0; c < count; ++c) {
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int& v : img) v = pick(rng);
    out.emplace_back(n, m, std::move(img));
  }
  return out;
}

}  // namespace gring
