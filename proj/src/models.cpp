#include "gring/models.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <map>
#include <sstream>

#include "gring/checked.hpp"

namespace gring {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::optional<std::int64_t> parse_int(std::string_view s) {
  s = trim(s);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

// Splits "[a,b,c]" at top-level commas; nested brackets stay intact.
std::vector<std::string> split_vector_literal(std::string_view text, const std::string& what) {
  text = trim(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']')
    throw input_error(what + ": expected a bracketed vector, got \"" + std::string(text) + "\"");
  text = text.substr(1, text.size() - 2);
  std::vector<std::string> out;
  if (trim(text).empty()) return out;
  int depth = 0;
  std::string cur;
  for (char c : text) {
    if (c == '[' || c == '(') ++depth;
    if (c == ']' || c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.emplace_back(trim(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.emplace_back(trim(cur));
  return out;
}

std::vector<std::int64_t> parse_int_vector(std::string_view text, int level, const std::string& what) {
  auto tokens = split_vector_literal(text, what);
  if (static_cast<int>(tokens.size()) != level)
    throw input_error(what + ": expected " + std::to_string(level) + " entries, got " +
                      std::to_string(tokens.size()));
  std::vector<std::int64_t> out;
  for (const auto& tok : tokens) {
    auto v = parse_int(tok);
    if (!v) throw input_error(what + ": bad integer \"" + tok + "\"");
    out.push_back(*v);
  }
  return out;
}

// Eilenberg-MacLane style model: R[k] is the set of k-vectors over the
// natural numbers (hn) or the integers (hz); induced maps sum entries over
// fibers and multiplication is the outer product placed by smash_index.
class HModel final : public GammaRingModel {
 public:
  explicit HModel(bool integral) : GammaRingModel(integral ? "hz" : "hn"), integral_(integral) {}

  std::optional<std::uint64_t> carrier_size(int level) const override {
    if (level < 0) throw input_error("carrier_size: negative level");
    if (level == 0) return 1;
    return std::nullopt;
  }

  Element basepoint(int level) const override {
    return {level, std::vector<std::int64_t>(static_cast<std::size_t>(level), 0)};
  }

  Element unit() const override { return {1, {1}}; }

  Element induce(const PointedMap& f, const Element& x) const override {
    require_level(x, f.source(), "induce");
    Element out = basepoint(f.target());
    for (int i = 1; i <= f.source(); ++i) {
      const int v = f(i);
      if (v != 0) out.data[v - 1] = checked_add(out.data[v - 1], x.data[i - 1]);
    }
    return out;
  }

  Element mult(const Element& x, const Element& y) const override {
    const int level = checked_product_level(x.level, y.level, "mult");
    Element out = basepoint(level);
    for (int j = 1; j <= y.level; ++j)
      for (int i = 1; i <= x.level; ++i)
        out.data[static_cast<std::size_t>(j - 1) * x.level + i - 1] =
            checked_mul(x.data[i - 1], y.data[j - 1]);
    return out;
  }

  std::vector<Element> generated_elements(int level, int bound) const override {
    if (level < 0 || bound < 0) throw input_error("generated_elements: bad arguments");
    const std::int64_t lo = integral_ ? -bound : 0;
    const std::int64_t hi = bound;
    std::vector<Element> out;
    Element cur{level, std::vector<std::int64_t>(static_cast<std::size_t>(level), lo)};
    while (true) {
      out.push_back(cur);
      int pos = level - 1;
      while (pos >= 0 && cur.data[pos] == hi) cur.data[pos--] = lo;
      if (pos < 0) break;
      ++cur.data[pos];
    }
    return out;
  }

  std::string render(const Element& x) const override {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < x.level; ++i) {
      if (i) os << ",";
      os << x.data[i];
    }
    os << "]";
    return os.str();
  }

  Element parse_element(std::string_view text, int level) const override {
    auto data = parse_int_vector(text, level, name() + " element");
    if (!integral_)
      for (auto v : data)
        if (v < 0) throw input_error("hn element: entries must be non-negative");
    return {level, std::move(data)};
  }

  std::optional<std::vector<Element>> law_candidates(LawKind kind) const override {
    if (kind == LawKind::sum) return std::vector<Element>{{2, {1, 1}}};
    if (integral_) return std::vector<Element>{{2, {1, -1}}};
    return std::vector<Element>{};  // no integer-free candidate satisfies condition 1
  }

 private:
  bool integral_;
};

// The identity functor: R[k] = [k].
class SphereModel final : public GammaRingModel {
 public:
  SphereModel() : GammaRingModel("sphere") {}

  std::optional<std::uint64_t> carrier_size(int level) const override {
    if (level < 0) throw input_error("carrier_size: negative level");
    return static_cast<std::uint64_t>(level) + 1;
  }

  std::vector<Element> enumerate(int level) const override {
    std::vector<Element> out;
    for (int i = 0; i <= level; ++i) out.push_back({level, {i}});
    return out;
  }

  Element basepoint(int level) const override { return {level, {0}}; }
  Element unit() const override { return {1, {1}}; }

  Element induce(const PointedMap& f, const Element& x) const override {
    require_level(x, f.source(), "induce");
    return {f.target(), {f(static_cast<int>(x.data[0]))}};
  }

  Element mult(const Element& x, const Element& y) const override {
    const int level = checked_product_level(x.level, y.level, "mult");
    const int i = static_cast<int>(x.data[0]);
    const int j = static_cast<int>(y.data[0]);
    if (i == 0 || j == 0) return basepoint(level);
    return {level, {smash_index(x.level, y.level, i, j)}};
  }

  std::string render(const Element& x) const override { return std::to_string(x.data[0]); }

  Element parse_element(std::string_view text, int level) const override {
    auto v = parse_int(text);
    if (!v || *v < 0 || *v > level)
      throw input_error("sphere element: expected an integer in [0," + std::to_string(level) + "]");
    return {level, {*v}};
  }
};

// Vectors over a finite ring; covers hmod:<n>, end:<...> and ring files.
class RingModel final : public GammaRingModel {
 public:
  RingModel(FiniteRing ring, std::string name)
      : GammaRingModel(std::move(name)), ring_(std::move(ring)) {
    for (int a = 0; a < ring_.size; ++a) name_index_[ring_.names[a]] = a;
  }

  const FiniteRing& ring() const { return ring_; }

  std::optional<std::uint64_t> carrier_size(int level) const override {
    if (level < 0) throw input_error("carrier_size: negative level");
    std::uint64_t count = 1;
    for (int i = 0; i < level; ++i) {
      if (count > std::numeric_limits<std::uint64_t>::max() / ring_.size)
        return std::numeric_limits<std::uint64_t>::max();
      count *= static_cast<std::uint64_t>(ring_.size);
    }
    return count;
  }

  std::vector<Element> enumerate(int level) const override {
    const auto count = *carrier_size(level);
    if (count > (1u << 22))
      throw unsupported_error(name() + ": carrier at level " + std::to_string(level) +
                              " is too large to enumerate");
    std::vector<Element> out;
    out.reserve(count);
    Element cur = basepoint(level);
    while (true) {
      out.push_back(cur);
      int pos = 0;
      while (pos < level && cur.data[pos] + 1 == ring_.size) cur.data[pos++] = 0;
      if (pos == level) break;
      ++cur.data[pos];
    }
    return out;
  }

  Element basepoint(int level) const override {
    return {level, std::vector<std::int64_t>(static_cast<std::size_t>(level), ring_.zero)};
  }

  Element unit() const override { return {1, {ring_.one}}; }

  Element induce(const PointedMap& f, const Element& x) const override {
    require_level(x, f.source(), "induce");
    Element out = basepoint(f.target());
    for (int i = 1; i <= f.source(); ++i) {
      const int v = f(i);
      if (v != 0)
        out.data[v - 1] = ring_.add_at(static_cast<int>(out.data[v - 1]),
                                       static_cast<int>(x.data[i - 1]));
    }
    return out;
  }

  Element mult(const Element& x, const Element& y) const override {
    const int level = checked_product_level(x.level, y.level, "mult");
    Element out = basepoint(level);
    for (int j = 1; j <= y.level; ++j)
      for (int i = 1; i <= x.level; ++i)
        out.data[static_cast<std::size_t>(j - 1) * x.level + i - 1] =
            ring_.mul_at(static_cast<int>(x.data[i - 1]), static_cast<int>(y.data[j - 1]));
    return out;
  }

  std::string render(const Element& x) const override {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < x.level; ++i) {
      if (i) os << ",";
      os << ring_.names[x.data[i]];
    }
    os << "]";
    return os.str();
  }

  Element parse_element(std::string_view text, int level) const override {
    auto tokens = split_vector_literal(text, name() + " element");
    if (static_cast<int>(tokens.size()) != level)
      throw input_error(name() + " element: expected " + std::to_string(level) + " entries, got " +
                        std::to_string(tokens.size()));
    Element out{level, {}};
    for (const auto& tok : tokens) {
      if (auto v = parse_int(tok)) {
        out.data.push_back(ring_.int_image(*v));
      } else if (auto it = name_index_.find(tok); it != name_index_.end()) {
        out.data.push_back(it->second);
      } else {
        throw input_error(name() + " element: unknown ring element \"" + tok + "\"");
      }
    }
    return out;
  }

  std::optional<std::vector<Element>> law_candidates(LawKind kind) const override {
    if (kind == LawKind::sum) return std::vector<Element>{{2, {ring_.one, ring_.one}}};
    return std::vector<Element>{{2, {ring_.one, ring_.neg[ring_.one]}}};
  }

 private:
  FiniteRing ring_;
  std::map<std::string, int, std::less<>> name_index_;
};

// R[k] = {*} ∪ M × {1..k}: a monoid element riding on a nonzero position.
class MonoidModel final : public GammaRingModel {
 public:
  MonoidModel(FiniteMonoid monoid, std::string name)
      : GammaRingModel(std::move(name)), monoid_(std::move(monoid)) {
    for (int a = 0; a < monoid_.size; ++a) name_index_[monoid_.names[a]] = a;
  }

  std::optional<std::uint64_t> carrier_size(int level) const override {
    if (level < 0) throw input_error("carrier_size: negative level");
    return 1 + static_cast<std::uint64_t>(monoid_.size) * level;
  }

  std::vector<Element> enumerate(int level) const override {
    std::vector<Element> out;
    out.push_back(basepoint(level));
    for (int m = 0; m < monoid_.size; ++m)
      for (int pos = 1; pos <= level; ++pos) out.push_back({level, {m, pos}});
    return out;
  }

  Element basepoint(int level) const override { return {level, {}}; }
  Element unit() const override { return {1, {monoid_.unit, 1}}; }

  Element induce(const PointedMap& f, const Element& x) const override {
    require_level(x, f.source(), "induce");
    if (x.data.empty()) return basepoint(f.target());
    const int v = f(static_cast<int>(x.data[1]));
    if (v == 0) return basepoint(f.target());
    return {f.target(), {x.data[0], v}};
  }

  Element mult(const Element& x, const Element& y) const override {
    const int level = checked_product_level(x.level, y.level, "mult");
    if (x.data.empty() || y.data.empty()) return basepoint(level);
    const int m = monoid_.at(static_cast<int>(x.data[0]), static_cast<int>(y.data[0]));
    const int pos = smash_index(x.level, y.level, static_cast<int>(x.data[1]),
                                static_cast<int>(y.data[1]));
    return {level, {m, pos}};
  }

  std::string render(const Element& x) const override {
    if (x.data.empty()) return "*";
    return "(" + monoid_.names[x.data[0]] + "," + std::to_string(x.data[1]) + ")";
  }

  Element parse_element(std::string_view text, int level) const override {
    text = trim(text);
    if (text == "*") return basepoint(level);
    if (text.size() < 2 || text.front() != '(' || text.back() != ')')
      throw input_error(name() + " element: expected \"*\" or \"(name,position)\"");
    const auto inner = text.substr(1, text.size() - 2);
    const auto comma = inner.rfind(',');
    if (comma == std::string_view::npos)
      throw input_error(name() + " element: expected \"(name,position)\"");
    const std::string elem_name{trim(inner.substr(0, comma))};
    const auto pos = parse_int(inner.substr(comma + 1));
    auto it = name_index_.find(elem_name);
    if (it == name_index_.end())
      throw input_error(name() + " element: unknown monoid element \"" + elem_name + "\"");
    if (!pos || *pos < 1 || *pos > level)
      throw input_error(name() + " element: position out of range");
    return {level, {it->second, *pos}};
  }

 private:
  FiniteMonoid monoid_;
  std::map<std::string, int, std::less<>> name_index_;
};

}  // namespace

std::unique_ptr<GammaRingModel> make_hn_model() { return std::make_unique<HModel>(false); }
std::unique_ptr<GammaRingModel> make_hz_model() { return std::make_unique<HModel>(true); }
std::unique_ptr<GammaRingModel> make_sphere_model() { return std::make_unique<SphereModel>(); }

std::unique_ptr<GammaRingModel> make_ring_model(FiniteRing ring, std::string name) {
  return std::make_unique<RingModel>(std::move(ring), std::move(name));
}

std::unique_ptr<GammaRingModel> make_monoid_model(FiniteMonoid monoid, std::string name) {
  return std::make_unique<MonoidModel>(std::move(monoid), std::move(name));
}

}  // namespace gring
