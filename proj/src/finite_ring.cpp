#include "gring/finite_ring.hpp"

#include <map>
#include <numeric>
#include <sstream>

namespace gring {

namespace {

void check(bool cond, const std::string& msg) {
  if (!cond) throw input_error(msg);
}

long long mod_pos(long long v, long long m) { return ((v % m) + m) % m; }

}  // namespace

int FiniteRing::int_image(std::int64_t v) const {
  // Reduce by the additive order of 1, then add up.
  int ord = 1;
  int acc = one;
  while (acc != zero) {
    acc = add_at(acc, one);
    ++ord;
  }
  int reduced = static_cast<int>(mod_pos(v, ord));
  int out = zero;
  for (int c = 0; c < reduced; ++c) out = add_at(out, one);
  return out;
}

void FiniteRing::validate() {
  check(size >= 1, label + ": empty ring");
  check(static_cast<int>(add.size()) == size * size, label + ": addition table has wrong size");
  check(static_cast<int>(mul.size()) == size * size, label + ": multiplication table has wrong size");
  check(zero >= 0 && zero < size && one >= 0 && one < size, label + ": zero/one out of range");
  if (names.empty())
    for (int a = 0; a < size; ++a) names.push_back("e" + std::to_string(a));
  check(static_cast<int>(names.size()) == size, label + ": wrong number of element names");
  for (int v : add) check(v >= 0 && v < size, label + ": addition entry out of range");
  for (int v : mul) check(v >= 0 && v < size, label + ": multiplication entry out of range");

  neg.assign(static_cast<std::size_t>(size), -1);
  for (int a = 0; a < size; ++a) {
    check(add_at(a, zero) == a && add_at(zero, a) == a, label + ": zero is not neutral");
    check(mul_at(a, one) == a && mul_at(one, a) == a, label + ": one is not neutral");
    check(mul_at(a, zero) == zero && mul_at(zero, a) == zero, label + ": zero does not absorb");
    for (int b = 0; b < size; ++b) {
      check(add_at(a, b) == add_at(b, a), label + ": addition is not commutative");
      if (add_at(a, b) == zero) neg[a] = b;
    }
    check(neg[a] >= 0, label + ": element " + names[a] + " has no negative");
  }
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b)
      for (int c = 0; c < size; ++c) {
        check(add_at(add_at(a, b), c) == add_at(a, add_at(b, c)), label + ": addition not associative");
        check(mul_at(mul_at(a, b), c) == mul_at(a, mul_at(b, c)), label + ": multiplication not associative");
        check(mul_at(a, add_at(b, c)) == add_at(mul_at(a, b), mul_at(a, c)),
              label + ": left distributivity fails");
        check(mul_at(add_at(a, b), c) == add_at(mul_at(a, c), mul_at(b, c)),
              label + ": right distributivity fails");
      }
}

FiniteRing zmod_ring(int n) {
  check(n >= 2, "zmod_ring: need modulus >= 2");
  FiniteRing ring;
  ring.label = "Z/" + std::to_string(n);
  ring.size = n;
  ring.zero = 0;
  ring.one = 1;
  for (int a = 0; a < n; ++a) ring.names.push_back(std::to_string(a));
  ring.add.resize(static_cast<std::size_t>(n) * n);
  ring.mul.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      ring.add[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
      ring.mul[static_cast<std::size_t>(a) * n + b] = static_cast<int>((1LL * a * b) % n);
    }
  ring.validate();
  return ring;
}

FiniteRing end_ring(const std::vector<int>& ds, std::uint64_t size_cap) {
  const int t = static_cast<int>(ds.size());
  check(t >= 1, "end_ring: need at least one cyclic factor");
  for (int d : ds) check(d >= 2, "end_ring: factors must be >= 2");

  // Admissible values per matrix entry (a,b): multiples of d_a/gcd(d_a,d_b) mod d_a.
  std::vector<std::vector<int>> entry_values(static_cast<std::size_t>(t) * t);
  std::uint64_t count = 1;
  for (int a = 0; a < t; ++a)
    for (int b = 0; b < t; ++b) {
      const int g = std::gcd(ds[a], ds[b]);
      const int q = ds[a] / g;
      auto& vals = entry_values[static_cast<std::size_t>(a) * t + b];
      for (int c = 0; c < g; ++c) vals.push_back(c * q % ds[a]);
      count *= static_cast<std::uint64_t>(g);
      check(count <= size_cap, "end_ring: endomorphism ring larger than the configured bound");
    }

  // Materialize elements (odometer over entries) and index them.
  std::vector<std::vector<int>> elems;
  std::vector<std::size_t> pos(static_cast<std::size_t>(t) * t, 0);
  while (true) {
    std::vector<int> mat(static_cast<std::size_t>(t) * t);
    for (std::size_t e = 0; e < pos.size(); ++e) mat[e] = entry_values[e][pos[e]];
    elems.push_back(std::move(mat));
    std::size_t e = pos.size();
    while (e > 0 && pos[e - 1] + 1 == entry_values[e - 1].size()) pos[--e] = 0;
    if (e == 0) break;
    ++pos[e - 1];
  }
  std::map<std::vector<int>, int> index;
  for (std::size_t s = 0; s < elems.size(); ++s) index[elems[s]] = static_cast<int>(s);

  auto name_of = [&](const std::vector<int>& mat) {
    if (t == 1) return std::to_string(mat[0]);
    std::ostringstream os;
    os << "[";
    for (int a = 0; a < t; ++a) {
      if (a) os << "|";
      for (int b = 0; b < t; ++b) {
        if (b) os << ",";
        os << mat[static_cast<std::size_t>(a) * t + b];
      }
    }
    os << "]";
    return os.str();
  };

  FiniteRing ring;
  ring.label = "End(";
  for (int a = 0; a < t; ++a) ring.label += (a ? "," : "") + std::to_string(ds[a]);
  ring.label += ")";
  ring.size = static_cast<int>(elems.size());

  std::vector<int> zero_mat(static_cast<std::size_t>(t) * t, 0);
  std::vector<int> one_mat(static_cast<std::size_t>(t) * t, 0);
  for (int a = 0; a < t; ++a) one_mat[static_cast<std::size_t>(a) * t + a] = 1 % ds[a];
  ring.zero = index.at(zero_mat);
  ring.one = index.at(one_mat);
  for (const auto& mat : elems) ring.names.push_back(name_of(mat));

  ring.add.resize(static_cast<std::size_t>(ring.size) * ring.size);
  ring.mul.resize(static_cast<std::size_t>(ring.size) * ring.size);
  for (int x = 0; x < ring.size; ++x)
    for (int y = 0; y < ring.size; ++y) {
      std::vector<int> sum(static_cast<std::size_t>(t) * t);
      std::vector<int> prod(static_cast<std::size_t>(t) * t);
      for (int a = 0; a < t; ++a)
        for (int b = 0; b < t; ++b) {
          const std::size_t e = static_cast<std::size_t>(a) * t + b;
          sum[e] = (elems[x][e] + elems[y][e]) % ds[a];
          long long acc = 0;
          for (int c = 0; c < t; ++c)
            acc += 1LL * elems[x][static_cast<std::size_t>(a) * t + c] *
                   elems[y][static_cast<std::size_t>(c) * t + b];
          prod[e] = static_cast<int>(mod_pos(acc, ds[a]));
        }
      ring.add[static_cast<std::size_t>(x) * ring.size + y] = index.at(sum);
      ring.mul[static_cast<std::size_t>(x) * ring.size + y] = index.at(prod);
    }
  ring.validate();
  return ring;
}

void FiniteMonoid::validate() const {
  check(size >= 1, label + ": empty monoid");
  check(static_cast<int>(table.size()) == size * size, label + ": table has wrong size");
  check(unit >= 0 && unit < size, label + ": unit out of range");
  check(static_cast<int>(names.size()) == size, label + ": wrong number of element names");
  for (int v : table) check(v >= 0 && v < size, label + ": table entry out of range");
  for (int a = 0; a < size; ++a)
    check(at(a, unit) == a && at(unit, a) == a, label + ": unit is not neutral");
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b)
      for (int c = 0; c < size; ++c)
        check(at(at(a, b), c) == at(a, at(b, c)), label + ": multiplication not associative");
}

}  // namespace gring
