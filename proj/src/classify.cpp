#include <algorithm>
#include <numeric>

#include "gring/pi0.hpp"

namespace gring {

namespace {

// Plain union-find over law indices.
struct Partition {
  std::vector<int> parent;
  explicit Partition(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void join(int a, int b) { parent[find(a)] = find(b); }
  std::vector<int> classes() {
    std::vector<int> label(parent.size(), -1);
    std::vector<int> out(parent.size());
    int next = 0;
    for (std::size_t i = 0; i < parent.size(); ++i) {
      const int root = find(static_cast<int>(i));
      if (label[root] < 0) label[root] = next++;
      out[i] = label[root];
    }
    return out;
  }
};

Element find_inverse(const GammaRingModel& model, const std::vector<Element>& carrier,
                     const Element& a) {
  const auto one = model.unit();
  for (const auto& b : carrier)
    if (model.mult(a, b) == one && model.mult(b, a) == one) return b;
  throw input_error(model.name() + ": " + model.render(a) + " has no two-sided inverse");
}

}  // namespace

LawClassification classify(const GammaRingModel& model, int k_max) {
  LawClassification out;
  out.laws = enumerate_laws(model, LawKind::difference, k_max);
  const auto pres = pi0(model);

  const auto carrier1 = model.enumerate(1);
  for (const auto& a : carrier1) {
    bool left = false, right = false;
    for (const auto& b : carrier1) {
      left |= model.mult(b, a) == model.unit();
      right |= model.mult(a, b) == model.unit();
    }
    if (left && right) {
      out.units.push_back(a);
      if (is_strict(pres, a)) out.strict_units.push_back(a);
    }
  }

  const int count = static_cast<int>(out.laws.size());
  Partition iso(count), strict(count);
  for (int i = 0; i < count; ++i)
    for (int j = i; j < count; ++j) {
      const auto homs = law_homomorphisms(model, pres, out.laws[i].law, out.laws[j].law);
      for (const auto& hom : homs) {
        if (!hom.invertible) continue;
        iso.join(i, j);
        out.related.push_back({i, j, hom.a, hom.strict});
        if (hom.strict) strict.join(i, j);
        break;  // one witness per pair is enough for the partition
      }
      // Record a strict witness even when the first invertible one is not.
      if (iso.find(i) == iso.find(j) && strict.find(i) != strict.find(j)) {
        for (const auto& hom : homs)
          if (hom.strict) {
            strict.join(i, j);
            out.related.push_back({i, j, hom.a, true});
            break;
          }
      }
    }
  out.iso_class = iso.classes();
  out.strict_class = strict.classes();

  // Law <-> map bijection: the round trip through eval(±1_2) is the identity
  // and distinct laws give distinct maps.
  {
    auto& entry = out.checks.entry("bijection");
    for (const auto& found : out.laws) {
      ++entry.checked;
      const auto phi = build_map(model, found.law, MapVariant::hz, k_max);
      const auto back = law_from_map(phi);
      if (back != found.law)
        entry.record_violation({"law=" + model.render(found.law), model.render(back),
                                model.render(found.law)});
    }
  }

  // Conjugation transport: for every law r and invertible a, the law
  // a·r·a⁻¹ evaluates as the conjugated map on every tested target.
  {
    auto& entry = out.checks.entry("conjugation-transport");
    std::vector<std::vector<std::int64_t>> targets;
    for (int len = 1; len <= 2; ++len)
      for (auto& v : integer_vectors(len, -2, 2)) targets.push_back(std::move(v));
    for (const auto& found : out.laws) {
      const auto phi = build_map(model, found.law, MapVariant::hz, k_max);
      for (const auto& a : out.units) {
        const auto inv = find_inverse(model, carrier1, a);
        const auto conjugated = model.mult(model.mult(a, found.law), inv);
        const auto cert = check_difference_law(model, conjugated, k_max);
        if (!cert.verdict) {
          entry.record_violation({"a=" + model.render(a) + " conjugate of " +
                                      model.render(found.law),
                                  model.render(conjugated), "not a certified law"});
          continue;
        }
        const auto phi2 = build_map(model, conjugated, MapVariant::hz, k_max);
        for (const auto& x : targets) {
          ++entry.checked;
          const auto lhs = phi2.eval(x);
          const auto rhs = model.mult(model.mult(a, phi.eval(x)), inv);
          if (lhs != rhs)
            entry.record_violation({"a=" + model.render(a) + " x=" + model.render(phi.eval(x)),
                                    model.render(lhs), model.render(rhs)});
        }
      }
    }
  }

  // Intertwiner transport: a·r1 = r2·a forces a·eval_1(x) = eval_2(x)·a.
  {
    auto& entry = out.checks.entry("intertwiner-transport");
    std::vector<std::vector<std::int64_t>> targets;
    for (int len = 1; len <= 2; ++len)
      for (auto& v : integer_vectors(len, -2, 2)) targets.push_back(std::move(v));
    for (const auto& rel : out.related) {
      const auto phi1 = build_map(model, out.laws[rel.from].law, MapVariant::hz, k_max);
      const auto phi2 = build_map(model, out.laws[rel.to].law, MapVariant::hz, k_max);
      for (const auto& x : targets) {
        ++entry.checked;
        const auto lhs = model.mult(rel.witness, phi1.eval(x));
        const auto rhs = model.mult(phi2.eval(x), rel.witness);
        if (lhs != rhs)
          entry.record_violation({"a=" + model.render(rel.witness), model.render(lhs),
                                  model.render(rhs)});
      }
    }
  }

  return out;
}

}  // namespace gring
