#include "gring/map_builder.hpp"

#include <algorithm>
#include <numeric>

#include "gring/checked.hpp"

namespace gring {

namespace {

bool all_zero(std::span<const std::int64_t> target) {
  return std::all_of(target.begin(), target.end(), [](std::int64_t v) { return v == 0; });
}

void positive_negative_mass(std::span<const std::int64_t> target, std::int64_t& pos,
                            std::int64_t& neg) {
  pos = neg = 0;
  for (auto v : target) {
    if (v > 0) pos = checked_add(pos, v);
    if (v < 0) neg = checked_add(neg, -v);
  }
}

std::string target_str(std::span<const std::int64_t> target) {
  std::string out = "[";
  for (std::size_t i = 0; i < target.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(target[i]);
  }
  return out + "]";
}

constexpr int kMaxExponent = 20;

}  // namespace

LawKind law_kind_of(MapVariant variant) {
  return variant == MapVariant::hn ? LawKind::sum : LawKind::difference;
}

Witness canonical_witness_hn(std::span<const std::int64_t> target) {
  if (all_zero(target)) throw input_error("canonical witness: the zero target has no witness");
  std::int64_t total = 0;
  for (auto v : target) {
    if (v < 0) throw input_error("hn witness: entries must be non-negative");
    total = checked_add(total, v);
  }
  int n = 0;
  while ((std::int64_t{1} << n) < total) {
    ++n;
    if (n > kMaxExponent) throw unsupported_error("hn witness: target mass too large");
  }
  std::vector<int> images(static_cast<std::size_t>(1) << n, 0);
  std::size_t at = 0;
  for (std::size_t j = 0; j < target.size(); ++j)
    for (std::int64_t c = 0; c < target[j]; ++c) images[at++] = static_cast<int>(j) + 1;
  return {n, PointedMap(1 << n, static_cast<int>(target.size()), std::move(images))};
}

Witness canonical_witness_hz(std::span<const std::int64_t> target) {
  if (all_zero(target)) throw input_error("canonical witness: the zero target has no witness");
  std::int64_t pos = 0, neg = 0;
  positive_negative_mass(target, pos, neg);
  const std::int64_t need = std::max(pos, neg);
  int n = 1;
  while ((std::int64_t{1} << (n - 1)) < need) {
    ++n;
    if (n > kMaxExponent) throw unsupported_error("hz witness: target mass too large");
  }
  const auto split = parity_split(n);
  std::vector<int> images(static_cast<std::size_t>(1) << n, 0);
  std::size_t next_plus = 0, next_minus = 0;
  for (std::size_t j = 0; j < target.size(); ++j) {
    for (std::int64_t c = 0; c < target[j]; ++c) images[split.plus[next_plus++] - 1] = static_cast<int>(j) + 1;
    for (std::int64_t c = 0; c < -target[j]; ++c) images[split.minus[next_minus++] - 1] = static_cast<int>(j) + 1;
  }
  return {n, PointedMap(1 << n, static_cast<int>(target.size()), std::move(images))};
}

Witness canonical_witness(MapVariant variant, std::span<const std::int64_t> target) {
  return variant == MapVariant::hn ? canonical_witness_hn(target) : canonical_witness_hz(target);
}

int source_sign(MapVariant variant, int position) {
  if (variant == MapVariant::hn) return 1;
  return ParitySplit::is_plus(position) ? 1 : -1;
}

std::vector<std::int64_t> witness_image(MapVariant variant, int exponent, const PointedMap& f) {
  if (f.source() != 1 << exponent)
    throw input_error("witness_image: map source does not match the exponent");
  std::vector<std::int64_t> out(static_cast<std::size_t>(f.target()), 0);
  for (int i = 1; i <= f.source(); ++i) {
    const int v = f(i);
    if (v != 0) out[v - 1] += source_sign(variant, i);
  }
  return out;
}

std::optional<std::vector<PointedMap>> all_witnesses(MapVariant variant,
                                                     std::span<const std::int64_t> target,
                                                     int exponent, std::uint64_t cost_cap) {
  if (all_zero(target)) throw input_error("all_witnesses: the zero target has no witness");
  if (exponent < 0 || exponent > kMaxExponent) throw input_error("all_witnesses: bad exponent");
  const int k = static_cast<int>(target.size());
  const int size = 1 << exponent;

  std::vector<int> plus, minus;
  if (variant == MapVariant::hn) {
    for (int i = 1; i <= size; ++i) plus.push_back(i);
  } else {
    auto split = parity_split(exponent);
    plus = std::move(split.plus);
    minus = std::move(split.minus);
  }

  // Enumerating label assignments costs (k+1)^|class| per class.
  auto assignments_cost = [&](std::size_t class_size) {
    std::uint64_t cost = 1;
    for (std::size_t c = 0; c < class_size; ++c) {
      if (cost > cost_cap) return cost;
      cost *= static_cast<std::uint64_t>(k) + 1;
    }
    return cost;
  };
  if (assignments_cost(plus.size()) > cost_cap || assignments_cost(minus.size()) > cost_cap)
    return std::nullopt;

  // Bucket the minus-class assignments by their count vectors, then join.
  using Counts = std::vector<int>;
  auto enumerate_assignments = [&](std::size_t class_size) {
    std::vector<std::pair<Counts, std::vector<int>>> out;
    std::vector<int> labels(class_size, 0);
    while (true) {
      Counts counts(static_cast<std::size_t>(k), 0);
      for (int lab : labels)
        if (lab != 0) ++counts[lab - 1];
      out.emplace_back(std::move(counts), labels);
      std::size_t pos = class_size;
      while (pos > 0 && labels[pos - 1] == k) labels[--pos] = 0;
      if (pos == 0) break;
      ++labels[pos - 1];
    }
    return out;
  };

  const auto plus_assignments = enumerate_assignments(plus.size());
  std::map<Counts, std::vector<std::vector<int>>> minus_by_counts;
  for (auto& [counts, labels] : enumerate_assignments(minus.size()))
    minus_by_counts[counts].push_back(labels);

  std::vector<PointedMap> out;
  for (const auto& [plus_counts, plus_labels] : plus_assignments) {
    Counts need(static_cast<std::size_t>(k), 0);
    bool feasible = true;
    for (int j = 0; j < k; ++j) {
      const std::int64_t b = plus_counts[j] - target[j];
      if (b < 0 || b > static_cast<std::int64_t>(minus.size())) {
        feasible = false;
        break;
      }
      need[j] = static_cast<int>(b);
    }
    if (!feasible) continue;
    const auto bucket = minus_by_counts.find(need);
    if (bucket == minus_by_counts.end()) continue;
    for (const auto& minus_labels : bucket->second) {
      std::vector<int> images(static_cast<std::size_t>(size), 0);
      for (std::size_t p = 0; p < plus.size(); ++p) images[plus[p] - 1] = plus_labels[p];
      for (std::size_t p = 0; p < minus.size(); ++p) images[minus[p] - 1] = minus_labels[p];
      out.emplace_back(size, k, std::move(images));
      if (out.size() > cost_cap) return std::nullopt;
    }
  }
  return out;
}

PointedMap random_witness(MapVariant variant, std::span<const std::int64_t> target, int exponent,
                          std::mt19937_64& rng) {
  if (all_zero(target)) throw input_error("random_witness: the zero target has no witness");
  const int k = static_cast<int>(target.size());
  const int size = 1 << exponent;

  std::vector<int> plus, minus;
  if (variant == MapVariant::hn) {
    for (int i = 1; i <= size; ++i) plus.push_back(i);
  } else {
    auto split = parity_split(exponent);
    plus = std::move(split.plus);
    minus = std::move(split.minus);
  }
  std::shuffle(plus.begin(), plus.end(), rng);
  std::shuffle(minus.begin(), minus.end(), rng);

  std::int64_t pos = 0, neg = 0;
  positive_negative_mass(target, pos, neg);
  if (variant == MapVariant::hn) {
    if (pos > size) throw input_error("random_witness: exponent too small for target");
  } else if (pos > static_cast<std::int64_t>(plus.size()) ||
             neg > static_cast<std::int64_t>(minus.size())) {
    throw input_error("random_witness: exponent too small for target");
  }

  std::vector<int> order(static_cast<std::size_t>(k));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);

  std::int64_t plus_left = static_cast<std::int64_t>(plus.size()) - pos;
  std::int64_t minus_left = static_cast<std::int64_t>(minus.size()) - neg;
  std::size_t next_plus = 0, next_minus = 0;
  std::vector<int> images(static_cast<std::size_t>(size), 0);
  for (int j : order) {
    std::int64_t a = target[j] > 0 ? target[j] : 0;
    std::int64_t b = target[j] < 0 ? -target[j] : 0;
    // Optionally route a cancelling pair through the same coordinate.
    if (variant == MapVariant::hz && plus_left > 0 && minus_left > 0 && (rng() & 1)) {
      ++a;
      ++b;
      --plus_left;
      --minus_left;
    }
    for (std::int64_t c = 0; c < a; ++c) images[plus[next_plus++] - 1] = j + 1;
    for (std::int64_t c = 0; c < b; ++c) images[minus[next_minus++] - 1] = j + 1;
  }
  return {size, k, std::move(images)};
}

MultiplicativeMap::MultiplicativeMap(const GammaRingModel& model, Element law, MapVariant variant,
                                     int k_max)
    : model_(&model),
      law_(std::move(law)),
      variant_(variant),
      certificate_(variant == MapVariant::hn ? check_sum_law(model, law_, k_max)
                                             : check_difference_law(model, law_, k_max)),
      cache_(std::make_unique<Cache>()) {
  if (!certificate_.verdict) {
    std::string failing;
    for (const auto& c : certificate_.conditions)
      if (!c.pass) failing += (failing.empty() ? "" : ", ") + c.name;
    throw input_error(model.name() + ": " + certificate_.law_text +
                      " is not a certified law (failed " + failing + ")");
  }
  cache_->certified_k = k_max;
}

Element MultiplicativeMap::power(int k) const {
  if (k < 0) throw input_error("power: negative exponent");
  std::scoped_lock lock(cache_->mutex);
  auto it = cache_->powers.find(k);
  if (it != cache_->powers.end()) return it->second;
  Element value = k == 0 ? model_->unit() : law_;
  int have = k == 0 ? 0 : 1;
  if (k > 1) {
    auto best = cache_->powers.lower_bound(k);
    if (best != cache_->powers.begin()) {
      --best;
      if (best->first >= 1) {
        value = best->second;
        have = best->first;
      }
    }
    for (; have < k; ++have) value = model_->mult(value, law_);
  }
  cache_->powers.emplace(k, value);
  return value;
}

void MultiplicativeMap::ensure_certified(int k) const {
  int from;
  {
    std::scoped_lock lock(cache_->mutex);
    from = cache_->certified_k;
  }
  if (k <= from) return;
  // Conditions 1 and 2 do not depend on k; extend the per-power checks only.
  for (int kk = from + 1; kk <= k; ++kk) {
    const auto pk = power(kk);
    const int level = 1 << kk;
    if (variant_ == MapVariant::hn) {
      for (int i = 1; i <= level - 1; ++i)
        if (model_->induce(transposition(level, i), pk) != pk)
          throw input_error(model_->name() + ": " + certificate_.law_text +
                            " loses symmetry at power " + std::to_string(kk));
    } else {
      for (const auto& g : special_generators(kk))
        if (model_->induce(g, pk) != pk)
          throw input_error(model_->name() + ": " + certificate_.law_text +
                            " loses special invariance at power " + std::to_string(kk));
      for (const auto& [i, j, l] : condition4_triples(kk)) {
        const auto cancel = compose(
            degeneracy(level - 1, l), compose(restriction(level - 1, i), restriction(level, j)));
        if (model_->induce(summing(level, i, j, l), pk) != model_->induce(cancel, pk))
          throw input_error(model_->name() + ": " + certificate_.law_text +
                            " fails the cancellation identities at power " + std::to_string(kk));
      }
    }
    std::scoped_lock lock(cache_->mutex);
    cache_->certified_k = std::max(cache_->certified_k, kk);
  }
}

Element MultiplicativeMap::eval(std::span<const std::int64_t> target) const {
  const int k = static_cast<int>(target.size());
  if (variant_ == MapVariant::hn)
    for (auto v : target)
      if (v < 0) throw input_error("eval: hn targets must be non-negative");
  if (all_zero(target)) return model_->basepoint(k);
  const auto witness = canonical_witness(variant_, target);
  ensure_certified(witness.exponent);
  return model_->induce(witness.map, power(witness.exponent));
}

MultiplicativeMap build_map(const GammaRingModel& model, const Element& law, MapVariant variant,
                            int k_max) {
  return MultiplicativeMap(model, law, variant, k_max);
}

Element law_from_map(const MultiplicativeMap& phi) {
  if (phi.variant() != MapVariant::hz)
    throw unsupported_error("law_from_map: only hz-variant maps come from difference laws");
  const std::int64_t pm[2] = {1, -1};
  return phi.eval(pm);
}

std::vector<std::vector<std::int64_t>> integer_vectors(int length, std::int64_t lo,
                                                       std::int64_t hi) {
  if (length < 0 || lo > hi) throw input_error("integer_vectors: bad arguments");
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> cur(static_cast<std::size_t>(length), lo);
  while (true) {
    out.push_back(cur);
    int pos = length - 1;
    while (pos >= 0 && cur[pos] == hi) cur[pos--] = lo;
    if (pos < 0) break;
    ++cur[pos];
  }
  return out;
}

namespace {

// Induced map in the source ring (HN/HZ): fiber sums of the target vector.
std::vector<std::int64_t> source_induce(const PointedMap& f, std::span<const std::int64_t> x) {
  std::vector<std::int64_t> out(static_cast<std::size_t>(f.target()), 0);
  for (int i = 1; i <= f.source(); ++i) {
    const int v = f(i);
    if (v != 0) out[v - 1] = checked_add(out[v - 1], x[i - 1]);
  }
  return out;
}

std::vector<std::int64_t> source_mult(std::span<const std::int64_t> x,
                                      std::span<const std::int64_t> y) {
  std::vector<std::int64_t> out(x.size() * y.size(), 0);
  for (std::size_t j = 0; j < y.size(); ++j)
    for (std::size_t i = 0; i < x.size(); ++i)
      out[j * x.size() + i] = checked_mul(x[i], y[j]);
  return out;
}

std::int64_t mass(std::span<const std::int64_t> v) {
  std::int64_t total = 0;
  for (auto e : v) total = checked_add(total, e < 0 ? -e : e);
  return total;
}

}  // namespace

CheckReport verify_map(const MultiplicativeMap& phi, const VerifyMapConfig& cfg) {
  const auto& model = phi.model();
  const auto variant = phi.variant();
  CheckReport report;
  std::mt19937_64 rng(cfg.seed);

  const std::int64_t lo = variant == MapVariant::hn ? 0 : -cfg.entry_bound;
  const std::int64_t hi = cfg.entry_bound;
  std::vector<std::vector<std::int64_t>> targets;
  for (int len = 1; len <= cfg.max_len; ++len)
    for (auto& v : integer_vectors(len, lo, hi)) targets.push_back(std::move(v));

  // eval of the zero vector is the basepoint.
  {
    auto& entry = report.entry("basepoint");
    for (int len = 0; len <= cfg.max_len; ++len) {
      ++entry.checked;
      const std::vector<std::int64_t> zero(static_cast<std::size_t>(len), 0);
      const auto value = phi.eval(zero);
      if (value != model.basepoint(len))
        entry.record_violation({"len=" + std::to_string(len), model.render(value),
                                model.render(model.basepoint(len))});
    }
  }

  // (a) witness independence: all witnesses at the minimal exponent and one
  // above, plus random assignment orders.
  {
    auto& entry = report.entry("witness-independence");
    auto& skipped = report.entry("witness-independence-skipped");
    for (const auto& target : targets) {
      if (all_zero(target)) continue;
      const auto canonical = canonical_witness(variant, target);
      if ((std::int64_t{1} << canonical.exponent) > model.max_level()) {
        ++skipped.checked;
        continue;
      }
      const auto expected = phi.eval(target);
      for (int exponent = canonical.exponent; exponent <= canonical.exponent + 1; ++exponent) {
        if ((std::int64_t{1} << exponent) > model.max_level()) {
          ++skipped.checked;
          continue;
        }
        const auto witnesses = all_witnesses(variant, target, exponent);
        if (!witnesses) {
          ++skipped.checked;
          continue;
        }
        const auto pw = phi.power(exponent);
        for (const auto& f : witnesses.value()) {
          ++entry.checked;
          const auto value = model.induce(f, pw);
          if (value != expected)
            entry.record_violation({"target=" + target_str(target) + " witness=" + f.str(),
                                    model.render(value), model.render(expected)});
        }
      }
      for (int trial = 0; trial < cfg.witness_trials; ++trial) {
        const int exponent = canonical.exponent + static_cast<int>(rng() & 1);
        if ((std::int64_t{1} << exponent) > model.max_level()) {
          ++skipped.checked;
          continue;
        }
        const auto f = random_witness(variant, target, exponent, rng);
        ++entry.checked;
        const auto value = model.induce(f, phi.power(exponent));
        if (value != expected)
          entry.record_violation({"target=" + target_str(target) + " witness=" + f.str(),
                                  model.render(value), model.render(expected)});
      }
    }
  }

  // (b) naturality: induce(f)(eval(x)) = eval(f(x)) with f acting on the
  // source ring by fiber sums.
  {
    auto& entry = report.entry("naturality");
    auto& skipped = report.entry("naturality-skipped");
    for (const auto& target : targets) {
      const int len = static_cast<int>(target.size());
      for (int to = 0; to <= cfg.max_len; ++to)
        for (const auto& f : all_maps(len, to)) {
          try {
            const auto lhs = model.induce(f, phi.eval(target));
            const auto rhs = phi.eval(source_induce(f, target));
            ++entry.checked;
            if (lhs != rhs)
              entry.record_violation({"target=" + target_str(target) + " f=" + f.str(),
                                      model.render(lhs), model.render(rhs)});
          } catch (const unsupported_error&) {
            ++skipped.checked;
          }
        }
    }
  }

  // (c) multiplicativity: eval(x·y) = eval(x)·eval(y). Pairs whose product
  // would need a witness exponent beyond 6, or levels beyond the model
  // bound, are counted as skipped.
  {
    auto& entry = report.entry("multiplicativity");
    auto& skipped = report.entry("multiplicativity-skipped");
    const std::int64_t mass_cap = variant == MapVariant::hn ? 64 : 32;
    for (const auto& x : targets)
      for (const auto& y : targets) {
        if (checked_mul(mass(x), mass(y)) > mass_cap) {
          ++skipped.checked;
          continue;
        }
        try {
          const auto lhs = phi.eval(source_mult(x, y));
          const auto rhs = model.mult(phi.eval(x), phi.eval(y));
          ++entry.checked;
          if (lhs != rhs)
            entry.record_violation({"x=" + target_str(x) + " y=" + target_str(y),
                                    model.render(lhs), model.render(rhs)});
        } catch (const unsupported_error&) {
          ++skipped.checked;
        }
      }
  }

  // (d) unit
  {
    auto& entry = report.entry("unit");
    ++entry.checked;
    const std::int64_t one[1] = {1};
    const auto value = phi.eval(one);
    if (value != model.unit())
      entry.record_violation({"target=[1]", model.render(value), model.render(model.unit())});
  }

  // (e) round trip for the hz variant
  if (variant == MapVariant::hz) {
    auto& entry = report.entry("round-trip");
    ++entry.checked;
    const std::int64_t pm[2] = {1, -1};
    const auto value = phi.eval(pm);
    if (value != phi.law())
      entry.record_violation({"target=[1,-1]", model.render(value), model.render(phi.law())});
  }

  return report;
}

UnitTransformation unit_transformation(const GammaRingModel& model, const Element& a,
                                       int max_level) {
  if (a.level != 1) throw input_error("unit_transformation: a must live at level 1");
  UnitTransformation out{a, {}};
  for (int n = 0; n <= max_level; ++n) {
    std::vector<Element> level;
    for (int i = 1; i <= n; ++i)
      level.push_back(model.induce(PointedMap(1, n, {i}), a));
    out.values.push_back(std::move(level));
  }
  return out;
}

CheckReport left_mult_check(const GammaRingModel& model, const Element& a, int samples,
                            std::uint64_t seed) {
  CheckReport report;
  std::mt19937_64 rng(seed);
  const int max_level = std::min(3, model.max_level());
  const auto fa = unit_transformation(model, a, max_level);

  // f_a is natural: induce(g)(f_a(i)) = f_a(g(i)).
  {
    auto& entry = report.entry("f_a-naturality");
    for (int n = 0; n <= max_level; ++n)
      for (int m = 0; m <= max_level; ++m)
        for (const auto& g : all_maps(n, m))
          for (int i = 1; i <= n; ++i) {
            ++entry.checked;
            const auto lhs = model.induce(g, fa.values[n][i - 1]);
            const auto rhs = g(i) == 0 ? model.basepoint(m) : fa.values[m][g(i) - 1];
            if (lhs != rhs)
              entry.record_violation({"g=" + g.str() + " i=" + std::to_string(i),
                                      model.render(lhs), model.render(rhs)});
          }
  }

  // m_a decomposes through f_a: f_a(i)·x = induce(ι_i ∧ id)(a·x).
  {
    auto& entry = report.entry("decomposition");
    for (int k = 1; k <= max_level; ++k)
      for (int n = 0; n <= 2; ++n) {
        if (static_cast<std::int64_t>(k) * n > model.max_level()) continue;
        auto xs = model.generated_elements(n, 2);
        if (static_cast<int>(xs.size()) > samples) {
          std::shuffle(xs.begin(), xs.end(), rng);
          xs.resize(static_cast<std::size_t>(samples));
        }
        for (int i = 1; i <= k; ++i) {
          const auto iota = PointedMap(1, k, {i});
          for (const auto& x : xs) {
            ++entry.checked;
            const auto lhs = model.mult(fa.values[k][i - 1], x);
            const auto rhs = model.induce(smash(iota, identity(n)), model.mult(a, x));
            if (lhs != rhs)
              entry.record_violation({"i=" + std::to_string(i) + " x=" + model.render(x),
                                      model.render(lhs), model.render(rhs)});
          }
        }
      }
  }

  return report;
}

}  // namespace gring
