#include "gring/laws.hpp"

#include <algorithm>

namespace gring {

namespace {

void validate_law_input(const GammaRingModel& model, const Element& x, int k_max) {
  if (x.level != 2) throw input_error(model.name() + ": a law candidate must live at level 2");
  if (k_max < 1) throw input_error("law check: need k_max >= 1");
  const std::int64_t top = std::int64_t{1} << k_max;
  if (top > model.max_level())
    throw input_error(model.name() + ": k_max = " + std::to_string(k_max) + " needs level " +
                      std::to_string(top) + ", beyond the model bound " +
                      std::to_string(model.max_level()));
}

LawConditionResult& add_condition(LawCertificate& cert, const std::string& name) {
  cert.conditions.push_back(LawConditionResult{name, true, 0, {}});
  return cert.conditions.back();
}

void expect_equal(const GammaRingModel& model, LawConditionResult& cond, const Element& lhs,
                  const Element& rhs, const std::string& context) {
  ++cond.checked;
  if (lhs != rhs) {
    cond.pass = false;
    cond.failures.push_back({context, model.render(lhs), model.render(rhs)});
  }
}

void finish(LawCertificate& cert) {
  cert.verdict = std::all_of(cert.conditions.begin(), cert.conditions.end(),
                             [](const LawConditionResult& c) { return c.pass; });
}

}  // namespace

std::uint64_t LawCertificate::checked_total() const {
  std::uint64_t total = 0;
  for (const auto& c : conditions) total += c.checked;
  return total;
}

const LawConditionResult* LawCertificate::condition(const std::string& name) const {
  for (const auto& c : conditions)
    if (c.name == name) return &c;
  return nullptr;
}

LawCertificate check_sum_law(const GammaRingModel& model, const Element& w, int k_max) {
  validate_law_input(model, w, k_max);
  LawCertificate cert{model.name(), w, model.render(w), LawKind::sum, k_max, false, {}};

  auto& cond1 = add_condition(cert, "condition-1");
  expect_equal(model, cond1, model.induce(restriction(2, 1), w), model.unit(), "p2_1(w) = 1");
  expect_equal(model, cond1, model.induce(restriction(2, 2), w), model.unit(), "p2_2(w) = 1");

  auto& cond2 = add_condition(cert, "condition-2");
  Element pw = w;
  for (int k = 1; k <= k_max; ++k) {
    if (k > 1) pw = model.mult(pw, w);
    const int level = 1 << k;
    for (int i = 1; i <= level - 1; ++i)
      expect_equal(model, cond2, model.induce(transposition(level, i), pw), pw,
                   "t" + std::to_string(level) + "_" + std::to_string(i) + " fixes w^" +
                       std::to_string(k));
  }

  finish(cert);
  return cert;
}

std::vector<Condition4Triple> condition4_triples(int k) {
  if (k < 1) throw input_error("condition4_triples: need k >= 1");
  const auto split = parity_split(k);
  const int size = 1 << k;
  std::vector<Condition4Triple> out;
  for (int i = 1; i <= size; ++i)
    for (int j = i + 1; j <= size; ++j) {
      if (split.is_plus(i) == split.is_plus(j)) continue;
      for (int l = 1; l <= size - 1; ++l) out.push_back({i, j, l});
    }
  return out;
}

LawCertificate check_difference_law(const GammaRingModel& model, const Element& r, int k_max) {
  validate_law_input(model, r, k_max);
  LawCertificate cert{model.name(), r, model.render(r), LawKind::difference, k_max, false, {}};

  auto& cond1 = add_condition(cert, "condition-1");
  expect_equal(model, cond1, model.induce(restriction(2, 2), r), model.unit(), "p2_2(r) = 1");
  expect_equal(model, cond1, model.induce(summing(2, 1, 2, 1), r), model.basepoint(1),
               "s2_1,2,1(r) = 0");

  auto& cond2 = add_condition(cert, "condition-2");
  {
    const auto neg = model.induce(restriction(2, 1), r);
    const auto swapped = model.induce(transposition(2, 1), r);
    expect_equal(model, cond2, model.mult(neg, r), swapped, "p2_1(r)·r = σ(r)");
    expect_equal(model, cond2, model.mult(r, neg), swapped, "r·p2_1(r) = σ(r)");
  }

  auto& cond3 = add_condition(cert, "condition-3");
  auto& cond4 = add_condition(cert, "condition-4");
  Element pr = r;
  for (int k = 1; k <= k_max; ++k) {
    if (k > 1) pr = model.mult(pr, r);
    const int level = 1 << k;
    for (const auto& g : special_generators(k))
      expect_equal(model, cond3, model.induce(g, pr), pr,
                   "special generator " + g.str() + " fixes r^" + std::to_string(k));
    for (const auto& [i, j, l] : condition4_triples(k)) {
      const auto lhs = model.induce(summing(level, i, j, l), pr);
      const auto cancel =
          compose(degeneracy(level - 1, l), compose(restriction(level - 1, i), restriction(level, j)));
      const auto rhs = model.induce(cancel, pr);
      expect_equal(model, cond4, lhs, rhs,
                   "k=" + std::to_string(k) + " (i,j,l)=(" + std::to_string(i) + "," +
                       std::to_string(j) + "," + std::to_string(l) + ")");
    }
  }

  finish(cert);
  return cert;
}

NegUnit neg_unit(const GammaRingModel& model, const Element& r) {
  if (r.level != 2) throw input_error(model.name() + ": a law candidate must live at level 2");
  if (model.induce(restriction(2, 2), r) != model.unit() ||
      model.induce(summing(2, 1, 2, 1), r) != model.basepoint(1))
    throw input_error(model.name() + ": " + model.render(r) +
                      " fails condition 1, it has no negative unit");
  NegUnit out{model.induce(restriction(2, 1), r), false};
  out.squares_to_unit = model.mult(out.value, out.value) == model.unit();
  return out;
}

Element sum_from_difference(const GammaRingModel& model, const Element& r) {
  if (r.level != 2) throw input_error(model.name() + ": a law candidate must live at level 2");
  const auto square = power(model, r, 2);
  return model.induce(restriction(3, 2), model.induce(restriction(4, 2), square));
}

std::vector<FoundLaw> enumerate_laws(const GammaRingModel& model, LawKind kind, int k_max) {
  std::vector<Element> candidates;
  if (auto forced = model.law_candidates(kind)) {
    candidates = std::move(*forced);
  } else if (model.carrier_size(2).has_value()) {
    candidates = model.enumerate(2);
  } else {
    throw unsupported_error(model.name() + ": R[2] is unbounded and condition 1 forces no candidate");
  }
  std::vector<FoundLaw> out;
  for (const auto& c : candidates) {
    auto cert = kind == LawKind::sum ? check_sum_law(model, c, k_max)
                                     : check_difference_law(model, c, k_max);
    if (cert.verdict) out.push_back({c, std::move(cert)});
  }
  return out;
}

}  // namespace gring
