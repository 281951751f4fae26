#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "gring/laws.hpp"
#include "gring/model_io.hpp"
#include "gring/models.hpp"

using namespace gring;

namespace {

const LawConditionResult& condition(const LawCertificate& cert, const char* name) {
  const auto* c = cert.condition(name);
  REQUIRE(c != nullptr);
  return *c;
}

}  // namespace

TEST_CASE("sum law checks") {
  const auto hn = make_hn_model();
  CHECK(check_sum_law(*hn, {2, {1, 1}}, 3).verdict);

  const auto bad = check_sum_law(*hn, {2, {1, 2}}, 2);
  CHECK_FALSE(bad.verdict);
  CHECK_FALSE(condition(bad, "condition-1").pass);
  CHECK_FALSE(condition(bad, "condition-1").failures.empty());

  const auto sphere = make_sphere_model();
  const auto s2 = check_sum_law(*sphere, {2, {2}}, 2);
  CHECK_FALSE(s2.verdict);
  CHECK_FALSE(condition(s2, "condition-1").pass);

  CHECK_THROWS_AS(check_sum_law(*hn, {1, {1}}, 2), input_error);
}

TEST_CASE("condition-4 triples") {
  const auto t1 = condition4_triples(1);
  REQUIRE(t1.size() == 1);
  CHECK(t1[0] == Condition4Triple{1, 2, 1});

  const auto t2 = condition4_triples(2);
  CHECK(t2.size() == 12);
  std::set<std::pair<int, int>> pairs;
  for (const auto& t : t2) pairs.insert({t.i, t.j});
  CHECK(pairs == std::set<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 4}, {3, 4}});

  CHECK(condition4_triples(3).size() == 112);
  CHECK(condition4_triples(4).size() == 960);
}

TEST_CASE("difference law checks") {
  const auto hz = make_hz_model();
  const auto good = check_difference_law(*hz, {2, {1, -1}}, 3);
  CHECK(good.verdict);
  CHECK(condition(good, "condition-4").checked == 1 + 12 + 112);

  const auto bad = check_difference_law(*hz, {2, {1, 1}}, 2);
  CHECK_FALSE(bad.verdict);
  CHECK_FALSE(condition(bad, "condition-1").pass);

  // In hmod:2 the sign collapses and (1,1) is a difference law.
  const auto m2 = make_model("hmod:2");
  CHECK(check_difference_law(*m2, {2, {1, 1}}, 3).verdict);

  // Monoid models have no difference laws at all: the summing map never
  // reaches the basepoint.
  FiniteMonoid c2{"c2", 2, 0, {"1", "m"}, {0, 1, 1, 0}};
  c2.validate();
  const auto monoid = make_monoid_model(c2, "monoid:c2");
  for (const auto& r : monoid->enumerate(2)) {
    if (r == monoid->basepoint(2)) continue;
    const auto cert = check_difference_law(*monoid, r, 2);
    CHECK_FALSE(cert.verdict);
    CHECK_FALSE(condition(cert, "condition-1").pass);
  }
}

TEST_CASE("certificates are cumulative in k_max") {
  const auto hz = make_hz_model();
  const auto deep = check_difference_law(*hz, {2, {1, -1}}, 4);
  CHECK(deep.verdict);
  for (int k = 1; k <= 3; ++k) CHECK(check_difference_law(*hz, {2, {1, -1}}, k).verdict);
}

TEST_CASE("generator invariance matches full-group invariance at small k") {
  const auto hz = make_hz_model();
  // For elements of R[4]: invariance under adjacent transpositions iff
  // invariance under all of Σ_4 (exhausted).
  std::vector<PointedMap> sym4;
  for (const auto& f : all_maps(4, 4))
    if (f.is_permutation()) sym4.push_back(f);
  REQUIRE(sym4.size() == 24);
  for (const auto& x : hz->generated_elements(4, 1)) {
    bool gen_fixed = true;
    for (int i = 1; i <= 3; ++i)
      gen_fixed = gen_fixed && hz->induce(transposition(4, i), x) == x;
    bool all_fixed = true;
    for (const auto& g : sym4) all_fixed = all_fixed && hz->induce(g, x) == x;
    CHECK(gen_fixed == all_fixed);
  }
}

TEST_CASE("condition 4 at k=1 is condition 1's second equation") {
  const auto hz = make_hz_model();
  for (const auto& r : hz->generated_elements(2, 2)) {
    if (r == hz->basepoint(2)) continue;
    const auto lhs = hz->induce(summing(2, 1, 2, 1), r);
    const auto rhs = hz->induce(
        compose(degeneracy(1, 1), compose(restriction(1, 1), restriction(2, 2))), r);
    CHECK(rhs == hz->basepoint(1));
    CHECK((lhs == rhs) == (hz->induce(summing(2, 1, 2, 1), r) == hz->basepoint(1)));
  }
}

TEST_CASE("neg unit") {
  const auto hz = make_hz_model();
  const auto neg = neg_unit(*hz, {2, {1, -1}});
  CHECK(neg.value == Element{1, {-1}});
  CHECK(neg.squares_to_unit);

  const auto m2 = make_model("hmod:2");
  CHECK(neg_unit(*m2, {2, {1, 1}}).value == Element{1, {1}});

  const auto e3 = make_model("end:3");
  const auto r3 = e3->parse_element("[1,-1]", 2);
  const auto n3 = neg_unit(*e3, r3);
  CHECK(n3.value == Element{1, {2}});  // x -> -x in End(Z/3) = Z/3
  CHECK(n3.squares_to_unit);

  CHECK_THROWS_AS(neg_unit(*hz, {2, {1, 1}}), input_error);
}

TEST_CASE("sum from difference") {
  const auto hz = make_hz_model();
  CHECK(sum_from_difference(*hz, {2, {1, -1}}) == Element{2, {1, 1}});
  const auto m2 = make_model("hmod:2");
  CHECK(sum_from_difference(*m2, {2, {1, 1}}) == Element{2, {1, 1}});
  const auto e22 = make_model("end:2,2");
  const auto r = e22->parse_element("[1,-1]", 2);
  const auto w = sum_from_difference(*e22, r);
  CHECK(w == e22->parse_element("[1,1]", 2));
  CHECK(check_sum_law(*e22, w, 3).verdict);
}

TEST_CASE("law enumeration") {
  // Every ring model has exactly one difference law, the forced candidate.
  for (const char* spec : {"hmod:5", "end:5", "end:2,2"}) {
    const auto model = make_model(spec);
    const auto laws = enumerate_laws(*model, LawKind::difference, 2);
    INFO(spec);
    REQUIRE(laws.size() == 1);
    CHECK(laws[0].law == model->parse_element("[1,-1]", 2));
  }

  // The shortcut agrees with brute-force enumeration of R[2] on small rings.
  for (const char* spec : {"hmod:2", "hmod:3"}) {
    const auto model = make_model(spec);
    const auto fast = enumerate_laws(*model, LawKind::difference, 2);
    std::vector<Element> brute;
    for (const auto& r : model->enumerate(2))
      if (check_difference_law(*model, r, 2).verdict) brute.push_back(r);
    REQUIRE(fast.size() == 1);
    CHECK(brute == std::vector<Element>{fast[0].law});
  }

  // Negative searches by exhaustion.
  const auto sphere = make_sphere_model();
  CHECK(enumerate_laws(*sphere, LawKind::sum, 2).empty());
  CHECK(enumerate_laws(*sphere, LawKind::difference, 2).empty());

  FiniteMonoid c2{"c2", 2, 0, {"1", "m"}, {0, 1, 1, 0}};
  c2.validate();
  const auto monoid = make_monoid_model(c2, "monoid:c2");
  CHECK(enumerate_laws(*monoid, LawKind::sum, 2).empty());
  CHECK(enumerate_laws(*monoid, LawKind::difference, 2).empty());

  // hn has a sum law but no difference law.
  const auto hn = make_hn_model();
  const auto sums = enumerate_laws(*hn, LawKind::sum, 3);
  REQUIRE(sums.size() == 1);
  CHECK(sums[0].law == Element{2, {1, 1}});
  CHECK(enumerate_laws(*hn, LawKind::difference, 3).empty());
}
