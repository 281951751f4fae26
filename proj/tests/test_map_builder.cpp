#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gring/map_builder.hpp"
#include "gring/model_io.hpp"
#include "gring/models.hpp"

using namespace gring;

namespace {

std::vector<std::int64_t> vec(std::initializer_list<std::int64_t> v) { return v; }

const CheckEntry& entry_of(const CheckReport& report, const char* name) {
  for (const auto& e : report.entries)
    if (e.check == name) return e;
  REQUIRE(false);
  throw std::logic_error("unreachable");
}

}  // namespace

TEST_CASE("canonical witnesses, hn") {
  const auto w1 = canonical_witness_hn(vec({2, 1}));
  CHECK(w1.exponent == 2);
  CHECK(w1.map.images() == std::vector<int>{1, 1, 2, 0});

  const auto w2 = canonical_witness_hn(vec({1}));
  CHECK(w2.exponent == 0);
  CHECK(w2.map == identity(1));

  const auto w3 = canonical_witness_hn(vec({3, 2}));
  CHECK(w3.exponent == 3);
  CHECK(w3.map.images() == std::vector<int>{1, 1, 1, 2, 2, 0, 0, 0});

  CHECK_THROWS_AS(canonical_witness_hn(vec({0, 0})), input_error);
  CHECK_THROWS_AS(canonical_witness_hn(vec({-1})), input_error);
}

TEST_CASE("canonical witnesses, hz") {
  const auto w1 = canonical_witness_hz(vec({1, -1}));
  CHECK(w1.exponent == 1);
  CHECK(w1.map == identity(2));

  const auto w2 = canonical_witness_hz(vec({2}));
  CHECK(w2.exponent == 2);
  CHECK(w2.map.images() == std::vector<int>{1, 0, 0, 1});

  const auto w3 = canonical_witness_hz(vec({-1, 1}));
  CHECK(w3.exponent == 1);
  CHECK(w3.map.images() == std::vector<int>{2, 1});

  // The canonical witness really is a witness.
  for (auto target : {vec({2, -3}), vec({0, 2, -1}), vec({-2, -2})}) {
    const auto w = canonical_witness_hz(target);
    CHECK(witness_image(MapVariant::hz, w.exponent, w.map) == target);
  }
}

TEST_CASE("witness enumeration") {
  const auto one = vec({1});
  const auto at1 = all_witnesses(MapVariant::hz, one, 1);
  REQUIRE(at1.has_value());
  CHECK(at1->size() == 1);
  const auto at2 = all_witnesses(MapVariant::hz, one, 2);
  REQUIRE(at2.has_value());
  CHECK(at2->size() == 4);
  for (const auto& f : *at2) CHECK(witness_image(MapVariant::hz, 2, f) == one);

  const auto hn12 = all_witnesses(MapVariant::hn, vec({2, 1}), 2);
  REQUIRE(hn12.has_value());
  CHECK(hn12->size() == 12);  // C(4,2)·C(2,1)

  // No witnesses exist below the minimal exponent.
  CHECK(all_witnesses(MapVariant::hz, vec({2}), 1)->empty());

  // The cap triggers nullopt rather than a blowup.
  CHECK_FALSE(all_witnesses(MapVariant::hz, vec({1, 1, 1}), 5, 1000).has_value());
}

TEST_CASE("random witnesses are valid and seeded") {
  std::mt19937_64 rng(11);
  for (auto target : {vec({2, -1}), vec({1, 1}), vec({-3})}) {
    const auto canonical = canonical_witness_hz(target);
    for (int trial = 0; trial < 25; ++trial) {
      const int exponent = canonical.exponent + (trial % 2);
      const auto f = random_witness(MapVariant::hz, target, exponent, rng);
      CHECK(witness_image(MapVariant::hz, exponent, f) == target);
    }
  }
  std::mt19937_64 a(3), b(3);
  CHECK(random_witness(MapVariant::hz, vec({1, -2}), 2, a) ==
        random_witness(MapVariant::hz, vec({1, -2}), 2, b));
}

TEST_CASE("the hz identity map") {
  const auto hz = make_hz_model();
  const auto phi = build_map(*hz, {2, {1, -1}}, MapVariant::hz, 3);
  for (int len = 1; len <= 3; ++len)
    for (const auto& v : integer_vectors(len, -3, 3))
      CHECK(phi.eval(v) == Element{len, v});
  CHECK(phi.eval(vec({})) == hz->basepoint(0));
  CHECK(law_from_map(phi) == Element{2, {1, -1}});

  const auto hn = make_hn_model();
  const auto psi = build_map(*hn, {2, {1, 1}}, MapVariant::hn, 3);
  for (int len = 1; len <= 3; ++len)
    for (const auto& v : integer_vectors(len, 0, 3)) CHECK(psi.eval(v) == Element{len, v});
  CHECK_THROWS_AS(psi.eval(vec({-1})), input_error);
  CHECK_THROWS_AS(law_from_map(psi), unsupported_error);
}

TEST_CASE("eval in quotient and endomorphism models") {
  const auto m6 = make_model("hmod:6");
  const auto phi6 = build_map(*m6, m6->parse_element("[1,-1]", 2), MapVariant::hz, 3);
  CHECK(phi6.eval(vec({4, -7})) == m6->parse_element("[4,-7]", 2));
  CHECK(m6->render(phi6.eval(vec({4, -7}))) == "[4,5]");

  const auto e2 = make_model("end:2");
  const auto phi2 = build_map(*e2, e2->parse_element("[1,-1]", 2), MapVariant::hz, 3);
  CHECK(phi2.eval(vec({3})) == e2->unit());
}

TEST_CASE("uncertified laws are refused") {
  const auto hz = make_hz_model();
  CHECK_THROWS_AS(build_map(*hz, {2, {1, 1}}, MapVariant::hz, 2), input_error);
  CHECK_THROWS_AS(build_map(*hz, {2, {1, 2}}, MapVariant::hn, 2), input_error);
}

TEST_CASE("verify_map passes certified laws") {
  VerifyMapConfig cfg;
  cfg.entry_bound = 2;
  cfg.max_len = 2;
  cfg.witness_trials = 6;
  cfg.seed = 5;
  for (const char* spec : {"hz", "hmod:2", "hmod:6", "end:2,2"}) {
    const auto model = make_model(spec);
    const auto phi =
        build_map(*model, model->parse_element("[1,-1]", 2), MapVariant::hz, 3);
    const auto report = verify_map(phi, cfg);
    INFO(spec);
    CHECK(report.pass());
    CHECK(entry_of(report, "witness-independence").checked > 0);
    CHECK(entry_of(report, "multiplicativity").checked > 0);
    CHECK(entry_of(report, "round-trip").checked == 1);
  }

  const auto hn = make_hn_model();
  const auto psi = build_map(*hn, {2, {1, 1}}, MapVariant::hn, 3);
  CHECK(verify_map(psi, cfg).pass());
}

TEST_CASE("power cache transparency") {
  const auto hz = make_hz_model();
  const auto phi = build_map(*hz, {2, {1, -1}}, MapVariant::hz, 2);
  const auto direct = power(*hz, {2, {1, -1}}, 5);
  CHECK(phi.power(5) == direct);
  CHECK(phi.power(5) == direct);  // cached path
  CHECK(phi.power(0) == hz->unit());
}

TEST_CASE("derived sum law factors the hz map through hn") {
  for (const char* spec : {"hz", "hmod:3", "end:2,2"}) {
    const auto model = make_model(spec);
    const auto r = model->parse_element("[1,-1]", 2);
    const auto w = sum_from_difference(*model, r);
    const auto phi_r = build_map(*model, r, MapVariant::hz, 3);
    const auto phi_w = build_map(*model, w, MapVariant::hn, 3);
    for (int len = 1; len <= 2; ++len)
      for (const auto& v : integer_vectors(len, 0, 3)) {
        INFO(spec);
        CHECK(phi_w.eval(v) == phi_r.eval(v));
      }
  }
}

TEST_CASE("intertwiner transport") {
  const auto m5 = make_model("hmod:5");
  const auto r = m5->parse_element("[1,-1]", 2);
  const auto phi = build_map(*m5, r, MapVariant::hz, 2);
  for (std::int64_t a_val = 0; a_val < 5; ++a_val) {
    const Element a{1, {a_val}};
    REQUIRE(m5->mult(a, r) == m5->mult(r, a));  // components are central
    for (const auto& x : integer_vectors(2, -2, 2)) {
      CHECK(m5->mult(a, phi.eval(x)) == m5->mult(phi.eval(x), a));
    }
  }
}

TEST_CASE("unit transformation and left multiplication") {
  const auto hz = make_hz_model();
  const auto fa = unit_transformation(*hz, {1, {-1}}, 2);
  CHECK(fa.values[2][0] == Element{2, {-1, 0}});
  CHECK(fa.values[2][1] == Element{2, {0, -1}});

  CHECK(left_mult_check(*hz, {1, {-1}}, 30, 1).pass());
  CHECK(left_mult_check(*hz, hz->unit(), 30, 1).pass());

  const auto m4 = make_model("hmod:4");
  CHECK(left_mult_check(*m4, {1, {2}}, 30, 1).pass());
  // m_a doubles entries mod 4.
  for (const auto& x : m4->enumerate(2))
    CHECK(m4->mult({1, {2}}, x) == Element{2, {(2 * x.data[0]) % 4, (2 * x.data[1]) % 4}});
}

TEST_CASE("a condition-4 corruption shows up as witness dependence") {
  // Transcribe hmod:2 into a table model and reroute r·r in the 2x2 block
  // to a special-symmetric but wrong value.
  const auto m2 = make_model("hmod:2");
  auto doc = export_table_document(*m2, 4);

  const auto carrier2 = m2->enumerate(2);
  const auto carrier4 = m2->enumerate(4);
  auto index_of = [](const std::vector<Element>& carrier, const Element& x) {
    for (std::size_t i = 0; i < carrier.size(); ++i)
      if (carrier[i] == x) return static_cast<int>(i);
    REQUIRE(false);
    return -1;
  };
  const int r_idx = index_of(carrier2, Element{2, {1, 1}});
  const int wrong_idx = index_of(carrier4, Element{4, {1, 0, 0, 1}});
  doc["mult"]["2x2"][static_cast<std::size_t>(r_idx) * carrier2.size() + r_idx] = wrong_idx;

  const auto corrupted = load_table_model(doc, "table:corrupted");
  const Element law{2, {r_idx}};

  // Conditions 1-3 still hold at k_max = 2; condition 4 fails.
  const auto cert = check_difference_law(*corrupted, law, 2);
  CHECK_FALSE(cert.verdict);
  CHECK(cert.condition("condition-1")->pass);
  CHECK(cert.condition("condition-2")->pass);
  CHECK(cert.condition("condition-3")->pass);
  CHECK_FALSE(cert.condition("condition-4")->pass);

  // Certified only up to k = 1, the map shows witness dependence.
  const auto phi = build_map(*corrupted, law, MapVariant::hz, 1);
  VerifyMapConfig cfg;
  cfg.entry_bound = 1;
  cfg.max_len = 1;
  cfg.witness_trials = 4;
  cfg.seed = 2;
  const auto report = verify_map(phi, cfg);
  CHECK_FALSE(report.pass());
  CHECK(entry_of(report, "witness-independence").violation_count > 0);
}
