// Acceptance suite: runs every top-level criterion and prints one line per
// criterion. Exits nonzero if any fail. All comparisons are exact.
#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <vector>

#include "gring/axioms.hpp"
#include "gring/cli.hpp"
#include "gring/map_builder.hpp"
#include "gring/model_io.hpp"
#include "gring/models.hpp"
#include "gring/pi0.hpp"

using namespace gring;

namespace {

struct Criterion {
  int number;
  std::string title;
  std::function<bool(std::ostream&)> run;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

const std::vector<std::string> kAxiomModels = {"hn",     "hz",    "sphere", "hmod:2", "hmod:3",
                                               "hmod:4", "hmod:6", "end:2",  "end:3",  "end:4",
                                               "end:2,2", "end:6"};

const std::vector<std::string> kLawModels = {"hz",     "hmod:2", "hmod:3", "hmod:4", "hmod:6",
                                             "end:2",  "end:3",  "end:4",  "end:2,2"};

FiniteMonoid order_two_monoid() {
  FiniteMonoid m{"c2", 2, 0, {"1", "m"}, {0, 1, 1, 0}};
  m.validate();
  return m;
}

bool criterion1(std::ostream& log) {
  const auto start = std::chrono::steady_clock::now();
  AxiomCheckConfig cfg;
  cfg.n_max = 3;
  cfg.bound = 3;
  bool ok = true;
  std::uint64_t checked = 0;
  for (const auto& spec : kAxiomModels) {
    const auto model = make_model(spec);
    const auto report = check_axioms(*model, cfg);
    checked += report.checked_total();
    if (!report.pass()) {
      log << " [" << spec << ": " << report.violation_total() << " violations]";
      ok = false;
    }
  }
  {
    const auto monoid = make_monoid_model(order_two_monoid(), "monoid:c2");
    const auto report = check_axioms(*monoid, cfg);
    checked += report.checked_total();
    if (!report.pass()) {
      log << " [monoid: violations]";
      ok = false;
    }
  }
  const double elapsed = seconds_since(start);
  log << " (" << checked << " equalities, " << elapsed << " s)";
  if (elapsed > 60.0) {
    log << " [over the 60 s budget]";
    ok = false;
  }
  return ok;
}

bool criterion2(std::ostream& log) {
  const auto start = std::chrono::steady_clock::now();
  bool ok = true;
  for (const auto& spec : kLawModels) {
    const auto model = make_model(spec);
    const auto r = model->parse_element("[1,-1]", 2);
    const auto cert = check_difference_law(*model, r, 3);
    if (!cert.verdict) {
      log << " [" << spec << " fails at k_max=3]";
      ok = false;
    }
  }
  for (const char* spec : {"hz", "hmod:2"}) {
    const auto model = make_model(spec);
    const auto r = model->parse_element("[1,-1]", 2);
    const auto cert = check_difference_law(*model, r, 4);
    if (!cert.verdict) {
      log << " [" << spec << " fails at k_max=4]";
      ok = false;
    }
    // k = 4 contributes 14 special generators and 960 cancellation triples.
    if (special_generators(4).size() != 14 || condition4_triples(4).size() != 960) {
      log << " [k=4 check sizes wrong]";
      ok = false;
    }
    const auto* cond4 = cert.condition("condition-4");
    if (!cond4 || cond4->checked != 1 + 12 + 112 + 960) {
      log << " [" << spec << ": condition-4 count " << (cond4 ? cond4->checked : 0) << "]";
      ok = false;
    }
  }
  const double elapsed = seconds_since(start);
  log << " (" << elapsed << " s)";
  if (elapsed > 120.0) {
    log << " [over the 120 s budget]";
    ok = false;
  }
  return ok;
}

bool criterion3(std::ostream& log) {
  bool ok = true;
  const auto hz = make_hz_model();
  const auto phi = build_map(*hz, {2, {1, -1}}, MapVariant::hz, 3);
  std::uint64_t checked = 0;
  for (int len = 1; len <= 3; ++len)
    for (const auto& v : integer_vectors(len, -3, 3)) {
      ++checked;
      if (phi.eval(v) != Element{len, v}) {
        log << " [hz eval differs at some v]";
        return false;
      }
    }
  const auto hn = make_hn_model();
  const auto psi = build_map(*hn, {2, {1, 1}}, MapVariant::hn, 3);
  for (int len = 1; len <= 3; ++len)
    for (const auto& v : integer_vectors(len, 0, 3)) {
      ++checked;
      if (psi.eval(v) != Element{len, v}) {
        log << " [hn eval differs at some v]";
        return false;
      }
    }
  log << " (" << checked << " targets)";
  return ok;
}

bool criterion4(std::ostream& log) {
  bool ok = true;
  std::uint64_t agreements = 0;
  for (const auto& spec : kLawModels) {
    const auto model = make_model(spec);
    const auto r = model->parse_element("[1,-1]", 2);
    const auto phi = build_map(*model, r, MapVariant::hz, 3);
    std::mt19937_64 rng(41);
    for (int len = 1; len <= 2; ++len)
      for (const auto& target : integer_vectors(len, -2, 2)) {
        if (std::all_of(target.begin(), target.end(), [](auto v) { return v == 0; })) continue;
        const auto expected = phi.eval(target);
        const auto canonical = canonical_witness_hz(target);
        for (int exponent = canonical.exponent; exponent <= canonical.exponent + 1; ++exponent) {
          const auto witnesses = all_witnesses(MapVariant::hz, target, exponent);
          if (!witnesses) {
            log << " [" << spec << ": enumeration cap hit]";
            return false;
          }
          const auto pw = phi.power(exponent);
          for (const auto& f : witnesses.value()) {
            ++agreements;
            if (model->induce(f, pw) != expected) {
              log << " [" << spec << ": witness disagreement]";
              return false;
            }
          }
        }
        for (int trial = 0; trial < 10; ++trial) {
          const int exponent = canonical.exponent + static_cast<int>(rng() & 1);
          const auto f = random_witness(MapVariant::hz, target, exponent, rng);
          ++agreements;
          if (model->induce(f, phi.power(exponent)) != expected) {
            log << " [" << spec << ": random witness disagreement]";
            return false;
          }
        }
      }
  }
  log << " (" << agreements << " witnesses)";
  return ok;
}

bool criterion5(std::ostream& log) {
  bool ok = true;
  VerifyMapConfig cfg;
  cfg.entry_bound = 2;
  cfg.max_len = 2;
  cfg.witness_trials = 10;
  cfg.seed = 17;
  for (const auto& spec : kLawModels) {
    const auto model = make_model(spec);
    const auto phi = build_map(*model, model->parse_element("[1,-1]", 2), MapVariant::hz, 3);
    const auto report = verify_map(phi, cfg);
    if (!report.pass()) {
      log << " [" << spec << ": " << report.violation_total() << " violations]";
      ok = false;
    }
  }
  return ok;
}

bool criterion6(std::ostream& log) {
  bool ok = true;
  for (const auto& spec : kLawModels) {
    const auto model = make_model(spec);
    const auto r = model->parse_element("[1,-1]", 2);
    const auto w = sum_from_difference(*model, r);
    if (!check_sum_law(*model, w, 3).verdict) {
      log << " [" << spec << ": derived sum law fails]";
      ok = false;
      continue;
    }
    const auto phi_r = build_map(*model, r, MapVariant::hz, 3);
    const auto phi_w = build_map(*model, w, MapVariant::hn, 3);
    for (int len = 1; len <= 2; ++len)
      for (const auto& v : integer_vectors(len, 0, 2))
        if (phi_w.eval(v) != phi_r.eval(v)) {
          log << " [" << spec << ": hn factorization differs]";
          ok = false;
        }
  }
  return ok;
}

bool criterion7(std::ostream& log) {
  bool ok = true;
  const auto sphere = make_sphere_model();
  const auto monoid = make_monoid_model(order_two_monoid(), "monoid:c2");
  for (const auto kind : {LawKind::sum, LawKind::difference}) {
    if (!enumerate_laws(*sphere, kind, 2).empty()) {
      log << " [sphere has a law]";
      ok = false;
    }
    if (!enumerate_laws(*monoid, kind, 2).empty()) {
      log << " [monoid has a law]";
      ok = false;
    }
  }
  return ok;
}

bool verify_snf(const AbelianPresentation& pres) {
  const IntMatrix input = pres.relations.transpose();
  const IntMatrix product = pres.snf.left * input * pres.snf.right;
  for (Eigen::Index r = 0; r < product.rows(); ++r)
    for (Eigen::Index c = 0; c < product.cols(); ++c) {
      const Int expected = (r == c && r < static_cast<Eigen::Index>(pres.snf.diagonal.size()))
                               ? pres.snf.diagonal[static_cast<std::size_t>(r)]
                               : 0;
      if (product(r, c) != expected) return false;
    }
  const Int dl = determinant(pres.snf.left);
  const Int dr = determinant(pres.snf.right);
  return (dl == 1 || dl == -1) && (dr == 1 || dr == -1);
}

bool criterion8(std::ostream& log) {
  bool ok = true;
  for (int n : {2, 3, 4, 5, 6}) {
    const auto model = make_model("hmod:" + std::to_string(n));
    const auto pres = pi0(*model);
    if (pres.nontrivial_factors() != std::vector<Int>{n}) {
      log << " [hmod:" << n << " factors wrong]";
      ok = false;
    }
    if (!verify_snf(pres)) {
      log << " [hmod:" << n << " SNF self-check fails]";
      ok = false;
    }
  }
  const auto e22 = make_model("end:2,2");
  const auto pres22 = pi0(*e22);
  if (pres22.nontrivial_factors() != std::vector<Int>{2, 2, 2, 2}) {
    log << " [end:2,2 factors wrong]";
    ok = false;
  }
  if (!verify_snf(pres22)) {
    log << " [end:2,2 SNF self-check fails]";
    ok = false;
  }
  const auto sphere = make_sphere_model();
  const auto press = pi0(*sphere);
  if (press.factors != std::vector<Int>{0}) {
    log << " [sphere is not infinite cyclic]";
    ok = false;
  }
  if (!verify_snf(press)) {
    log << " [sphere SNF self-check fails]";
    ok = false;
  }
  return ok;
}

bool criterion9(std::ostream& log) {
  bool ok = true;
  for (const char* spec : {"hmod:5", "end:2,2"}) {
    const auto model = make_model(spec);
    const auto cls = classify(*model, 3);
    const std::set<int> strict_ids(cls.strict_class.begin(), cls.strict_class.end());
    if (cls.laws.size() != 1 || strict_ids.size() != 1) {
      log << " [" << spec << ": expected one law in one strict class]";
      ok = false;
    }
    if (!cls.checks.pass()) {
      log << " [" << spec << ": bijection or transport violations]";
      ok = false;
    }
    bool bijection_seen = false, transport_seen = false;
    for (const auto& entry : cls.checks.entries) {
      if (entry.check == "bijection" && entry.checked > 0) bijection_seen = true;
      if (entry.check == "conjugation-transport" && entry.checked > 0) transport_seen = true;
    }
    if (!bijection_seen || !transport_seen) {
      log << " [" << spec << ": checks did not run]";
      ok = false;
    }
  }
  return ok;
}

bool criterion10(std::ostream& log) {
  bool ok = true;

  // (1,2) fails as a sum law in hn, at condition 1.
  {
    const auto hn = make_hn_model();
    const auto cert = check_sum_law(*hn, {2, {1, 2}}, 2);
    if (cert.verdict || cert.condition("condition-1")->pass) {
      log << " [hn (1,2) not rejected at condition 1]";
      ok = false;
    }
  }
  // (1,1) fails as a difference law in hz, at condition 1.
  {
    const auto hz = make_hz_model();
    const auto cert = check_difference_law(*hz, {2, {1, 1}}, 2);
    if (cert.verdict || cert.condition("condition-1")->pass) {
      log << " [hz (1,1) not rejected at condition 1]";
      ok = false;
    }
  }
  // A corrupted generator row is an axiom failure.
  {
    const auto sphere = make_sphere_model();
    auto doc = export_table_document(*sphere, 3);
    doc["summings"]["2"][0][2] = 0;
    const auto bad = load_table_model(doc, "table:corrupted-generator");
    AxiomCheckConfig cfg;
    cfg.n_max = 2;
    if (check_axioms(*bad, cfg).pass()) {
      log << " [corrupted generator row not detected]";
      ok = false;
    }
  }
  // A law corrupted only in condition 4 fails that condition, and the map
  // built from a shallow certificate shows witness dependence.
  {
    const auto m2 = make_model("hmod:2");
    auto doc = export_table_document(*m2, 4);
    const auto carrier2 = m2->enumerate(2);
    const auto carrier4 = m2->enumerate(4);
    int r_idx = -1, wrong_idx = -1;
    for (std::size_t i = 0; i < carrier2.size(); ++i)
      if (carrier2[i] == Element{2, {1, 1}}) r_idx = static_cast<int>(i);
    for (std::size_t i = 0; i < carrier4.size(); ++i)
      if (carrier4[i] == Element{4, {1, 0, 0, 1}}) wrong_idx = static_cast<int>(i);
    doc["mult"]["2x2"][static_cast<std::size_t>(r_idx) * carrier2.size() + r_idx] = wrong_idx;
    const auto corrupted = load_table_model(doc, "table:corrupted-law");
    const Element law{2, {r_idx}};

    const auto cert = check_difference_law(*corrupted, law, 2);
    const bool only_condition4 = !cert.verdict && cert.condition("condition-1")->pass &&
                                 cert.condition("condition-2")->pass &&
                                 cert.condition("condition-3")->pass &&
                                 !cert.condition("condition-4")->pass;
    if (!only_condition4) {
      log << " [corruption not isolated to condition 4]";
      ok = false;
    }

    const auto phi = build_map(*corrupted, law, MapVariant::hz, 1);
    VerifyMapConfig cfg;
    cfg.entry_bound = 1;
    cfg.max_len = 1;
    cfg.witness_trials = 5;
    cfg.seed = 23;
    const auto report = verify_map(phi, cfg);
    bool witness_violation = false;
    for (const auto& entry : report.entries)
      if (entry.check == "witness-independence" && entry.violation_count > 0)
        witness_violation = true;
    if (!witness_violation) {
      log << " [witness dependence not exhibited]";
      ok = false;
    }
  }
  return ok;
}

bool criterion11(std::ostream& log) {
  const auto hz = make_hz_model();
  const Element law{2, {1, -1}};
  for (int k = 1; k <= 4; ++k) {
    const auto pw = power(*hz, law, k);
    const auto split = parity_split(k);
    for (int i = 1; i <= pw.level; ++i) {
      const bool plus = std::find(split.plus.begin(), split.plus.end(), i) != split.plus.end();
      if (pw.data[i - 1] != (plus ? 1 : -1)) {
        log << " [sign pattern breaks at k=" << k << ", i=" << i << "]";
        return false;
      }
    }
  }
  return true;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "axiom suite over the model zoo", criterion1},
      {2, "difference-law certification of (1,-1)", criterion2},
      {3, "the canonical laws give identity maps", criterion3},
      {4, "witness independence", criterion4},
      {5, "multiplicativity, naturality, round trip", criterion5},
      {6, "derived sum law and hn factorization", criterion6},
      {7, "negative law searches", criterion7},
      {8, "pi0 invariant factors and SNF self-checks", criterion8},
      {9, "classification and the law&map bijection", criterion9},
      {10, "negative detection of corrupted inputs", criterion10},
      {11, "parity anchor for the smash convention", criterion11},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    std::ostringstream log;
    bool ok = false;
    try {
      ok = criterion.run(log);
    } catch (const std::exception& e) {
      log << " [exception: " << e.what() << "]";
    }
    if (!ok) ++failures;
    std::cout << "criterion " << criterion.number << ": " << (ok ? "PASS" : "FAIL") << " - "
              << criterion.title << log.str() << "\n";
  }
  if (failures) std::cout << failures << " criteria failed\n";
  return failures == 0 ? 0 : 1;
}
