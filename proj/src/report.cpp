#include "gring/report.hpp"

namespace gring {

namespace {

using nlohmann::ordered_json;

ordered_json witness_json(const CheckWitness& w) {
  return ordered_json{{"context", w.context}, {"lhs", w.lhs}, {"rhs", w.rhs}};
}

ordered_json entry_json(const CheckEntry& e) {
  ordered_json out;
  out["check"] = e.check;
  out["status"] = e.violation_count == 0 ? "pass" : "fail";
  out["counts"] = ordered_json{{"checked", e.checked}, {"violations", e.violation_count}};
  auto witnesses = ordered_json::array();
  for (const auto& w : e.witnesses) witnesses.push_back(witness_json(w));
  out["witnesses"] = std::move(witnesses);
  return out;
}

}  // namespace

ordered_json check_report_results(const CheckReport& report) {
  auto out = ordered_json::array();
  for (const auto& e : report.entries) out.push_back(entry_json(e));
  return out;
}

ordered_json certificate_results(const LawCertificate& cert) {
  auto out = ordered_json::array();
  for (const auto& c : cert.conditions) {
    ordered_json entry;
    entry["check"] = c.name;
    entry["status"] = c.pass ? "pass" : "fail";
    entry["counts"] =
        ordered_json{{"checked", c.checked}, {"violations", c.failures.size()}};
    auto witnesses = ordered_json::array();
    for (const auto& w : c.failures) witnesses.push_back(witness_json(w));
    entry["witnesses"] = std::move(witnesses);
    out.push_back(std::move(entry));
  }
  return out;
}

ordered_json certificate_json(const LawCertificate& cert) {
  ordered_json out;
  out["model"] = cert.model;
  out["law"] = cert.law_text;
  out["kind"] = cert.kind == LawKind::sum ? "sum" : "difference";
  out["k_max"] = cert.k_max;
  out["verdict"] = cert.verdict ? "pass" : "fail";
  out["checked"] = cert.checked_total();
  out["conditions"] = certificate_results(cert);
  return out;
}

ordered_json presentation_json(const AbelianPresentation& pres, const GammaRingModel& model) {
  ordered_json out;
  out["generators"] = pres.generators.size();
  out["relations"] = static_cast<std::size_t>(pres.relations.rows());
  auto factors = ordered_json::array();
  for (auto f : pres.factors) factors.push_back(f);
  out["invariant_factors"] = std::move(factors);
  auto nontrivial = ordered_json::array();
  for (auto f : pres.nontrivial_factors()) nontrivial.push_back(f);
  out["nontrivial_factors"] = std::move(nontrivial);
  out["unit_class"] = pres.unit_class;
  out["unit_class_is_basepoint_class"] = pres.unit_class_is_basepoint_class;
  auto table = ordered_json::array();
  for (const auto& g : pres.generators)
    table.push_back(ordered_json{{"element", model.render(g)}, {"class", pres.class_of(g)}});
  out["class_table"] = std::move(table);
  return out;
}

ordered_json classification_json(const LawClassification& cls, const GammaRingModel& model) {
  ordered_json out;
  auto laws = ordered_json::array();
  for (const auto& found : cls.laws) laws.push_back(model.render(found.law));
  out["laws"] = std::move(laws);
  out["iso_class"] = cls.iso_class;
  out["strict_class"] = cls.strict_class;
  auto related = ordered_json::array();
  for (const auto& rel : cls.related)
    related.push_back(ordered_json{{"from", rel.from},
                                   {"to", rel.to},
                                   {"witness", model.render(rel.witness)},
                                   {"strict", rel.strict}});
  out["related"] = std::move(related);
  auto units = ordered_json::array();
  for (const auto& a : cls.units) units.push_back(model.render(a));
  out["units"] = std::move(units);
  auto strict_units = ordered_json::array();
  for (const auto& a : cls.strict_units) strict_units.push_back(model.render(a));
  out["strict_units"] = std::move(strict_units);
  return out;
}

}  // namespace gring
