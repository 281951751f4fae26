#include "gring/cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <fstream>
#include <iostream>

#include "gring/report.hpp"

namespace gring {

namespace {

using nlohmann::ordered_json;

struct RunConfig {
  std::string command;
  std::string model;
  std::string kind = "diff";
  std::string law;
  std::string variant = "hz";
  std::string eval;
  std::string mode = "exhaustive";
  int kmax = 3;
  int nmax = 3;
  int bound = 3;
  int maxlen = 3;
  int trials = 10;
  int samples = 200;
  std::uint64_t seed = 0;
  std::string out_path;
};

ordered_json config_json(const RunConfig& cfg) {
  ordered_json out;
  out["command"] = cfg.command;
  out["model"] = cfg.model;
  if (cfg.command == "check-law" || cfg.command == "find-laws") out["kind"] = cfg.kind;
  if (!cfg.law.empty()) out["law"] = cfg.law;
  if (cfg.command == "build-map" || cfg.command == "verify-map") out["variant"] = cfg.variant;
  if (!cfg.eval.empty()) out["eval"] = cfg.eval;
  if (cfg.command == "check-ring") {
    out["nmax"] = cfg.nmax;
    out["mode"] = cfg.mode;
    out["samples"] = cfg.samples;
  }
  if (cfg.command != "pi0") out["kmax"] = cfg.kmax;
  out["bound"] = cfg.bound;
  if (cfg.command == "verify-map") {
    out["maxlen"] = cfg.maxlen;
    out["trials"] = cfg.trials;
  }
  out["seed"] = cfg.seed;
  return out;
}

std::vector<std::int64_t> parse_target_vector(const std::string& text) {
  std::string trimmed;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) trimmed.push_back(c);
  if (trimmed.size() < 2 || trimmed.front() != '[' || trimmed.back() != ']')
    throw input_error("expected a bracketed integer vector, got \"" + text + "\"");
  const std::string inner = trimmed.substr(1, trimmed.size() - 2);
  std::vector<std::int64_t> out;
  if (inner.empty()) return out;
  std::size_t start = 0;
  while (start <= inner.size()) {
    auto comma = inner.find(',', start);
    if (comma == std::string::npos) comma = inner.size();
    const auto token = inner.substr(start, comma - start);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size())
      throw input_error("bad integer \"" + token + "\" in vector literal");
    out.push_back(v);
    start = comma + 1;
  }
  return out;
}

LawKind parse_kind(const std::string& kind) {
  if (kind == "sum") return LawKind::sum;
  if (kind == "diff" || kind == "difference") return LawKind::difference;
  throw input_error("unknown law kind \"" + kind + "\" (want sum|diff)");
}

MapVariant parse_variant(const std::string& variant) {
  if (variant == "hn") return MapVariant::hn;
  if (variant == "hz") return MapVariant::hz;
  throw input_error("unknown variant \"" + variant + "\" (want hn|hz)");
}

std::uint64_t count_violations(const ordered_json& results) {
  std::uint64_t total = 0;
  for (const auto& entry : results)
    if (entry.contains("counts") && entry["counts"].contains("violations"))
      total += entry["counts"]["violations"].get<std::uint64_t>();
  return total;
}

int emit(const RunConfig& cfg, ordered_json results, std::ostream& out) {
  const std::uint64_t violations = count_violations(results);
  ordered_json report;
  report["format"] = kReportFormat;
  report["tool_version"] = kToolVersion;
  report["config"] = config_json(cfg);
  report["results"] = std::move(results);
  report["summary"] =
      ordered_json{{"violations", violations}, {"status", violations == 0 ? "pass" : "fail"}};
  if (cfg.out_path.empty()) {
    out << report.dump(2) << "\n";
  } else {
    std::ofstream file(cfg.out_path);
    if (!file) throw input_error("cannot write report to \"" + cfg.out_path + "\"");
    file << report.dump(2) << "\n";
  }
  return violations == 0 ? 0 : 1;
}

int run_check_ring(const RunConfig& cfg, std::ostream& out) {
  const auto model = make_model(cfg.model);
  AxiomCheckConfig axiom_cfg;
  axiom_cfg.n_max = cfg.nmax;
  axiom_cfg.mode = cfg.mode == "sample" ? CheckMode::sample : CheckMode::exhaustive;
  axiom_cfg.seed = cfg.seed;
  axiom_cfg.bound = cfg.bound;
  axiom_cfg.samples = cfg.samples;
  if (cfg.mode != "sample" && cfg.mode != "exhaustive")
    throw input_error("unknown mode \"" + cfg.mode + "\" (want exhaustive|sample)");
  const auto report = check_axioms(*model, axiom_cfg);
  return emit(cfg, check_report_results(report), out);
}

int run_check_law(const RunConfig& cfg, std::ostream& out) {
  const auto model = make_model(cfg.model);
  const auto kind = parse_kind(cfg.kind);
  const auto law = model->parse_element(cfg.law, 2);
  const auto cert = kind == LawKind::sum ? check_sum_law(*model, law, cfg.kmax)
                                         : check_difference_law(*model, law, cfg.kmax);
  auto results = certificate_results(cert);
  ordered_json summary_entry;
  summary_entry["check"] = "certificate";
  summary_entry["status"] = cert.verdict ? "pass" : "fail";
  summary_entry["counts"] = ordered_json{{"checked", cert.checked_total()}, {"violations", 0}};
  summary_entry["detail"] = certificate_json(cert);
  results.push_back(std::move(summary_entry));
  return emit(cfg, std::move(results), out);
}

int run_find_laws(const RunConfig& cfg, std::ostream& out) {
  const auto model = make_model(cfg.model);
  const auto laws = enumerate_laws(*model, parse_kind(cfg.kind), cfg.kmax);
  auto results = ordered_json::array();
  ordered_json search;
  search["check"] = "search";
  search["status"] = "pass";
  search["counts"] = ordered_json{{"laws_found", laws.size()}, {"violations", 0}};
  results.push_back(std::move(search));
  for (const auto& found : laws) {
    ordered_json entry;
    entry["check"] = "law " + found.certificate.law_text;
    entry["status"] = "pass";
    entry["counts"] =
        ordered_json{{"checked", found.certificate.checked_total()}, {"violations", 0}};
    entry["detail"] = certificate_json(found.certificate);
    results.push_back(std::move(entry));
  }
  return emit(cfg, std::move(results), out);
}

int run_build_map(const RunConfig& cfg, std::ostream& out) {
  const auto model = make_model(cfg.model);
  const auto variant = parse_variant(cfg.variant);
  const auto law = model->parse_element(cfg.law, 2);
  const auto phi = build_map(*model, law, variant, cfg.kmax);
  const auto target = parse_target_vector(cfg.eval);
  const auto value = phi.eval(target);
  auto results = ordered_json::array();
  ordered_json entry;
  entry["check"] = "eval";
  entry["status"] = "pass";
  entry["counts"] = ordered_json{{"checked", 1}, {"violations", 0}};
  entry["detail"] = ordered_json{{"target", cfg.eval},
                                 {"value", model->render(value)},
                                 {"level", value.level}};
  results.push_back(std::move(entry));
  return emit(cfg, std::move(results), out);
}

int run_verify_map(const RunConfig& cfg, std::ostream& out) {
  const auto model = make_model(cfg.model);
  const auto variant = parse_variant(cfg.variant);
  const auto law = model->parse_element(cfg.law, 2);
  const auto phi = build_map(*model, law, variant, cfg.kmax);
  VerifyMapConfig verify_cfg;
  verify_cfg.entry_bound = cfg.bound;
  verify_cfg.max_len = cfg.maxlen;
  verify_cfg.witness_trials = cfg.trials;
  verify_cfg.seed = cfg.seed;
  const auto report = verify_map(phi, verify_cfg);
  return emit(cfg, check_report_results(report), out);
}

int run_pi0(const RunConfig& cfg, std::ostream& out) {
  const auto model = make_model(cfg.model);
  const auto pres = pi0(*model);

  // Self-check: L·M·R is the stated diagonal and the transforms are unimodular.
  const IntMatrix input = pres.relations.transpose();
  IntMatrix product = pres.snf.left * input * pres.snf.right;
  bool diagonal_ok = true;
  for (Eigen::Index r = 0; r < product.rows(); ++r)
    for (Eigen::Index c = 0; c < product.cols(); ++c) {
      const Int expected =
          (r == c && r < static_cast<Eigen::Index>(pres.snf.diagonal.size()))
              ? pres.snf.diagonal[static_cast<std::size_t>(r)]
              : 0;
      diagonal_ok = diagonal_ok && product(r, c) == expected;
    }
  const Int det_left = determinant(pres.snf.left);
  const Int det_right = determinant(pres.snf.right);
  const bool unimodular = (det_left == 1 || det_left == -1) && (det_right == 1 || det_right == -1);

  auto results = ordered_json::array();
  ordered_json entry;
  entry["check"] = "pi0";
  entry["status"] = "pass";
  entry["counts"] = ordered_json{{"checked", 1}, {"violations", 0}};
  entry["detail"] = presentation_json(pres, *model);
  results.push_back(std::move(entry));
  ordered_json snf_entry;
  snf_entry["check"] = "snf-verification";
  snf_entry["status"] = diagonal_ok && unimodular ? "pass" : "fail";
  snf_entry["counts"] = ordered_json{{"checked", 1},
                                     {"violations", diagonal_ok && unimodular ? 0 : 1}};
  snf_entry["detail"] = ordered_json{{"diagonal_ok", diagonal_ok},
                                     {"det_left", det_left},
                                     {"det_right", det_right}};
  results.push_back(std::move(snf_entry));
  return emit(cfg, std::move(results), out);
}

int run_classify(const RunConfig& cfg, std::ostream& out) {
  const auto model = make_model(cfg.model);
  const auto cls = classify(*model, cfg.kmax);
  auto results = check_report_results(cls.checks);
  ordered_json entry;
  entry["check"] = "classification";
  entry["status"] = "pass";
  entry["counts"] = ordered_json{{"laws", cls.laws.size()}, {"violations", 0}};
  entry["detail"] = classification_json(cls, *model);
  results.push_back(std::move(entry));
  return emit(cfg, std::move(results), out);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"gammaring: a workbench for discrete Gamma-rings"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--model", cfg.model, "model spec: hn|hz|sphere|hmod:<n>|end:<d1,..>|ring:<file>|monoid:<file>|table:<file>")
        ->required();
    cmd->add_option("--out", cfg.out_path, "write the JSON report to this file");
    cmd->add_option("--seed", cfg.seed, "seed for all sampled checks");
  };

  auto* check_ring = app.add_subcommand("check-ring", "verify the model axioms");
  add_common(check_ring);
  check_ring->add_option("--nmax", cfg.nmax, "highest level to check");
  check_ring->add_option("--mode", cfg.mode, "exhaustive|sample");
  check_ring->add_option("--bound", cfg.bound, "entry bound for unbounded carriers");
  check_ring->add_option("--samples", cfg.samples, "sample budget");

  auto* check_law = app.add_subcommand("check-law", "check one law candidate");
  add_common(check_law);
  check_law->add_option("--kind", cfg.kind, "sum|diff")->required();
  check_law->add_option("--law", cfg.law, "law element at level 2")->required();
  check_law->add_option("--kmax", cfg.kmax, "highest power to check");

  auto* find_laws = app.add_subcommand("find-laws", "enumerate all laws");
  add_common(find_laws);
  find_laws->add_option("--kind", cfg.kind, "sum|diff")->required();
  find_laws->add_option("--kmax", cfg.kmax, "highest power to check");

  auto* build = app.add_subcommand("build-map", "evaluate the multiplicative map of a law");
  add_common(build);
  build->add_option("--law", cfg.law, "law element at level 2")->required();
  build->add_option("--variant", cfg.variant, "hn|hz")->required();
  build->add_option("--eval", cfg.eval, "target vector, e.g. \"[1,-2]\"")->required();
  build->add_option("--kmax", cfg.kmax, "certification bound");

  auto* verify = app.add_subcommand("verify-map", "verify the multiplicative map of a law");
  add_common(verify);
  verify->add_option("--law", cfg.law, "law element at level 2")->required();
  verify->add_option("--variant", cfg.variant, "hn|hz")->required();
  verify->add_option("--bound", cfg.bound, "target entry bound");
  verify->add_option("--maxlen", cfg.maxlen, "target length bound");
  verify->add_option("--trials", cfg.trials, "random witnesses per target");
  verify->add_option("--kmax", cfg.kmax, "certification bound");

  auto* pi0_cmd = app.add_subcommand("pi0", "invariant factors and class table");
  add_common(pi0_cmd);

  auto* classify_cmd = app.add_subcommand("classify", "laws up to (strict) isomorphism");
  add_common(classify_cmd);
  classify_cmd->add_option("--kmax", cfg.kmax, "certification bound");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    if (check_ring->parsed()) return (cfg.command = "check-ring", run_check_ring(cfg, out));
    if (check_law->parsed()) return (cfg.command = "check-law", run_check_law(cfg, out));
    if (find_laws->parsed()) return (cfg.command = "find-laws", run_find_laws(cfg, out));
    if (build->parsed()) return (cfg.command = "build-map", run_build_map(cfg, out));
    if (verify->parsed()) return (cfg.command = "verify-map", run_verify_map(cfg, out));
    if (pi0_cmd->parsed()) return (cfg.command = "pi0", run_pi0(cfg, out));
    if (classify_cmd->parsed()) return (cfg.command = "classify", run_classify(cfg, out));
    err << "no subcommand given\n" << app.help();
    return 2;
  } catch (const unsupported_error& e) {
    err << "unsupported: " << e.what() << "\n";
    return 3;
  } catch (const input_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const overflow_error& e) {
    err << "overflow: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace gring
