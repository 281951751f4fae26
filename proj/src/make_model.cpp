#include <charconv>
#include <fstream>

#include "gring/model_io.hpp"
#include "gring/models.hpp"

namespace gring {

namespace {

using nlohmann::json;

void check(bool cond, const std::string& msg) {
  if (!cond) throw input_error(msg);
}

int parse_positive(std::string_view s, const std::string& what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  check(ec == std::errc{} && ptr == s.data() + s.size(), what + ": bad integer \"" + std::string(s) + "\"");
  return v;
}

const json& field(const json& doc, const char* key, const std::string& where) {
  auto it = doc.find(key);
  check(it != doc.end(), where + ": missing field \"" + key + "\"");
  return *it;
}

void check_format(const json& doc, const char* expected, const std::string& where) {
  const auto& format = field(doc, "format", where);
  check(format.is_string() && format.get<std::string>() == expected,
        where + ": unsupported format (want \"" + expected + "\")");
}

std::vector<std::vector<int>> read_square(const json& table, int size,
                                          const std::map<std::string, int>& by_name,
                                          const std::string& where) {
  check(table.is_array() && static_cast<int>(table.size()) == size,
        where + ": expected " + std::to_string(size) + " rows");
  std::vector<std::vector<int>> out;
  for (const auto& row : table) {
    check(row.is_array() && static_cast<int>(row.size()) == size,
          where + ": expected " + std::to_string(size) + " columns");
    std::vector<int> parsed;
    for (const auto& v : row) {
      if (v.is_number_integer()) {
        parsed.push_back(v.get<int>());
      } else if (v.is_string()) {
        auto it = by_name.find(v.get<std::string>());
        check(it != by_name.end(), where + ": unknown element \"" + v.get<std::string>() + "\"");
        parsed.push_back(it->second);
      } else {
        check(false, where + ": entries must be names or indices");
      }
    }
    out.push_back(std::move(parsed));
  }
  return out;
}

}  // namespace

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open file \"" + path + "\"");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw input_error("file \"" + path + "\": " + e.what());
  }
}

FiniteRing ring_from_json(const json& doc, const std::string& label) {
  check(doc.is_object(), label + ": document is not an object");
  check_format(doc, "gamma-ring/1", label);
  FiniteRing ring;
  ring.label = label;
  const auto& size = field(doc, "size", label);
  check(size.is_number_integer() && size.get<int>() >= 1, label + ": bad size");
  ring.size = size.get<int>();
  check(ring.size <= 256, label + ": rings larger than 256 elements are not supported");
  if (doc.contains("names")) {
    for (const auto& n : doc["names"]) {
      check(n.is_string(), label + ": names must be strings");
      ring.names.push_back(n.get<std::string>());
    }
  }
  std::map<std::string, int> by_name;
  for (std::size_t i = 0; i < ring.names.size(); ++i) by_name[ring.names[i]] = static_cast<int>(i);

  auto index_of = [&](const json& v, const char* what) {
    if (v.is_number_integer()) return v.get<int>();
    if (v.is_string()) {
      auto it = by_name.find(v.get<std::string>());
      check(it != by_name.end(), label + ": unknown element in \"" + what + "\"");
      return it->second;
    }
    throw input_error(label + ": \"" + what + "\" must be a name or an index");
  };
  ring.zero = index_of(field(doc, "zero", label), "zero");
  ring.one = index_of(field(doc, "one", label), "one");

  for (const auto& row : read_square(field(doc, "add", label), ring.size, by_name, label + ": add"))
    ring.add.insert(ring.add.end(), row.begin(), row.end());
  for (const auto& row : read_square(field(doc, "mul", label), ring.size, by_name, label + ": mul"))
    ring.mul.insert(ring.mul.end(), row.begin(), row.end());
  ring.validate();
  return ring;
}

FiniteMonoid monoid_from_json(const json& doc, const std::string& label) {
  check(doc.is_object(), label + ": document is not an object");
  check_format(doc, "gamma-monoid/1", label);
  FiniteMonoid monoid;
  monoid.label = label;
  const auto& elements = field(doc, "elements", label);
  check(elements.is_array() && !elements.empty(), label + ": elements must be a non-empty list");
  std::map<std::string, int> by_name;
  for (const auto& n : elements) {
    check(n.is_string(), label + ": element names must be strings");
    by_name[n.get<std::string>()] = static_cast<int>(monoid.names.size());
    monoid.names.push_back(n.get<std::string>());
  }
  monoid.size = static_cast<int>(monoid.names.size());
  check(monoid.size <= 256, label + ": monoids larger than 256 elements are not supported");

  const auto& unit = field(doc, "unit", label);
  check(unit.is_string(), label + ": unit must be an element name");
  auto it = by_name.find(unit.get<std::string>());
  check(it != by_name.end(), label + ": unknown unit \"" + unit.get<std::string>() + "\"");
  monoid.unit = it->second;

  for (const auto& row :
       read_square(field(doc, "table", label), monoid.size, by_name, label + ": table"))
    monoid.table.insert(monoid.table.end(), row.begin(), row.end());
  monoid.validate();
  return monoid;
}

std::unique_ptr<GammaRingModel> make_model(const std::string& spec) {
  if (spec == "hn") return make_hn_model();
  if (spec == "hz") return make_hz_model();
  if (spec == "sphere") return make_sphere_model();

  const auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw input_error("unknown model spec \"" + spec +
                      "\" (want hn|hz|sphere|hmod:<n>|end:<d1,...>|ring:<file>|monoid:<file>|table:<file>)");
  const std::string kind = spec.substr(0, colon);
  const std::string arg = spec.substr(colon + 1);
  check(!arg.empty(), "model spec \"" + spec + "\": missing argument");

  if (kind == "hmod") {
    const int n = parse_positive(arg, "hmod");
    check(n >= 2, "hmod: modulus must be >= 2");
    return make_ring_model(zmod_ring(n), spec);
  }
  if (kind == "end") {
    std::vector<int> ds;
    std::size_t start = 0;
    while (start <= arg.size()) {
      auto comma = arg.find(',', start);
      if (comma == std::string::npos) comma = arg.size();
      ds.push_back(parse_positive(std::string_view(arg).substr(start, comma - start), "end"));
      start = comma + 1;
    }
    return make_ring_model(end_ring(ds), spec);
  }
  if (kind == "ring") return make_ring_model(ring_from_json(load_json_file(arg), spec), spec);
  if (kind == "monoid")
    return make_monoid_model(monoid_from_json(load_json_file(arg), spec), spec);
  if (kind == "table") return load_table_model(load_json_file(arg), spec);
  throw input_error("unknown model kind \"" + kind + "\"");
}

}  // namespace gring
