#include <charconv>
#include <map>
#include <sstream>

#include "gring/generator_word.hpp"
#include "gring/model_io.hpp"

namespace gring {

namespace {

using nlohmann::json;

void check(bool cond, const std::string& msg) {
  if (!cond) throw input_error(msg);
}

const json& field(const json& doc, const char* key, const std::string& where) {
  auto it = doc.find(key);
  check(it != doc.end(), where + ": missing field \"" + key + "\"");
  return *it;
}

std::string block_key(int n, int m) { return std::to_string(n) + "x" + std::to_string(m); }

struct Tables {
  int n_max = 0;
  int unit = 0;
  std::vector<int> sizes;  // per level 0..n_max
  // rows[level][index-1][element]
  std::map<int, std::vector<std::vector<int>>> transpositions, restrictions, summings, degeneracies;
  std::map<std::pair<int, int>, std::vector<int>> mult;
};

std::vector<int> read_row(const json& row, int domain, int codomain, const std::string& where) {
  check(row.is_array() && static_cast<int>(row.size()) == domain,
        where + ": expected " + std::to_string(domain) + " entries");
  std::vector<int> out;
  for (const auto& v : row) {
    check(v.is_number_integer(), where + ": non-integer entry");
    const int idx = v.get<int>();
    check(idx >= 0 && idx < codomain, where + ": index " + std::to_string(idx) + " out of range");
    out.push_back(idx);
  }
  check(out[0] == 0, where + ": basepoint is not preserved");
  return out;
}

void read_generator_family(const json& doc, const char* key, int lo_level, int n_max,
                           const std::vector<int>& sizes, bool to_smaller, bool from_smaller,
                           std::map<int, std::vector<std::vector<int>>>& out,
                           const std::string& where, int count_at(int)) {
  const auto& fam = field(doc, key, where);
  for (int n = lo_level; n <= n_max; ++n) {
    const auto levels_it = fam.find(std::to_string(n));
    check(levels_it != fam.end(),
          where + ": " + key + ": missing tables for level " + std::to_string(n));
    const auto& rows = *levels_it;
    const int expected = count_at(n);
    check(rows.is_array() && static_cast<int>(rows.size()) == expected,
          where + ": " + key + " at level " + std::to_string(n) + ": expected " +
              std::to_string(expected) + " rows");
    const int domain = from_smaller ? sizes[n - 1] : sizes[n];
    const int codomain = to_smaller ? sizes[n - 1] : sizes[n];
    std::vector<std::vector<int>> parsed;
    for (int i = 0; i < expected; ++i)
      parsed.push_back(read_row(rows[i], domain, codomain,
                                where + ": " + key + "[" + std::to_string(n) + "][" +
                                    std::to_string(i + 1) + "]"));
    out[n] = std::move(parsed);
  }
}

Tables parse_tables(const json& doc, const std::string& where) {
  check(doc.is_object(), where + ": document is not an object");
  const auto& format = field(doc, "format", where);
  check(format.is_string() && format.get<std::string>() == "gamma-table/1",
        where + ": unsupported format (want \"gamma-table/1\")");

  Tables t;
  const auto& max_level = field(doc, "max_level", where);
  check(max_level.is_number_integer() && max_level.get<int>() >= 1,
        where + ": max_level must be a positive integer");
  t.n_max = max_level.get<int>();
  check(t.n_max <= 16, where + ": max_level larger than 16 is not supported");

  const auto& carriers = field(doc, "carriers", where);
  check(carriers.is_array() && static_cast<int>(carriers.size()) == t.n_max + 1,
        where + ": carriers must list sizes for levels 0.." + std::to_string(t.n_max));
  for (const auto& c : carriers) {
    check(c.is_number_integer() && c.get<int>() >= 1, where + ": bad carrier size");
    t.sizes.push_back(c.get<int>());
  }
  check(t.sizes[0] == 1, where + ": carrier at level 0 must contain only the basepoint");

  const auto& unit = field(doc, "unit", where);
  check(unit.is_number_integer(), where + ": unit must be an index");
  t.unit = unit.get<int>();
  check(t.unit >= 0 && t.unit < t.sizes[1], where + ": unit index out of range");

  read_generator_family(doc, "transpositions", 2, t.n_max, t.sizes, false, false,
                        t.transpositions, where, [](int n) { return n - 1; });
  read_generator_family(doc, "restrictions", 1, t.n_max, t.sizes, true, false, t.restrictions,
                        where, [](int n) { return n; });
  read_generator_family(doc, "summings", 2, t.n_max, t.sizes, true, false, t.summings, where,
                        [](int n) { return n - 1; });
  read_generator_family(doc, "degeneracies", 1, t.n_max, t.sizes, false, true, t.degeneracies,
                        where, [](int n) { return n; });

  const auto& mult = field(doc, "mult", where);
  for (int n = 1; n <= t.n_max; ++n)
    for (int m = 1; n * m <= t.n_max; ++m) {
      const auto key = block_key(n, m);
      const auto it = mult.find(key);
      check(it != mult.end(), where + ": mult: missing block \"" + key + "\"");
      const auto& block = *it;
      const std::size_t expected =
          static_cast<std::size_t>(t.sizes[n]) * static_cast<std::size_t>(t.sizes[m]);
      check(block.is_array() && block.size() == expected,
            where + ": mult block \"" + key + "\": expected " + std::to_string(expected) +
                " entries, got " + std::to_string(block.size()));
      std::vector<int> parsed;
      for (const auto& v : block) {
        check(v.is_number_integer(), where + ": mult block \"" + key + "\": non-integer entry");
        const int idx = v.get<int>();
        check(idx >= 0 && idx < t.sizes[n * m],
              where + ": mult block \"" + key + "\": index out of range");
        parsed.push_back(idx);
      }
      for (int x = 0; x < t.sizes[n]; ++x)
        check(parsed[static_cast<std::size_t>(x) * t.sizes[m]] == 0,
              where + ": mult block \"" + key + "\": basepoint is not absorbed");
      for (int y = 0; y < t.sizes[m]; ++y)
        check(parsed[static_cast<std::size_t>(y)] == 0,
              where + ": mult block \"" + key + "\": basepoint is not absorbed");
      t.mult[{n, m}] = std::move(parsed);
    }
  return t;
}

class TableModel final : public GammaRingModel {
 public:
  TableModel(Tables tables, std::string name)
      : GammaRingModel(std::move(name)), t_(std::move(tables)) {}

  std::optional<std::uint64_t> carrier_size(int level) const override {
    check_level_bound(level);
    return static_cast<std::uint64_t>(t_.sizes[level]);
  }

  std::vector<Element> enumerate(int level) const override {
    check_level_bound(level);
    std::vector<Element> out;
    for (int i = 0; i < t_.sizes[level]; ++i) out.push_back({level, {i}});
    return out;
  }

  Element basepoint(int level) const override {
    check_level_bound(level);
    return {level, {0}};
  }

  Element unit() const override { return {1, {t_.unit}}; }

  int max_level() const override { return t_.n_max; }

  Element induce(const PointedMap& f, const Element& x) const override {
    require_level(x, f.source(), "induce");
    check_level_bound(f.source());
    check_level_bound(f.target());
    int idx = static_cast<int>(x.data[0]);
    for (const auto& step : factor_map(f).steps) idx = row(step)[idx];
    return {f.target(), {idx}};
  }

  Element mult(const Element& x, const Element& y) const override {
    const int level = checked_product_level(x.level, y.level, "mult");
    if (level == 0) return basepoint(0);
    const auto& block = t_.mult.at({x.level, y.level});
    const std::size_t at =
        static_cast<std::size_t>(x.data[0]) * t_.sizes[y.level] + static_cast<std::size_t>(y.data[0]);
    return {level, {block[at]}};
  }

  std::string render(const Element& x) const override { return std::to_string(x.data[0]); }

  Element parse_element(std::string_view text, int level) const override {
    check_level_bound(level);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size())
      throw input_error(name() + " element: expected a carrier index");
    if (v < 0 || v >= t_.sizes[level])
      throw input_error(name() + " element: index " + std::to_string(v) +
                        " outside carrier of size " + std::to_string(t_.sizes[level]));
    return {level, {v}};
  }

 private:
  void check_level_bound(int level) const {
    if (level < 0) throw input_error(name() + ": negative level");
    if (level > t_.n_max)
      throw unsupported_error(name() + ": level " + std::to_string(level) +
                              " exceeds the model bound " + std::to_string(t_.n_max));
  }

  const std::vector<int>& row(const GeneratorStep& step) const {
    switch (step.kind) {
      case StepKind::transposition: return t_.transpositions.at(step.level)[step.index - 1];
      case StepKind::restriction: return t_.restrictions.at(step.level)[step.index - 1];
      case StepKind::summing: return t_.summings.at(step.level)[step.index - 1];
      case StepKind::degeneracy: return t_.degeneracies.at(step.level)[step.index - 1];
    }
    throw input_error("table model: unknown generator step");
  }

  Tables t_;
};

}  // namespace

std::unique_ptr<GammaRingModel> load_table_model(const nlohmann::json& doc, std::string name) {
  return std::make_unique<TableModel>(parse_tables(doc, name), std::move(name));
}

nlohmann::ordered_json export_table_document(const GammaRingModel& model, int n_max) {
  check(n_max >= 1, "export_table_document: need max level >= 1");
  std::vector<std::vector<Element>> carriers;
  std::vector<std::map<Element, int>> index;
  for (int n = 0; n <= n_max; ++n) {
    carriers.push_back(model.enumerate(n));
    std::map<Element, int> idx;
    for (std::size_t i = 0; i < carriers[n].size(); ++i)
      idx[carriers[n][i]] = static_cast<int>(i);
    index.push_back(std::move(idx));
  }
  check(carriers[0].size() == 1, "export_table_document: carrier at level 0 is not trivial");

  auto row_for = [&](const PointedMap& g) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (const auto& x : carriers[g.source()])
      row.push_back(index[g.target()].at(model.induce(g, x)));
    return row;
  };

  nlohmann::ordered_json doc;
  doc["format"] = "gamma-table/1";
  doc["name"] = model.name();
  doc["max_level"] = n_max;
  doc["carriers"] = nlohmann::ordered_json::array();
  for (int n = 0; n <= n_max; ++n) doc["carriers"].push_back(carriers[n].size());
  doc["unit"] = index[1].at(model.unit());

  nlohmann::ordered_json transpositions, restrictions, summings, degeneracies, mult;
  for (int n = 2; n <= n_max; ++n) {
    auto rows = nlohmann::ordered_json::array();
    for (int i = 1; i <= n - 1; ++i) rows.push_back(row_for(transposition(n, i)));
    transpositions[std::to_string(n)] = std::move(rows);
  }
  for (int n = 1; n <= n_max; ++n) {
    auto rows = nlohmann::ordered_json::array();
    for (int i = 1; i <= n; ++i) rows.push_back(row_for(restriction(n, i)));
    restrictions[std::to_string(n)] = std::move(rows);
  }
  for (int n = 2; n <= n_max; ++n) {
    auto rows = nlohmann::ordered_json::array();
    for (int i = 1; i <= n - 1; ++i) rows.push_back(row_for(summing(n, i, i + 1, i)));
    summings[std::to_string(n)] = std::move(rows);
  }
  for (int n = 1; n <= n_max; ++n) {
    auto rows = nlohmann::ordered_json::array();
    for (int j = 1; j <= n; ++j) rows.push_back(row_for(degeneracy(n, j)));
    degeneracies[std::to_string(n)] = std::move(rows);
  }
  for (int n = 1; n <= n_max; ++n)
    for (int m = 1; n * m <= n_max; ++m) {
      auto block = nlohmann::ordered_json::array();
      for (const auto& x : carriers[n])
        for (const auto& y : carriers[m]) block.push_back(index[n * m].at(model.mult(x, y)));
      mult[block_key(n, m)] = std::move(block);
    }
  doc["transpositions"] = std::move(transpositions);
  doc["restrictions"] = std::move(restrictions);
  doc["summings"] = std::move(summings);
  doc["degeneracies"] = std::move(degeneracies);
  doc["mult"] = std::move(mult);
  return doc;
}

}  // namespace gring
