#include "gring/axioms.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace gring {

namespace {

constexpr std::size_t kWitnessCap = 100;

std::vector<Element> pick_elements(std::vector<Element> all, int samples, std::mt19937_64& rng) {
  if (static_cast<int>(all.size()) <= samples) return all;
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(static_cast<std::size_t>(samples));
  return all;
}

std::vector<PointedMap> maps_for(int n, int m, const AxiomCheckConfig& cfg, std::mt19937_64& rng) {
  if (cfg.mode == CheckMode::exhaustive) return all_maps(n, m);
  const int budget = std::max(1, cfg.samples / 8);
  auto maps = sample_maps(n, m, budget, rng());
  if (n == m) maps.push_back(identity(n));
  return maps;
}

}  // namespace

void CheckEntry::record_violation(CheckWitness w) {
  ++violation_count;
  if (witnesses.size() < kWitnessCap) witnesses.push_back(std::move(w));
}

CheckEntry& CheckReport::entry(const std::string& name) {
  for (auto& e : entries)
    if (e.check == name) return e;
  entries.push_back(CheckEntry{name, 0, 0, {}});
  return entries.back();
}

std::uint64_t CheckReport::checked_total() const {
  std::uint64_t total = 0;
  for (const auto& e : entries) total += e.checked;
  return total;
}

std::uint64_t CheckReport::violation_total() const {
  std::uint64_t total = 0;
  for (const auto& e : entries) total += e.violation_count;
  return total;
}

CheckReport check_axioms(const GammaRingModel& model, const AxiomCheckConfig& config) {
  CheckReport report;
  std::mt19937_64 rng(config.seed);
  AxiomCheckConfig cfg = config;
  cfg.n_max = std::min(cfg.n_max, model.max_level());

  std::vector<std::vector<Element>> elems;
  for (int n = 0; n <= cfg.n_max; ++n) {
    auto all = model.generated_elements(n, cfg.bound);
    if (cfg.mode == CheckMode::sample) all = pick_elements(std::move(all), cfg.samples, rng);
    elems.push_back(std::move(all));
  }

  // induce(id) = id
  {
    auto& entry = report.entry("functor-identity");
    for (int n = 0; n <= cfg.n_max; ++n) {
      const auto id = identity(n);
      for (const auto& x : elems[n]) {
        ++entry.checked;
        const auto y = model.induce(id, x);
        if (y != x)
          entry.record_violation({"id at level " + std::to_string(n) + " on " + model.render(x),
                                  model.render(y), model.render(x)});
      }
    }
  }

  // induce(g∘f) = induce(g)∘induce(f)
  {
    auto& entry = report.entry("functor-composition");
    for (int n = 0; n <= cfg.n_max; ++n)
      for (int m = 0; m <= cfg.n_max; ++m) {
        const auto fs = maps_for(n, m, cfg, rng);
        // Hoist the inner images; composites are memoized across (f, g)
        // pairs since many pairs share one composite.
        std::vector<std::vector<Element>> f_images(fs.size());
        for (std::size_t fi = 0; fi < fs.size(); ++fi)
          for (const auto& x : elems[n]) f_images[fi].push_back(model.induce(fs[fi], x));
        for (int l = 0; l <= cfg.n_max; ++l) {
          const auto gs = maps_for(m, l, cfg, rng);
          std::map<PointedMap, std::vector<Element>> composite_images;
          for (const auto& g : gs) {
            for (std::size_t fi = 0; fi < fs.size(); ++fi) {
              const auto gf = compose(g, fs[fi]);
              auto [it, fresh] = composite_images.try_emplace(gf);
              if (fresh)
                for (const auto& x : elems[n]) it->second.push_back(model.induce(gf, x));
              const auto& lhs_table = it->second;
              for (std::size_t xi = 0; xi < elems[n].size(); ++xi) {
                ++entry.checked;
                const auto rhs = model.induce(g, f_images[fi][xi]);
                if (lhs_table[xi] != rhs)
                  entry.record_violation(CheckWitness{"g=" + g.str() + " f=" + fs[fi].str() +
                                                          " x=" + model.render(elems[n][xi]),
                                                      model.render(lhs_table[xi]),
                                                      model.render(rhs)});
              }
            }
          }
        }
      }
  }

  // induce(f∧g)(xy) = induce(f)(x) · induce(g)(y)
  {
    auto& entry = report.entry("naturality");
    const int cap = std::min(cfg.n_max, 2);
    for (int n = 0; n <= cap; ++n)
      for (int np = 0; np <= cap; ++np)
        for (int m = 0; m <= cap; ++m)
          for (int mp = 0; mp <= cap; ++mp) {
            if (n * m > model.max_level() || np * mp > model.max_level()) continue;
            const auto fs = maps_for(n, np, cfg, rng);
            const auto gs = maps_for(m, mp, cfg, rng);
            const auto& xs = elems[n];
            const auto& ys = elems[m];
            std::vector<Element> products;
            products.reserve(xs.size() * ys.size());
            for (const auto& x : xs)
              for (const auto& y : ys) products.push_back(model.mult(x, y));
            std::vector<std::vector<Element>> f_images(fs.size()), g_images(gs.size());
            for (std::size_t fi = 0; fi < fs.size(); ++fi)
              for (const auto& x : xs) f_images[fi].push_back(model.induce(fs[fi], x));
            for (std::size_t gi = 0; gi < gs.size(); ++gi)
              for (const auto& y : ys) g_images[gi].push_back(model.induce(gs[gi], y));
            for (std::size_t fi = 0; fi < fs.size(); ++fi)
              for (std::size_t gi = 0; gi < gs.size(); ++gi) {
                const auto fg = smash(fs[fi], gs[gi]);
                for (std::size_t xi = 0; xi < xs.size(); ++xi)
                  for (std::size_t yi = 0; yi < ys.size(); ++yi) {
                    ++entry.checked;
                    const auto lhs = model.induce(fg, products[xi * ys.size() + yi]);
                    const auto rhs = model.mult(f_images[fi][xi], g_images[gi][yi]);
                    if (lhs != rhs)
                      entry.record_violation(
                          {"f=" + fs[fi].str() + " g=" + gs[gi].str() + " x=" +
                               model.render(xs[xi]) + " y=" + model.render(ys[yi]),
                           model.render(lhs), model.render(rhs)});
                  }
              }
          }
  }

  // (xy)z = x(yz) under the strict smash identification
  {
    auto& entry = report.entry("associativity");
    for (int n = 0; n <= cfg.n_max; ++n)
      for (int m = 0; m <= cfg.n_max; ++m)
        for (int l = 0; l <= cfg.n_max; ++l) {
          if (n * m * l > 16 || n * m * l > model.max_level() || n * m > model.max_level() ||
              m * l > model.max_level())
            continue;
          const auto xs = pick_elements(elems[n], cfg.samples, rng);
          const auto ys = pick_elements(elems[m], cfg.samples, rng);
          const auto zs = pick_elements(elems[l], cfg.samples, rng);
          std::uniform_int_distribution<std::size_t> px(0, xs.empty() ? 0 : xs.size() - 1);
          std::uniform_int_distribution<std::size_t> py(0, ys.empty() ? 0 : ys.size() - 1);
          std::uniform_int_distribution<std::size_t> pz(0, zs.empty() ? 0 : zs.size() - 1);
          if (xs.empty() || ys.empty() || zs.empty()) continue;
          const std::uint64_t total =
              static_cast<std::uint64_t>(xs.size()) * ys.size() * zs.size();
          const bool exhaust = total <= static_cast<std::uint64_t>(cfg.samples);
          const int draws = exhaust ? 0 : cfg.samples;
          auto check_one = [&](const Element& x, const Element& y, const Element& z) {
            ++entry.checked;
            const auto lhs = model.mult(model.mult(x, y), z);
            const auto rhs = model.mult(x, model.mult(y, z));
            if (lhs != rhs)
              entry.record_violation({"x=" + model.render(x) + " y=" + model.render(y) +
                                          " z=" + model.render(z),
                                      model.render(lhs), model.render(rhs)});
          };
          if (exhaust) {
            for (const auto& x : xs)
              for (const auto& y : ys)
                for (const auto& z : zs) check_one(x, y, z);
          } else {
            for (int d = 0; d < draws; ++d) check_one(xs[px(rng)], ys[py(rng)], zs[pz(rng)]);
          }
        }
  }

  // unit laws under [1]∧[m] = [m] = [m]∧[1]
  {
    auto& left = report.entry("unit-left");
    auto& right = report.entry("unit-right");
    const auto one = model.unit();
    for (int m = 0; m <= cfg.n_max; ++m)
      for (const auto& x : elems[m]) {
        ++left.checked;
        const auto lx = model.mult(one, x);
        if (lx != x) left.record_violation({"x=" + model.render(x), model.render(lx), model.render(x)});
        ++right.checked;
        const auto xr = model.mult(x, one);
        if (xr != x) right.record_violation({"x=" + model.render(x), model.render(xr), model.render(x)});
      }
  }

  return report;
}

}  // namespace gring
