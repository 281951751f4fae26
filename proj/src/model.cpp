#include "gring/model.hpp"

#include <limits>

#include "gring/errors.hpp"

namespace gring {

std::vector<Element> GammaRingModel::enumerate(int) const {
  throw unsupported_error(name() + ": carrier is unbounded, enumeration is not supported");
}

int GammaRingModel::max_level() const { return std::numeric_limits<int>::max(); }

std::vector<Element> GammaRingModel::generated_elements(int level, int) const {
  return enumerate(level);
}

std::optional<std::vector<Element>> GammaRingModel::law_candidates(LawKind) const {
  return std::nullopt;
}

void GammaRingModel::require_level(const Element& x, int level, const char* where) const {
  if (x.level != level)
    throw input_error(name() + ": " + where + ": element has level " + std::to_string(x.level) +
                      ", expected " + std::to_string(level));
}

int GammaRingModel::checked_product_level(int n, int m, const char* where) const {
  const std::int64_t prod = static_cast<std::int64_t>(n) * m;
  if (prod > (1 << 22))
    throw unsupported_error(name() + ": " + where + ": level " + std::to_string(prod) +
                            " is too large to compute with");
  if (prod > max_level())
    throw unsupported_error(name() + ": " + where + ": level " + std::to_string(prod) +
                            " exceeds the model bound " + std::to_string(max_level()));
  return static_cast<int>(prod);
}

Element power(const GammaRingModel& model, const Element& x, int k) {
  if (k < 0) throw input_error("power: negative exponent");
  if (k == 0) return model.unit();
  Element acc = x;
  for (int c = 2; c <= k; ++c) acc = model.mult(acc, x);
  return acc;
}

}  // namespace gring
