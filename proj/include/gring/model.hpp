#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gring/element.hpp"
#include "gring/pointed_map.hpp"

namespace gring {

enum class LawKind { sum, difference };

// A discrete Γ-ring presented levelwise: carriers R[n] with a distinguished
// basepoint, an action of pointed maps, a unit in R[1], and a multiplication
// R[n] ∧ R[m] -> R[nm] under the colex smash identification. Models are
// immutable after construction and all operations are pure.
class GammaRingModel {
 public:
  virtual ~GammaRingModel() = default;

  const std::string& name() const { return name_; }

  // nullopt means the carrier is unbounded.
  virtual std::optional<std::uint64_t> carrier_size(int level) const = 0;

  // Every element of a finite carrier, basepoint first. Throws
  // unsupported_error on unbounded carriers.
  virtual std::vector<Element> enumerate(int level) const;

  virtual Element basepoint(int level) const = 0;
  virtual Element unit() const = 0;
  virtual Element induce(const PointedMap& f, const Element& x) const = 0;
  virtual Element mult(const Element& x, const Element& y) const = 0;

  // Highest level the model can compute at.
  virtual int max_level() const;

  // Finite carriers enumerate fully; unbounded ones return the vectors with
  // entries in [-bound, bound] (clamped at 0 where entries are non-negative).
  virtual std::vector<Element> generated_elements(int level, int bound) const;

  virtual std::string render(const Element& x) const = 0;
  virtual Element parse_element(std::string_view text, int level) const = 0;

  // Candidates forced by law condition 1 for models whose R[2] cannot be
  // searched element by element. nullopt = no shortcut.
  virtual std::optional<std::vector<Element>> law_candidates(LawKind kind) const;

 protected:
  explicit GammaRingModel(std::string name) : name_(std::move(name)) {}
  void require_level(const Element& x, int level, const char* where) const;
  int checked_product_level(int n, int m, const char* where) const;

 private:
  std::string name_;
};

// Left-associated iterated multiplication; power(x, 0) is the unit.
Element power(const GammaRingModel& model, const Element& x, int k);

std::unique_ptr<GammaRingModel> make_hn_model();
std::unique_ptr<GammaRingModel> make_hz_model();
std::unique_ptr<GammaRingModel> make_sphere_model();

// Parses the model spec grammar:
//   hn | hz | sphere | hmod:<n> | end:<d1,d2,...> | ring:<file> |
//   monoid:<file> | table:<file>
std::unique_ptr<GammaRingModel> make_model(const std::string& spec);

}  // namespace gring
