#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <map>

#include "gring/map_builder.hpp"

namespace gring {

using Int = std::int64_t;
using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<Int, Eigen::Dynamic, 1>;

// left * input * right = diag(diagonal), with unimodular transforms and
// d1 | d2 | ... (zeros last). Exact integer arithmetic throughout.
struct SmithNormalForm {
  std::vector<Int> diagonal;
  IntMatrix left, right;
};

SmithNormalForm smith_normal_form(const IntMatrix& input);

// Exact integer determinant (fraction-free elimination).
Int determinant(const IntMatrix& m);

// The cokernel presentation of π₀R: generators are the nonbasepoint
// elements of R[1]; each nonbasepoint x in R[2] contributes the relation
// [p2_2(x)] + [p2_1(x)] - [s2_121(x)] with basepoint terms dropped.
struct AbelianPresentation {
  std::vector<Element> generators;
  IntMatrix relations;       // rows = relations, columns = generators
  SmithNormalForm snf;       // of relationsᵀ
  std::vector<Int> factors;  // padded to #generators; 0 marks a free summand
  std::vector<Int> unit_class;
  bool unit_class_is_basepoint_class = false;

  // Normal-form coordinates in ⊕ Z/d_i (free coordinates unreduced).
  std::vector<Int> class_of(const Element& x) const;

  // The factors different from 1, describing the group up to unit summands.
  std::vector<Int> nontrivial_factors() const;

 private:
  friend AbelianPresentation pi0(const GammaRingModel& model);
  std::map<Element, int> index_;
  Element basepoint_;
};

AbelianPresentation pi0(const GammaRingModel& model);

// Whether a lands in the unit component: class_of(a) = class_of(unit).
bool is_strict(const AbelianPresentation& pres, const Element& a);

struct LawHom {
  Element a;
  bool invertible = false;
  bool left_invertible = false;
  bool right_invertible = false;
  bool strict = false;
};

// All a in R[1] with a·r1 = r2·a, with two-sided invertibility decided by
// exhaustive search and strictness via the π₀ class map.
std::vector<LawHom> law_homomorphisms(const GammaRingModel& model,
                                      const AbelianPresentation& pres, const Element& r1,
                                      const Element& r2);

// Difference laws partitioned into isomorphism and strict-isomorphism
// classes, with connecting elements, the law <-> map bijection and the
// conjugation/intertwiner transport checks.
struct LawClassification {
  std::vector<FoundLaw> laws;
  std::vector<int> iso_class;     // class id per law, -1 never occurs
  std::vector<int> strict_class;
  struct Related {
    int from = 0, to = 0;
    Element witness;
    bool strict = false;
  };
  std::vector<Related> related;
  std::vector<Element> units;
  std::vector<Element> strict_units;
  CheckReport checks;
};

LawClassification classify(const GammaRingModel& model, int k_max);

}  // namespace gring
