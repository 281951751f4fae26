#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <span>

#include "gring/laws.hpp"

namespace gring {

enum class MapVariant { hn, hz };

LawKind law_kind_of(MapVariant variant);

// A pointed map [2^exponent] -> [k] carrying the canonical source element
// (the all-ones vector for hn, the alternating-parity vector for hz) onto a
// given target vector.
struct Witness {
  int exponent = 0;
  PointedMap map;
};

// Minimal exponent with 2^n >= sum of entries; blocks of equal targets in
// order, remainder to the basepoint.
Witness canonical_witness_hn(std::span<const std::int64_t> target);

// Minimal exponent n >= 1 with 2^{n-1} >= max(positive mass, negative mass);
// positive entries consume the plus parity class in increasing order,
// negative entries the minus class, remainder to the basepoint.
Witness canonical_witness_hz(std::span<const std::int64_t> target);

Witness canonical_witness(MapVariant variant, std::span<const std::int64_t> target);

// The value of the source element at a position: always 1 for hn, ±1 by
// parity class for hz.
int source_sign(MapVariant variant, int position);

// Applies a map to the canonical source element in the source ring; f is a
// witness for `target` iff this returns `target`.
std::vector<std::int64_t> witness_image(MapVariant variant, int exponent, const PointedMap& f);

// Every witness with the given exponent. Returns nullopt when the assignment
// enumeration would exceed cost_cap candidates.
std::optional<std::vector<PointedMap>> all_witnesses(MapVariant variant,
                                                     std::span<const std::int64_t> target,
                                                     int exponent,
                                                     std::uint64_t cost_cap = 4'000'000);

// A random valid witness: assignment order is shuffled and same-coordinate
// cancelling pairs are inserted where the parity classes leave room.
PointedMap random_witness(MapVariant variant, std::span<const std::int64_t> target, int exponent,
                          std::mt19937_64& rng);

// The multiplicative map HN -> R or HZ -> R determined by a certified law:
// eval(target) = induce(witness)(law^exponent) at the canonical witness.
// Powers are cached; certification extends on demand for larger witnesses.
class MultiplicativeMap {
 public:
  MultiplicativeMap(const GammaRingModel& model, Element law, MapVariant variant, int k_max);

  const GammaRingModel& model() const { return *model_; }
  const Element& law() const { return law_; }
  MapVariant variant() const { return variant_; }
  const LawCertificate& certificate() const { return certificate_; }

  // law^k, cached; does not extend certification.
  Element power(int k) const;

  Element eval(std::span<const std::int64_t> target) const;

 private:
  void ensure_certified(int k) const;

  const GammaRingModel* model_;
  Element law_;
  MapVariant variant_;
  LawCertificate certificate_;

  struct Cache {
    std::mutex mutex;
    std::map<int, Element> powers;
    int certified_k = 0;
  };
  std::unique_ptr<Cache> cache_;
};

// Certifies the law at k_max and wraps it; throws input_error with the
// failing condition when certification fails.
MultiplicativeMap build_map(const GammaRingModel& model, const Element& law, MapVariant variant,
                            int k_max = 3);

// eval(±1_2); the round trip back to the law. hz variant only.
Element law_from_map(const MultiplicativeMap& phi);

struct VerifyMapConfig {
  int entry_bound = 3;
  int max_len = 3;
  int witness_trials = 10;
  std::uint64_t seed = 0;
};

// Witness independence, naturality, multiplicativity, unit and round trip,
// over all targets within the configured box.
CheckReport verify_map(const MultiplicativeMap& phi, const VerifyMapConfig& config);

// f_a : S -> R picked out by a ∈ R[1]; values[n][i-1] is the image of
// i ∈ S[n], the induced image of a along [1] -> [n], 1 -> i.
struct UnitTransformation {
  Element a;
  std::vector<std::vector<Element>> values;
};
UnitTransformation unit_transformation(const GammaRingModel& model, const Element& a,
                                       int max_level = 3);

// Checks that f_a is natural and that left multiplication by a decomposes
// through it: f_a(i)·x = induce(ι_i ∧ id)(a·x).
CheckReport left_mult_check(const GammaRingModel& model, const Element& a, int samples = 50,
                            std::uint64_t seed = 0);

// All integer vectors of the given length with entries in [lo, hi].
std::vector<std::vector<std::int64_t>> integer_vectors(int length, std::int64_t lo,
                                                       std::int64_t hi);

}  // namespace gring
