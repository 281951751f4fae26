#pragma once

#include "gring/finite_ring.hpp"
#include "gring/model.hpp"

namespace gring {

// Levelwise vectors over a validated finite ring; hmod:<n> and end:<...>
// are ring models over Z/n and the endomorphism ring respectively.
std::unique_ptr<GammaRingModel> make_ring_model(FiniteRing ring, std::string name);

// R[k] = {*} ∪ M × {1..k} for a finite monoid M.
std::unique_ptr<GammaRingModel> make_monoid_model(FiniteMonoid monoid, std::string name);

}  // namespace gring
