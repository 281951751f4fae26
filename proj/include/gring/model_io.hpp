#pragma once

#include <nlohmann/json.hpp>

#include "gring/finite_ring.hpp"
#include "gring/model.hpp"

namespace gring {

// Table-backed model: explicit carriers, generator action tables and
// multiplication tables up to a level bound. Arbitrary induced maps are
// computed by factoring into generators, so functoriality of the tables is
// a checked property rather than an assumption.
//
// Document layout ("gamma-table/1"):
//   format, name, max_level, carriers (sizes for levels 0..max_level),
//   unit (index into carrier 1),
//   transpositions/restrictions/summings/degeneracies: per-level lists of
//   index rows, and mult: "nxm"-keyed flat blocks of size |R[n]|*|R[m]|.
std::unique_ptr<GammaRingModel> load_table_model(const nlohmann::json& doc, std::string name);

// Transcribes any model with finite carriers into a table document.
nlohmann::ordered_json export_table_document(const GammaRingModel& model, int n_max);

// "gamma-ring/1": size, zero, one, names (optional), add, mul.
FiniteRing ring_from_json(const nlohmann::json& doc, const std::string& label);
// "gamma-monoid/1": elements, unit, table (entries are names or indices).
FiniteMonoid monoid_from_json(const nlohmann::json& doc, const std::string& label);

nlohmann::json load_json_file(const std::string& path);

}  // namespace gring
