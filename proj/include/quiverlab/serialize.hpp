#pragma once

#include "json.hpp"
#include "quiverlab/kempf_ness.hpp"
#include "quiverlab/quiver_core.hpp"

namespace quiverlab {

// Insertion-ordered JSON keeps output byte-identical across runs.
using Json = nlohmann::ordered_json;

// Representation <-> JSON with explicit shape metadata. Complex matrices are
// row-major arrays of [re, im]; exact matrices use rational strings.
Json rep_to_json(const NumericRep& rep);
NumericRep rep_from_json(const Json& j);
Json rep_to_json(const ExactRep& rep);
ExactRep exact_rep_from_json(const Json& j);

Json report_to_json(const SolveReport& report);
SolveReport report_from_json(const Json& j);

}  // namespace quiverlab
