#pragma once

#include <nlohmann/json.hpp>
#include <utility>

#include "oneway/correlation.hpp"
#include "oneway/simulation.hpp"

namespace oneway {

using json = nlohmann::json;

// Shortest decimal round-trip form, identical on every run.
std::string format_double(double v);

// Dense operator wire format: { "dim": d, "re": [[..]], "im": [[..]] },
// row major. Parsing validates the shape and entries.
json dense_to_json(const Matrix& m);
Matrix dense_from_json(const json& j);

// Prepare-and-measure strategy file:
// {
//   "dim": d, "X": [..], "Y": [..], "B": [..],
//   "encode": { "<x>": {"type":"stabilizer","k":K,"j":J}
//             | {"type":"bloch","n":[nx,ny,nz]}
//             | {"type":"matrix","dim":..,"re":..,"im":..} },
//   "decode": { "<y>": {"type":"mub","k":K}
//             | {"type":"povm","effects":[<dense>, ..]} },
//   "post":   { "<y>": [b, ..] }        // optional per question
// }
// Outputs in "post" may be indices into B or labels from B.
std::pair<TaskSpaces, QuantumStrategy> strategy_from_json(const json& j);
json strategy_to_json(const TaskSpaces& s, const QuantumStrategy& q);

// Partition file: { "dim": d, "x_labels": [..], "x_cells": [..],
//                   "y_labels": [..], "y_cells": [..] }.
// Parallel arrays: labels keep file order, cells align by index.
std::pair<TaskSpaces, Partitions> partitions_from_json(const json& j);
json partitions_to_json(const TaskSpaces& s, const Partitions& p);

// Correlation as records; probabilities are "num/den" strings in exact
// mode and shortest-round-trip decimals otherwise.
json correlation_to_json(const Correlation& c);
// CSV with header x,y,b,p in the same convention.
std::string correlation_to_csv(const Correlation& c);

}  // namespace oneway
