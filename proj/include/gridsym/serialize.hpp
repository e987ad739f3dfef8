#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "gridsym/configuration.hpp"
#include "gridsym/digitize.hpp"
#include "gridsym/ising.hpp"
#include "gridsym/moves.hpp"
#include "gridsym/symmetry.hpp"
#include "gridsym/synth.hpp"

namespace gridsym {

// Configuration <-> {"n": int, "cells": [[0|1,...],...]} (top row first).
nlohmann::json to_json(const Configuration& config);
Configuration configuration_from_json(const nlohmann::json& j);

// MoveSequence <-> [{"op":"commute_cols","i":1}, {"op":"cyclic_cols","dir":"fwd"},
//                   {"op":"stabilize","col":2,"row":3}, ...]
nlohmann::json to_json(const MoveSequence& seq);
MoveSequence move_sequence_from_json(const nlohmann::json& j);

// MarkedGrid <-> {"n","l","origin":[x0,y0],"cells","betti0","betti1","dropped_points"}.
// A bare configuration object (just n + cells) also loads, for hand fixtures.
nlohmann::json to_json(const MarkedGrid& grid);
MarkedGrid marked_grid_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SymmetryReport& report);

// IsingParams <-> {"n": int | "RxC", "J": num | {"default":num,"edges":[[r1,c1,r2,c2,J],...]},
//                  "Gamma","tau","boundary":"open"|"periodic"}
nlohmann::json to_json(const IsingParams& params);
IsingParams ising_params_from_json(const nlohmann::json& j);

// GeneratorSpec <-> {"kind":"gaussian","mean":[..],"cov":[[..],[..]],"count":..,
//                    "noise_sigma":..,"seed":..} and the gamma / mixture /
// ring-scene equivalents.
nlohmann::json to_json(const GeneratorSpec& spec);
GeneratorSpec generator_spec_from_json(const nlohmann::json& j);

// Point CSV: header "x,y", one decimal pair per line.
void write_points_csv(std::ostream& out, const PointCloud& cloud);
PointCloud read_points_csv(std::istream& in);

// File helpers; failures surface as IoError.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);
nlohmann::json read_json_file(const std::string& path);

}  // namespace gridsym
