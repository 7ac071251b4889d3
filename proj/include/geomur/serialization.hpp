// Copyright 2026 The geomur Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>

#include <json.hpp>

#include "geomur/states.hpp"
#include "geomur/uncertainty.hpp"

namespace geomur {

// Fixture format. Complex numbers are [re, im] pairs; matrices are arrays of
// rows (row-major). Observable eigenvectors are the matrix columns.
//
//   {"type": "density_matrix", "dim": N, "matrix": [[[re, im], ...], ...]}
//   {"type": "pure_state", "dim": N, "amplitudes": [[re, im], ...]}
//   {"type": "observable", "dim": N, "eigenbasis": [[[re, im], ...], ...]}
//
// Parse failures throw Error(ParseError); invalid physics (trace, norm,
// orthonormality) throws the validating constructor's error.

nlohmann::json to_json(const ComplexMatrix &m);
nlohmann::json to_json(const DensityMatrix &rho);
nlohmann::json to_json(const PureState &psi);
nlohmann::json to_json(const ProjectiveObservable &obs);
/// Exactly the seven URReport fields.
nlohmann::json to_json(const URReport &report);

ComplexMatrix matrix_from_json(const nlohmann::json &j);
PureState pure_state_from_json(const nlohmann::json &j);
/// Accepts a density_matrix or a pure_state document.
DensityMatrix density_matrix_from_json(const nlohmann::json &j);
ProjectiveObservable observable_from_json(const nlohmann::json &j);
URReport ur_report_from_json(const nlohmann::json &j);

nlohmann::json read_json_file(const std::string &path);
void write_text_file(const std::string &path, const std::string &text);

} // namespace geomur
