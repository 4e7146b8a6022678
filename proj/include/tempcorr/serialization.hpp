// Copyright 2026 The tempcorr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TEMPCORR_SERIALIZATION_HPP
#define TEMPCORR_SERIALIZATION_HPP

#include <string>

#include <json.hpp>

#include "tempcorr/certify.hpp"
#include "tempcorr/correlations.hpp"
#include "tempcorr/quantum.hpp"
#include "tempcorr/witness.hpp"

namespace tempcorr {

/// Insertion-ordered JSON so emitted files are stable and readable.
using Json = nlohmann::ordered_json;

// Every *_from_json throws Error(kSchema) naming the offending field path,
// including when the data parse but violate a physical invariant.

/// Row-major flat array of [re, im] pairs. Nested rows are accepted on input.
Json to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j, const std::string& path = "$");

/// { "dim", "initial", "instruments": [ { "kraus": [ [matrix...] per outcome ] } ] }
Json to_json(const SystemModel& sys);
SystemModel system_from_json(const Json& j, const std::string& path = "$");

/// { "L", "R", "S", "table": { "<settings digits>": [probabilities] } }
Json to_json(const Behavior& b);
Behavior behavior_from_json(const Json& j, const std::string& path = "$");

/// { "L", "R", "S", "assignment": { "t=2;x=01;a=0": outcome, ... } }
Json to_json(const DeterministicVertex& v);
DeterministicVertex vertex_from_json(const Json& j, const std::string& path = "$");

/// { "L", "R", "S", "terms": [ { "weight", "vertex" } ] }
Json to_json(const ConvexDecomposition& d);
ConvexDecomposition decomposition_from_json(const Json& j, const std::string& path = "$");

/// { "name", "L", "R", "S", "terms": [ { "a": "01", "x": "10", "coeff": 1.0 } ] }
Json to_json(const WitnessFunctional& f);
WitnessFunctional functional_from_json(const Json& j, const std::string& path = "$");

/// { "initial": [x,y,z], "post": [[a0x0, a0x1], [a1x0, a1x1]], "effects": [ {"a","b","axis"} ] }
Json to_json(const QubitStrategy& s);
QubitStrategy strategy_from_json(const Json& j, const std::string& path = "$");

Json to_json(const CertificationReport& r);

/// Reads and parses a JSON file; throws Error(kSchema) on I/O or syntax errors.
Json read_json_file(const std::string& path);
/// Writes with two-space indentation and a trailing newline.
void write_json_file(const std::string& path, const Json& j);

}  // namespace tempcorr

#endif  // TEMPCORR_SERIALIZATION_HPP
