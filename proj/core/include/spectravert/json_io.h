// Copyright 2026 The Spectravert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON forms of the library's values. Rationals are always strings
// ("-3/4"); matrices are arrays of rows. Readers accept integers where a
// rational is expected.

#ifndef SPECTRAVERT_JSON_IO_H_
#define SPECTRAVERT_JSON_IO_H_

#include <nlohmann/json.hpp>

#include "spectravert/exactla.h"
#include "spectravert/normalcone.h"
#include "spectravert/spectra.h"
#include "spectravert/strictcompl.h"
#include "spectravert/vertices.h"

namespace spectravert {

using Json = nlohmann::ordered_json;

Json to_json(const Rat& r);
Json to_json(const Vec& v);
Json to_json(const SymMat& m);
Json to_json(const Spectrahedron& c);
Json to_json(const NormalConeReport& r);
Json to_json(const StrictComplCertificate& cert);
Json to_json(const SearchTrace& trace);
Json to_json(const RelintVerdict& verdict);
Json to_json(const PolarVerdict& verdict);
Json to_json(const VertexCatalog& catalog);
Json to_json(const NegativeWitness& witness);
Json to_json(const SuiteReport& report);

// Readers throw InvalidArgument on malformed input.
Rat rat_from_json(const Json& j);
Vec vec_from_json(const Json& j);
// Rows must be square and symmetric.
SymMat sym_from_json(const Json& j, const Labels& labels);
// Runs validate() on the result.
Spectrahedron spectrahedron_from_json(const Json& j);
// Either a bare matrix or {"X": matrix}, on the given labels.
SymMat point_from_json(const Json& j, const Labels& labels);
StrictComplCertificate certificate_from_json(const Json& j, const Labels& labels);

}  // namespace spectravert

#endif  // SPECTRAVERT_JSON_IO_H_
