// Copyright 2026 The lattice-cft Authors
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

#ifndef LATTICE_CFT_IO_HPP_
#define LATTICE_CFT_IO_HPP_

#include <cstdint>
#include <string>
#include <string_view>

#include <Eigen/Dense>
#include <json.hpp>

#include "lattice_cft/modular.hpp"
#include "lattice_cft/surface.hpp"
#include "lattice_cft/theta.hpp"

namespace lcft::io {

using Json = nlohmann::json;

/// Parse JSON text; failures become Error{Parse}.
Json parse_json(std::string_view text);

/// Inline JSON if the argument starts with '[' or '{', otherwise the contents
/// of the named file.  Throws Error{Parse} or Error{InvalidInput}.
Json load_json_argument(const std::string& arg);

/// Inline JSON, a file, or a bundled lattice name.  Accepts a bare Gram matrix
/// or {"gram": ...}.
IntMatrix parse_lattice(const std::string& arg);
IntMatrix gram_from_json(const Json& j);

/// {"components": [{"genus": g, "boundaries": [{"id": .., "orientation": "in"|"out"}]}]}
/// or a single component object.
Surface surface_from_json(const Json& j);
Json to_json(const Surface& s);

/// {"x": [1, 0], "y": 2, ...}; scalars are allowed for cyclic groups.
BlockLabel labels_from_json(const Json& j, const DiscriminantGroup& disc);
GroupElement element_from_json(const Json& j, const DiscriminantGroup& disc);

/// {"pieces": <surface>, "matching": [["out_id", "in_id"], ...]}
Split split_from_json(const Json& j);

/// Entries are numbers or [re, im] pairs.
Eigen::MatrixXcd complex_matrix_from_json(const Json& j);
Eigen::VectorXcd complex_vector_from_json(const Json& j);
Json to_json(const Eigen::MatrixXcd& m);  // {"re": [[..]], "im": [[..]]}

/// "a,b" with ';'-separated entries per vector, fractions allowed
/// ("1/2;0,0;1/2"), or a JSON object {"a": [..], "b": [..]}.
ThetaSpec characteristic_from_string(const std::string& text, int genus);

/// 64-bit FNV-1a, as 16 hex digits.
std::string fnv1a_hex(std::string_view bytes);

/// {"format": 1, "command", "inputs_digest", "seed", "results"}.
Json report(const std::string& command, const Json& inputs, std::uint64_t seed, Json results);

Json error_report(const std::string& kind, const std::string& detail);

}  // namespace lcft::io

#endif  // LATTICE_CFT_IO_HPP_
