// Copyright 2026 The lcmlat Authors
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

#ifndef LCMLAT_IO_HPP_
#define LCMLAT_IO_HPP_

// File formats and JSON/DOT renderings.
//
// Ideal files:
//   # comment
//   ring 6
//   x1*x2*x3
//   x2*x3*x4
//
// Hypergraph files: {"n": 6, "edges": [[1,2,3],[2,3,4],[4,5,6]]}

#include <string>
#include <string_view>

#include <json.hpp>

#include "conditions.hpp"
#include "lattice.hpp"
#include "monomial.hpp"
#include "properties.hpp"

namespace lcmlat {

using Json = nlohmann::json;

MonomialIdeal parse_ideal(std::string_view text);
std::string format_ideal(const MonomialIdeal& ideal);
Hypergraph parse_hypergraph(std::string_view json_text);
Hypergraph hypergraph_from_json(const Json& j);

/// Whole-file read; throws kIo when the file cannot be opened.
std::string read_file(const std::string& path);
MonomialIdeal read_ideal_file(const std::string& path);
Hypergraph read_hypergraph_file(const std::string& path);

Json to_json(const MonomialIdeal& ideal);
Json to_json(const Hypergraph& h);
Json to_json(const Polarization& p);

/// {"elements": [...], "atoms": [...], "covers": [[a,b], ...]}
Json to_json(const LcmLattice& lattice);
Json to_json(const FiniteLattice& lattice);

/// Hasse diagram, one node per element keyed by its monomial string, edges
/// from each element to its upper covers, ranks grouped by total degree.
std::string to_dot(const LcmLattice& lattice);

/// {"property": ..., "holds": ..., "witness": {...}}; generator subsets are
/// labelled through `atoms`.
Json to_json(const PropertyVerdict& verdict, const FiniteLattice& lattice,
             std::span<const Index> atoms);
Json to_json(const PropertyVerdict& verdict, const LcmLattice& lattice);
Json to_json(const ConditionVerdict& verdict, const Hypergraph& h);

}  // namespace lcmlat

#endif  // LCMLAT_IO_HPP_
