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

#ifndef LCMLAT_CONDITIONS_HPP_
#define LCMLAT_CONDITIONS_HPP_

// Combinatorial predicates on (hyper)graphs that predict properties of the
// lcm-lattice of the edge ideal without building it. Edge references in the
// evidence are 0-based positions in Hypergraph::edges(); vertices are 1-based.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monomial.hpp"

namespace lcmlat {

enum class ConditionStatus { kHolds, kFails, kHypothesisNotMet };

const char* to_string(ConditionStatus status);

struct ConditionVerdict {
  std::string condition;
  ConditionStatus status = ConditionStatus::kFails;

  // Evidence; which fields are populated depends on the condition.
  std::vector<std::pair<std::size_t, std::uint32_t>> private_vertices;
  std::optional<std::size_t> offending_edge;
  std::optional<std::size_t> uniformity;
  std::vector<std::string> satisfied_by;  // predicts_modular: "a", "b"
  std::vector<std::uint32_t> path;
  std::vector<std::size_t> triplet;

  bool holds() const { return status == ConditionStatus::kHolds; }
};

/// Every edge owns a vertex that lies in no other edge. Evidence: the
/// smallest such vertex per edge, or the first edge without one.
ConditionVerdict private_vertex_check(const Hypergraph& h);

/// H is k-uniform with k = n - 1.
ConditionVerdict uniform_n_minus_1_check(const Hypergraph& h);

/// Private-vertex condition OR k = n - 1, for k-uniform H with more than two
/// edges; fewer edges give kHypothesisNotMet. Non-uniform input throws
/// kPrecondition.
ConditionVerdict predicts_modular(const Hypergraph& h);

/// Path x1-x2-x3-x4 on distinct vertices with deg(x1) = deg(x4) = 1; the
/// lexicographically first one is reported. Requires a connected graph.
ConditionVerdict degree1_path_check(const Hypergraph& g);

/// Edges (e1, e2, e3) with e1 and e3 each meeting e2, e2 covered by e1 u e3,
/// and neither e1 nor e3 meeting any edge besides e2. Requires uniformity.
ConditionVerdict blocking_triplet_check(const Hypergraph& h);

/// A 4-vertex set inducing exactly a path with three edges, reported in path
/// order. Requires a connected graph.
ConditionVerdict induced_p4_check(const Hypergraph& g);

/// Dispatch by name; names as in condition_names().
ConditionVerdict check_condition(const Hypergraph& h, const std::string& name);
const std::vector<std::string>& condition_names();

/// Re-checks a verdict's evidence against the hypergraph.
bool evidence_is_valid(const Hypergraph& h, const ConditionVerdict& verdict);

}  // namespace lcmlat

#endif  // LCMLAT_CONDITIONS_HPP_
