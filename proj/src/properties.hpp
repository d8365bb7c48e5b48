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

#ifndef LCMLAT_PROPERTIES_HPP_
#define LCMLAT_PROPERTIES_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lattice.hpp"

namespace lcmlat {

/// One named part of a witness. Element entries carry lattice indices;
/// generator-subset entries carry positions into the ideal's generators
/// (equivalently, into the atom list the check was given).
struct WitnessEntry {
  enum class Kind { kElement, kGeneratorSubset };

  std::string role;
  Kind kind = Kind::kElement;
  std::vector<Index> indices;
};

struct PropertyVerdict {
  std::string property;
  bool holds = false;
  std::vector<WitnessEntry> witness;

  /// First entry with the given role; throws if absent.
  const WitnessEntry& entry(const std::string& role) const;
  Index element(const std::string& role) const;
};

/// Pentagon sublattice: bottom < x < y < top, with `a` beside the chain.
struct PentagonWitness {
  Index bottom, a, x, y, top;
};

/// Diamond sublattice: three pairwise incomparable middles.
struct DiamondWitness {
  Index bottom, a, b, c, top;
};

/// A failing instance of a three-variable law with both evaluated sides.
struct LawViolation {
  Index x, y, z, lhs, rhs;
};

/// Lattices up to this size get the O(|L|^3) definitional sweeps.
inline constexpr std::size_t kSweepLimit = 400;

/// First (x, y, z) with x <= z and x v (y ^ z) != (x v y) ^ z, looping x,
/// then y, then z in index order.
std::optional<LawViolation> modular_law_violation(const FiniteLattice& lattice);
/// First (x, y, z) with x ^ (y v z) != (x ^ y) v (x ^ z).
std::optional<LawViolation> distributive_law_violation(
    const FiniteLattice& lattice);

/// Lexicographically first pentagon by (x, y, a).
std::optional<PentagonWitness> find_n5(const FiniteLattice& lattice);
/// Lexicographically first diamond by (a, b, c) with a < b < c.
std::optional<DiamondWitness> find_m3(const FiniteLattice& lattice);

/// Boolean test on the given atoms. Computes both |L| == 2^m and an explicit
/// isomorphism onto the Boolean lattice of rank m and throws kInternal if
/// they disagree. On failure the witness holds two distinct atom subsets with
/// the same join.
PropertyVerdict is_boolean(const FiniteLattice& lattice,
                           std::span<const Index> atoms);
PropertyVerdict is_boolean(const LcmLattice& lattice);
/// Uses the lattice's own atoms (elements covering the bottom).
PropertyVerdict is_boolean(const FiniteLattice& lattice);

/// Runs the definitional sweep when |L| <= sweep_limit, otherwise only the
/// pentagon search.
PropertyVerdict is_modular(const FiniteLattice& lattice,
                           std::size_t sweep_limit = kSweepLimit);
/// Forbidden-sublattice test, cross-checked against the distributive law
/// when |L| <= sweep_limit.
PropertyVerdict is_distributive(const FiniteLattice& lattice,
                                std::size_t sweep_limit = kSweepLimit);

std::vector<Index> complements_of(const FiniteLattice& lattice, Index x);
PropertyVerdict is_complemented(const FiniteLattice& lattice);
/// Intervals are visited by size, then (x, y); the witness is the first
/// non-complemented interval and its first complement-free element.
PropertyVerdict is_relatively_complemented(const FiniteLattice& lattice);

/// Names accepted by check_property, in the fixed `all` order.
const std::vector<std::string>& property_names();
/// Dispatch by name ("boolean", "modular", "distributive", "complemented",
/// "relatively-complemented").
PropertyVerdict check_property(const LcmLattice& lattice,
                               const std::string& name);
PropertyVerdict check_property(const FiniteLattice& lattice,
                               const std::string& name);

/// Closure check: the five elements really form N5 / M3 inside `lattice`.
bool is_valid_pentagon(const FiniteLattice& lattice, const PentagonWitness& w);
bool is_valid_diamond(const FiniteLattice& lattice, const DiamondWitness& w);

/// Re-evaluates a verdict's witness against the raw tables. Generator subsets
/// are resolved through `atoms`.
bool witness_is_valid(const FiniteLattice& lattice,
                      std::span<const Index> atoms,
                      const PropertyVerdict& verdict);
bool witness_is_valid(const LcmLattice& lattice,
                      const PropertyVerdict& verdict);

}  // namespace lcmlat

#endif  // LCMLAT_PROPERTIES_HPP_
