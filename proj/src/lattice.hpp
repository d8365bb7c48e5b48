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

#ifndef LCMLAT_LATTICE_HPP_
#define LCMLAT_LATTICE_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monomial.hpp"

namespace lcmlat {

using Index = std::uint32_t;

/// Size caps shared by constructions; every one is overridable.
struct Limits {
  std::size_t max_generators = 16;
  std::size_t max_lattice = 65536;
  std::size_t max_product = 250000;
};

/// A finite bounded lattice given by dense join and meet tables over element
/// indices 0..size-1. The order is recovered as a <= b iff a v b == b.
class FiniteLattice {
 public:
  /// Builds the lattice of a finite order. Throws kInvalidArgument when `leq`
  /// is not a partial order or some pair lacks a unique join or meet.
  static FiniteLattice from_order(
      std::size_t size, const std::function<bool(Index, Index)>& leq,
      std::vector<std::string> labels = {});

  /// Trusts the tables; `validate()` rechecks the lattice axioms.
  FiniteLattice(std::size_t size, std::vector<Index> join,
                std::vector<Index> meet, std::vector<std::string> labels);

  std::size_t size() const noexcept { return size_; }
  Index bottom() const noexcept { return bottom_; }
  Index top() const noexcept { return top_; }

  Index join(Index a, Index b) const { return join_[a * size_ + b]; }
  Index meet(Index a, Index b) const { return meet_[a * size_ + b]; }
  bool leq(Index a, Index b) const { return join(a, b) == b; }
  bool less(Index a, Index b) const { return a != b && leq(a, b); }
  bool comparable(Index a, Index b) const { return leq(a, b) || leq(b, a); }

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::string label(Index a) const;

  /// Elements covering the bottom.
  std::vector<Index> atoms() const;

  /// Throws kInternal describing the first violated lattice axiom.
  void validate() const;

 private:
  std::size_t size_;
  std::vector<Index> join_;
  std::vector<Index> meet_;
  std::vector<std::string> labels_;
  Index bottom_ = 0;
  Index top_ = 0;
};

/// Checked table lookups; throw kInvalidArgument on a bad index.
Index join_of(const FiniteLattice& lattice, Index a, Index b);
Index meet_of(const FiniteLattice& lattice, Index a, Index b);

/// The lcm-lattice of a monomial ideal. Element 0 is the unit (the bottom),
/// the rest follow canonical_less; `atoms[j]` is the element index of the
/// j-th minimal generator of `ideal`.
struct LcmLattice {
  MonomialIdeal ideal;
  std::vector<Monomial> elements;
  std::vector<Index> atoms;
  FiniteLattice lattice;

  std::optional<Index> index_of(const Monomial& m) const;
};

/// Join-closure of the generators plus the unit, with dense tables.
LcmLattice build_lcm_lattice(const MonomialIdeal& ideal,
                             const Limits& limits = {});

struct Interval {
  FiniteLattice lattice;
  /// source[i] is the index in the parent lattice of interval element i.
  std::vector<Index> source;
};

/// The sublattice [x, y]; throws kInvalidArgument unless x <= y.
Interval interval(const FiniteLattice& lattice, Index x, Index y);

/// Componentwise product; element (a, b) has index a * |L2| + b.
FiniteLattice product(const FiniteLattice& first, const FiniteLattice& second,
                      const Limits& limits = {});

/// Subsets of {1..rank} under inclusion; element index is the bitmask.
FiniteLattice boolean_lattice(std::size_t rank, const Limits& limits = {});
/// Totally ordered lattice 0 < 1 < ... < length-1.
FiniteLattice chain_lattice(std::size_t length);
/// N5: 0 < x < y < 1 with a incomparable to x and y.
FiniteLattice pentagon_lattice();
/// M3: 0 < a, b, c < 1 with a, b, c pairwise incomparable.
FiniteLattice diamond_lattice();

/// Cover pairs (a, b): a < b with nothing strictly between, sorted.
std::vector<std::pair<Index, Index>> hasse_edges(const FiniteLattice& lattice);

/// Length of the longest chain from the bottom to each element.
std::vector<std::size_t> ranks(const FiniteLattice& lattice);

/// A join- and meet-preserving bijection first -> second, if one exists.
std::optional<std::vector<Index>> is_isomorphic(const FiniteLattice& first,
                                                const FiniteLattice& second);

/// True iff `mapping` is a bijection preserving join and meet.
bool is_lattice_isomorphism(const FiniteLattice& first,
                            const FiniteLattice& second,
                            const std::vector<Index>& mapping);

}  // namespace lcmlat

#endif  // LCMLAT_LATTICE_HPP_
