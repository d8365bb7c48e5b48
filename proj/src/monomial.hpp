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

#ifndef LCMLAT_MONOMIAL_HPP_
#define LCMLAT_MONOMIAL_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lcmlat {

using Exponent = std::uint32_t;

/// Largest exponent accepted anywhere in the library.
inline constexpr Exponent kMaxExponent = Exponent{1} << 16;

/// A monomial x_1^{e_1} ... x_n^{e_n} stored as its exponent vector. The
/// all-zero vector is the unit 1, which doubles as the bottom of every
/// lcm-lattice.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<Exponent> exponents);

  static Monomial unit(std::size_t dimension);
  /// Square-free monomial on the given 0-based variable indices.
  static Monomial square_free(std::size_t dimension,
                              std::span<const std::size_t> variables);

  std::size_t dimension() const noexcept { return exponents_.size(); }
  Exponent operator[](std::size_t i) const { return exponents_[i]; }
  std::span<const Exponent> exponents() const noexcept { return exponents_; }

  bool is_unit() const noexcept;
  bool is_square_free() const noexcept;
  std::uint64_t degree() const noexcept;
  /// 0-based indices of the variables with positive exponent.
  std::vector<std::size_t> support() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> exponents_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// Componentwise maximum. Throws kDimensionMismatch on unequal lengths.
Monomial lcm(const Monomial& a, const Monomial& b);
/// True iff every exponent of `a` is at most the matching exponent of `b`.
bool divides(const Monomial& a, const Monomial& b);

/// Canonical element order used for lattice indices: ascending total degree,
/// ties broken so that heavier leading variables come first (x1x2x3 before
/// x2x3x4).
bool canonical_less(const Monomial& a, const Monomial& b);

/// Drops duplicates and every generator divisible by another one; survivors
/// keep their input order. Rejects empty input and unit generators.
std::vector<Monomial> minimalize(std::span<const Monomial> generators);

/// A monomial ideal held by its minimal generating set.
class MonomialIdeal {
 public:
  /// Minimalizes `generators` and checks their dimension.
  MonomialIdeal(std::size_t ring_dimension, std::vector<Monomial> generators);

  std::size_t ring_dimension() const noexcept { return ring_dimension_; }
  const std::vector<Monomial>& generators() const noexcept {
    return generators_;
  }
  std::size_t size() const noexcept { return generators_.size(); }
  bool is_square_free() const noexcept;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::size_t ring_dimension_;
  std::vector<Monomial> generators_;
};

/// Hypergraph on vertices 1..n. Edges are stored as sorted vertex lists in
/// input order; no edge may contain another.
class Hypergraph {
 public:
  Hypergraph(std::size_t vertex_count,
             std::vector<std::vector<std::uint32_t>> edges);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  const std::vector<std::vector<std::uint32_t>>& edges() const noexcept {
    return edges_;
  }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  /// Common edge cardinality, if all edges share one.
  std::optional<std::size_t> uniformity() const;
  bool is_graph() const { return uniformity() == std::size_t{2}; }
  std::size_t degree(std::uint32_t vertex) const;
  /// Connectivity over all n vertices, isolated ones included.
  bool is_connected() const;
  bool edge_contains(std::size_t edge, std::uint32_t vertex) const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  std::size_t vertex_count_;
  std::vector<std::vector<std::uint32_t>> edges_;
};

/// One square-free generator per edge, in edge order.
MonomialIdeal edge_ideal(const Hypergraph& hypergraph);

/// Variable bookkeeping for a polarization: variable i (0-based) of the source
/// ring expands into slot_counts[i] square-free variables.
class PolarizationMap {
 public:
  PolarizationMap(std::size_t source_dimension,
                  std::vector<Exponent> slot_counts);

  std::size_t source_dimension() const noexcept { return source_dimension_; }
  std::size_t polarized_dimension() const noexcept { return total_; }
  const std::vector<Exponent>& slot_counts() const noexcept {
    return slot_counts_;
  }

  /// Index of x_{i,k} in the polarized ring; `variable` is 0-based and
  /// `slot` is 1-based as in the usual x_{i1}, ..., x_{i a_i} naming.
  std::size_t polarized_index(std::size_t variable, Exponent slot) const;
  /// (source variable, slot) for a polarized index.
  std::pair<std::size_t, Exponent> source_of(std::size_t polarized) const;

  Monomial polarize(const Monomial& m) const;
  /// Inverse of polarize on monomials whose slots form prefixes; in general
  /// this counts the occupied slots per source variable.
  Monomial depolarize(const Monomial& m) const;

 private:
  std::size_t source_dimension_;
  std::vector<Exponent> slot_counts_;
  std::vector<std::size_t> offsets_;
  std::size_t total_ = 0;
};

struct Polarization {
  MonomialIdeal ideal;
  PolarizationMap map;
};

Polarization polarize(const MonomialIdeal& ideal);

/// Text form: factors `x<i>` or `x<i>^<e>` joined by `*`, 1-based indices;
/// the unit prints as `1`.
std::string to_string(const Monomial& m);
/// Inverse of to_string for a ring of the given dimension. Repeated factors
/// multiply (x1*x1 == x1^2). Throws kParse on malformed text.
Monomial parse_monomial(std::string_view text, std::size_t dimension);

}  // namespace lcmlat

#endif  // LCMLAT_MONOMIAL_HPP_
