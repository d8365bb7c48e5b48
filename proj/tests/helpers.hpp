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

#ifndef LCMLAT_TESTS_HELPERS_HPP_
#define LCMLAT_TESTS_HELPERS_HPP_

// Fixtures and brute-force oracles shared by the unit tests. The oracles are
// deliberately naive and independent of the library's algorithms.

#include <algorithm>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "audit.hpp"
#include "lattice.hpp"
#include "monomial.hpp"

namespace lcmlat::testing {

inline MonomialIdeal ideal(std::size_t dim, std::initializer_list<const char*> gens) {
  std::vector<Monomial> ms;
  for (const char* g : gens) ms.push_back(parse_monomial(g, dim));
  return MonomialIdeal(dim, std::move(ms));
}

inline Hypergraph graph(std::size_t n,
                        std::vector<std::vector<std::uint32_t>> edges) {
  return Hypergraph(n, std::move(edges));
}

inline MonomialIdeal fig3() {
  return ideal(6, {"x1*x2*x3", "x2*x3*x4", "x4*x5*x6"});
}
inline MonomialIdeal fig5() { return ideal(4, {"x1*x2", "x1*x3", "x2*x4"}); }
inline MonomialIdeal tetra() {
  return ideal(4, {"x1*x2*x3", "x1*x2*x4", "x1*x3*x4", "x2*x3*x4"});
}

/// lcm of every subset of the generators, canonically sorted.
inline std::vector<Monomial> subset_lcms(const MonomialIdeal& ideal) {
  const auto& g = ideal.generators();
  std::set<std::vector<Exponent>> seen;
  std::vector<Monomial> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.size()); ++mask) {
    Monomial acc = Monomial::unit(ideal.ring_dimension());
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (mask >> i & 1) acc = lcm(acc, g[i]);
    }
    std::vector<Exponent> key(acc.exponents().begin(), acc.exponents().end());
    if (seen.insert(key).second) out.push_back(acc);
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

inline Index element(const LcmLattice& l, const char* text) {
  const auto i = l.index_of(parse_monomial(text, l.ideal.ring_dimension()));
  if (!i) throw std::runtime_error(std::string("no element ") + text);
  return *i;
}

inline bool brute_modular(const FiniteLattice& l) {
  const auto n = static_cast<Index>(l.size());
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      for (Index z = 0; z < n; ++z)
        if (l.leq(x, z) && l.join(x, l.meet(y, z)) != l.meet(l.join(x, y), z))
          return false;
  return true;
}

inline bool brute_distributive(const FiniteLattice& l) {
  const auto n = static_cast<Index>(l.size());
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      for (Index z = 0; z < n; ++z)
        if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z)))
          return false;
  return true;
}

inline bool brute_complemented(const FiniteLattice& l) {
  const auto n = static_cast<Index>(l.size());
  for (Index x = 0; x < n; ++x) {
    bool found = false;
    for (Index y = 0; y < n && !found; ++y) {
      found = l.meet(x, y) == l.bottom() && l.join(x, y) == l.top();
    }
    if (!found) return false;
  }
  return true;
}

inline bool brute_relatively_complemented(const FiniteLattice& l) {
  const auto n = static_cast<Index>(l.size());
  for (Index lo = 0; lo < n; ++lo) {
    for (Index hi = 0; hi < n; ++hi) {
      if (!l.leq(lo, hi)) continue;
      for (Index x = 0; x < n; ++x) {
        if (!l.leq(lo, x) || !l.leq(x, hi)) continue;
        bool found = false;
        for (Index y = 0; y < n && !found; ++y) {
          found = l.leq(lo, y) && l.leq(y, hi) && l.meet(x, y) == lo &&
                  l.join(x, y) == hi;
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

/// Tries every permutation; only for lattices with at most 9 elements.
inline bool brute_isomorphic(const FiniteLattice& a, const FiniteLattice& b) {
  if (a.size() != b.size()) return false;
  std::vector<Index> p(a.size());
  std::iota(p.begin(), p.end(), Index{0});
  do {
    if (is_lattice_isomorphism(a, b, p)) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

/// Private-vertex condition straight from the definition.
inline bool brute_private_vertex(const Hypergraph& h) {
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    bool own = false;
    for (auto v : h.edges()[i]) {
      bool elsewhere = false;
      for (std::size_t j = 0; j < h.edge_count(); ++j) {
        if (j != i && h.edge_contains(j, v)) elsewhere = true;
      }
      if (!elsewhere) own = true;
    }
    if (!own) return false;
  }
  return true;
}

}  // namespace lcmlat::testing

#endif  // LCMLAT_TESTS_HELPERS_HPP_
