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

#include <doctest.h>

#include "error.hpp"
#include "helpers.hpp"

using namespace lcmlat;
using namespace lcmlat::testing;

namespace {

std::vector<std::string> labels(const LcmLattice& l) {
  std::vector<std::string> out;
  for (const auto& e : l.elements) out.push_back(to_string(e));
  return out;
}

std::set<std::pair<std::string, std::string>> cover_labels(const LcmLattice& l) {
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& [a, b] : hasse_edges(l.lattice)) {
    out.insert({to_string(l.elements[a]), to_string(l.elements[b])});
  }
  return out;
}

}  // namespace

TEST_CASE("three-triangle lattice: elements and covers") {
  const auto l = build_lcm_lattice(fig3());
  CHECK(labels(l) == std::vector<std::string>{
                         "1", "x1*x2*x3", "x2*x3*x4", "x4*x5*x6", "x1*x2*x3*x4",
                         "x2*x3*x4*x5*x6", "x1*x2*x3*x4*x5*x6"});
  CHECK(l.atoms == std::vector<Index>{1, 2, 3});
  CHECK(l.lattice.bottom() == 0);
  CHECK(l.lattice.top() == 6);
  const std::set<std::pair<std::string, std::string>> expected{
      {"1", "x1*x2*x3"},
      {"1", "x2*x3*x4"},
      {"1", "x4*x5*x6"},
      {"x1*x2*x3", "x1*x2*x3*x4"},
      {"x2*x3*x4", "x1*x2*x3*x4"},
      {"x2*x3*x4", "x2*x3*x4*x5*x6"},
      {"x4*x5*x6", "x2*x3*x4*x5*x6"},
      {"x1*x2*x3*x4", "x1*x2*x3*x4*x5*x6"},
      {"x2*x3*x4*x5*x6", "x1*x2*x3*x4*x5*x6"}};
  CHECK(cover_labels(l) == expected);
  l.lattice.validate();
}

TEST_CASE("graph 12-13-24 lattice") {
  const auto l = build_lcm_lattice(fig5());
  CHECK(labels(l) == std::vector<std::string>{"1", "x1*x2", "x1*x3", "x2*x4",
                                              "x1*x2*x3", "x1*x2*x4",
                                              "x1*x2*x3*x4"});
  CHECK(hasse_edges(l.lattice).size() == 9);
}

TEST_CASE("tetrahedron lattice has six elements") {
  const auto l = build_lcm_lattice(tetra());
  CHECK(l.lattice.size() == 6);
  CHECK(l.atoms.size() == 4);
  CHECK(hasse_edges(l.lattice).size() == 8);
}

TEST_CASE("join closure equals subset-lcm enumeration") {
  SplitMix64 rng(2026);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = rng.between(3, 4);
    const std::size_t m = rng.between(1, 6);
    const auto i = random_monomial_ideal(rng, n, m, 3);
    const auto l = build_lcm_lattice(i);
    CHECK(l.elements == subset_lcms(i));
    for (std::size_t j = 0; j < i.size(); ++j) {
      CHECK(l.elements[l.atoms[j]] == i.generators()[j]);
    }
  }
}

TEST_CASE("tables agree with divisibility and lcm") {
  SplitMix64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const auto i = random_monomial_ideal(rng, 3, rng.between(1, 5), 2);
    const auto l = build_lcm_lattice(i);
    const auto n = static_cast<Index>(l.lattice.size());
    for (Index a = 0; a < n; ++a) {
      for (Index b = 0; b < n; ++b) {
        CHECK(l.elements[l.lattice.join(a, b)] == lcm(l.elements[a], l.elements[b]));
        CHECK(l.lattice.leq(a, b) == divides(l.elements[a], l.elements[b]));
        const auto mt = l.elements[l.lattice.meet(a, b)];
        CHECK(divides(mt, l.elements[a]));
        CHECK(divides(mt, l.elements[b]));
        for (Index c = 0; c < n; ++c) {
          if (divides(l.elements[c], l.elements[a]) && divides(l.elements[c], l.elements[b])) {
            CHECK(divides(l.elements[c], mt));
          }
        }
      }
    }
    l.lattice.validate();
  }
}

TEST_CASE("from_order agrees with the lcm-lattice tables") {
  const auto l = build_lcm_lattice(fig3());
  const auto& els = l.elements;
  const auto rebuilt = FiniteLattice::from_order(
      els.size(), [&](Index a, Index b) { return divides(els[a], els[b]); });
  for (Index a = 0; a < els.size(); ++a) {
    for (Index b = 0; b < els.size(); ++b) {
      CHECK(rebuilt.join(a, b) == l.lattice.join(a, b));
      CHECK(rebuilt.meet(a, b) == l.lattice.meet(a, b));
    }
  }
  // Two maximal elements: no join.
  CHECK_THROWS_AS(FiniteLattice::from_order(3, [](Index a, Index b) { return a == b || a == 0; }),
                  Error);
}

TEST_CASE("size caps") {
  Limits tight;
  tight.max_generators = 2;
  CHECK_THROWS_AS(build_lcm_lattice(fig3(), tight), Error);
  tight = Limits{};
  tight.max_lattice = 5;
  try {
    build_lcm_lattice(fig3(), tight);
    FAIL("expected size-limit");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kSizeLimit);
  }
  Limits small_product;
  small_product.max_product = 10;
  CHECK_THROWS_AS(product(chain_lattice(4), chain_lattice(4), small_product), Error);
}

TEST_CASE("named lattices") {
  const auto b3 = boolean_lattice(3);
  CHECK(b3.size() == 8);
  CHECK(b3.join(1, 2) == 3);
  CHECK(b3.meet(6, 3) == 2);
  CHECK(b3.atoms() == std::vector<Index>{1, 2, 4});
  CHECK(hasse_edges(b3).size() == 12);
  CHECK(chain_lattice(4).atoms() == std::vector<Index>{1});
  const auto n5 = pentagon_lattice();
  n5.validate();
  CHECK(n5.size() == 5);
  CHECK(hasse_edges(n5).size() == 5);
  const auto m3 = diamond_lattice();
  m3.validate();
  CHECK(m3.atoms().size() == 3);
  CHECK(hasse_edges(m3).size() == 6);
}

TEST_CASE("product is componentwise") {
  const auto a = chain_lattice(3);
  const auto b = diamond_lattice();
  const auto p = product(a, b);
  p.validate();
  CHECK(p.size() == 15);
  for (Index x = 0; x < p.size(); ++x) {
    for (Index y = 0; y < p.size(); ++y) {
      CHECK(p.join(x, y) == a.join(x / 5, y / 5) * 5 + b.join(x % 5, y % 5));
      CHECK(p.meet(x, y) == a.meet(x / 5, y / 5) * 5 + b.meet(x % 5, y % 5));
    }
  }
  CHECK(brute_isomorphic(product(chain_lattice(2), chain_lattice(2)), boolean_lattice(2)));
}

TEST_CASE("interval sublattice") {
  const auto l = build_lcm_lattice(fig3());
  const auto iv = interval(l.lattice, element(l, "x2*x3*x4"), l.lattice.top());
  CHECK(iv.lattice.size() == 4);
  CHECK(iv.source.front() == element(l, "x2*x3*x4"));
  iv.lattice.validate();
  CHECK_THROWS_AS(interval(l.lattice, element(l, "x1*x2*x3"), element(l, "x4*x5*x6")), Error);
}

TEST_CASE("ranks are longest chains from the bottom") {
  const auto l = build_lcm_lattice(fig3());
  CHECK(ranks(l.lattice) == std::vector<std::size_t>{0, 1, 1, 1, 2, 2, 3});
  CHECK(ranks(pentagon_lattice()) == std::vector<std::size_t>{0, 1, 2, 1, 3});
}

TEST_CASE("isomorphism search matches the permutation oracle") {
  std::vector<FiniteLattice> pool{chain_lattice(5), pentagon_lattice(), diamond_lattice(),
                                  boolean_lattice(2), boolean_lattice(3),
                                  build_lcm_lattice(fig3()).lattice,
                                  build_lcm_lattice(fig5()).lattice,
                                  build_lcm_lattice(tetra()).lattice,
                                  product(chain_lattice(2), chain_lattice(3))};
  for (const auto& a : pool) {
    for (const auto& b : pool) {
      const auto found = is_isomorphic(a, b);
      CHECK(found.has_value() == brute_isomorphic(a, b));
      if (found) CHECK(is_lattice_isomorphism(a, b, *found));
    }
  }
  CHECK(is_isomorphic(build_lcm_lattice(fig3()).lattice, build_lcm_lattice(fig5()).lattice));
}

TEST_CASE("isomorphism on random relabelings") {
  SplitMix64 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    const auto i = random_monomial_ideal(rng, 4, rng.between(2, 6), 2);
    const auto l = build_lcm_lattice(i);
    // Permute variables: the lattice must be isomorphic.
    std::vector<std::size_t> perm{0, 1, 2, 3};
    for (std::size_t k = 3; k > 0; --k) std::swap(perm[k], perm[rng.uniform(k + 1)]);
    std::vector<Monomial> gens;
    for (const auto& g : i.generators()) {
      std::vector<Exponent> e(4);
      for (std::size_t v = 0; v < 4; ++v) e[perm[v]] = g[v];
      gens.emplace_back(e);
    }
    const auto l2 = build_lcm_lattice(MonomialIdeal(4, gens));
    const auto map = is_isomorphic(l.lattice, l2.lattice);
    REQUIRE(map.has_value());
    CHECK(is_lattice_isomorphism(l.lattice, l2.lattice, *map));
  }
}
