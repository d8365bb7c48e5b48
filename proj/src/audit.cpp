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

#include "audit.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <numeric>

#include "conditions.hpp"
#include "error.hpp"
#include "properties.hpp"

namespace lcmlat {

std::uint64_t SplitMix64::next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::uniform(std::uint64_t bound) {
  if (bound == 0) throw Error(ErrorCode::kInvalidArgument, "empty range");
  // Accept only draws from the largest multiple of bound.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = next();
    if (r >= threshold) return r % bound;
  }
}

std::uint64_t SplitMix64::between(std::uint64_t lo, std::uint64_t hi) {
  if (lo > hi) throw Error(ErrorCode::kInvalidArgument, "empty range");
  if (hi - lo == std::numeric_limits<std::uint64_t>::max()) return next();
  return lo + uniform(hi - lo + 1);
}

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  std::uint64_t acc = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    // acc * (n - r + i) is divisible by i; saturate a little early on overflow.
    if (acc > kSaturated / (n - r + i)) return kSaturated;
    acc = acc * (n - r + i) / i;
  }
  return acc;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > kSaturated - b ? kSaturated : a + b;
}

/// All k-subsets of {1..n} in lexicographic order.
std::vector<std::vector<std::uint32_t>> k_subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::uint32_t>> out;
  if (k == 0 || k > n) return out;
  std::vector<std::uint32_t> cur(k);
  std::iota(cur.begin(), cur.end(), 1U);
  for (;;) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

void check_range(const Range& r, const char* what, std::size_t min_lo,
                 std::size_t max_hi) {
  if (r.lo < min_lo || r.lo > r.hi || r.hi > max_hi) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string("range for ") + what + " must satisfy " +
                    std::to_string(min_lo) + " <= lo <= hi <= " +
                    std::to_string(max_hi));
  }
}

bool is_graph_theorem(Theorem t) {
  return t == Theorem::kGraphComplemented ||
         t == Theorem::kRelativelyComplemented;
}

bool is_hypergraph_theorem(Theorem t) {
  return t == Theorem::kBoolean || t == Theorem::kModular ||
         t == Theorem::kHypergraphComplemented || is_graph_theorem(t);
}

bool is_ideal_theorem(Theorem t) {
  return t == Theorem::kPolarizationIso || t == Theorem::kBirkhoffCrosscheck;
}

Range k_range(Theorem t, const GeneratorConfig& cfg) {
  return is_graph_theorem(t) ? Range{2, 2} : cfg.k;
}

Json pentagon_json(const FiniteLattice& l, const std::optional<PentagonWitness>& p) {
  if (!p) return nullptr;
  auto el = [&](Index i) { return Json{{"index", i}, {"label", l.label(i)}}; };
  return Json{{"bottom", el(p->bottom)}, {"a", el(p->a)}, {"x", el(p->x)},
              {"y", el(p->y)}, {"top", el(p->top)}};
}

Json diamond_json(const FiniteLattice& l, const std::optional<DiamondWitness>& d) {
  if (!d) return nullptr;
  auto el = [&](Index i) { return Json{{"index", i}, {"label", l.label(i)}}; };
  return Json{{"bottom", el(d->bottom)}, {"a", el(d->a)}, {"b", el(d->b)},
              {"c", el(d->c)}, {"top", el(d->top)}};
}

Json law_json(const FiniteLattice& l, const std::optional<LawViolation>& v) {
  if (!v) return nullptr;
  auto el = [&](Index i) { return Json{{"index", i}, {"label", l.label(i)}}; };
  return Json{{"x", el(v->x)}, {"y", el(v->y)}, {"z", el(v->z)},
              {"lhs", el(v->lhs)}, {"rhs", el(v->rhs)}};
}

std::vector<std::uint64_t> hypergraph_key(const Hypergraph& h) {
  std::vector<std::uint64_t> key{h.vertex_count(), h.edge_count()};
  for (const auto& e : h.edges()) key.insert(key.end(), e.begin(), e.end());
  return key;
}

std::vector<std::uint64_t> ideal_key(const MonomialIdeal& ideal) {
  std::vector<std::uint64_t> key{ideal.ring_dimension(), ideal.size()};
  for (const auto& g : ideal.generators()) {
    key.insert(key.end(), g.exponents().begin(), g.exponents().end());
  }
  return key;
}

void finish(AuditReport& r) {
  r.agree = r.predicted.has_value() && *r.predicted == r.actual;
}

AuditReport audit_hypergraph(Theorem theorem, const Hypergraph& h,
                             const Limits& limits) {
  AuditReport r;
  r.theorem = theorem;
  r.instance = Json{{"kind", "hypergraph"}, {"hypergraph", to_json(h)}};
  r.size_key = hypergraph_key(h);

  // Preconditions come first so that nothing is computed for rejected input.
  const bool uniform = h.uniformity().has_value();
  if (!uniform) {
    throw Error(ErrorCode::kPrecondition,
                std::string(to_string(theorem)) + " needs a uniform hypergraph");
  }
  if (is_graph_theorem(theorem) && (!h.is_graph() || !h.is_connected())) {
    throw Error(ErrorCode::kPrecondition,
                std::string(to_string(theorem)) + " needs a connected graph");
  }

  // Structural side: only the hypergraph.
  ConditionVerdict cond;
  switch (theorem) {
    case Theorem::kBoolean:
      cond = private_vertex_check(h);
      r.predicted = cond.holds();
      break;
    case Theorem::kModular:
      cond = predicts_modular(h);
      if (cond.status != ConditionStatus::kHypothesisNotMet) {
        r.predicted = cond.holds();
      }
      break;
    case Theorem::kGraphComplemented:
      cond = degree1_path_check(h);
      r.predicted = !cond.holds();
      break;
    case Theorem::kHypergraphComplemented:
      cond = blocking_triplet_check(h);
      r.predicted = !cond.holds();
      break;
    case Theorem::kRelativelyComplemented:
      cond = induced_p4_check(h);
      r.predicted = !cond.holds();
      break;
    default:
      throw Error(ErrorCode::kInternal, "not a hypergraph theorem");
  }
  r.structural_witness = to_json(cond, h);

  // Lattice side: only the edge ideal's lcm-lattice.
  const auto lattice = build_lcm_lattice(edge_ideal(h), limits);
  Json lw{{"elements", lattice.lattice.size()}, {"atoms", lattice.atoms.size()}};
  switch (theorem) {
    case Theorem::kBoolean: {
      const auto v = is_boolean(lattice);
      r.actual = v.holds;
      lw["verdict"] = to_json(v, lattice);
      break;
    }
    case Theorem::kModular: {
      const auto v = is_modular(lattice.lattice, std::numeric_limits<std::size_t>::max());
      const auto n5 = find_n5(lattice.lattice);
      r.actual = v.holds;
      lw["verdict"] = to_json(v, lattice);
      lw["n5"] = pentagon_json(lattice.lattice, n5);
      lw["birkhoff_consistent"] = v.holds == !n5.has_value();
      break;
    }
    case Theorem::kGraphComplemented:
    case Theorem::kHypergraphComplemented: {
      const auto v = is_complemented(lattice.lattice);
      r.actual = v.holds;
      lw["verdict"] = to_json(v, lattice);
      break;
    }
    case Theorem::kRelativelyComplemented: {
      const auto v = is_relatively_complemented(lattice.lattice);
      r.actual = v.holds;
      lw["verdict"] = to_json(v, lattice);
      break;
    }
    default:
      break;
  }
  r.lattice_witness = std::move(lw);
  finish(r);
  return r;
}

AuditReport audit_ideal(Theorem theorem, const MonomialIdeal& ideal,
                        const Limits& limits) {
  AuditReport r;
  r.theorem = theorem;
  r.instance = Json{{"kind", "ideal"}, {"ideal", to_json(ideal)}};
  r.size_key = ideal_key(ideal);
  const auto lattice = build_lcm_lattice(ideal, limits);
  const auto& l = lattice.lattice;

  if (theorem == Theorem::kPolarizationIso) {
    const auto pol = polarize(ideal);
    const auto polarized = build_lcm_lattice(pol.ideal, limits);
    // Structural side: the lemma, plus the explicit element map m -> m^p.
    r.predicted = true;
    std::vector<Index> explicit_map;
    bool map_ok = true;
    for (const auto& e : lattice.elements) {
      const auto j = polarized.index_of(pol.map.polarize(e));
      if (!j) {
        map_ok = false;
        break;
      }
      explicit_map.push_back(*j);
    }
    map_ok = map_ok && is_lattice_isomorphism(l, polarized.lattice, explicit_map);
    r.structural_witness = Json{{"lemma", "L(I) isomorphic to L(I^p)"},
                                {"polarized", to_json(pol.ideal)},
                                {"polarization_map_is_isomorphism", map_ok}};
    // Ground truth: generic isomorphism search plus count equality.
    const auto iso = is_isomorphic(l, polarized.lattice);
    const bool counts = lattice.atoms.size() == polarized.atoms.size() &&
                        l.size() == polarized.lattice.size();
    r.actual = iso.has_value() && counts;
    r.lattice_witness = Json{{"elements", {l.size(), polarized.lattice.size()}},
                             {"atoms", {lattice.atoms.size(), polarized.atoms.size()}},
                             {"isomorphism", iso ? Json(*iso) : Json(nullptr)}};
    finish(r);
    return r;
  }
  if (theorem == Theorem::kBirkhoffCrosscheck) {
    // Structural side: forbidden sublattices. Ground truth: the laws.
    const auto n5 = find_n5(l);
    const auto m3 = find_m3(l);
    const auto modular_bad = modular_law_violation(l);
    const auto distributive_bad = distributive_law_violation(l);
    r.predicted = !n5.has_value();
    r.actual = !modular_bad.has_value();
    const bool dist_forbidden = !n5 && !m3;
    const bool dist_law = !distributive_bad;
    r.structural_witness =
        Json{{"n5", pentagon_json(l, n5)},
             {"m3", diamond_json(l, m3)},
             {"modular", !n5.has_value()},
             {"distributive", dist_forbidden}};
    r.lattice_witness = Json{{"elements", l.size()},
                             {"modular_law_violation", law_json(l, modular_bad)},
                             {"distributive_law_violation", law_json(l, distributive_bad)},
                             {"modular", r.actual},
                             {"distributive", dist_law}};
    finish(r);
    r.agree = r.agree && dist_forbidden == dist_law;
    return r;
  }
  throw Error(ErrorCode::kInternal, "not an ideal theorem");
}

AuditReport audit_pair(const LatticePair& pair, const Limits& limits) {
  AuditReport r;
  r.theorem = Theorem::kProductComplemented;
  r.instance = Json{{"kind", "lattice-pair"},
                    {"first", pair.first.name},
                    {"second", pair.second.name}};
  r.size_key = {pair.first.lattice.size() * pair.second.lattice.size(),
                pair.first.lattice.size(), pair.second.lattice.size()};
  const auto c1 = is_complemented(pair.first.lattice);
  const auto c2 = is_complemented(pair.second.lattice);
  r.predicted = c1.holds && c2.holds;
  r.structural_witness =
      Json{{"first", to_json(c1, pair.first.lattice, {})},
           {"second", to_json(c2, pair.second.lattice, {})}};
  const auto prod = product(pair.first.lattice, pair.second.lattice, limits);
  const auto cp = is_complemented(prod);
  r.actual = cp.holds;
  r.lattice_witness = Json{{"elements", prod.size()},
                           {"verdict", to_json(cp, prod, {})}};
  finish(r);
  return r;
}

Hypergraph sample_hypergraph(Theorem theorem, const GeneratorConfig& cfg,
                             SplitMix64& rng) {
  const Range kr = k_range(theorem, cfg);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const std::size_t n = rng.between(cfg.n.lo, cfg.n.hi);
    const std::size_t khi = std::min(kr.hi, n);
    if (kr.lo > khi) continue;
    const std::size_t k = rng.between(kr.lo, khi);
    const std::uint64_t total = binomial(n, k);
    const std::uint64_t mhi = std::min<std::uint64_t>(cfg.m.hi, total);
    if (cfg.m.lo > mhi) continue;
    const std::size_t m = rng.between(cfg.m.lo, mhi);
    Hypergraph h = random_uniform_hypergraph(rng, n, k, m);
    if (is_graph_theorem(theorem) && !h.is_connected()) continue;
    return h;
  }
  throw Error(ErrorCode::kInfeasible,
              "could not draw an admissible hypergraph from the config");
}

MonomialIdeal sample_ideal(const GeneratorConfig& cfg, SplitMix64& rng) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const std::size_t n = rng.between(cfg.n.lo, cfg.n.hi);
    const std::size_t m = rng.between(cfg.m.lo, cfg.m.hi);
    try {
      return random_monomial_ideal(rng, n, m, cfg.max_exponent);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kInfeasible) throw;
    }
  }
  throw Error(ErrorCode::kInfeasible,
              "could not draw a minimal ideal from the config");
}

void validate(Theorem theorem, const GeneratorConfig& cfg) {
  check_range(cfg.n, "n", 1, kMaxGeneratorVertices);
  check_range(cfg.m, "m", 1, cfg.limits.max_generators);
  if (is_hypergraph_theorem(theorem) && !is_graph_theorem(theorem)) {
    check_range(cfg.k, "k", 1, kMaxGeneratorVertices);
  }
  if (cfg.max_exponent < 1 || cfg.max_exponent > kMaxExponent) {
    throw Error(ErrorCode::kInvalidArgument, "max exponent out of range");
  }
}

}  // namespace

const char* to_string(Theorem theorem) {
  switch (theorem) {
    case Theorem::kBoolean: return "boolean";
    case Theorem::kModular: return "modular";
    case Theorem::kGraphComplemented: return "graph-complemented";
    case Theorem::kHypergraphComplemented: return "hypergraph-complemented";
    case Theorem::kRelativelyComplemented: return "relatively-complemented";
    case Theorem::kProductComplemented: return "product-complemented";
    case Theorem::kPolarizationIso: return "polarization-iso";
    case Theorem::kBirkhoffCrosscheck: return "birkhoff-crosscheck";
  }
  return "boolean";
}

const std::vector<Theorem>& all_theorems() {
  static const std::vector<Theorem> kAll = {
      Theorem::kBoolean,
      Theorem::kModular,
      Theorem::kGraphComplemented,
      Theorem::kHypergraphComplemented,
      Theorem::kRelativelyComplemented,
      Theorem::kProductComplemented,
      Theorem::kPolarizationIso,
      Theorem::kBirkhoffCrosscheck};
  return kAll;
}

Theorem theorem_from_string(const std::string& name) {
  for (Theorem t : all_theorems()) {
    if (name == to_string(t)) return t;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown theorem '" + name + "'");
}

Hypergraph random_uniform_hypergraph(SplitMix64& rng, std::size_t n,
                                     std::size_t k, std::size_t m) {
  if (n < 1 || n > kMaxGeneratorVertices || k < 1 || k > n || m < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "need 1 <= k <= n <= " + std::to_string(kMaxGeneratorVertices) +
                    " and m >= 1");
  }
  const std::uint64_t total = binomial(n, k);
  if (m > total) {
    throw Error(ErrorCode::kInfeasible,
                "cannot pick " + std::to_string(m) + " distinct " +
                    std::to_string(k) + "-subsets of " + std::to_string(n) +
                    " vertices (only " + std::to_string(total) + ")");
  }
  auto pool = k_subsets(n, k);
  std::vector<std::size_t> order(pool.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  for (std::size_t i = 0; i < m; ++i) {
    const auto j = i + rng.uniform(order.size() - i);
    std::swap(order[i], order[j]);
  }
  order.resize(m);
  std::sort(order.begin(), order.end());
  std::vector<std::vector<std::uint32_t>> edges;
  edges.reserve(m);
  for (auto i : order) edges.push_back(pool[i]);
  return Hypergraph(n, std::move(edges));
}

Hypergraph random_uniform_hypergraph(const GeneratorConfig& cfg) {
  check_range(cfg.n, "n", 1, kMaxGeneratorVertices);
  check_range(cfg.k, "k", 1, kMaxGeneratorVertices);
  check_range(cfg.m, "m", 1, std::numeric_limits<std::size_t>::max());
  SplitMix64 rng(cfg.seed);
  const std::size_t n = rng.between(cfg.n.lo, cfg.n.hi);
  const std::size_t k = rng.between(cfg.k.lo, cfg.k.hi);
  const std::size_t m = rng.between(cfg.m.lo, cfg.m.hi);
  if (k > n) {
    throw Error(ErrorCode::kInfeasible, "edge size exceeds vertex count");
  }
  return random_uniform_hypergraph(rng, n, k, m);
}

MonomialIdeal random_monomial_ideal(SplitMix64& rng, std::size_t n,
                                    std::size_t m, Exponent max_exponent,
                                    std::size_t retries) {
  if (n < 1 || m < 1 || max_exponent < 1 || max_exponent > kMaxExponent) {
    throw Error(ErrorCode::kInvalidArgument,
                "need n >= 1, m >= 1 and 1 <= max exponent <= 2^16");
  }
  // Grow an antichain one draw at a time; a draw comparable to an accepted
  // generator is discarded. A round that stalls starts over.
  const std::size_t per_slot = 64;
  for (std::size_t round = 0; round <= retries; ++round) {
    std::vector<Monomial> gens;
    std::size_t misses = 0;
    while (gens.size() < m && misses < per_slot) {
      std::vector<Exponent> exps(n);
      do {
        for (auto& e : exps) e = static_cast<Exponent>(rng.between(0, max_exponent));
      } while (std::all_of(exps.begin(), exps.end(), [](Exponent e) { return e == 0; }));
      Monomial candidate(std::move(exps));
      const bool comparable = std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) {
        return divides(g, candidate) || divides(candidate, g);
      });
      if (comparable) {
        ++misses;
        continue;
      }
      gens.push_back(std::move(candidate));
      misses = 0;
    }
    if (gens.size() == m) return MonomialIdeal(n, std::move(gens));
  }
  throw Error(ErrorCode::kInfeasible,
              "retry budget exhausted drawing " + std::to_string(m) +
                  " minimal generators in " + std::to_string(n) + " variables");
}

MonomialIdeal random_monomial_ideal(const GeneratorConfig& cfg) {
  check_range(cfg.n, "n", 1, kMaxGeneratorVertices);
  check_range(cfg.m, "m", 1, std::numeric_limits<std::size_t>::max());
  SplitMix64 rng(cfg.seed);
  const std::size_t n = rng.between(cfg.n.lo, cfg.n.hi);
  const std::size_t m = rng.between(cfg.m.lo, cfg.m.hi);
  return random_monomial_ideal(rng, n, m, cfg.max_exponent);
}

std::vector<NamedLattice> product_pool() {
  auto lcm_of = [](std::size_t n, std::vector<std::vector<std::uint32_t>> edges) {
    return build_lcm_lattice(edge_ideal(Hypergraph(n, std::move(edges)))).lattice;
  };
  std::vector<NamedLattice> pool;
  for (std::size_t len = 1; len <= 4; ++len) {
    pool.push_back({"chain-" + std::to_string(len), chain_lattice(len)});
  }
  pool.push_back({"boolean-2", boolean_lattice(2)});
  pool.push_back({"boolean-3", boolean_lattice(3)});
  pool.push_back({"pentagon", pentagon_lattice()});
  pool.push_back({"diamond", diamond_lattice()});
  pool.push_back({"triangles-123-234-456", lcm_of(6, {{1, 2, 3}, {2, 3, 4}, {4, 5, 6}})});
  pool.push_back({"graph-12-13-24", lcm_of(4, {{1, 2}, {1, 3}, {2, 4}})});
  pool.push_back({"tetrahedron", lcm_of(4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}})});
  pool.push_back({"path-p4", lcm_of(4, {{1, 2}, {2, 3}, {3, 4}})});
  pool.push_back({"cycle-c4", lcm_of(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}})});
  return pool;
}

AuditReport audit_instance(Theorem theorem, const Instance& instance,
                           const Limits& limits) {
  if (is_hypergraph_theorem(theorem)) {
    if (const auto* h = std::get_if<Hypergraph>(&instance)) {
      return audit_hypergraph(theorem, *h, limits);
    }
  } else if (is_ideal_theorem(theorem)) {
    if (const auto* i = std::get_if<MonomialIdeal>(&instance)) {
      return audit_ideal(theorem, *i, limits);
    }
  } else if (const auto* p = std::get_if<LatticePair>(&instance)) {
    return audit_pair(*p, limits);
  }
  throw Error(ErrorCode::kPrecondition,
              std::string("instance kind does not match theorem ") +
                  to_string(theorem));
}

std::optional<std::uint64_t> instance_space_size(Theorem theorem,
                                                 const GeneratorConfig& cfg) {
  if (theorem == Theorem::kProductComplemented) {
    const auto p = product_pool().size();
    return p * p;
  }
  if (!is_hypergraph_theorem(theorem)) return std::nullopt;
  const Range kr = k_range(theorem, cfg);
  std::uint64_t total = 0;
  for (std::size_t n = cfg.n.lo; n <= cfg.n.hi; ++n) {
    for (std::size_t k = kr.lo; k <= std::min(kr.hi, n); ++k) {
      const std::uint64_t edges = binomial(n, k);
      for (std::size_t m = cfg.m.lo; m <= cfg.m.hi && m <= edges; ++m) {
        total = saturating_add(total, binomial(edges, m));
      }
    }
  }
  return total;
}

AuditSummary audit_batch(Theorem theorem, const GeneratorConfig& cfg,
                         const std::function<void(const AuditReport&)>& sink) {
  AuditSummary summary;
  summary.theorem = theorem;
  summary.seed = cfg.seed;
  if (theorem != Theorem::kProductComplemented) validate(theorem, cfg);

  const auto space = instance_space_size(theorem, cfg);
  if (cfg.exhaustive && !space) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(to_string(theorem)) +
                    " draws random ideals and cannot be enumerated");
  }
  if (cfg.exhaustive && *space > kMaxEnumeration) {
    throw Error(ErrorCode::kSizeLimit,
                "instance space has " + std::to_string(*space) +
                    " members; the enumeration cap is " +
                    std::to_string(kMaxEnumeration));
  }
  summary.exhaustive = space && (cfg.exhaustive || *space <= kExhaustiveThreshold);

  std::size_t ordinal = 0;
  auto record = [&](AuditReport r) {
    ++summary.instances;
    if (!r.predicted) {
      ++summary.hypothesis_not_met;
    } else if (r.agree) {
      ++summary.agree;
    } else {
      ++summary.disagree;
      if (!summary.minimal_counterexample ||
          r.size_key < summary.minimal_counterexample->size_key) {
        summary.minimal_counterexample = r;
      }
    }
    sink(r);
  };

  if (theorem == Theorem::kProductComplemented) {
    const auto pool = product_pool();
    for (const auto& a : pool) {
      for (const auto& b : pool) {
        auto r = audit_instance(theorem, LatticePair{a, b}, cfg.limits);
        r.ordinal = ordinal++;
        record(std::move(r));
      }
    }
    return summary;
  }

  if (summary.exhaustive) {
    const Range kr = k_range(theorem, cfg);
    for (std::size_t n = cfg.n.lo; n <= cfg.n.hi; ++n) {
      for (std::size_t k = kr.lo; k <= std::min(kr.hi, n); ++k) {
        const auto pool = k_subsets(n, k);
        for (std::size_t m = cfg.m.lo; m <= cfg.m.hi && m <= pool.size(); ++m) {
          std::vector<std::size_t> pick(m);
          std::iota(pick.begin(), pick.end(), std::size_t{0});
          for (;;) {
            std::vector<std::vector<std::uint32_t>> edges;
            edges.reserve(m);
            for (auto i : pick) edges.push_back(pool[i]);
            const std::size_t here = ordinal++;
            try {
              auto r = audit_instance(theorem, Hypergraph(n, std::move(edges)),
                                      cfg.limits);
              r.ordinal = here;
              record(std::move(r));
            } catch (const Error& e) {
              if (e.code() != ErrorCode::kPrecondition) throw;
              ++summary.skipped_precondition;
            }
            std::size_t i = m;
            while (i > 0 && pick[i - 1] == pool.size() - m + i - 1) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t j = i; j < m; ++j) pick[j] = pick[j - 1] + 1;
          }
        }
      }
    }
    return summary;
  }

  SplitMix64 master(cfg.seed);
  for (std::size_t i = 0; i < cfg.count; ++i) {
    const std::uint64_t instance_seed = master.next();
    SplitMix64 rng(instance_seed);
    AuditReport r = is_ideal_theorem(theorem)
                        ? audit_instance(theorem, sample_ideal(cfg, rng), cfg.limits)
                        : audit_instance(theorem, sample_hypergraph(theorem, cfg, rng),
                                         cfg.limits);
    r.ordinal = ordinal++;
    r.instance_seed = instance_seed;
    record(std::move(r));
  }
  return summary;
}

Json to_json(const AuditReport& r) {
  Json predicted = r.predicted ? Json(*r.predicted) : Json("hypothesis-not-met");
  return Json{{"theorem", to_string(r.theorem)},
              {"ordinal", r.ordinal},
              {"instance_seed", r.instance_seed ? Json(*r.instance_seed) : Json(nullptr)},
              {"instance", r.instance},
              {"predicted", predicted},
              {"actual", r.actual},
              {"agree", r.agree},
              {"structural_witness", r.structural_witness},
              {"lattice_witness", r.lattice_witness}};
}

Json to_json(const AuditSummary& s) {
  return Json{
      {"summary",
       {{"theorem", to_string(s.theorem)},
        {"mode", s.exhaustive ? "exhaustive" : "sampled"},
        {"seed", s.seed},
        {"instances", s.instances},
        {"agree", s.agree},
        {"disagree", s.disagree},
        {"hypothesis_not_met", s.hypothesis_not_met},
        {"skipped_precondition", s.skipped_precondition},
        {"minimal_counterexample", s.minimal_counterexample
                                       ? to_json(*s.minimal_counterexample)
                                       : Json(nullptr)}}}};
}

std::vector<std::string> write_counterexamples(
    const std::string& directory, const std::vector<AuditReport>& reports) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(directory, ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot create '" + directory + "'");
  std::vector<std::string> written;
  for (const auto& r : reports) {
    if (!r.predicted || r.agree) continue;
    const std::string canonical = r.instance.dump();
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : canonical) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(h));
    const auto path =
        (fs::path(directory) / (std::string(to_string(r.theorem)) + "-" + hex + ".json"))
            .string();
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::kIo, "cannot write '" + path + "'");
    out << to_json(r).dump(2) << "\n";
    written.push_back(path);
  }
  return written;
}

}  // namespace lcmlat
