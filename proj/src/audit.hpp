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

#ifndef LCMLAT_AUDIT_HPP_
#define LCMLAT_AUDIT_HPP_

// Theorem auditing: each instance is run through the combinatorial predictor
// and, separately, through the lattice property checks; the two answers are
// compared and both witnesses are kept. Disagreements are reported, never
// thrown.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "io.hpp"
#include "lattice.hpp"
#include "monomial.hpp"

namespace lcmlat {

/// SplitMix64 (Steele, Lea, Flood 2014). State advances by
/// 0x9E3779B97F4A7C15; output mixes with 0xBF58476D1CE4E5B9 and
/// 0x94D049BB133111EB using shifts 30, 27, 31. The i-th output of a stream
/// seeded with s is therefore mix(s + (i + 1) * 0x9E3779B97F4A7C15).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  /// Uniform in [0, bound) by rejection (no modulo bias); bound > 0.
  std::uint64_t uniform(std::uint64_t bound);
  /// Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi);

 private:
  std::uint64_t state_;
};

struct Range {
  std::size_t lo = 0;
  std::size_t hi = 0;
};

struct GeneratorConfig {
  std::uint64_t seed = 0;
  Range n{2, 5};
  Range k{2, 3};
  Range m{1, 4};
  Exponent max_exponent = 3;
  std::size_t count = 100;
  bool exhaustive = false;
  Limits limits;
};

/// Instance spaces at or below this size are enumerated instead of sampled.
inline constexpr std::uint64_t kExhaustiveThreshold = 20000;
/// Hard ceiling for forced exhaustive runs.
inline constexpr std::uint64_t kMaxEnumeration = 5000000;
/// Largest vertex count the generators accept.
inline constexpr std::size_t kMaxGeneratorVertices = 20;

enum class Theorem {
  kBoolean,
  kModular,
  kGraphComplemented,
  kHypergraphComplemented,
  kRelativelyComplemented,
  kProductComplemented,
  kPolarizationIso,
  kBirkhoffCrosscheck,
};

const char* to_string(Theorem theorem);
Theorem theorem_from_string(const std::string& name);
const std::vector<Theorem>& all_theorems();

/// m distinct k-subsets of {1..n}, drawn without replacement and listed in
/// lexicographic order. Throws kInfeasible when m > C(n, k).
Hypergraph random_uniform_hypergraph(SplitMix64& rng, std::size_t n,
                                     std::size_t k, std::size_t m);
/// Seeds a stream with cfg.seed and draws n, k, m from the config ranges.
Hypergraph random_uniform_hypergraph(const GeneratorConfig& cfg);

/// m minimal generators with exponents in [0, max_exponent]. Draws comparable
/// to an accepted generator are discarded; a stalled round restarts, and
/// after `retries` restarts kInfeasible is thrown.
MonomialIdeal random_monomial_ideal(SplitMix64& rng, std::size_t n,
                                    std::size_t m, Exponent max_exponent,
                                    std::size_t retries = 64);
MonomialIdeal random_monomial_ideal(const GeneratorConfig& cfg);

struct NamedLattice {
  std::string name;
  FiniteLattice lattice;
};

/// Pair of factors for the product proposition.
struct LatticePair {
  NamedLattice first;
  NamedLattice second;
};

/// Small lattices (chains, Booleans, N5, M3, lcm-lattices of the worked
/// examples) used by the product audit.
std::vector<NamedLattice> product_pool();

using Instance = std::variant<Hypergraph, MonomialIdeal, LatticePair>;

struct AuditReport {
  Theorem theorem = Theorem::kBoolean;
  std::size_t ordinal = 0;
  std::optional<std::uint64_t> instance_seed;
  Json instance;
  /// Absent when the theorem's hypothesis does not cover the instance.
  std::optional<bool> predicted;
  bool actual = false;
  bool agree = false;
  Json structural_witness;
  Json lattice_witness;
  /// Ordering key for picking the minimal counterexample.
  std::vector<std::uint64_t> size_key;
};

/// Computes the structural prediction and the lattice ground truth for one
/// instance. Throws kPrecondition when the instance does not fit the theorem
/// (e.g. a disconnected graph for the graph theorems).
AuditReport audit_instance(Theorem theorem, const Instance& instance,
                           const Limits& limits = {});

struct AuditSummary {
  Theorem theorem = Theorem::kBoolean;
  bool exhaustive = false;
  std::uint64_t seed = 0;
  std::size_t instances = 0;
  std::size_t agree = 0;
  std::size_t disagree = 0;
  std::size_t hypothesis_not_met = 0;
  std::size_t skipped_precondition = 0;
  std::optional<AuditReport> minimal_counterexample;
};

/// Size of the instance space the config describes, saturating at
/// UINT64_MAX; absent for theorems whose instances are only sampled.
std::optional<std::uint64_t> instance_space_size(Theorem theorem,
                                                 const GeneratorConfig& cfg);

/// Runs the seeded stream (or the full enumeration) and hands every report
/// to `sink` in order.
AuditSummary audit_batch(Theorem theorem, const GeneratorConfig& cfg,
                         const std::function<void(const AuditReport&)>& sink);

Json to_json(const AuditReport& report);
Json to_json(const AuditSummary& summary);

/// Writes one JSON file per disagreeing report into `directory`, named
/// <theorem>-<16 hex digits of FNV-1a over the instance JSON>.json. Returns
/// the paths written.
std::vector<std::string> write_counterexamples(
    const std::string& directory, const std::vector<AuditReport>& reports);

}  // namespace lcmlat

#endif  // LCMLAT_AUDIT_HPP_
