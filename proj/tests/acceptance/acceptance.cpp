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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "audit.hpp"
#include "conditions.hpp"
#include "error.hpp"
#include "io.hpp"
#include "lattice.hpp"
#include "monomial.hpp"
#include "properties.hpp"

using namespace lcmlat;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

/// Records the first failed expectation.
class Expect {
 public:
  void operator()(bool cond, const std::string& what) {
    if (!cond && ok_) {
      ok_ = false;
      first_ = what;
    }
  }
  Outcome done(const std::string& detail) const {
    return {ok_, ok_ ? detail : "failed: " + first_};
  }

 private:
  bool ok_ = true;
  std::string first_;
};

MonomialIdeal ideal(std::size_t dim, std::initializer_list<const char*> gens) {
  std::vector<Monomial> ms;
  for (const char* g : gens) ms.push_back(parse_monomial(g, dim));
  return MonomialIdeal(dim, std::move(ms));
}

std::string label(const LcmLattice& l, Index i) { return to_string(l.elements[i]); }

std::optional<Index> find(const LcmLattice& l, const char* text) {
  return l.index_of(parse_monomial(text, l.ideal.ring_dimension()));
}

std::set<std::pair<std::string, std::string>> covers(const LcmLattice& l) {
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& [a, b] : hasse_edges(l.lattice)) out.insert({label(l, a), label(l, b)});
  return out;
}

std::string run_batch(Theorem t, const GeneratorConfig& cfg, AuditSummary* summary) {
  std::string out;
  const auto s =
      audit_batch(t, cfg, [&](const AuditReport& r) { out += to_json(r).dump() + "\n"; });
  out += to_json(s).dump() + "\n";
  if (summary) *summary = s;
  return out;
}

std::string counts(const AuditSummary& s) {
  return std::to_string(s.agree) + "/" + std::to_string(s.instances) + " agree, " +
         std::to_string(s.disagree) + " disagree, " +
         std::to_string(s.hypothesis_not_met) + " outside hypothesis, " +
         std::to_string(s.skipped_precondition) + " skipped";
}

Outcome fig3_fixture() {
  Expect e;
  const auto l = build_lcm_lattice(ideal(6, {"x1*x2*x3", "x2*x3*x4", "x4*x5*x6"}));
  e(l.lattice.size() == 7, "7 elements");
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
  e(covers(l) == expected, "cover relation");
  const auto mod = is_modular(l.lattice);
  e(!mod.holds, "is_modular = false");
  if (!mod.holds) {
    e(label(l, mod.element("lhs")) == "x1*x2*x3", "lhs = x1x2x3");
    e(label(l, mod.element("rhs")) == "x1*x2*x3*x4", "rhs = x1x2x3x4");
    e(witness_is_valid(l, mod), "modular witness re-evaluates");
  }
  const auto n5 = find_n5(l.lattice);
  e(n5.has_value() && is_valid_pentagon(l.lattice, *n5), "valid pentagon");
  return e.done("7 elements, 9 covers, sides x1*x2*x3 / x1*x2*x3*x4, pentagon found");
}

Outcome tetra_fixture() {
  Expect e;
  const auto h = Hypergraph(4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
  const auto l = build_lcm_lattice(edge_ideal(h));
  e(l.lattice.size() == 6, "6 elements");
  e(is_modular(l.lattice).holds, "modular");
  const auto m3 = find_m3(l.lattice);
  e(m3.has_value() && is_valid_diamond(l.lattice, *m3), "diamond found");
  e(!is_distributive(l.lattice).holds, "not distributive");
  const auto pm = predicts_modular(h);
  e(pm.holds(), "predicts_modular");
  e(std::find(pm.satisfied_by.begin(), pm.satisfied_by.end(), "b") != pm.satisfied_by.end(),
    "via k = n - 1");
  return e.done("6 elements, modular, M3 present, not distributive, predicted via k = n-1");
}

Outcome fig5_fixture() {
  Expect e;
  const auto g = Hypergraph(4, {{1, 2}, {1, 3}, {2, 4}});
  const auto l = build_lcm_lattice(edge_ideal(g));
  std::vector<std::string> els;
  for (Index i = 0; i < l.lattice.size(); ++i) els.push_back(label(l, i));
  e(els == std::vector<std::string>{"1", "x1*x2", "x1*x3", "x2*x4", "x1*x2*x3", "x1*x2*x4",
                                    "x1*x2*x3*x4"},
    "element set");
  const auto i13 = find(l, "x1*x3");
  const auto i24 = find(l, "x2*x4");
  const auto i12 = find(l, "x1*x2");
  e(i13 && i24 && i12, "elements present");
  if (i13 && i24 && i12) {
    const auto comps = complements_of(l.lattice, *i13);
    std::string got;
    for (Index c : comps) got += (got.empty() ? "" : ", ") + label(l, c);
    e(comps == std::vector<Index>{*i24},
      "complements_of(x1*x3) expected {x2*x4}, got {" + got + "}");
    e(complements_of(l.lattice, *i12).empty(), "complements(12) empty");
  }
  e(!is_complemented(l.lattice).holds, "not complemented");
  const auto path = degree1_path_check(g);
  e(path.holds() && path.path == std::vector<std::uint32_t>{3, 1, 2, 4}, "path 3-1-2-4");
  const auto fig3 = build_lcm_lattice(ideal(6, {"x1*x2*x3", "x2*x3*x4", "x4*x5*x6"}));
  const auto iso = is_isomorphic(l.lattice, fig3.lattice);
  e(iso && is_lattice_isomorphism(l.lattice, fig3.lattice, *iso), "isomorphic to fig3");
  return e.done("7 elements, complements match, path 3-1-2-4, isomorphic to the triangles lattice");
}

Outcome polarization() {
  Expect e;
  const auto i = ideal(2, {"x1^2*x2", "x2^3"});
  const auto p = polarize(i);
  const auto a = build_lcm_lattice(i);
  const auto b = build_lcm_lattice(p.ideal);
  e(a.atoms.size() == b.atoms.size() && a.lattice.size() == b.lattice.size(), "counts");
  e(is_isomorphic(a.lattice, b.lattice).has_value(), "L(I) ~ L(I^p)");
  GeneratorConfig cfg;
  cfg.seed = 2026;
  cfg.count = 200;
  cfg.n = {1, 4};
  cfg.m = {1, 5};
  cfg.max_exponent = 3;
  AuditSummary s;
  run_batch(Theorem::kPolarizationIso, cfg, &s);
  e(s.instances == 200 && s.agree == 200, "200/200 isomorphic");
  return e.done("example isomorphic; audit " + counts(s));
}

Outcome birkhoff() {
  Expect e;
  GeneratorConfig cfg;
  cfg.seed = 5;
  cfg.count = 500;
  cfg.n = {1, 5};
  cfg.m = {1, 5};
  cfg.limits.max_lattice = 400;
  std::size_t modular_pairs = 0, distributive_pairs = 0, total = 0;
  const auto s = audit_batch(Theorem::kBirkhoffCrosscheck, cfg, [&](const AuditReport& r) {
    ++total;
    if (r.structural_witness["modular"] == r.lattice_witness["modular"]) ++modular_pairs;
    if (r.structural_witness["distributive"] == r.lattice_witness["distributive"]) {
      ++distributive_pairs;
    }
  });
  e(total == 500, "500 instances");
  e(modular_pairs == 500, "modular sweep vs N5 absence");
  e(distributive_pairs == 500, "distributive sweep vs N5/M3 absence");
  e(s.agree == 500, "summary agreement");
  return e.done("modular " + std::to_string(modular_pairs) + "/500, distributive " +
                std::to_string(distributive_pairs) + "/500");
}

Outcome boolean_audit() {
  Expect e;
  GeneratorConfig cfg;
  cfg.n = {1, 6};
  cfg.k = {2, 3};
  cfg.m = {1, 4};
  cfg.exhaustive = true;
  AuditSummary s;
  run_batch(Theorem::kBoolean, cfg, &s);
  e(s.exhaustive, "exhaustive");
  e(s.instances > 0 && s.agree == s.instances, "100% agreement");
  return e.done("exhaustive, " + counts(s));
}

Outcome product_audit() {
  Expect e;
  const auto pool = product_pool();
  e(pool.size() >= 12, "pool of at least 12");
  AuditSummary s;
  run_batch(Theorem::kProductComplemented, GeneratorConfig{}, &s);
  e(s.instances == pool.size() * pool.size(), "all ordered pairs");
  e(s.agree == s.instances, "100% agreement");
  return e.done(std::to_string(pool.size()) + " lattices, " + counts(s));
}

struct BatchSpec {
  Theorem theorem;
  GeneratorConfig cfg;
};

std::vector<BatchSpec> structural_batches() {
  std::vector<BatchSpec> out;
  GeneratorConfig base;
  base.n = {1, 5};
  base.exhaustive = true;
  auto modular = base;
  modular.k = {2, 4};
  modular.m = {3, 10};
  out.push_back({Theorem::kModular, modular});
  auto graphs = base;
  graphs.k = {2, 2};
  graphs.m = {1, 10};
  out.push_back({Theorem::kGraphComplemented, graphs});
  auto hyper = base;
  hyper.k = {2, 4};
  hyper.m = {1, 10};
  out.push_back({Theorem::kHypergraphComplemented, hyper});
  out.push_back({Theorem::kRelativelyComplemented, graphs});
  return out;
}

Outcome structural_audits() {
  Expect e;
  std::ostringstream detail;
  for (const auto& spec : structural_batches()) {
    AuditSummary s1, s2;
    const auto first = run_batch(spec.theorem, spec.cfg, &s1);
    const auto second = run_batch(spec.theorem, spec.cfg, &s2);
    const std::string name = to_string(spec.theorem);
    e(s1.exhaustive, name + " exhaustive");
    e(first == second, name + " deterministic");
    e(s1.instances == s1.agree + s1.disagree + s1.hypothesis_not_met, name + " complete");
    e(s1.disagree == 0 || s1.minimal_counterexample.has_value(),
      name + " reports a minimal counterexample");
    detail << name << ": " << counts(s1);
    if (s1.minimal_counterexample) {
      detail << ", minimal counterexample "
             << s1.minimal_counterexample->instance["hypergraph"].dump();
    }
    detail << "; ";
  }
  return e.done(detail.str());
}

Outcome oracle_equivalence() {
  Expect e;
  SplitMix64 rng(424242);
  std::size_t done = 0;
  while (done < 200) {
    const std::size_t n = rng.between(3, 5);
    const std::size_t m = rng.between(1, 10);
    std::optional<MonomialIdeal> i;
    try {
      i = random_monomial_ideal(rng, n, m, 3);
    } catch (const Error& err) {
      if (err.code() != ErrorCode::kInfeasible) throw;
      continue;
    }
    const auto& g = i->generators();
    std::vector<Monomial> enumerated;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.size()); ++mask) {
      Monomial acc = Monomial::unit(n);
      for (std::size_t b = 0; b < g.size(); ++b) {
        if (mask >> b & 1) acc = lcm(acc, g[b]);
      }
      enumerated.push_back(acc);
    }
    std::sort(enumerated.begin(), enumerated.end(), canonical_less);
    enumerated.erase(std::unique(enumerated.begin(), enumerated.end()), enumerated.end());
    e(build_lcm_lattice(*i).elements == enumerated, "element sets equal");
    ++done;
  }
  return e.done("200/200 ideals match subset enumeration");
}

Outcome determinism() {
  Expect e;
  for (Theorem t : all_theorems()) {
    GeneratorConfig cfg;
    cfg.seed = 99;
    cfg.count = 40;
    cfg.n = {3, 7};
    if (t == Theorem::kPolarizationIso || t == Theorem::kBirkhoffCrosscheck) cfg.n = {2, 4};
    const auto a = run_batch(t, cfg, nullptr);
    const auto b = run_batch(t, cfg, nullptr);
    e(!a.empty() && a == b, std::string(to_string(t)) + " byte-identical");
  }
  return e.done("all " + std::to_string(all_theorems().size()) +
                " theorems byte-identical across repeated runs");
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "three-triangle fixture", 1.0, fig3_fixture},
      {2, "tetrahedron fixture", 1.0, tetra_fixture},
      {3, "graph 12-13-24 fixture", 1.0, fig5_fixture},
      {4, "polarization isomorphism", 30.0, polarization},
      {5, "forbidden-sublattice cross-check", 60.0, birkhoff},
      {6, "Boolean audit, exhaustive", 60.0, boolean_audit},
      {7, "product complementation", 30.0, product_audit},
      {8, "structural audits, exhaustive n <= 5", 120.0, structural_audits},
      {9, "join closure vs subset enumeration", 30.0, oracle_equivalence},
      {10, "determinism", 0.0, determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& ex) {
      o = {false, std::string("exception: ") + ex.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && c.budget_seconds > 0 && secs >= c.budget_seconds) {
      o = {false, "over time budget of " + std::to_string(c.budget_seconds) + " s"};
    }
    if (!o.ok) ++failures;
    std::printf("%s [%d] %s (%.3f s): %s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, secs,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
