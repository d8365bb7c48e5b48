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

// lcmlat: command-line front end over the C API.
//
// Exit codes: 0 success, 1 a checked result was false under --assert,
// 2 usage or input error (a one-line JSON object on stderr).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lcmlat/lcmlat.h"

namespace {

using Json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFalse = 1;
constexpr int kExitError = 2;

struct Failure {
  std::string code;
  std::string message;
};

void check(lcmlat_status s) {
  if (s != LCMLAT_OK) throw Failure{lcmlat_status_name(s), lcmlat_last_error_message()};
}

void usage_error(const std::string& message) {
  throw Failure{"invalid-argument", message};
}

struct IdealDeleter {
  void operator()(lcmlat_ideal* p) const { lcmlat_ideal_free(p); }
};
struct GraphDeleter {
  void operator()(lcmlat_hypergraph* p) const { lcmlat_hypergraph_free(p); }
};
struct LatticeDeleter {
  void operator()(lcmlat_lattice* p) const { lcmlat_lattice_free(p); }
};
struct StringDeleter {
  void operator()(char* p) const { lcmlat_string_free(p); }
};
using IdealPtr = std::unique_ptr<lcmlat_ideal, IdealDeleter>;
using GraphPtr = std::unique_ptr<lcmlat_hypergraph, GraphDeleter>;
using LatticePtr = std::unique_ptr<lcmlat_lattice, LatticeDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

std::string take(char* s) {
  StringPtr owned(s);
  return owned ? std::string(owned.get()) : std::string();
}

struct Options {
  std::vector<std::string> ideals;
  std::string hypergraph;
  std::string format = "json";
  std::string out;
  std::uint64_t seed = 0;
  bool assert_result = false;

  std::string property = "all";
  std::string condition = "all";

  std::string theorem;
  std::size_t count = 100;
  std::string n_range, k_range, m_range;
  std::uint32_t max_exponent = 3;
  bool exhaustive = false;
  std::string corpus;

  lcmlat_limits limits = lcmlat_limits_default();
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw Failure{"io", "cannot write '" + path + "'"};
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::pair<std::size_t, std::size_t> parse_range(const std::string& text,
                                                const char* flag) {
  const auto dots = text.find("..");
  auto number = [&](const std::string& s) -> std::size_t {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
      usage_error(std::string("--") + flag + " expects a..b, got '" + text + "'");
    }
    return std::stoull(s);
  };
  if (dots == std::string::npos) {
    const auto v = number(text);
    return {v, v};
  }
  const auto lo = number(text.substr(0, dots));
  const auto hi = number(text.substr(dots + 2));
  if (lo > hi) usage_error(std::string("--") + flag + " range is empty");
  return {lo, hi};
}

IdealPtr load_ideal(const std::string& path) {
  lcmlat_ideal* raw = nullptr;
  check(lcmlat_ideal_from_file(path.c_str(), &raw));
  return IdealPtr(raw);
}

GraphPtr load_hypergraph(const std::string& path) {
  lcmlat_hypergraph* raw = nullptr;
  check(lcmlat_hypergraph_from_file(path.c_str(), &raw));
  return GraphPtr(raw);
}

/// The single ideal named by --ideal, or the edge ideal of --hypergraph.
IdealPtr input_ideal(const Options& o) {
  if (!o.hypergraph.empty()) {
    auto h = load_hypergraph(o.hypergraph);
    lcmlat_ideal* raw = nullptr;
    check(lcmlat_hypergraph_edge_ideal(h.get(), &raw));
    return IdealPtr(raw);
  }
  if (o.ideals.size() != 1) usage_error("exactly one of --ideal or --hypergraph is required");
  return load_ideal(o.ideals.front());
}

LatticePtr build(const lcmlat_ideal* ideal, const Options& o) {
  lcmlat_lattice* raw = nullptr;
  check(lcmlat_lattice_build(ideal, &o.limits, &raw));
  return LatticePtr(raw);
}

std::vector<std::string> selected(const std::string& choice, std::size_t count,
                                  const char* (*name_at)(std::size_t),
                                  const char* what) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < count; ++i) names.emplace_back(name_at(i));
  if (choice == "all") return names;
  for (const auto& n : names) {
    if (n == choice) return {choice};
  }
  usage_error(std::string("unknown ") + what + " '" + choice + "'");
  return {};
}

int emit_verdicts(const lcmlat_lattice* lattice, const Options& o, Output& out) {
  const auto names = selected(o.property, lcmlat_property_count(),
                              lcmlat_property_name, "property");
  Json verdicts = Json::array();
  bool all_true = true;
  for (const auto& name : names) {
    int holds = 0;
    char* json = nullptr;
    check(lcmlat_lattice_check(lattice, name.c_str(), &holds, &json));
    verdicts.push_back(Json::parse(take(json)));
    all_true = all_true && holds == LCMLAT_TRUE;
  }
  out.stream() << (o.property == "all" ? verdicts : verdicts.front()).dump() << "\n";
  return o.assert_result && !all_true ? kExitFalse : kExitOk;
}

int run_build(const Options& o) {
  if (o.format != "json" && o.format != "dot") usage_error("--format must be json or dot");
  auto ideal = input_ideal(o);
  auto lattice = build(ideal.get(), o);
  char* text = nullptr;
  if (o.format == "dot") {
    check(lcmlat_lattice_to_dot(lattice.get(), &text));
    const auto dot = take(text);
    Output out(o.out);
    out.stream() << dot;
  } else {
    check(lcmlat_lattice_to_json(lattice.get(), &text));
    const auto json = take(text);
    Output out(o.out);
    out.stream() << json << "\n";
  }
  return kExitOk;
}

int run_check(const Options& o) {
  auto ideal = input_ideal(o);
  auto lattice = build(ideal.get(), o);
  Output out(o.out);
  return emit_verdicts(lattice.get(), o, out);
}

int run_conditions(const Options& o) {
  if (o.hypergraph.empty()) usage_error("conditions needs --hypergraph");
  auto h = load_hypergraph(o.hypergraph);
  const auto names = selected(o.condition, lcmlat_condition_count(),
                              lcmlat_condition_name, "condition");
  Json verdicts = Json::array();
  bool all_true = true;
  for (const auto& name : names) {
    int holds = 0;
    char* json = nullptr;
    const auto status = lcmlat_hypergraph_condition(h.get(), name.c_str(), &holds, &json);
    if (status == LCMLAT_ERR_PRECONDITION && o.condition == "all") {
      // Under `all`, a condition that does not apply is reported, not fatal.
      verdicts.push_back(Json{{"condition", name},
                              {"status", "precondition-not-met"},
                              {"holds", nullptr},
                              {"message", lcmlat_last_error_message()}});
      all_true = false;
      continue;
    }
    check(status);
    verdicts.push_back(Json::parse(take(json)));
    all_true = all_true && holds == LCMLAT_TRUE;
  }
  Output out(o.out);
  out.stream() << (o.condition == "all" ? verdicts : verdicts.front()).dump() << "\n";
  return o.assert_result && !all_true ? kExitFalse : kExitOk;
}

int run_polarize(const Options& o) {
  auto ideal = input_ideal(o);
  lcmlat_ideal* raw = nullptr;
  char* json = nullptr;
  check(lcmlat_ideal_polarize(ideal.get(), &raw, &json));
  IdealPtr polarized(raw);
  const auto text = take(json);
  Output out(o.out);
  out.stream() << text << "\n";
  return kExitOk;
}

std::pair<LatticePtr, LatticePtr> two_lattices(const Options& o, const char* cmd) {
  if (o.ideals.size() != 2 || !o.hypergraph.empty()) {
    usage_error(std::string(cmd) + " needs exactly two --ideal inputs");
  }
  auto a = load_ideal(o.ideals[0]);
  auto b = load_ideal(o.ideals[1]);
  return {build(a.get(), o), build(b.get(), o)};
}

int run_product(const Options& o, bool with_property) {
  auto [a, b] = two_lattices(o, "product");
  lcmlat_lattice* raw = nullptr;
  check(lcmlat_lattice_product(a.get(), b.get(), &o.limits, &raw));
  LatticePtr prod(raw);
  if (with_property) {
    Output out(o.out);
    return emit_verdicts(prod.get(), o, out);
  }
  char* json = nullptr;
  check(lcmlat_lattice_to_json(prod.get(), &json));
  const auto text = take(json);
  Output out(o.out);
  out.stream() << text << "\n";
  return kExitOk;
}

int run_iso(const Options& o) {
  auto [a, b] = two_lattices(o, "iso");
  int iso = 0;
  char* json = nullptr;
  check(lcmlat_lattice_isomorphism(a.get(), b.get(), &iso, &json));
  const auto text = take(json);
  Output out(o.out);
  out.stream() << text << "\n";
  return o.assert_result && iso != LCMLAT_TRUE ? kExitFalse : kExitOk;
}

void write_line(const char* line, void* user) {
  *static_cast<std::ostream*>(user) << line << "\n";
}

int run_audit(const Options& o) {
  if (o.theorem.empty()) usage_error("audit needs --theorem");
  auto cfg = lcmlat_audit_config_default();
  cfg.theorem = o.theorem.c_str();
  cfg.seed = o.seed;
  if (!o.n_range.empty()) std::tie(cfg.n_lo, cfg.n_hi) = parse_range(o.n_range, "n");
  if (!o.k_range.empty()) std::tie(cfg.k_lo, cfg.k_hi) = parse_range(o.k_range, "k");
  if (!o.m_range.empty()) std::tie(cfg.m_lo, cfg.m_hi) = parse_range(o.m_range, "m");
  cfg.max_exponent = o.max_exponent;
  cfg.count = o.count;
  cfg.exhaustive = o.exhaustive ? 1 : 0;
  cfg.limits = o.limits;
  cfg.corpus_dir = o.corpus.empty() ? nullptr : o.corpus.c_str();
  Output out(o.out);
  std::size_t disagreements = 0;
  check(lcmlat_audit_run(&cfg, write_line, &out.stream(), &disagreements));
  return o.assert_result && disagreements > 0 ? kExitFalse : kExitOk;
}

void print_error(const std::string& code, const std::string& message) {
  std::cerr << Json{{"error", {{"code", code}, {"message", message}}}}.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"lcm-lattices of monomial and hypergraph edge ideals"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", std::string(lcmlat_version()));

  auto shared = [&](CLI::App* sub, bool two_ideals) {
    auto* ideal = sub->add_option("--ideal", o.ideals, "ideal file (ring <n> + monomials)");
    if (two_ideals) {
      ideal->expected(1)->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
    } else {
      ideal->expected(1);
      auto* graph = sub->add_option("--hypergraph", o.hypergraph, "hypergraph JSON file");
      ideal->excludes(graph);
    }
    sub->add_option("--format", o.format, "json or dot (dot only for build)");
    sub->add_option("--out", o.out, "output path (default stdout)");
    sub->add_option("--seed", o.seed, "random seed");
    sub->add_flag("--assert", o.assert_result, "exit 1 when the result is false");
    sub->add_option("--max-generators", o.limits.max_generators, "generator cap");
    sub->add_option("--max-lattice", o.limits.max_lattice, "lattice size cap");
    sub->add_option("--max-product", o.limits.max_product, "product size cap");
  };

  auto* build_cmd = app.add_subcommand("build", "construct the lcm-lattice");
  shared(build_cmd, false);
  auto* check_cmd = app.add_subcommand("check", "decide lattice properties");
  shared(check_cmd, false);
  check_cmd->add_option("--property", o.property,
                        "boolean|modular|distributive|complemented|"
                        "relatively-complemented|all");
  auto* cond_cmd = app.add_subcommand("conditions", "combinatorial conditions");
  shared(cond_cmd, false);
  cond_cmd->add_option("--condition", o.condition, "condition name or all");
  auto* audit_cmd = app.add_subcommand("audit", "audit a theorem against ground truth");
  shared(audit_cmd, false);
  audit_cmd->add_option("--theorem", o.theorem, "theorem id")->required();
  audit_cmd->add_option("--count", o.count, "sampled instances");
  audit_cmd->add_option("--n", o.n_range, "vertex/variable count range a..b");
  audit_cmd->add_option("--k", o.k_range, "edge size range a..b");
  audit_cmd->add_option("--m", o.m_range, "generator count range a..b");
  audit_cmd->add_option("--max-exponent", o.max_exponent, "largest exponent drawn");
  audit_cmd->add_flag("--exhaustive", o.exhaustive, "enumerate the instance space");
  audit_cmd->add_option("--corpus", o.corpus, "directory for counterexamples");
  auto* pol_cmd = app.add_subcommand("polarize", "square-free polarization");
  shared(pol_cmd, false);
  auto* prod_cmd = app.add_subcommand("product", "product of two lcm-lattices");
  shared(prod_cmd, true);
  auto* prod_property = prod_cmd->add_option("--property", o.property,
                                             "check a property on the product");
  auto* iso_cmd = app.add_subcommand("iso", "isomorphism of two lcm-lattices");
  shared(iso_cmd, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    print_error("usage", e.what());
    return kExitError;
  }

  try {
    if (o.format != "json" && !build_cmd->parsed()) {
      usage_error("--format dot is only available on build");
    }
    if (build_cmd->parsed()) return run_build(o);
    if (check_cmd->parsed()) return run_check(o);
    if (cond_cmd->parsed()) return run_conditions(o);
    if (audit_cmd->parsed()) return run_audit(o);
    if (pol_cmd->parsed()) return run_polarize(o);
    if (prod_cmd->parsed()) return run_product(o, prod_property->count() > 0);
    if (iso_cmd->parsed()) return run_iso(o);
  } catch (const Failure& f) {
    print_error(f.code, f.message);
    return kExitError;
  } catch (const std::exception& e) {
    print_error("internal", e.what());
    return kExitError;
  }
  return kExitError;
}
