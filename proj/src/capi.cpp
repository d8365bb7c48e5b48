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

#include "lcmlat/lcmlat.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "audit.hpp"
#include "conditions.hpp"
#include "error.hpp"
#include "io.hpp"
#include "lattice.hpp"
#include "monomial.hpp"
#include "properties.hpp"

struct lcmlat_ideal {
  lcmlat::MonomialIdeal ideal;
};

struct lcmlat_hypergraph {
  lcmlat::Hypergraph graph;
};

struct lcmlat_lattice {
  std::optional<lcmlat::LcmLattice> lcm;
  std::optional<lcmlat::FiniteLattice> plain;

  const lcmlat::FiniteLattice& get() const { return lcm ? lcm->lattice : *plain; }
};

namespace {

thread_local std::string g_last_error;

lcmlat_status status_of(lcmlat::ErrorCode code) {
  using lcmlat::ErrorCode;
  switch (code) {
    case ErrorCode::kInvalidArgument: return LCMLAT_ERR_INVALID_ARGUMENT;
    case ErrorCode::kParse: return LCMLAT_ERR_PARSE;
    case ErrorCode::kDimensionMismatch: return LCMLAT_ERR_DIMENSION;
    case ErrorCode::kSizeLimit: return LCMLAT_ERR_SIZE_LIMIT;
    case ErrorCode::kPrecondition: return LCMLAT_ERR_PRECONDITION;
    case ErrorCode::kInfeasible: return LCMLAT_ERR_INFEASIBLE;
    case ErrorCode::kIo: return LCMLAT_ERR_IO;
    case ErrorCode::kInternal: return LCMLAT_ERR_INTERNAL;
  }
  return LCMLAT_ERR_INTERNAL;
}

template <typename F>
lcmlat_status guarded(F&& body) {
  g_last_error.clear();
  try {
    body();
    return LCMLAT_OK;
  } catch (const lcmlat::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return LCMLAT_ERR_SIZE_LIMIT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return LCMLAT_ERR_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) {
    throw lcmlat::Error(lcmlat::ErrorCode::kInvalidArgument,
                        std::string(what) + " must not be null");
  }
}

char* dup_string(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void put(char** out, const lcmlat::Json& j) {
  if (out) *out = dup_string(j.dump());
}

lcmlat::Limits to_limits(const lcmlat_limits* limits) {
  lcmlat::Limits out;
  if (limits) {
    out.max_generators = limits->max_generators;
    out.max_lattice = limits->max_lattice;
    out.max_product = limits->max_product;
  }
  return out;
}

}  // namespace

extern "C" {

const char* lcmlat_version(void) { return "0.1.0"; }

const char* lcmlat_status_name(lcmlat_status status) {
  switch (status) {
    case LCMLAT_OK: return "ok";
    case LCMLAT_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case LCMLAT_ERR_PARSE: return "parse";
    case LCMLAT_ERR_DIMENSION: return "dimension-mismatch";
    case LCMLAT_ERR_SIZE_LIMIT: return "size-limit";
    case LCMLAT_ERR_PRECONDITION: return "precondition";
    case LCMLAT_ERR_INFEASIBLE: return "infeasible";
    case LCMLAT_ERR_IO: return "io";
    case LCMLAT_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* lcmlat_last_error_message(void) { return g_last_error.c_str(); }

void lcmlat_string_free(char* s) { std::free(s); }

lcmlat_limits lcmlat_limits_default(void) {
  const lcmlat::Limits d;
  return lcmlat_limits{d.max_generators, d.max_lattice, d.max_product};
}

lcmlat_status lcmlat_ideal_from_string(const char* text, lcmlat_ideal** out) {
  return guarded([&] {
    require(text && out, "text and out");
    *out = new lcmlat_ideal{lcmlat::parse_ideal(text)};
  });
}

lcmlat_status lcmlat_ideal_from_file(const char* path, lcmlat_ideal** out) {
  return guarded([&] {
    require(path && out, "path and out");
    *out = new lcmlat_ideal{lcmlat::read_ideal_file(path)};
  });
}

void lcmlat_ideal_free(lcmlat_ideal* ideal) { delete ideal; }

size_t lcmlat_ideal_generator_count(const lcmlat_ideal* ideal) {
  return ideal ? ideal->ideal.size() : 0;
}

lcmlat_status lcmlat_ideal_to_json(const lcmlat_ideal* ideal, char** json) {
  return guarded([&] {
    require(ideal && json, "ideal and json");
    put(json, lcmlat::to_json(ideal->ideal));
  });
}

lcmlat_status lcmlat_ideal_polarize(const lcmlat_ideal* ideal,
                                    lcmlat_ideal** out, char** map_json) {
  return guarded([&] {
    require(ideal && out, "ideal and out");
    auto pol = lcmlat::polarize(ideal->ideal);
    const auto j = lcmlat::to_json(pol);
    auto* handle = new lcmlat_ideal{std::move(pol.ideal)};
    if (map_json) {
      try {
        *map_json = dup_string(j.dump());
      } catch (...) {
        delete handle;
        throw;
      }
    }
    *out = handle;
  });
}

lcmlat_status lcmlat_hypergraph_from_json_string(const char* json,
                                                 lcmlat_hypergraph** out) {
  return guarded([&] {
    require(json && out, "json and out");
    *out = new lcmlat_hypergraph{lcmlat::parse_hypergraph(json)};
  });
}

lcmlat_status lcmlat_hypergraph_from_file(const char* path,
                                          lcmlat_hypergraph** out) {
  return guarded([&] {
    require(path && out, "path and out");
    *out = new lcmlat_hypergraph{lcmlat::read_hypergraph_file(path)};
  });
}

void lcmlat_hypergraph_free(lcmlat_hypergraph* h) { delete h; }

lcmlat_status lcmlat_hypergraph_edge_ideal(const lcmlat_hypergraph* h,
                                           lcmlat_ideal** out) {
  return guarded([&] {
    require(h && out, "hypergraph and out");
    *out = new lcmlat_ideal{lcmlat::edge_ideal(h->graph)};
  });
}

lcmlat_status lcmlat_hypergraph_condition(const lcmlat_hypergraph* h,
                                          const char* name, int* holds,
                                          char** json) {
  return guarded([&] {
    require(h && name && holds, "hypergraph, name and holds");
    const auto v = lcmlat::check_condition(h->graph, name);
    const auto j = lcmlat::to_json(v, h->graph);
    put(json, j);
    *holds = v.status == lcmlat::ConditionStatus::kHypothesisNotMet
                 ? LCMLAT_NOT_APPLICABLE
                 : (v.holds() ? LCMLAT_TRUE : LCMLAT_FALSE);
  });
}

size_t lcmlat_condition_count(void) { return lcmlat::condition_names().size(); }

const char* lcmlat_condition_name(size_t i) {
  const auto& names = lcmlat::condition_names();
  return i < names.size() ? names[i].c_str() : nullptr;
}

lcmlat_status lcmlat_lattice_build(const lcmlat_ideal* ideal,
                                   const lcmlat_limits* limits,
                                   lcmlat_lattice** out) {
  return guarded([&] {
    require(ideal && out, "ideal and out");
    auto* handle = new lcmlat_lattice;
    try {
      handle->lcm = lcmlat::build_lcm_lattice(ideal->ideal, to_limits(limits));
    } catch (...) {
      delete handle;
      throw;
    }
    *out = handle;
  });
}

void lcmlat_lattice_free(lcmlat_lattice* lattice) { delete lattice; }

size_t lcmlat_lattice_size(const lcmlat_lattice* lattice) {
  return lattice ? lattice->get().size() : 0;
}

size_t lcmlat_lattice_atom_count(const lcmlat_lattice* lattice) {
  if (!lattice) return 0;
  return lattice->lcm ? lattice->lcm->atoms.size() : lattice->get().atoms().size();
}

lcmlat_status lcmlat_lattice_to_json(const lcmlat_lattice* lattice, char** json) {
  return guarded([&] {
    require(lattice && json, "lattice and json");
    put(json, lattice->lcm ? lcmlat::to_json(*lattice->lcm)
                           : lcmlat::to_json(lattice->get()));
  });
}

lcmlat_status lcmlat_lattice_to_dot(const lcmlat_lattice* lattice, char** dot) {
  return guarded([&] {
    require(lattice && dot, "lattice and dot");
    if (!lattice->lcm) {
      throw lcmlat::Error(lcmlat::ErrorCode::kPrecondition,
                          "DOT export needs a lattice built from an ideal");
    }
    *dot = dup_string(lcmlat::to_dot(*lattice->lcm));
  });
}

size_t lcmlat_property_count(void) { return lcmlat::property_names().size(); }

const char* lcmlat_property_name(size_t i) {
  const auto& names = lcmlat::property_names();
  return i < names.size() ? names[i].c_str() : nullptr;
}

lcmlat_status lcmlat_lattice_check(const lcmlat_lattice* lattice,
                                   const char* property, int* holds,
                                   char** json) {
  return guarded([&] {
    require(lattice && property && holds, "lattice, property and holds");
    if (lattice->lcm) {
      const auto v = lcmlat::check_property(*lattice->lcm, property);
      put(json, lcmlat::to_json(v, *lattice->lcm));
      *holds = v.holds ? LCMLAT_TRUE : LCMLAT_FALSE;
    } else {
      const auto& l = lattice->get();
      const auto v = lcmlat::check_property(l, property);
      const auto atoms = l.atoms();
      put(json, lcmlat::to_json(v, l, atoms));
      *holds = v.holds ? LCMLAT_TRUE : LCMLAT_FALSE;
    }
  });
}

lcmlat_status lcmlat_lattice_product(const lcmlat_lattice* first,
                                     const lcmlat_lattice* second,
                                     const lcmlat_limits* limits,
                                     lcmlat_lattice** out) {
  return guarded([&] {
    require(first && second && out, "lattices and out");
    auto prod = lcmlat::product(first->get(), second->get(), to_limits(limits));
    auto* handle = new lcmlat_lattice;
    handle->plain = std::move(prod);
    *out = handle;
  });
}

lcmlat_status lcmlat_lattice_isomorphism(const lcmlat_lattice* first,
                                         const lcmlat_lattice* second,
                                         int* isomorphic, char** json) {
  return guarded([&] {
    require(first && second && isomorphic, "lattices and isomorphic");
    const auto& a = first->get();
    const auto& b = second->get();
    const auto map = lcmlat::is_isomorphic(a, b);
    lcmlat::Json pairs = nullptr;
    if (map) {
      pairs = lcmlat::Json::array();
      for (lcmlat::Index i = 0; i < map->size(); ++i) {
        pairs.push_back(lcmlat::Json{{"from", a.label(i)}, {"to", b.label((*map)[i])}});
      }
    }
    put(json, lcmlat::Json{{"isomorphic", map.has_value()},
                           {"sizes", {a.size(), b.size()}},
                           {"map", pairs}});
    *isomorphic = map ? LCMLAT_TRUE : LCMLAT_FALSE;
  });
}

lcmlat_audit_config lcmlat_audit_config_default(void) {
  const lcmlat::GeneratorConfig d;
  lcmlat_audit_config c{};
  c.theorem = "boolean";
  c.seed = d.seed;
  c.n_lo = d.n.lo;
  c.n_hi = d.n.hi;
  c.k_lo = d.k.lo;
  c.k_hi = d.k.hi;
  c.m_lo = d.m.lo;
  c.m_hi = d.m.hi;
  c.max_exponent = d.max_exponent;
  c.count = d.count;
  c.exhaustive = d.exhaustive ? 1 : 0;
  c.limits = lcmlat_limits_default();
  c.corpus_dir = nullptr;
  return c;
}

size_t lcmlat_theorem_count(void) { return lcmlat::all_theorems().size(); }

const char* lcmlat_theorem_name(size_t i) {
  const auto& all = lcmlat::all_theorems();
  return i < all.size() ? lcmlat::to_string(all[i]) : nullptr;
}

lcmlat_status lcmlat_audit_run(const lcmlat_audit_config* config,
                               lcmlat_line_callback on_line, void* user_data,
                               size_t* disagreements) {
  return guarded([&] {
    require(config && config->theorem && on_line, "config, theorem and callback");
    const auto theorem = lcmlat::theorem_from_string(config->theorem);
    lcmlat::GeneratorConfig cfg;
    cfg.seed = config->seed;
    cfg.n = {config->n_lo, config->n_hi};
    cfg.k = {config->k_lo, config->k_hi};
    cfg.m = {config->m_lo, config->m_hi};
    cfg.max_exponent = config->max_exponent;
    cfg.count = config->count;
    cfg.exhaustive = config->exhaustive != 0;
    cfg.limits = to_limits(&config->limits);
    std::vector<lcmlat::AuditReport> bad;
    const auto summary = lcmlat::audit_batch(
        theorem, cfg, [&](const lcmlat::AuditReport& r) {
          if (config->corpus_dir && r.predicted && !r.agree) bad.push_back(r);
          on_line(lcmlat::to_json(r).dump().c_str(), user_data);
        });
    if (config->corpus_dir) lcmlat::write_counterexamples(config->corpus_dir, bad);
    on_line(lcmlat::to_json(summary).dump().c_str(), user_data);
    if (disagreements) *disagreements = summary.disagree;
  });
}

}  // extern "C"
