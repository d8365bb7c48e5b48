/*
 * Copyright 2026 The lcmlat Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef LCMLAT_LCMLAT_H_
#define LCMLAT_LCMLAT_H_

/*
 * C interface to the lcm-lattice library.
 *
 * Every fallible call returns an lcmlat_status; on failure the message is
 * available from lcmlat_last_error_message() on the same thread until the
 * next call. Handles are opaque and owned by the caller; release them with
 * the matching *_free. Strings returned through char** out-parameters are
 * NUL-terminated and released with lcmlat_string_free.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define LCMLAT_API __declspec(dllexport)
#elif defined(__GNUC__)
#define LCMLAT_API __attribute__((visibility("default")))
#else
#define LCMLAT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lcmlat_status {
  LCMLAT_OK = 0,
  LCMLAT_ERR_INVALID_ARGUMENT = 1,
  LCMLAT_ERR_PARSE = 2,
  LCMLAT_ERR_DIMENSION = 3,
  LCMLAT_ERR_SIZE_LIMIT = 4,
  LCMLAT_ERR_PRECONDITION = 5,
  LCMLAT_ERR_INFEASIBLE = 6,
  LCMLAT_ERR_IO = 7,
  LCMLAT_ERR_INTERNAL = 8
} lcmlat_status;

typedef struct lcmlat_ideal lcmlat_ideal;
typedef struct lcmlat_hypergraph lcmlat_hypergraph;
typedef struct lcmlat_lattice lcmlat_lattice;

/* Tri-state result for checks whose hypothesis may not cover the input. */
enum { LCMLAT_FALSE = 0, LCMLAT_TRUE = 1, LCMLAT_NOT_APPLICABLE = -1 };

typedef struct lcmlat_limits {
  size_t max_generators;
  size_t max_lattice;
  size_t max_product;
} lcmlat_limits;

LCMLAT_API const char* lcmlat_version(void);
/* Stable kebab-case name, e.g. "size-limit". */
LCMLAT_API const char* lcmlat_status_name(lcmlat_status status);
LCMLAT_API const char* lcmlat_last_error_message(void);
LCMLAT_API void lcmlat_string_free(char* s);
LCMLAT_API lcmlat_limits lcmlat_limits_default(void);

/* Ideals. Text format: "ring <n>" then one monomial per line. */
LCMLAT_API lcmlat_status lcmlat_ideal_from_string(const char* text,
                                                  lcmlat_ideal** out);
LCMLAT_API lcmlat_status lcmlat_ideal_from_file(const char* path,
                                                lcmlat_ideal** out);
LCMLAT_API void lcmlat_ideal_free(lcmlat_ideal* ideal);
LCMLAT_API size_t lcmlat_ideal_generator_count(const lcmlat_ideal* ideal);
LCMLAT_API lcmlat_status lcmlat_ideal_to_json(const lcmlat_ideal* ideal,
                                              char** json);
/* Square-free polarization. map_json may be NULL. */
LCMLAT_API lcmlat_status lcmlat_ideal_polarize(const lcmlat_ideal* ideal,
                                               lcmlat_ideal** out,
                                               char** map_json);

/* Hypergraphs: {"n": <int>, "edges": [[...], ...]} with 1-based vertices. */
LCMLAT_API lcmlat_status lcmlat_hypergraph_from_json_string(
    const char* json, lcmlat_hypergraph** out);
LCMLAT_API lcmlat_status lcmlat_hypergraph_from_file(const char* path,
                                                     lcmlat_hypergraph** out);
LCMLAT_API void lcmlat_hypergraph_free(lcmlat_hypergraph* h);
LCMLAT_API lcmlat_status lcmlat_hypergraph_edge_ideal(
    const lcmlat_hypergraph* h, lcmlat_ideal** out);
/* Runs a named combinatorial condition. *holds receives LCMLAT_TRUE,
 * LCMLAT_FALSE or LCMLAT_NOT_APPLICABLE; json (may be NULL) the verdict. */
LCMLAT_API lcmlat_status lcmlat_hypergraph_condition(
    const lcmlat_hypergraph* h, const char* name, int* holds, char** json);
/* Number of condition names and the i-th name, in the documented order. */
LCMLAT_API size_t lcmlat_condition_count(void);
LCMLAT_API const char* lcmlat_condition_name(size_t i);

/* Lattices. limits may be NULL for the defaults. */
LCMLAT_API lcmlat_status lcmlat_lattice_build(const lcmlat_ideal* ideal,
                                              const lcmlat_limits* limits,
                                              lcmlat_lattice** out);
LCMLAT_API void lcmlat_lattice_free(lcmlat_lattice* lattice);
LCMLAT_API size_t lcmlat_lattice_size(const lcmlat_lattice* lattice);
LCMLAT_API size_t lcmlat_lattice_atom_count(const lcmlat_lattice* lattice);
LCMLAT_API lcmlat_status lcmlat_lattice_to_json(const lcmlat_lattice* lattice,
                                                char** json);
/* Only for lattices built from an ideal. */
LCMLAT_API lcmlat_status lcmlat_lattice_to_dot(const lcmlat_lattice* lattice,
                                               char** dot);
/* Property names: boolean, modular, distributive, complemented,
 * relatively-complemented. */
LCMLAT_API size_t lcmlat_property_count(void);
LCMLAT_API const char* lcmlat_property_name(size_t i);
LCMLAT_API lcmlat_status lcmlat_lattice_check(const lcmlat_lattice* lattice,
                                              const char* property, int* holds,
                                              char** json);
LCMLAT_API lcmlat_status lcmlat_lattice_product(const lcmlat_lattice* first,
                                                const lcmlat_lattice* second,
                                                const lcmlat_limits* limits,
                                                lcmlat_lattice** out);
/* *isomorphic receives LCMLAT_TRUE or LCMLAT_FALSE; json (may be NULL) holds
 * the element map when one exists. */
LCMLAT_API lcmlat_status lcmlat_lattice_isomorphism(
    const lcmlat_lattice* first, const lcmlat_lattice* second,
    int* isomorphic, char** json);

/* Theorem audits. */
typedef struct lcmlat_audit_config {
  const char* theorem;
  uint64_t seed;
  size_t n_lo, n_hi;
  size_t k_lo, k_hi;
  size_t m_lo, m_hi;
  uint32_t max_exponent;
  size_t count;
  int exhaustive;
  lcmlat_limits limits;
  /* Directory for disagreeing instances; NULL to skip. */
  const char* corpus_dir;
} lcmlat_audit_config;

typedef void (*lcmlat_line_callback)(const char* line, void* user_data);

LCMLAT_API lcmlat_audit_config lcmlat_audit_config_default(void);
LCMLAT_API size_t lcmlat_theorem_count(void);
LCMLAT_API const char* lcmlat_theorem_name(size_t i);
/* Streams one JSON line per instance, then a summary line. */
LCMLAT_API lcmlat_status lcmlat_audit_run(const lcmlat_audit_config* config,
                                          lcmlat_line_callback on_line,
                                          void* user_data,
                                          size_t* disagreements);

#ifdef __cplusplus
}
#endif

#endif /* LCMLAT_LCMLAT_H_ */
