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

#include <string>
#include <vector>

#include "lcmlat/lcmlat.h"

namespace {

const std::string kData = LCMLAT_TEST_DATA;

std::string take(char* s) {
  std::string out = s ? s : "";
  lcmlat_string_free(s);
  return out;
}

lcmlat_lattice* build_file(const std::string& name) {
  lcmlat_ideal* ideal = nullptr;
  REQUIRE(lcmlat_ideal_from_file((kData + "/" + name).c_str(), &ideal) == LCMLAT_OK);
  lcmlat_lattice* l = nullptr;
  REQUIRE(lcmlat_lattice_build(ideal, nullptr, &l) == LCMLAT_OK);
  lcmlat_ideal_free(ideal);
  return l;
}

void collect(const char* line, void* user) {
  static_cast<std::vector<std::string>*>(user)->emplace_back(line);
}

}  // namespace

TEST_CASE("build and inspect through the C API") {
  lcmlat_lattice* l = build_file("fig3.ideal");
  CHECK(lcmlat_lattice_size(l) == 7);
  CHECK(lcmlat_lattice_atom_count(l) == 3);
  char* json = nullptr;
  REQUIRE(lcmlat_lattice_to_json(l, &json) == LCMLAT_OK);
  CHECK(take(json).find("\"covers\"") != std::string::npos);
  char* dot = nullptr;
  REQUIRE(lcmlat_lattice_to_dot(l, &dot) == LCMLAT_OK);
  CHECK(take(dot).rfind("digraph", 0) == 0);

  int holds = -5;
  REQUIRE(lcmlat_lattice_check(l, "modular", &holds, &json) == LCMLAT_OK);
  CHECK(holds == LCMLAT_FALSE);
  CHECK(take(json).find("x1*x2*x3*x4") != std::string::npos);
  CHECK(lcmlat_lattice_check(l, "nope", &holds, nullptr) == LCMLAT_ERR_INVALID_ARGUMENT);
  CHECK(std::string(lcmlat_last_error_message()).find("nope") != std::string::npos);
  lcmlat_lattice_free(l);
}

TEST_CASE("errors map to status codes") {
  lcmlat_ideal* ideal = nullptr;
  CHECK(lcmlat_ideal_from_string("ring 2\nx3\n", &ideal) == LCMLAT_ERR_PARSE);
  CHECK(ideal == nullptr);
  CHECK(lcmlat_ideal_from_file("/nonexistent/x.ideal", &ideal) == LCMLAT_ERR_IO);
  CHECK(lcmlat_ideal_from_string(nullptr, &ideal) == LCMLAT_ERR_INVALID_ARGUMENT);
  CHECK(std::string(lcmlat_status_name(LCMLAT_ERR_SIZE_LIMIT)) == "size-limit");

  REQUIRE(lcmlat_ideal_from_file((kData + "/fig3.ideal").c_str(), &ideal) == LCMLAT_OK);
  lcmlat_limits limits = lcmlat_limits_default();
  limits.max_lattice = 3;
  lcmlat_lattice* l = nullptr;
  CHECK(lcmlat_lattice_build(ideal, &limits, &l) == LCMLAT_ERR_SIZE_LIMIT);
  lcmlat_ideal_free(ideal);
}

TEST_CASE("hypergraph conditions") {
  lcmlat_hypergraph* h = nullptr;
  REQUIRE(lcmlat_hypergraph_from_file((kData + "/fig5.json").c_str(), &h) == LCMLAT_OK);
  int holds = 0;
  char* json = nullptr;
  REQUIRE(lcmlat_hypergraph_condition(h, "degree1-path", &holds, &json) == LCMLAT_OK);
  CHECK(holds == LCMLAT_TRUE);
  CHECK(take(json).find("[3,1,2,4]") != std::string::npos);
  REQUIRE(lcmlat_hypergraph_condition(h, "predicts-modular", &holds, nullptr) == LCMLAT_OK);
  CHECK(holds == LCMLAT_FALSE);
  CHECK(lcmlat_condition_count() == 6);
  lcmlat_ideal* ideal = nullptr;
  REQUIRE(lcmlat_hypergraph_edge_ideal(h, &ideal) == LCMLAT_OK);
  CHECK(lcmlat_ideal_generator_count(ideal) == 3);
  lcmlat_ideal_free(ideal);
  lcmlat_hypergraph_free(h);
  CHECK(lcmlat_hypergraph_from_json_string("{\"n\":2,\"edges\":[[1,3]]}", &h) ==
        LCMLAT_ERR_PARSE);
}

TEST_CASE("polarize, product and isomorphism") {
  lcmlat_ideal* ideal = nullptr;
  REQUIRE(lcmlat_ideal_from_file((kData + "/pol.ideal").c_str(), &ideal) == LCMLAT_OK);
  lcmlat_ideal* pol = nullptr;
  char* map = nullptr;
  REQUIRE(lcmlat_ideal_polarize(ideal, &pol, &map) == LCMLAT_OK);
  CHECK(take(map).find("\"slot_counts\":[2,3]") != std::string::npos);
  lcmlat_lattice *a = nullptr, *b = nullptr;
  REQUIRE(lcmlat_lattice_build(ideal, nullptr, &a) == LCMLAT_OK);
  REQUIRE(lcmlat_lattice_build(pol, nullptr, &b) == LCMLAT_OK);
  int iso = 0;
  char* json = nullptr;
  REQUIRE(lcmlat_lattice_isomorphism(a, b, &iso, &json) == LCMLAT_OK);
  CHECK(iso == LCMLAT_TRUE);
  lcmlat_string_free(json);

  lcmlat_lattice* f3 = build_file("fig3.ideal");
  lcmlat_lattice* f5 = build_file("fig5.ideal");
  REQUIRE(lcmlat_lattice_isomorphism(f3, f5, &iso, nullptr) == LCMLAT_OK);
  CHECK(iso == LCMLAT_TRUE);
  lcmlat_lattice* prod = nullptr;
  REQUIRE(lcmlat_lattice_product(f3, a, nullptr, &prod) == LCMLAT_OK);
  CHECK(lcmlat_lattice_size(prod) == 7 * lcmlat_lattice_size(a));
  int holds = 0;
  REQUIRE(lcmlat_lattice_check(prod, "complemented", &holds, nullptr) == LCMLAT_OK);
  CHECK(holds == LCMLAT_FALSE);
  char* dot = nullptr;
  CHECK(lcmlat_lattice_to_dot(prod, &dot) == LCMLAT_ERR_PRECONDITION);
  for (auto* p : {a, b, f3, f5, prod}) lcmlat_lattice_free(p);
  lcmlat_ideal_free(ideal);
  lcmlat_ideal_free(pol);
}

TEST_CASE("audit streaming") {
  auto cfg = lcmlat_audit_config_default();
  cfg.theorem = "polarization-iso";
  cfg.seed = 7;
  cfg.count = 10;
  std::vector<std::string> first, second;
  size_t bad = 99;
  REQUIRE(lcmlat_audit_run(&cfg, collect, &first, &bad) == LCMLAT_OK);
  REQUIRE(lcmlat_audit_run(&cfg, collect, &second, nullptr) == LCMLAT_OK);
  CHECK(bad == 0);
  CHECK(first.size() == 11);
  CHECK(first == second);
  CHECK(first.back().rfind("{\"summary\"", 0) == 0);
  cfg.theorem = "fermat";
  CHECK(lcmlat_audit_run(&cfg, collect, &first, nullptr) == LCMLAT_ERR_INVALID_ARGUMENT);
  CHECK(lcmlat_theorem_count() == 8);
}
