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

#include "io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "error.hpp"

namespace lcmlat {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

Json element_json(const FiniteLattice& l, Index i) {
  return Json{{"index", i}, {"label", l.label(i)}};
}

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

MonomialIdeal parse_ideal(std::string_view text) {
  std::optional<std::size_t> ring;
  std::vector<Monomial> gens;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    auto line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos
                                                              : nl - pos);
    ++line_no;
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto where = "line " + std::to_string(line_no) + ": ";
    if (!ring) {
      if (line.substr(0, 4) != "ring") {
        throw Error(ErrorCode::kParse, where + "expected 'ring <n>' header");
      }
      const auto num = std::string(trim(line.substr(4)));
      std::size_t used = 0;
      long long n = 0;
      try {
        n = std::stoll(num, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (num.empty() || used != num.size() || n <= 0) {
        throw Error(ErrorCode::kParse, where + "malformed ring dimension");
      }
      ring = static_cast<std::size_t>(n);
      continue;
    }
    try {
      gens.push_back(parse_monomial(line, *ring));
    } catch (const Error& e) {
      throw Error(e.code(), where + e.what());
    }
  }
  if (!ring) throw Error(ErrorCode::kParse, "missing 'ring <n>' header");
  if (gens.empty()) throw Error(ErrorCode::kParse, "ideal file has no generators");
  return MonomialIdeal(*ring, std::move(gens));
}

std::string format_ideal(const MonomialIdeal& ideal) {
  std::string out = "ring " + std::to_string(ideal.ring_dimension()) + "\n";
  for (const auto& g : ideal.generators()) out += to_string(g) + "\n";
  return out;
}

Hypergraph hypergraph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges") ||
      !j["n"].is_number_integer() || !j["edges"].is_array()) {
    throw Error(ErrorCode::kParse,
                "hypergraph JSON needs integer 'n' and array 'edges'");
  }
  const auto n = j["n"].get<long long>();
  if (n <= 0) throw Error(ErrorCode::kParse, "hypergraph 'n' must be positive");
  std::vector<std::vector<std::uint32_t>> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array()) throw Error(ErrorCode::kParse, "each edge must be an array");
    std::vector<std::uint32_t> edge;
    for (const auto& v : e) {
      if (!v.is_number_integer() || v.get<long long>() < 1 ||
          v.get<long long>() > n) {
        throw Error(ErrorCode::kParse, "edge vertex outside 1.." + std::to_string(n));
      }
      edge.push_back(v.get<std::uint32_t>());
    }
    edges.push_back(std::move(edge));
  }
  return Hypergraph(static_cast<std::size_t>(n), std::move(edges));
}

Hypergraph parse_hypergraph(std::string_view json_text) {
  Json j;
  try {
    j = Json::parse(json_text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::kParse, std::string("hypergraph JSON: ") + e.what());
  }
  return hypergraph_from_json(j);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

MonomialIdeal read_ideal_file(const std::string& path) {
  return parse_ideal(read_file(path));
}

Hypergraph read_hypergraph_file(const std::string& path) {
  return parse_hypergraph(read_file(path));
}

Json to_json(const MonomialIdeal& ideal) {
  Json gens = Json::array();
  for (const auto& g : ideal.generators()) gens.push_back(to_string(g));
  return Json{{"ring", ideal.ring_dimension()}, {"generators", gens}};
}

Json to_json(const Hypergraph& h) {
  return Json{{"n", h.vertex_count()}, {"edges", h.edges()}};
}

Json to_json(const Polarization& p) {
  Json vars = Json::array();
  for (std::size_t i = 0; i < p.map.polarized_dimension(); ++i) {
    const auto [var, slot] = p.map.source_of(i);
    vars.push_back(Json{{"index", i + 1}, {"source", var + 1}, {"slot", slot}});
  }
  return Json{{"ideal", to_json(p.ideal)},
              {"map",
               {{"source_dimension", p.map.source_dimension()},
                {"slot_counts", p.map.slot_counts()},
                {"variables", vars}}}};
}

Json to_json(const FiniteLattice& l) {
  Json covers = Json::array();
  for (const auto& [a, b] : hasse_edges(l)) covers.push_back(Json::array({a, b}));
  Json elements = Json::array();
  for (Index i = 0; i < l.size(); ++i) elements.push_back(l.label(i));
  return Json{{"elements", elements}, {"atoms", l.atoms()}, {"covers", covers}};
}

Json to_json(const LcmLattice& l) {
  Json j = to_json(l.lattice);
  j["atoms"] = l.atoms;
  return j;
}

std::string to_dot(const LcmLattice& l) {
  const auto& lat = l.lattice;
  auto node = [&](Index i) {
    return dot_quote(i == lat.bottom() ? std::string("1") : lat.label(i));
  };
  std::ostringstream out;
  out << "digraph lcm_lattice {\n  rankdir=BT;\n";
  std::map<std::uint64_t, std::vector<Index>> by_degree;
  for (Index i = 0; i < lat.size(); ++i) {
    const std::string label = i == lat.bottom() ? "0̂" : lat.label(i);
    out << "  " << node(i) << " [label=" << dot_quote(label) << "];\n";
    by_degree[l.elements[i].degree()].push_back(i);
  }
  for (const auto& [a, b] : hasse_edges(lat)) {
    out << "  " << node(a) << " -> " << node(b) << ";\n";
  }
  for (const auto& [degree, members] : by_degree) {
    out << "  { rank=same;";
    for (Index i : members) out << ' ' << node(i) << ';';
    out << " }\n";
  }
  out << "}\n";
  return out.str();
}

Json to_json(const PropertyVerdict& v, const FiniteLattice& l,
             std::span<const Index> atoms) {
  Json witness = nullptr;
  if (!v.witness.empty()) {
    witness = Json::object();
    for (const auto& e : v.witness) {
      if (e.kind == WitnessEntry::Kind::kElement) {
        witness[e.role] = element_json(l, e.indices.at(0));
      } else {
        Json labels = Json::array();
        for (Index p : e.indices) {
          labels.push_back(p < atoms.size() ? l.label(atoms[p]) : std::string("?"));
        }
        witness[e.role] = Json{{"generators", e.indices}, {"labels", labels}};
      }
    }
  }
  return Json{{"property", v.property}, {"holds", v.holds}, {"witness", witness}};
}

Json to_json(const PropertyVerdict& v, const LcmLattice& l) {
  return to_json(v, l.lattice, l.atoms);
}

Json to_json(const ConditionVerdict& v, const Hypergraph& h) {
  Json evidence = Json::object();
  if (!v.private_vertices.empty()) {
    Json pv = Json::array();
    for (const auto& [edge, vertex] : v.private_vertices) {
      pv.push_back(Json{{"edge", h.edges()[edge]}, {"vertex", vertex}});
    }
    evidence["private_vertices"] = pv;
  }
  if (v.offending_edge) {
    evidence["offending_edge"] = h.edges()[*v.offending_edge];
  }
  if (v.uniformity) evidence["k"] = *v.uniformity;
  if (v.condition == "uniform-n-minus-1" || v.condition == "predicts-modular") {
    evidence["n"] = h.vertex_count();
  }
  if (!v.satisfied_by.empty()) evidence["satisfied_by"] = v.satisfied_by;
  if (!v.path.empty()) evidence["path"] = v.path;
  if (!v.triplet.empty()) {
    Json t = Json::array();
    for (auto i : v.triplet) t.push_back(h.edges()[i]);
    evidence["triplet"] = t;
  }
  Json out{{"condition", v.condition},
           {"status", to_string(v.status)},
           {"evidence", evidence}};
  if (v.status == ConditionStatus::kHypothesisNotMet) {
    out["holds"] = nullptr;
  } else {
    out["holds"] = v.holds();
  }
  return out;
}

}  // namespace lcmlat
