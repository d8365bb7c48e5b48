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

#include "conditions.hpp"

#include <algorithm>
#include <set>

#include "error.hpp"

namespace lcmlat {

namespace {

using Edge = std::vector<std::uint32_t>;

bool intersects(const Edge& a, const Edge& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return false;
}

bool covered_by(const Edge& e, const Edge& a, const Edge& b) {
  return std::all_of(e.begin(), e.end(), [&](std::uint32_t v) {
    return std::binary_search(a.begin(), a.end(), v) ||
           std::binary_search(b.begin(), b.end(), v);
  });
}

void require_uniform(const Hypergraph& h, const char* what) {
  if (!h.uniformity()) {
    throw Error(ErrorCode::kPrecondition,
                std::string(what) + " requires a uniform hypergraph");
  }
}

void require_connected_graph(const Hypergraph& g, const char* what) {
  if (!g.is_graph()) {
    throw Error(ErrorCode::kPrecondition,
                std::string(what) + " requires a graph (all edges of size 2)");
  }
  if (!g.is_connected()) {
    throw Error(ErrorCode::kPrecondition,
                std::string(what) + " requires a connected graph");
  }
}

/// Adjacency sets indexed by vertex (1-based; slot 0 unused).
std::vector<std::set<std::uint32_t>> adjacency(const Hypergraph& g) {
  std::vector<std::set<std::uint32_t>> adj(g.vertex_count() + 1);
  for (const auto& e : g.edges()) {
    if (e.size() != 2) continue;
    adj[e[0]].insert(e[1]);
    adj[e[1]].insert(e[0]);
  }
  return adj;
}

bool is_blocking(const Hypergraph& h, std::size_t i1, std::size_t i2,
                 std::size_t i3) {
  const auto& edges = h.edges();
  if (i1 == i2 || i2 == i3 || i1 == i3) return false;
  if (!intersects(edges[i1], edges[i2]) || !intersects(edges[i2], edges[i3]) ||
      !covered_by(edges[i2], edges[i1], edges[i3])) {
    return false;
  }
  for (std::size_t f = 0; f < edges.size(); ++f) {
    if (f == i2) continue;
    if (f != i1 && intersects(edges[i1], edges[f])) return false;
    if (f != i3 && intersects(edges[i3], edges[f])) return false;
  }
  return true;
}

/// Path order of W if G|_W is exactly a path on its four vertices.
std::optional<std::vector<std::uint32_t>> induced_path(
    const std::vector<std::set<std::uint32_t>>& adj,
    const std::vector<std::uint32_t>& w) {
  std::size_t edges = 0;
  std::vector<std::size_t> deg(4, 0);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (adj[w[i]].count(w[j])) {
        ++edges;
        ++deg[i];
        ++deg[j];
      }
    }
  }
  auto sorted = deg;
  std::sort(sorted.begin(), sorted.end());
  // Three edges on four vertices with degrees (1,1,2,2) is exactly P4.
  if (edges != 3 || sorted != std::vector<std::size_t>{1, 1, 2, 2}) {
    return std::nullopt;
  }
  std::size_t cur = 0;
  while (deg[cur] != 1) ++cur;
  std::vector<std::uint32_t> path{w[cur]};
  std::vector<bool> used(4, false);
  used[cur] = true;
  while (path.size() < 4) {
    for (std::size_t j = 0; j < 4; ++j) {
      if (!used[j] && adj[w[cur]].count(w[j])) {
        used[j] = true;
        cur = j;
        path.push_back(w[j]);
        break;
      }
    }
  }
  return path;
}

}  // namespace

const char* to_string(ConditionStatus status) {
  switch (status) {
    case ConditionStatus::kHolds: return "holds";
    case ConditionStatus::kFails: return "fails";
    case ConditionStatus::kHypothesisNotMet: return "hypothesis-not-met";
  }
  return "fails";
}

ConditionVerdict private_vertex_check(const Hypergraph& h) {
  ConditionVerdict v;
  v.condition = "private-vertex";
  v.status = ConditionStatus::kHolds;
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    std::optional<std::uint32_t> own;
    for (auto vertex : h.edges()[i]) {
      if (h.degree(vertex) == 1) {
        own = vertex;
        break;
      }
    }
    if (!own) {
      v.status = ConditionStatus::kFails;
      v.private_vertices.clear();
      v.offending_edge = i;
      return v;
    }
    v.private_vertices.emplace_back(i, *own);
  }
  return v;
}

ConditionVerdict uniform_n_minus_1_check(const Hypergraph& h) {
  ConditionVerdict v;
  v.condition = "uniform-n-minus-1";
  v.uniformity = h.uniformity();
  v.status = v.uniformity && *v.uniformity + 1 == h.vertex_count()
                 ? ConditionStatus::kHolds
                 : ConditionStatus::kFails;
  return v;
}

ConditionVerdict predicts_modular(const Hypergraph& h) {
  require_uniform(h, "the modularity prediction");
  ConditionVerdict v;
  v.condition = "predicts-modular";
  v.uniformity = h.uniformity();
  if (h.edge_count() <= 2) {
    v.status = ConditionStatus::kHypothesisNotMet;
    return v;
  }
  const auto a = private_vertex_check(h);
  const auto b = uniform_n_minus_1_check(h);
  if (a.holds()) {
    v.satisfied_by.push_back("a");
    v.private_vertices = a.private_vertices;
  } else {
    v.offending_edge = a.offending_edge;
  }
  if (b.holds()) v.satisfied_by.push_back("b");
  v.status = v.satisfied_by.empty() ? ConditionStatus::kFails
                                    : ConditionStatus::kHolds;
  return v;
}

ConditionVerdict degree1_path_check(const Hypergraph& g) {
  require_connected_graph(g, "the degree-1 path check");
  ConditionVerdict v;
  v.condition = "degree1-path";
  const auto adj = adjacency(g);
  const auto n = static_cast<std::uint32_t>(g.vertex_count());
  for (std::uint32_t x1 = 1; x1 <= n; ++x1) {
    if (adj[x1].size() != 1) continue;
    const std::uint32_t x2 = *adj[x1].begin();
    for (std::uint32_t x3 : adj[x2]) {
      if (x3 == x1) continue;
      for (std::uint32_t x4 : adj[x3]) {
        if (x4 == x1 || x4 == x2 || adj[x4].size() != 1) continue;
        v.status = ConditionStatus::kHolds;
        v.path = {x1, x2, x3, x4};
        return v;
      }
    }
  }
  return v;
}

ConditionVerdict blocking_triplet_check(const Hypergraph& h) {
  require_uniform(h, "the blocking-triplet check");
  ConditionVerdict v;
  v.condition = "blocking-triplet";
  const std::size_t m = h.edge_count();
  for (std::size_t i1 = 0; i1 < m; ++i1) {
    for (std::size_t i2 = 0; i2 < m; ++i2) {
      for (std::size_t i3 = 0; i3 < m; ++i3) {
        if (is_blocking(h, i1, i2, i3)) {
          v.status = ConditionStatus::kHolds;
          v.triplet = {i1, i2, i3};
          return v;
        }
      }
    }
  }
  return v;
}

ConditionVerdict induced_p4_check(const Hypergraph& g) {
  require_connected_graph(g, "the induced-P4 check");
  ConditionVerdict v;
  v.condition = "induced-p4";
  const auto adj = adjacency(g);
  const auto n = static_cast<std::uint32_t>(g.vertex_count());
  for (std::uint32_t a = 1; a <= n; ++a) {
    for (std::uint32_t b = a + 1; b <= n; ++b) {
      for (std::uint32_t c = b + 1; c <= n; ++c) {
        for (std::uint32_t d = c + 1; d <= n; ++d) {
          if (auto path = induced_path(adj, {a, b, c, d})) {
            v.status = ConditionStatus::kHolds;
            v.path = std::move(*path);
            return v;
          }
        }
      }
    }
  }
  return v;
}

const std::vector<std::string>& condition_names() {
  static const std::vector<std::string> kNames = {
      "private-vertex", "uniform-n-minus-1", "predicts-modular",
      "degree1-path",   "blocking-triplet",  "induced-p4"};
  return kNames;
}

ConditionVerdict check_condition(const Hypergraph& h, const std::string& name) {
  if (name == "private-vertex") return private_vertex_check(h);
  if (name == "uniform-n-minus-1") return uniform_n_minus_1_check(h);
  if (name == "predicts-modular") return predicts_modular(h);
  if (name == "degree1-path") return degree1_path_check(h);
  if (name == "blocking-triplet") return blocking_triplet_check(h);
  if (name == "induced-p4") return induced_p4_check(h);
  throw Error(ErrorCode::kInvalidArgument, "unknown condition '" + name + "'");
}

bool evidence_is_valid(const Hypergraph& h, const ConditionVerdict& v) {
  const auto& edges = h.edges();
  const auto adj = adjacency(h);
  auto is_edge = [&](std::uint32_t a, std::uint32_t b) {
    return a < adj.size() && adj[a].count(b) > 0;
  };
  if (v.condition == "private-vertex") {
    if (v.holds()) {
      if (v.private_vertices.size() != edges.size()) return false;
      for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto [edge, vertex] = v.private_vertices[i];
        if (edge != i || !h.edge_contains(i, vertex) || h.degree(vertex) != 1) {
          return false;
        }
      }
      return true;
    }
    if (!v.offending_edge || *v.offending_edge >= edges.size()) return false;
    return std::none_of(
        edges[*v.offending_edge].begin(), edges[*v.offending_edge].end(),
        [&](std::uint32_t vertex) { return h.degree(vertex) == 1; });
  }
  if (v.condition == "uniform-n-minus-1") {
    return v.uniformity == h.uniformity() &&
           v.holds() == (v.uniformity && *v.uniformity + 1 == h.vertex_count());
  }
  if (v.condition == "predicts-modular") {
    if (v.status == ConditionStatus::kHypothesisNotMet) {
      return h.edge_count() <= 2;
    }
    const bool a = private_vertex_check(h).holds();
    const bool b = uniform_n_minus_1_check(h).holds();
    std::vector<std::string> expect;
    if (a) expect.push_back("a");
    if (b) expect.push_back("b");
    return expect == v.satisfied_by && v.holds() == (a || b);
  }
  if (v.condition == "degree1-path") {
    if (!v.holds()) return v.path.empty() && !degree1_path_check(h).holds();
    const auto& p = v.path;
    if (p.size() != 4) return false;
    std::set<std::uint32_t> distinct(p.begin(), p.end());
    return distinct.size() == 4 && is_edge(p[0], p[1]) && is_edge(p[1], p[2]) &&
           is_edge(p[2], p[3]) && h.degree(p[0]) == 1 && h.degree(p[3]) == 1;
  }
  if (v.condition == "blocking-triplet") {
    if (!v.holds()) return v.triplet.empty() && !blocking_triplet_check(h).holds();
    const auto& t = v.triplet;
    return t.size() == 3 && t[0] < edges.size() && t[1] < edges.size() &&
           t[2] < edges.size() && is_blocking(h, t[0], t[1], t[2]);
  }
  if (v.condition == "induced-p4") {
    if (!v.holds()) return v.path.empty() && !induced_p4_check(h).holds();
    const auto& p = v.path;
    if (p.size() != 4) return false;
    std::set<std::uint32_t> distinct(p.begin(), p.end());
    if (distinct.size() != 4) return false;
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = i + 1; j < 4; ++j) {
        if (is_edge(p[i], p[j]) != (j == i + 1)) return false;
      }
    }
    return true;
  }
  return false;
}

}  // namespace lcmlat
