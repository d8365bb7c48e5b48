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

#include "monomial.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "error.hpp"

namespace lcmlat {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kParse: return "parse";
    case ErrorCode::kDimensionMismatch: return "dimension-mismatch";
    case ErrorCode::kSizeLimit: return "size-limit";
    case ErrorCode::kPrecondition: return "precondition";
    case ErrorCode::kInfeasible: return "infeasible";
    case ErrorCode::kIo: return "io";
    case ErrorCode::kInternal: return "internal";
  }
  return "internal";
}

namespace {

void require_same_dimension(const Monomial& a, const Monomial& b) {
  if (a.dimension() != b.dimension()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "monomials live in rings of dimension " +
                    std::to_string(a.dimension()) + " and " +
                    std::to_string(b.dimension()));
  }
}

}  // namespace

Monomial::Monomial(std::vector<Exponent> exponents)
    : exponents_(std::move(exponents)) {
  for (Exponent e : exponents_) {
    if (e > kMaxExponent) {
      throw Error(ErrorCode::kInvalidArgument,
                  "exponent " + std::to_string(e) + " exceeds limit " +
                      std::to_string(kMaxExponent));
    }
  }
}

Monomial Monomial::unit(std::size_t dimension) {
  return Monomial(std::vector<Exponent>(dimension, 0));
}

Monomial Monomial::square_free(std::size_t dimension,
                               std::span<const std::size_t> variables) {
  std::vector<Exponent> exps(dimension, 0);
  for (std::size_t v : variables) {
    if (v >= dimension) {
      throw Error(ErrorCode::kInvalidArgument,
                  "variable index " + std::to_string(v + 1) +
                      " outside ring of dimension " +
                      std::to_string(dimension));
    }
    exps[v] = 1;
  }
  return Monomial(std::move(exps));
}

bool Monomial::is_unit() const noexcept {
  return std::all_of(exponents_.begin(), exponents_.end(),
                     [](Exponent e) { return e == 0; });
}

bool Monomial::is_square_free() const noexcept {
  return std::all_of(exponents_.begin(), exponents_.end(),
                     [](Exponent e) { return e <= 1; });
}

std::uint64_t Monomial::degree() const noexcept {
  return std::accumulate(exponents_.begin(), exponents_.end(),
                         std::uint64_t{0});
}

std::vector<std::size_t> Monomial::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] > 0) out.push_back(i);
  }
  return out;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  // FNV-1a over the exponent words.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (Exponent e : m.exponents()) {
    h ^= e;
    h *= 0x100000001b3ULL;
  }
  return static_cast<std::size_t>(h);
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_dimension(a, b);
  std::vector<Exponent> out(a.dimension());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::max(a[i], b[i]);
  return Monomial(std::move(out));
}

bool divides(const Monomial& a, const Monomial& b) {
  require_same_dimension(a, b);
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

bool canonical_less(const Monomial& a, const Monomial& b) {
  const auto da = a.degree();
  const auto db = b.degree();
  if (da != db) return da < db;
  return std::lexicographical_compare(b.exponents().begin(),
                                      b.exponents().end(),
                                      a.exponents().begin(),
                                      a.exponents().end());
}

std::vector<Monomial> minimalize(std::span<const Monomial> generators) {
  if (generators.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "ideal needs at least one generator");
  }
  const std::size_t dim = generators.front().dimension();
  for (const auto& g : generators) {
    if (g.dimension() != dim) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "generators have differing ring dimensions");
    }
    if (g.is_unit()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "unit generator: the ideal would be the whole ring");
    }
  }
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    bool keep = true;
    for (std::size_t j = 0; j < generators.size() && keep; ++j) {
      if (i == j) continue;
      if (generators[j] == generators[i]) {
        keep = j > i;  // first copy survives
      } else if (divides(generators[j], generators[i])) {
        keep = false;
      }
    }
    if (keep) out.push_back(generators[i]);
  }
  return out;
}

MonomialIdeal::MonomialIdeal(std::size_t ring_dimension,
                             std::vector<Monomial> generators)
    : ring_dimension_(ring_dimension) {
  if (ring_dimension == 0) {
    throw Error(ErrorCode::kInvalidArgument, "ring dimension must be positive");
  }
  for (const auto& g : generators) {
    if (g.dimension() != ring_dimension) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "generator of dimension " + std::to_string(g.dimension()) +
                      " in ring of dimension " +
                      std::to_string(ring_dimension));
    }
  }
  generators_ = minimalize(generators);
}

bool MonomialIdeal::is_square_free() const noexcept {
  return std::all_of(generators_.begin(), generators_.end(),
                     [](const Monomial& g) { return g.is_square_free(); });
}

Hypergraph::Hypergraph(std::size_t vertex_count,
                       std::vector<std::vector<std::uint32_t>> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count_ == 0) {
    throw Error(ErrorCode::kInvalidArgument, "hypergraph needs n >= 1");
  }
  if (edges_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "hypergraph needs at least one edge");
  }
  for (auto& e : edges_) {
    if (e.empty()) throw Error(ErrorCode::kInvalidArgument, "empty edge");
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
      throw Error(ErrorCode::kInvalidArgument, "edge repeats a vertex");
    }
    if (e.front() < 1 || e.back() > vertex_count_) {
      throw Error(ErrorCode::kInvalidArgument,
                  "edge vertex outside 1.." + std::to_string(vertex_count_));
    }
  }
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    for (std::size_t j = 0; j < edges_.size(); ++j) {
      if (i == j) continue;
      if (std::includes(edges_[j].begin(), edges_[j].end(), edges_[i].begin(),
                        edges_[i].end())) {
        throw Error(ErrorCode::kInvalidArgument,
                    edges_[i] == edges_[j] ? "duplicate edge"
                                           : "edge contained in another edge");
      }
    }
  }
}

std::optional<std::size_t> Hypergraph::uniformity() const {
  const std::size_t k = edges_.front().size();
  for (const auto& e : edges_) {
    if (e.size() != k) return std::nullopt;
  }
  return k;
}

std::size_t Hypergraph::degree(std::uint32_t vertex) const {
  std::size_t d = 0;
  for (std::size_t i = 0; i < edges_.size(); ++i) d += edge_contains(i, vertex);
  return d;
}

bool Hypergraph::edge_contains(std::size_t edge, std::uint32_t vertex) const {
  const auto& e = edges_[edge];
  return std::binary_search(e.begin(), e.end(), vertex);
}

bool Hypergraph::is_connected() const {
  std::vector<bool> seen(vertex_count_ + 1, false);
  std::vector<std::uint32_t> stack{1};
  seen[1] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (const auto& e : edges_) {
      if (!std::binary_search(e.begin(), e.end(), v)) continue;
      for (auto w : e) {
        if (!seen[w]) {
          seen[w] = true;
          ++reached;
          stack.push_back(w);
        }
      }
    }
  }
  return reached == vertex_count_;
}

MonomialIdeal edge_ideal(const Hypergraph& hypergraph) {
  std::vector<Monomial> gens;
  gens.reserve(hypergraph.edge_count());
  for (const auto& e : hypergraph.edges()) {
    std::vector<std::size_t> vars(e.begin(), e.end());
    for (auto& v : vars) --v;
    gens.push_back(Monomial::square_free(hypergraph.vertex_count(), vars));
  }
  return MonomialIdeal(hypergraph.vertex_count(), std::move(gens));
}

PolarizationMap::PolarizationMap(std::size_t source_dimension,
                                 std::vector<Exponent> slot_counts)
    : source_dimension_(source_dimension), slot_counts_(std::move(slot_counts)) {
  if (slot_counts_.size() != source_dimension_) {
    throw Error(ErrorCode::kDimensionMismatch,
                "slot counts do not match source dimension");
  }
  offsets_.reserve(source_dimension_);
  for (Exponent a : slot_counts_) {
    offsets_.push_back(total_);
    total_ += a;
  }
}

std::size_t PolarizationMap::polarized_index(std::size_t variable,
                                             Exponent slot) const {
  if (variable >= source_dimension_ || slot < 1 ||
      slot > slot_counts_[variable]) {
    throw Error(ErrorCode::kInvalidArgument, "no such polarized variable");
  }
  return offsets_[variable] + (slot - 1);
}

std::pair<std::size_t, Exponent> PolarizationMap::source_of(
    std::size_t polarized) const {
  if (polarized >= total_) {
    throw Error(ErrorCode::kInvalidArgument, "polarized index out of range");
  }
  const auto it =
      std::upper_bound(offsets_.begin(), offsets_.end(), polarized);
  // Several variables may share an offset when a slot count is zero; the
  // last of them is the one that owns the slot.
  const std::size_t var = static_cast<std::size_t>(it - offsets_.begin()) - 1;
  return {var, static_cast<Exponent>(polarized - offsets_[var] + 1)};
}

Monomial PolarizationMap::polarize(const Monomial& m) const {
  if (m.dimension() != source_dimension_) {
    throw Error(ErrorCode::kDimensionMismatch,
                "monomial does not live in the source ring");
  }
  std::vector<Exponent> out(total_, 0);
  for (std::size_t i = 0; i < source_dimension_; ++i) {
    if (m[i] > slot_counts_[i]) {
      throw Error(ErrorCode::kInvalidArgument,
                  "exponent exceeds the polarization slot count");
    }
    for (Exponent k = 0; k < m[i]; ++k) out[offsets_[i] + k] = 1;
  }
  return Monomial(std::move(out));
}

Monomial PolarizationMap::depolarize(const Monomial& m) const {
  if (m.dimension() != total_) {
    throw Error(ErrorCode::kDimensionMismatch,
                "monomial does not live in the polarized ring");
  }
  std::vector<Exponent> out(source_dimension_, 0);
  for (std::size_t p = 0; p < total_; ++p) {
    if (m[p] > 0) ++out[source_of(p).first];
  }
  return Monomial(std::move(out));
}

Polarization polarize(const MonomialIdeal& ideal) {
  const std::size_t n = ideal.ring_dimension();
  std::vector<Exponent> slots(n, 0);
  for (const auto& g : ideal.generators()) {
    for (std::size_t i = 0; i < n; ++i) slots[i] = std::max(slots[i], g[i]);
  }
  PolarizationMap map(n, std::move(slots));
  std::vector<Monomial> gens;
  gens.reserve(ideal.size());
  for (const auto& g : ideal.generators()) gens.push_back(map.polarize(g));
  return {MonomialIdeal(map.polarized_dimension(), std::move(gens)),
          std::move(map)};
}

std::string to_string(const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.dimension(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i + 1);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::uint64_t parse_number(std::string_view digits, std::string_view whole) {
  std::uint64_t value = 0;
  const auto* end = digits.data() + digits.size();
  const auto [ptr, ec] = std::from_chars(digits.data(), end, value);
  if (digits.empty() || ec != std::errc{} || ptr != end) {
    throw Error(ErrorCode::kParse,
                "malformed monomial '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Monomial parse_monomial(std::string_view text, std::size_t dimension) {
  const auto body = trim(text);
  if (body == "1") return Monomial::unit(dimension);
  if (body.empty()) throw Error(ErrorCode::kParse, "empty monomial");
  std::vector<std::uint64_t> exps(dimension, 0);
  std::size_t pos = 0;
  while (pos <= body.size()) {
    const auto star = body.find('*', pos);
    const auto factor = trim(body.substr(
        pos, star == std::string_view::npos ? std::string_view::npos
                                            : star - pos));
    if (factor.size() < 2 || factor[0] != 'x') {
      throw Error(ErrorCode::kParse,
                  "malformed factor '" + std::string(factor) + "' in '" +
                      std::string(body) + "'");
    }
    const auto caret = factor.find('^');
    const auto var = parse_number(factor.substr(1, caret == std::string_view::npos
                                                       ? std::string_view::npos
                                                       : caret - 1),
                                  body);
    const std::uint64_t e =
        caret == std::string_view::npos
            ? 1
            : parse_number(factor.substr(caret + 1), body);
    if (var < 1 || var > dimension) {
      throw Error(ErrorCode::kParse, "variable x" + std::to_string(var) +
                                         " outside ring of dimension " +
                                         std::to_string(dimension));
    }
    exps[var - 1] += e;
    if (exps[var - 1] > kMaxExponent) {
      throw Error(ErrorCode::kInvalidArgument,
                  "exponent of x" + std::to_string(var) + " exceeds limit " +
                      std::to_string(kMaxExponent));
    }
    if (star == std::string_view::npos) break;
    pos = star + 1;
  }
  return Monomial(std::vector<Exponent>(exps.begin(), exps.end()));
}

}  // namespace lcmlat
