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

#include "lattice.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

#include "error.hpp"

namespace lcmlat {

namespace {

/// Row-major square bit matrix; row r is a bitset over column indices.
class BitMatrix {
 public:
  explicit BitMatrix(std::size_t n)
      : words_((n + 63) / 64), bits_(n * words_, 0) {}

  void set(std::size_t r, std::size_t c) {
    bits_[r * words_ + c / 64] |= std::uint64_t{1} << (c % 64);
  }
  const std::uint64_t* row(std::size_t r) const { return &bits_[r * words_]; }
  std::size_t words() const { return words_; }

  /// Highest column set in both rows, if any.
  std::optional<std::size_t> highest_common(std::size_t a, std::size_t b) const {
    const auto* ra = row(a);
    const auto* rb = row(b);
    for (std::size_t w = words_; w-- > 0;) {
      const std::uint64_t both = ra[w] & rb[w];
      if (both != 0) return w * 64 + (63 - std::countl_zero(both));
    }
    return std::nullopt;
  }

 private:
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

void check_index(const FiniteLattice& lattice, Index a) {
  if (a >= lattice.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "element index " + std::to_string(a) + " out of range for a " +
                    std::to_string(lattice.size()) + "-element lattice");
  }
}

std::string subset_label(std::size_t mask, std::size_t rank) {
  std::string out = "{";
  for (std::size_t i = 0; i < rank; ++i) {
    if ((mask >> i) & 1U) {
      if (out.size() > 1) out += ',';
      out += std::to_string(i + 1);
    }
  }
  return out + "}";
}

}  // namespace

FiniteLattice FiniteLattice::from_order(
    std::size_t size, const std::function<bool(Index, Index)>& leq,
    std::vector<std::string> labels) {
  if (size == 0) throw Error(ErrorCode::kInvalidArgument, "empty lattice");
  const auto n = static_cast<Index>(size);
  std::vector<std::uint8_t> le(size * size);
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) le[a * size + b] = leq(a, b) ? 1 : 0;
  }
  for (Index a = 0; a < n; ++a) {
    if (!le[a * size + a]) {
      throw Error(ErrorCode::kInvalidArgument, "order is not reflexive");
    }
    for (Index b = 0; b < n; ++b) {
      if (a != b && le[a * size + b] && le[b * size + a]) {
        throw Error(ErrorCode::kInvalidArgument, "order is not antisymmetric");
      }
      for (Index c = 0; c < n; ++c) {
        if (le[a * size + b] && le[b * size + c] && !le[a * size + c]) {
          throw Error(ErrorCode::kInvalidArgument, "order is not transitive");
        }
      }
    }
  }
  // Least upper bound (or greatest lower bound when !upper) of {a, b}.
  auto extreme = [&](Index a, Index b, bool upper) -> Index {
    std::vector<Index> bounds;
    for (Index c = 0; c < n; ++c) {
      const bool ok = upper ? (le[a * size + c] && le[b * size + c])
                            : (le[c * size + a] && le[c * size + b]);
      if (ok) bounds.push_back(c);
    }
    for (Index c : bounds) {
      const bool best = std::all_of(bounds.begin(), bounds.end(), [&](Index d) {
        return upper ? le[c * size + d] : le[d * size + c];
      });
      if (best) return c;
    }
    throw Error(ErrorCode::kInvalidArgument,
                std::string("elements ") + std::to_string(a) + " and " +
                    std::to_string(b) + " have no unique " +
                    (upper ? "join" : "meet"));
  };
  std::vector<Index> join(size * size), meet(size * size);
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      join[a * size + b] = extreme(a, b, true);
      meet[a * size + b] = extreme(a, b, false);
    }
  }
  return FiniteLattice(size, std::move(join), std::move(meet),
                       std::move(labels));
}

FiniteLattice::FiniteLattice(std::size_t size, std::vector<Index> join,
                             std::vector<Index> meet,
                             std::vector<std::string> labels)
    : size_(size),
      join_(std::move(join)),
      meet_(std::move(meet)),
      labels_(std::move(labels)) {
  if (size_ == 0) throw Error(ErrorCode::kInvalidArgument, "empty lattice");
  if (join_.size() != size_ * size_ || meet_.size() != size_ * size_) {
    throw Error(ErrorCode::kInvalidArgument, "table size mismatch");
  }
  if (!labels_.empty() && labels_.size() != size_) {
    throw Error(ErrorCode::kInvalidArgument, "label count mismatch");
  }
  for (Index a = 1; a < size_; ++a) {
    bottom_ = this->meet(bottom_, a);
    top_ = this->join(top_, a);
  }
}

std::string FiniteLattice::label(Index a) const {
  return labels_.empty() ? std::to_string(a) : labels_[a];
}

std::vector<Index> FiniteLattice::atoms() const {
  std::vector<Index> out;
  const auto n = static_cast<Index>(size_);
  for (Index a = 0; a < n; ++a) {
    if (a == bottom_) continue;
    bool atom = true;
    for (Index c = 0; c < n && atom; ++c) {
      if (c != bottom_ && c != a && leq(c, a)) atom = false;
    }
    if (atom) out.push_back(a);
  }
  return out;
}

void FiniteLattice::validate() const {
  const auto n = static_cast<Index>(size_);
  auto fail = [](const std::string& what, Index a, Index b) {
    throw Error(ErrorCode::kInternal, what + " fails at (" + std::to_string(a) +
                                          ", " + std::to_string(b) + ")");
  };
  for (Index a = 0; a < n; ++a) {
    if (join(a, a) != a || meet(a, a) != a) fail("idempotence", a, a);
    if (!leq(bottom_, a) || !leq(a, top_)) fail("boundedness", a, a);
    for (Index b = 0; b < n; ++b) {
      if (join(a, b) >= n || meet(a, b) >= n) fail("table range", a, b);
      if (join(a, b) != join(b, a) || meet(a, b) != meet(b, a)) {
        fail("commutativity", a, b);
      }
      if (meet(a, join(a, b)) != a || join(a, meet(a, b)) != a) {
        fail("absorption", a, b);
      }
      if ((meet(a, b) == a) != (join(a, b) == b)) fail("order consistency", a, b);
      for (Index c = 0; c < n; ++c) {
        if (join(join(a, b), c) != join(a, join(b, c)) ||
            meet(meet(a, b), c) != meet(a, meet(b, c))) {
          fail("associativity", a, b);
        }
      }
    }
  }
}

Index join_of(const FiniteLattice& lattice, Index a, Index b) {
  check_index(lattice, a);
  check_index(lattice, b);
  return lattice.join(a, b);
}

Index meet_of(const FiniteLattice& lattice, Index a, Index b) {
  check_index(lattice, a);
  check_index(lattice, b);
  return lattice.meet(a, b);
}

std::optional<Index> LcmLattice::index_of(const Monomial& m) const {
  // elements[1..] are sorted by canonical_less; the unit sits at 0.
  if (m.dimension() != ideal.ring_dimension()) return std::nullopt;
  const auto it =
      std::lower_bound(elements.begin(), elements.end(), m, canonical_less);
  if (it == elements.end() || *it != m) return std::nullopt;
  return static_cast<Index>(it - elements.begin());
}

LcmLattice build_lcm_lattice(const MonomialIdeal& ideal, const Limits& limits) {
  const auto& gens = ideal.generators();
  if (gens.size() > limits.max_generators) {
    throw Error(ErrorCode::kSizeLimit,
                "ideal has " + std::to_string(gens.size()) +
                    " generators; the cap is " +
                    std::to_string(limits.max_generators) +
                    " (max-generators)");
  }
  auto too_big = [&] {
    return Error(ErrorCode::kSizeLimit,
                 "lcm-lattice exceeds the cap of " +
                     std::to_string(limits.max_lattice) +
                     " elements (max-lattice)");
  };

  // Every subset lcm is reachable by joining one atom at a time, so closing
  // under joins with the atoms yields the whole lattice.
  std::unordered_set<Monomial, MonomialHash> seen;
  std::vector<Monomial> elements{Monomial::unit(ideal.ring_dimension())};
  seen.insert(elements.front());
  for (const auto& g : gens) {
    if (seen.insert(g).second) elements.push_back(g);
  }
  for (std::size_t i = 1; i < elements.size(); ++i) {
    for (const auto& g : gens) {
      auto j = lcm(elements[i], g);
      if (seen.insert(j).second) {
        elements.push_back(std::move(j));
        if (elements.size() > limits.max_lattice) throw too_big();
      }
    }
  }
  if (elements.size() > limits.max_lattice) throw too_big();
  std::sort(elements.begin(), elements.end(), canonical_less);

  const std::size_t n = elements.size();
  std::unordered_map<Monomial, Index, MonomialHash> index;
  index.reserve(n);
  for (std::size_t i = 0; i < n; ++i) index.emplace(elements[i], static_cast<Index>(i));

  std::vector<Index> join(n * n), meet(n * n);
  BitMatrix below(n);  // below(b) has bit a iff elements[a] | elements[b]
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      const Index j = index.at(lcm(elements[a], elements[b]));
      join[a * n + b] = join[b * n + a] = j;
      if (j == b) below.set(b, a);
      if (j == a) below.set(a, b);
    }
  }
  // Indices extend the divisibility order (degree strictly grows along it),
  // so the greatest common lower bound is the highest common index.
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      const auto m = below.highest_common(a, b);
      meet[a * n + b] = meet[b * n + a] = static_cast<Index>(*m);
    }
  }

  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& e : elements) labels.push_back(to_string(e));
  std::vector<Index> atoms;
  atoms.reserve(gens.size());
  for (const auto& g : gens) atoms.push_back(index.at(g));

  FiniteLattice lattice(n, std::move(join), std::move(meet), std::move(labels));
  return LcmLattice{ideal, std::move(elements), std::move(atoms),
                    std::move(lattice)};
}

Interval interval(const FiniteLattice& lattice, Index x, Index y) {
  check_index(lattice, x);
  check_index(lattice, y);
  if (!lattice.leq(x, y)) {
    throw Error(ErrorCode::kInvalidArgument,
                "interval bounds are not ordered: " + lattice.label(x) +
                    " is not below " + lattice.label(y));
  }
  std::vector<Index> members;
  std::vector<Index> local(lattice.size(), 0);
  for (Index z = 0; z < lattice.size(); ++z) {
    if (lattice.leq(x, z) && lattice.leq(z, y)) {
      local[z] = static_cast<Index>(members.size());
      members.push_back(z);
    }
  }
  const std::size_t k = members.size();
  std::vector<Index> join(k * k), meet(k * k);
  std::vector<std::string> labels;
  labels.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    labels.push_back(lattice.label(members[i]));
    for (std::size_t j = 0; j < k; ++j) {
      join[i * k + j] = local[lattice.join(members[i], members[j])];
      meet[i * k + j] = local[lattice.meet(members[i], members[j])];
    }
  }
  return Interval{FiniteLattice(k, std::move(join), std::move(meet),
                                std::move(labels)),
                  std::move(members)};
}

FiniteLattice product(const FiniteLattice& first, const FiniteLattice& second,
                      const Limits& limits) {
  const std::size_t n1 = first.size();
  const std::size_t n2 = second.size();
  const std::size_t n = n1 * n2;
  if (n > limits.max_product) {
    throw Error(ErrorCode::kSizeLimit,
                "product has " + std::to_string(n) +
                    " elements; the cap is " +
                    std::to_string(limits.max_product));
  }
  std::vector<Index> join(n * n), meet(n * n);
  std::vector<std::string> labels;
  labels.reserve(n);
  for (Index a1 = 0; a1 < n1; ++a1) {
    for (Index a2 = 0; a2 < n2; ++a2) {
      labels.push_back("(" + first.label(a1) + ", " + second.label(a2) + ")");
      const std::size_t a = a1 * n2 + a2;
      for (Index b1 = 0; b1 < n1; ++b1) {
        for (Index b2 = 0; b2 < n2; ++b2) {
          const std::size_t b = b1 * n2 + b2;
          join[a * n + b] = static_cast<Index>(first.join(a1, b1) * n2 +
                                               second.join(a2, b2));
          meet[a * n + b] = static_cast<Index>(first.meet(a1, b1) * n2 +
                                               second.meet(a2, b2));
        }
      }
    }
  }
  return FiniteLattice(n, std::move(join), std::move(meet), std::move(labels));
}

FiniteLattice boolean_lattice(std::size_t rank, const Limits& limits) {
  if (rank > limits.max_generators || rank >= 32 ||
      (std::size_t{1} << rank) > limits.max_lattice) {
    throw Error(ErrorCode::kSizeLimit,
                "Boolean lattice of rank " + std::to_string(rank) +
                    " exceeds the configured caps");
  }
  const std::size_t n = std::size_t{1} << rank;
  std::vector<Index> join(n * n), meet(n * n);
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t a = 0; a < n; ++a) {
    labels.push_back(subset_label(a, rank));
    for (std::size_t b = 0; b < n; ++b) {
      join[a * n + b] = static_cast<Index>(a | b);
      meet[a * n + b] = static_cast<Index>(a & b);
    }
  }
  return FiniteLattice(n, std::move(join), std::move(meet), std::move(labels));
}

FiniteLattice chain_lattice(std::size_t length) {
  if (length == 0) throw Error(ErrorCode::kInvalidArgument, "empty chain");
  std::vector<Index> join(length * length), meet(length * length);
  for (std::size_t a = 0; a < length; ++a) {
    for (std::size_t b = 0; b < length; ++b) {
      join[a * length + b] = static_cast<Index>(std::max(a, b));
      meet[a * length + b] = static_cast<Index>(std::min(a, b));
    }
  }
  return FiniteLattice(length, std::move(join), std::move(meet), {});
}

FiniteLattice pentagon_lattice() {
  // 0 = bottom, 1 = x, 2 = y, 3 = a, 4 = top.
  static constexpr bool kLeq[5][5] = {{1, 1, 1, 1, 1},
                                      {0, 1, 1, 0, 1},
                                      {0, 0, 1, 0, 1},
                                      {0, 0, 0, 1, 1},
                                      {0, 0, 0, 0, 1}};
  return FiniteLattice::from_order(
      5, [](Index a, Index b) { return kLeq[a][b]; },
      {"0", "x", "y", "a", "1"});
}

FiniteLattice diamond_lattice() {
  return FiniteLattice::from_order(
      5,
      [](Index a, Index b) {
        return a == b || a == 0 || b == 4;
      },
      {"0", "a", "b", "c", "1"});
}

std::vector<std::pair<Index, Index>> hasse_edges(const FiniteLattice& lattice) {
  const std::size_t n = lattice.size();
  BitMatrix above(n), below(n);  // strict
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      if (lattice.less(a, b)) {
        above.set(a, b);
        below.set(b, a);
      }
    }
  }
  std::vector<std::pair<Index, Index>> out;
  for (Index a = 0; a < n; ++a) {
    const auto* up = above.row(a);
    for (Index b = 0; b < n; ++b) {
      if (!lattice.less(a, b)) continue;
      const auto* down = below.row(b);
      bool between = false;
      for (std::size_t w = 0; w < above.words() && !between; ++w) {
        between = (up[w] & down[w]) != 0;
      }
      if (!between) out.emplace_back(a, b);
    }
  }
  return out;
}

std::vector<std::size_t> ranks(const FiniteLattice& lattice) {
  const std::size_t n = lattice.size();
  // Down-set size strictly increases along <, so it orders elements
  // topologically.
  std::vector<std::size_t> down(n, 0);
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) down[b] += lattice.leq(a, b);
  }
  std::vector<Index> order(n);
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Index a, Index b) { return down[a] < down[b]; });
  std::vector<std::vector<Index>> lower_covers(n);
  for (const auto& [a, b] : hasse_edges(lattice)) lower_covers[b].push_back(a);
  std::vector<std::size_t> rank(n, 0);
  for (Index b : order) {
    for (Index a : lower_covers[b]) rank[b] = std::max(rank[b], rank[a] + 1);
  }
  return rank;
}

bool is_lattice_isomorphism(const FiniteLattice& first,
                            const FiniteLattice& second,
                            const std::vector<Index>& mapping) {
  const std::size_t n = first.size();
  if (second.size() != n || mapping.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (Index t : mapping) {
    if (t >= n || hit[t]) return false;
    hit[t] = true;
  }
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      if (mapping[first.join(a, b)] != second.join(mapping[a], mapping[b]) ||
          mapping[first.meet(a, b)] != second.meet(mapping[a], mapping[b])) {
        return false;
      }
    }
  }
  return true;
}

namespace {

using Signature = std::tuple<std::size_t, std::size_t, std::size_t,
                             std::size_t, std::size_t>;

/// (rank, upper covers, lower covers, down-set size, up-set size).
std::vector<Signature> signatures(const FiniteLattice& lattice) {
  const std::size_t n = lattice.size();
  const auto rank = ranks(lattice);
  std::vector<std::size_t> up_deg(n, 0), down_deg(n, 0), down(n, 0), up(n, 0);
  for (const auto& [a, b] : hasse_edges(lattice)) {
    ++up_deg[a];
    ++down_deg[b];
  }
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      if (lattice.leq(a, b)) {
        ++up[a];
        ++down[b];
      }
    }
  }
  std::vector<Signature> out(n);
  for (std::size_t a = 0; a < n; ++a) {
    out[a] = {rank[a], up_deg[a], down_deg[a], down[a], up[a]};
  }
  return out;
}

constexpr Index kUnset = ~Index{0};

class IsomorphismSearch {
 public:
  IsomorphismSearch(const FiniteLattice& first, const FiniteLattice& second,
                    std::vector<Signature> sig1, std::vector<Signature> sig2)
      : first_(first),
        second_(second),
        sig1_(std::move(sig1)),
        sig2_(std::move(sig2)),
        forward_(first.size(), kUnset),
        backward_(second.size(), kUnset) {
    order_.resize(first.size());
    std::iota(order_.begin(), order_.end(), Index{0});
    std::stable_sort(order_.begin(), order_.end(), [&](Index a, Index b) {
      return std::get<0>(sig1_[a]) < std::get<0>(sig1_[b]);
    });
  }

  std::optional<std::vector<Index>> run() {
    if (!search(0)) return std::nullopt;
    return forward_;
  }

 private:
  bool search(std::size_t pos) {
    while (pos < order_.size() && forward_[order_[pos]] != kUnset) ++pos;
    if (pos == order_.size()) return true;
    const Index e = order_[pos];
    for (Index t = 0; t < second_.size(); ++t) {
      if (backward_[t] != kUnset || sig1_[e] != sig2_[t]) continue;
      const std::size_t mark = trail_.size();
      if (assign(e, t) && search(pos + 1)) return true;
      undo(mark);
    }
    return false;
  }

  /// Assigns e -> t and every pair forced by join/meet preservation against
  /// already assigned elements.
  bool assign(Index e, Index t) {
    std::deque<std::pair<Index, Index>> queue{{e, t}};
    while (!queue.empty()) {
      const auto [p, q] = queue.front();
      queue.pop_front();
      if (forward_[p] != kUnset) {
        if (forward_[p] != q) return false;
        continue;
      }
      if (backward_[q] != kUnset || sig1_[p] != sig2_[q]) return false;
      forward_[p] = q;
      backward_[q] = p;
      trail_.push_back(p);
      for (Index u : trail_) {
        const Index fu = forward_[u];
        queue.emplace_back(first_.join(p, u), second_.join(q, fu));
        queue.emplace_back(first_.meet(p, u), second_.meet(q, fu));
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const Index p = trail_.back();
      trail_.pop_back();
      backward_[forward_[p]] = kUnset;
      forward_[p] = kUnset;
    }
  }

  const FiniteLattice& first_;
  const FiniteLattice& second_;
  std::vector<Signature> sig1_;
  std::vector<Signature> sig2_;
  std::vector<Index> order_;
  std::vector<Index> forward_;
  std::vector<Index> backward_;
  std::vector<Index> trail_;
};

}  // namespace

std::optional<std::vector<Index>> is_isomorphic(const FiniteLattice& first,
                                                const FiniteLattice& second) {
  if (first.size() != second.size()) return std::nullopt;
  auto sig1 = signatures(first);
  auto sig2 = signatures(second);
  auto sorted1 = sig1;
  auto sorted2 = sig2;
  std::sort(sorted1.begin(), sorted1.end());
  std::sort(sorted2.begin(), sorted2.end());
  if (sorted1 != sorted2) return std::nullopt;
  auto mapping =
      IsomorphismSearch(first, second, std::move(sig1), std::move(sig2)).run();
  if (mapping && !is_lattice_isomorphism(first, second, *mapping)) {
    throw Error(ErrorCode::kInternal, "isomorphism search produced a non-isomorphism");
  }
  return mapping;
}

}  // namespace lcmlat
