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

#include "properties.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <tuple>

#include "error.hpp"

namespace lcmlat {

namespace {

WitnessEntry element(std::string role, Index i) {
  return WitnessEntry{std::move(role), WitnessEntry::Kind::kElement, {i}};
}

WitnessEntry subset(std::string role, std::uint64_t mask) {
  WitnessEntry e{std::move(role), WitnessEntry::Kind::kGeneratorSubset, {}};
  for (Index j = 0; mask != 0; ++j, mask >>= 1) {
    if (mask & 1U) e.indices.push_back(j);
  }
  return e;
}

void add_law(std::vector<WitnessEntry>& out, const LawViolation& v) {
  out.push_back(element("x", v.x));
  out.push_back(element("y", v.y));
  out.push_back(element("z", v.z));
  out.push_back(element("lhs", v.lhs));
  out.push_back(element("rhs", v.rhs));
}

void add_pentagon(std::vector<WitnessEntry>& out, const PentagonWitness& p) {
  out.push_back(element("n5_bottom", p.bottom));
  out.push_back(element("n5_a", p.a));
  out.push_back(element("n5_x", p.x));
  out.push_back(element("n5_y", p.y));
  out.push_back(element("n5_top", p.top));
}

void add_diamond(std::vector<WitnessEntry>& out, const DiamondWitness& d) {
  out.push_back(element("m3_bottom", d.bottom));
  out.push_back(element("m3_a", d.a));
  out.push_back(element("m3_b", d.b));
  out.push_back(element("m3_c", d.c));
  out.push_back(element("m3_top", d.top));
}

const WitnessEntry* find_entry(const PropertyVerdict& v, const std::string& role) {
  for (const auto& e : v.witness) {
    if (e.role == role) return &e;
  }
  return nullptr;
}

bool has_complement_in(const FiniteLattice& l, Index lower, Index upper, Index z) {
  for (Index w = 0; w < l.size(); ++w) {
    if (l.leq(lower, w) && l.leq(w, upper) && l.meet(z, w) == lower &&
        l.join(z, w) == upper) {
      return true;
    }
  }
  return false;
}

Index join_of_subset(const FiniteLattice& l, std::span<const Index> atoms,
                     const std::vector<Index>& positions) {
  Index acc = l.bottom();
  for (Index p : positions) {
    if (p >= atoms.size()) {
      throw Error(ErrorCode::kInvalidArgument, "generator position out of range");
    }
    acc = l.join(acc, atoms[p]);
  }
  return acc;
}

}  // namespace

const WitnessEntry& PropertyVerdict::entry(const std::string& role) const {
  if (const auto* e = find_entry(*this, role)) return *e;
  throw Error(ErrorCode::kInvalidArgument, "witness has no role '" + role + "'");
}

Index PropertyVerdict::element(const std::string& role) const {
  return entry(role).indices.at(0);
}

std::optional<LawViolation> modular_law_violation(const FiniteLattice& l) {
  const auto n = static_cast<Index>(l.size());
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      for (Index z = 0; z < n; ++z) {
        if (!l.leq(x, z)) continue;
        const Index lhs = l.join(x, l.meet(y, z));
        const Index rhs = l.meet(l.join(x, y), z);
        if (lhs != rhs) return LawViolation{x, y, z, lhs, rhs};
      }
    }
  }
  return std::nullopt;
}

std::optional<LawViolation> distributive_law_violation(const FiniteLattice& l) {
  const auto n = static_cast<Index>(l.size());
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      for (Index z = 0; z < n; ++z) {
        const Index lhs = l.meet(x, l.join(y, z));
        const Index rhs = l.join(l.meet(x, y), l.meet(x, z));
        if (lhs != rhs) return LawViolation{x, y, z, lhs, rhs};
      }
    }
  }
  return std::nullopt;
}

std::optional<PentagonWitness> find_n5(const FiniteLattice& l) {
  const auto n = static_cast<Index>(l.size());
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      if (!l.less(x, y)) continue;
      for (Index a = 0; a < n; ++a) {
        if (l.comparable(a, x) || l.comparable(a, y)) continue;
        const Index lo = l.meet(a, x);
        const Index hi = l.join(a, x);
        if (l.meet(a, y) == lo && l.join(a, y) == hi) {
          return PentagonWitness{lo, a, x, y, hi};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<DiamondWitness> find_m3(const FiniteLattice& l) {
  const auto n = static_cast<Index>(l.size());
  for (Index a = 0; a < n; ++a) {
    for (Index b = a + 1; b < n; ++b) {
      if (l.comparable(a, b)) continue;
      const Index lo = l.meet(a, b);
      const Index hi = l.join(a, b);
      for (Index c = b + 1; c < n; ++c) {
        if (l.comparable(a, c) || l.comparable(b, c)) continue;
        if (l.meet(a, c) == lo && l.meet(b, c) == lo && l.join(a, c) == hi &&
            l.join(b, c) == hi) {
          return DiamondWitness{lo, a, b, c, hi};
        }
      }
    }
  }
  return std::nullopt;
}

bool is_valid_pentagon(const FiniteLattice& l, const PentagonWitness& w) {
  const Index n = static_cast<Index>(l.size());
  for (Index e : {w.bottom, w.a, w.x, w.y, w.top}) {
    if (e >= n) return false;
  }
  return l.less(w.bottom, w.x) && l.less(w.x, w.y) && l.less(w.y, w.top) &&
         !l.comparable(w.a, w.x) && !l.comparable(w.a, w.y) &&
         l.meet(w.a, w.x) == w.bottom && l.meet(w.a, w.y) == w.bottom &&
         l.join(w.a, w.x) == w.top && l.join(w.a, w.y) == w.top;
}

bool is_valid_diamond(const FiniteLattice& l, const DiamondWitness& w) {
  const Index n = static_cast<Index>(l.size());
  for (Index e : {w.bottom, w.a, w.b, w.c, w.top}) {
    if (e >= n) return false;
  }
  const Index mid[3] = {w.a, w.b, w.c};
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (l.comparable(mid[i], mid[j]) || l.meet(mid[i], mid[j]) != w.bottom ||
          l.join(mid[i], mid[j]) != w.top) {
        return false;
      }
    }
  }
  return true;
}

PropertyVerdict is_boolean(const FiniteLattice& l, std::span<const Index> atoms) {
  PropertyVerdict v{"boolean", false, {}};
  const std::size_t m = atoms.size();
  const bool by_count = m < 63 && l.size() == (std::size_t{1} << m);
  bool by_iso = false;
  if (by_count) {
    Limits wide{m, l.size(), l.size()};
    by_iso = is_isomorphic(l, boolean_lattice(m, wide)).has_value();
  }
  if (by_count != by_iso) {
    throw Error(ErrorCode::kInternal,
                "Boolean cardinality test and isomorphism test disagree");
  }
  v.holds = by_count;
  if (v.holds) return v;

  // Subset joins, enumerated by bitmask; a collision shows the subset-to-join
  // map is not injective.
  std::vector<std::int64_t> first_mask(l.size(), -1);
  std::vector<Index> joins;
  const std::uint64_t limit =
      m >= 63 ? ~std::uint64_t{0} : (std::uint64_t{1} << m);
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    const Index j =
        mask == 0 ? l.bottom()
                  : l.join(joins[mask & (mask - 1)], atoms[std::countr_zero(mask)]);
    joins.push_back(j);
    if (first_mask[j] >= 0) {
      v.witness.push_back(subset("subset_a", static_cast<std::uint64_t>(first_mask[j])));
      v.witness.push_back(subset("subset_b", mask));
      v.witness.push_back(element("join", j));
      return v;
    }
    first_mask[j] = static_cast<std::int64_t>(mask);
  }
  // Injective but not onto: some element is not a join of atoms.
  for (Index e = 0; e < l.size(); ++e) {
    if (first_mask[e] < 0) {
      v.witness.push_back(element("not_join_of_atoms", e));
      return v;
    }
  }
  throw Error(ErrorCode::kInternal, "non-Boolean lattice without a witness");
}

PropertyVerdict is_boolean(const LcmLattice& l) {
  return is_boolean(l.lattice, l.atoms);
}

PropertyVerdict is_boolean(const FiniteLattice& l) {
  const auto atoms = l.atoms();
  return is_boolean(l, atoms);
}

PropertyVerdict is_modular(const FiniteLattice& l, std::size_t sweep_limit) {
  PropertyVerdict v{"modular", true, {}};
  if (l.size() <= sweep_limit) {
    if (const auto bad = modular_law_violation(l)) {
      v.holds = false;
      add_law(v.witness, *bad);
    }
    return v;
  }
  if (const auto p = find_n5(l)) {
    v.holds = false;
    // x <= y inside the pentagon breaks the law with y := a.
    add_law(v.witness, LawViolation{p->x, p->a, p->y,
                                    l.join(p->x, l.meet(p->a, p->y)),
                                    l.meet(l.join(p->x, p->a), p->y)});
    add_pentagon(v.witness, *p);
  }
  return v;
}

PropertyVerdict is_distributive(const FiniteLattice& l, std::size_t sweep_limit) {
  PropertyVerdict v{"distributive", true, {}};
  const auto n5 = find_n5(l);
  const auto m3 = n5 ? std::nullopt : find_m3(l);
  v.holds = !n5 && !m3;
  if (n5) add_pentagon(v.witness, *n5);
  if (m3) add_diamond(v.witness, *m3);
  if (l.size() <= sweep_limit) {
    const auto law = distributive_law_violation(l);
    if (law.has_value() == v.holds) {
      throw Error(ErrorCode::kInternal,
                  "forbidden-sublattice test and distributive law disagree");
    }
    if (law) add_law(v.witness, *law);
  }
  return v;
}

std::vector<Index> complements_of(const FiniteLattice& l, Index x) {
  if (x >= l.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "element index " + std::to_string(x) + " out of range");
  }
  std::vector<Index> out;
  for (Index y = 0; y < l.size(); ++y) {
    if (l.meet(x, y) == l.bottom() && l.join(x, y) == l.top()) out.push_back(y);
  }
  return out;
}

PropertyVerdict is_complemented(const FiniteLattice& l) {
  PropertyVerdict v{"complemented", true, {}};
  for (Index x = 0; x < l.size(); ++x) {
    if (!has_complement_in(l, l.bottom(), l.top(), x)) {
      v.holds = false;
      v.witness.push_back(element("element", x));
      break;
    }
  }
  return v;
}

PropertyVerdict is_relatively_complemented(const FiniteLattice& l) {
  PropertyVerdict v{"relatively-complemented", true, {}};
  const auto n = static_cast<Index>(l.size());
  std::vector<std::tuple<std::size_t, Index, Index>> intervals;
  for (Index x = 0; x < n; ++x) {
    std::vector<Index> up;
    for (Index z = 0; z < n; ++z) {
      if (l.leq(x, z)) up.push_back(z);
    }
    for (Index y : up) {
      std::size_t size = 0;
      for (Index z : up) size += l.leq(z, y);
      // Intervals with at most two elements are always complemented.
      if (size > 2) intervals.emplace_back(size, x, y);
    }
  }
  std::sort(intervals.begin(), intervals.end());
  for (const auto& [size, x, y] : intervals) {
    for (Index z = 0; z < n; ++z) {
      if (!l.leq(x, z) || !l.leq(z, y)) continue;
      if (!has_complement_in(l, x, y, z)) {
        v.holds = false;
        v.witness.push_back(element("lower", x));
        v.witness.push_back(element("upper", y));
        v.witness.push_back(element("element", z));
        return v;
      }
    }
  }
  return v;
}

const std::vector<std::string>& property_names() {
  static const std::vector<std::string> kNames = {
      "boolean", "modular", "distributive", "complemented",
      "relatively-complemented"};
  return kNames;
}

PropertyVerdict check_property(const LcmLattice& l, const std::string& name) {
  if (name == "boolean") return is_boolean(l);
  return check_property(l.lattice, name);
}

PropertyVerdict check_property(const FiniteLattice& l, const std::string& name) {
  if (name == "boolean") return is_boolean(l);
  if (name == "modular") return is_modular(l);
  if (name == "distributive") return is_distributive(l);
  if (name == "complemented") return is_complemented(l);
  if (name == "relatively-complemented") return is_relatively_complemented(l);
  throw Error(ErrorCode::kInvalidArgument, "unknown property '" + name + "'");
}

bool witness_is_valid(const FiniteLattice& l, std::span<const Index> atoms,
                      const PropertyVerdict& v) {
  if (v.holds) return v.witness.empty();
  auto idx = [&](const char* role) -> std::optional<Index> {
    const auto* e = find_entry(v, role);
    if (!e || e->indices.size() != 1 || e->indices[0] >= l.size()) {
      return std::nullopt;
    }
    return e->indices[0];
  };
  if (v.property == "boolean") {
    if (const auto e = idx("not_join_of_atoms")) {
      // Only the atoms below e can contribute to a join equal to e.
      Index acc = l.bottom();
      for (Index a : atoms) {
        if (l.leq(a, *e)) acc = l.join(acc, a);
      }
      return acc != *e;
    }
    const auto* a = find_entry(v, "subset_a");
    const auto* b = find_entry(v, "subset_b");
    const auto j = idx("join");
    if (!a || !b || !j || a->indices == b->indices) return false;
    return join_of_subset(l, atoms, a->indices) == *j &&
           join_of_subset(l, atoms, b->indices) == *j;
  }
  if (v.property == "modular") {
    const auto x = idx("x"), y = idx("y"), z = idx("z");
    const auto lhs = idx("lhs"), rhs = idx("rhs");
    if (!x || !y || !z || !lhs || !rhs || !l.leq(*x, *z)) return false;
    return l.join(*x, l.meet(*y, *z)) == *lhs &&
           l.meet(l.join(*x, *y), *z) == *rhs && *lhs != *rhs;
  }
  if (v.property == "distributive") {
    if (const auto a = idx("n5_a")) {
      const auto bo = idx("n5_bottom"), x = idx("n5_x"), y = idx("n5_y"),
                 t = idx("n5_top");
      return bo && x && y && t &&
             is_valid_pentagon(l, PentagonWitness{*bo, *a, *x, *y, *t});
    }
    const auto bo = idx("m3_bottom"), a = idx("m3_a"), b = idx("m3_b"),
               c = idx("m3_c"), t = idx("m3_top");
    return bo && a && b && c && t &&
           is_valid_diamond(l, DiamondWitness{*bo, *a, *b, *c, *t});
  }
  if (v.property == "complemented") {
    const auto e = idx("element");
    return e && !has_complement_in(l, l.bottom(), l.top(), *e);
  }
  if (v.property == "relatively-complemented") {
    const auto lo = idx("lower"), hi = idx("upper"), e = idx("element");
    return lo && hi && e && l.leq(*lo, *e) && l.leq(*e, *hi) &&
           !has_complement_in(l, *lo, *hi, *e);
  }
  return false;
}

bool witness_is_valid(const LcmLattice& l, const PropertyVerdict& v) {
  return witness_is_valid(l.lattice, l.atoms, v);
}

}  // namespace lcmlat
