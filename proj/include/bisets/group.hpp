#pragma once

/// \file
/// Finite groups as dense multiplication tables over element ids 0..n-1,
/// with the identity fixed at id 0, and subgroups of such groups.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "bisets/error.hpp"

namespace bisets {

using Elem = std::uint32_t;

class Group;
using GroupPtr = std::shared_ptr<const Group>;

class Group {
 public:
  static constexpr Elem identity = 0;

  /// `table[a * order + b]` is the id of a*b. Validates the group axioms.
  Group(std::string name, std::size_t order, std::vector<Elem> table)
      : name_(std::move(name)), order_(order), mul_(std::move(table)) {
    if (order_ == 0) throw StructureError("Group: order must be positive");
    if (mul_.size() != order_ * order_) throw StructureError("Group: table has wrong size");
    for (auto e : mul_)
      if (e >= order_) throw StructureError("Group: table entry out of range");
    for (Elem a = 0; a < order_; ++a)
      if (mul(0, a) != a || mul(a, 0) != a) throw StructureError("Group: id 0 is not a two-sided identity");
    inv_.assign(order_, 0);
    for (Elem a = 0; a < order_; ++a) {
      std::vector<char> seen_row(order_, 0), seen_col(order_, 0);
      bool found = false;
      for (Elem b = 0; b < order_; ++b) {
        if (seen_row[mul(a, b)]++ || seen_col[mul(b, a)]++) throw StructureError("Group: table is not a Latin square");
        if (mul(a, b) == 0) {
          if (mul(b, a) != 0) throw StructureError("Group: left and right inverses differ");
          inv_[a] = b;
          found = true;
        }
      }
      if (!found) throw StructureError("Group: missing inverse");
    }
    compute_generators();
    // (ab)s = a(bs) for all a, b and every generator s implies associativity,
    // by induction on the length of a right-multiplication word for c in (ab)c.
    for (auto s : gens_)
      for (Elem a = 0; a < order_; ++a)
        for (Elem b = 0; b < order_; ++b)
          if (mul(mul(a, b), s) != mul(a, mul(b, s))) throw StructureError("Group: table is not associative");
  }

  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] std::size_t order() const { return order_; }
  [[nodiscard]] Elem mul(Elem a, Elem b) const { return mul_[a * order_ + b]; }
  [[nodiscard]] Elem inv(Elem a) const { return inv_[a]; }
  [[nodiscard]] Elem conj(Elem t, Elem a) const { return mul(mul(t, a), inv(t)); }  // t a t^-1
  [[nodiscard]] const std::vector<Elem>& table() const { return mul_; }

  /// Greedy minimum-id generating set.
  [[nodiscard]] const std::vector<Elem>& generators() const { return gens_; }

  [[nodiscard]] std::size_t element_order(Elem a) const {
    std::size_t k = 1;
    for (Elem x = a; x != identity; x = mul(x, a)) ++k;
    return k;
  }

  [[nodiscard]] bool is_abelian() const {
    for (Elem a = 0; a < order_; ++a)
      for (Elem b = 0; b < a; ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  /// Same order and same multiplication table.
  [[nodiscard]] bool same_table(const Group& other) const { return this == &other || mul_ == other.mul_; }

  /// Cayley-table dump: the order on the first line, then one row of the table per line.
  [[nodiscard]] std::string dump() const {
    std::ostringstream os;
    os << order_ << '\n';
    for (Elem a = 0; a < order_; ++a) {
      for (Elem b = 0; b < order_; ++b) os << (b ? " " : "") << mul(a, b);
      os << '\n';
    }
    return os.str();
  }

 private:
  void compute_generators() {
    std::vector<char> span(order_, 0);
    span[0] = 1;
    std::size_t covered = 1;
    for (Elem g = 1; g < order_ && covered < order_; ++g) {
      if (span[g]) continue;
      gens_.push_back(g);
      std::vector<Elem> queue;
      for (Elem x = 0; x < order_; ++x)
        if (span[x]) queue.push_back(x);
      for (std::size_t i = 0; i < queue.size(); ++i)
        for (auto s : gens_) {
          auto y = mul(queue[i], s);
          if (!span[y]) {
            span[y] = 1;
            ++covered;
            queue.push_back(y);
          }
        }
    }
  }

  std::string name_;
  std::size_t order_;
  std::vector<Elem> mul_;
  std::vector<Elem> inv_;
  std::vector<Elem> gens_;
};

/// Builds a group from generators in a concrete model (permutations, pairs, ...).
/// Ids: identity 0, then the distinct non-identity generators in order, then
/// breadth-first products x*s in order of discovery.
template <class T, class Mul>
Group group_from_generators(std::string name, const T& identity, const std::vector<T>& gens, Mul&& mul,
                            std::size_t order_cap) {
  std::map<T, Elem> id;
  std::vector<T> elems{identity};
  id.emplace(identity, 0);
  auto intern = [&](const T& x) {
    auto [it, inserted] = id.emplace(x, static_cast<Elem>(elems.size()));
    if (inserted) {
      elems.push_back(x);
      if (elems.size() > order_cap)
        throw SpecError("group '" + name + "' exceeds the order cap of " + std::to_string(order_cap));
    }
    return it->second;
  };
  for (const auto& g : gens) intern(g);
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& g : gens) intern(mul(elems[i], g));
  const std::size_t n = elems.size();
  std::vector<Elem> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = id.at(mul(elems[a], elems[b]));
  return Group(std::move(name), n, std::move(table));
}

/// A subgroup of a finite group, stored as its sorted element ids.
class Subgroup {
 public:
  Subgroup() = default;

  /// Validates closure; `elements` need not be sorted.
  Subgroup(GroupPtr ambient, std::vector<Elem> elements) : ambient_(std::move(ambient)), elements_(std::move(elements)) {
    if (!ambient_) throw StructureError("Subgroup: null ambient group");
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    local_.assign(ambient_->order(), -1);
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      if (elements_[i] >= ambient_->order()) throw StructureError("Subgroup: element id out of range");
      local_[elements_[i]] = static_cast<std::int32_t>(i);
    }
    if (elements_.empty() || elements_[0] != Group::identity) throw StructureError("Subgroup: identity missing");
    const std::size_t n = elements_.size();
    std::vector<Elem> table(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        auto p = local_[ambient_->mul(elements_[a], elements_[b])];
        if (p < 0) throw StructureError("Subgroup: element set is not closed under multiplication");
        table[a * n + b] = static_cast<Elem>(p);
      }
    as_group_ = std::make_shared<const Group>(ambient_->name() + ".sub" + std::to_string(n), n, std::move(table));
  }

  static Subgroup whole(const GroupPtr& g) {
    std::vector<Elem> all(g->order());
    std::iota(all.begin(), all.end(), Elem{0});
    return Subgroup(g, std::move(all));
  }
  static Subgroup trivial(const GroupPtr& g) { return Subgroup(g, {Group::identity}); }

  [[nodiscard]] const GroupPtr& ambient() const { return ambient_; }
  [[nodiscard]] const std::vector<Elem>& elements() const { return elements_; }
  [[nodiscard]] std::size_t size() const { return elements_.size(); }
  [[nodiscard]] std::size_t index() const { return ambient_->order() / elements_.size(); }
  [[nodiscard]] bool contains(Elem g) const { return g < local_.size() && local_[g] >= 0; }

  /// Position of ambient element g in elements(); g must be a member.
  [[nodiscard]] Elem local(Elem g) const {
    if (!contains(g)) throw StructureError("Subgroup::local: element not in subgroup");
    return static_cast<Elem>(local_[g]);
  }
  [[nodiscard]] Elem ambient_id(Elem local_id) const { return elements_.at(local_id); }

  /// The subgroup as a group in its own right; local id i is elements()[i].
  [[nodiscard]] const GroupPtr& as_group() const { return as_group_; }

  [[nodiscard]] bool is_subgroup_of(const Subgroup& other) const {
    return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(), elements_.end());
  }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.elements_ == b.elements_ && a.ambient_->same_table(*b.ambient_);
  }
  /// Ordering by (size, element set).
  friend bool operator<(const Subgroup& a, const Subgroup& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.elements_ < b.elements_;
  }

 private:
  GroupPtr ambient_;
  std::vector<Elem> elements_;
  std::vector<std::int32_t> local_;
  GroupPtr as_group_;
};

namespace detail {

inline std::vector<Elem> closure(const Group& g, std::vector<Elem> seed) {
  std::vector<char> in(g.order(), 0);
  std::vector<Elem> gens;
  for (auto s : seed) {
    if (s >= g.order()) throw StructureError("subgroup_generated: invalid element id " + std::to_string(s));
    gens.push_back(s);
  }
  std::vector<Elem> elems{Group::identity};
  in[0] = 1;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (auto s : gens) {
      auto y = g.mul(elems[i], s);
      if (!in[y]) {
        in[y] = 1;
        elems.push_back(y);
      }
    }
  return elems;
}

}  // namespace detail

inline Subgroup subgroup_generated(const GroupPtr& g, const std::vector<Elem>& gens) {
  return Subgroup(g, detail::closure(*g, gens));
}

/// Every subgroup exactly once, sorted by (size, elements). Built by closing
/// known subgroups under one extra element at a time.
inline std::vector<Subgroup> all_subgroups(const GroupPtr& g, std::size_t cap = 64) {
  if (g->order() > cap)
    throw StructureError("all_subgroups: group order " + std::to_string(g->order()) + " exceeds cap " +
                         std::to_string(cap));
  std::map<std::vector<Elem>, bool> found;
  std::vector<std::vector<Elem>> frontier{{Group::identity}};
  found[{Group::identity}] = true;
  while (!frontier.empty()) {
    std::vector<std::vector<Elem>> next;
    for (const auto& s : frontier) {
      std::vector<char> in(g->order(), 0);
      for (auto e : s) in[e] = 1;
      for (Elem x = 1; x < g->order(); ++x) {
        if (in[x]) continue;
        std::vector<Elem> seed = s;
        seed.push_back(x);
        auto c = detail::closure(*g, seed);
        std::sort(c.begin(), c.end());
        if (found.emplace(c, true).second) next.push_back(std::move(c));
      }
    }
    frontier = std::move(next);
  }
  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (const auto& [elems, _] : found) out.emplace_back(g, elems);
  std::sort(out.begin(), out.end());
  return out;
}

inline void require_subgroup_of(const Subgroup& a, const GroupPtr& g, const char* what) {
  if (!a.ambient() || !a.ambient()->same_table(*g))
    throw StructureError(std::string(what) + ": subgroup does not live in the given group");
}

/// Left cosets gA with their minimum-id representatives, sorted ascending.
struct CosetTable {
  std::vector<Elem> reps;
  std::vector<Elem> coset_of;  // per ambient element

  /// g = reps[index] * x with x in A.
  struct Factor {
    Elem index;
    Elem x;
  };
};

inline CosetTable left_cosets(const GroupPtr& g, const Subgroup& a) {
  require_subgroup_of(a, g, "left_cosets");
  CosetTable t;
  constexpr Elem unset = ~Elem{0};
  t.coset_of.assign(g->order(), unset);
  for (Elem x = 0; x < g->order(); ++x) {
    if (t.coset_of[x] != unset) continue;
    auto idx = static_cast<Elem>(t.reps.size());
    t.reps.push_back(x);
    for (auto y : a.elements()) t.coset_of[g->mul(x, y)] = idx;
  }
  return t;
}

inline CosetTable::Factor factor_through(const Group& g, const CosetTable& t, Elem element) {
  auto idx = t.coset_of[element];
  return {idx, g.mul(g.inv(t.reps[idx]), element)};
}

inline std::vector<Elem> left_coset_reps(const GroupPtr& g, const Subgroup& a) { return left_cosets(g, a).reps; }

/// Minimum-id representatives of the double cosets A g B, sorted.
inline std::vector<Elem> double_coset_reps(const GroupPtr& g, const Subgroup& a, const Subgroup& b) {
  require_subgroup_of(a, g, "double_coset_reps");
  require_subgroup_of(b, g, "double_coset_reps");
  std::vector<char> seen(g->order(), 0);
  std::vector<Elem> reps;
  for (Elem x = 0; x < g->order(); ++x) {
    if (seen[x]) continue;
    reps.push_back(x);
    for (auto p : a.elements())
      for (auto q : b.elements()) seen[g->mul(g->mul(p, x), q)] = 1;
  }
  return reps;
}

/// The double coset A t B as a sorted element list.
inline std::vector<Elem> double_coset(const GroupPtr& g, const Subgroup& a, Elem t, const Subgroup& b) {
  std::vector<char> in(g->order(), 0);
  for (auto p : a.elements())
    for (auto q : b.elements()) in[g->mul(g->mul(p, t), q)] = 1;
  std::vector<Elem> out;
  for (Elem x = 0; x < g->order(); ++x)
    if (in[x]) out.push_back(x);
  return out;
}

/// Conjugacy classes ordered by their minimum element (identity first).
inline std::vector<std::vector<Elem>> conjugacy_classes(const Group& g) {
  constexpr Elem unset = ~Elem{0};
  std::vector<Elem> cls(g.order(), unset);
  std::vector<std::vector<Elem>> out;
  for (Elem x = 0; x < g.order(); ++x) {
    if (cls[x] != unset) continue;
    auto idx = static_cast<Elem>(out.size());
    std::vector<Elem> c;
    for (Elem t = 0; t < g.order(); ++t) {
      auto y = g.conj(t, x);
      if (cls[y] == unset) {
        cls[y] = idx;
        c.push_back(y);
      }
    }
    std::sort(c.begin(), c.end());
    out.push_back(std::move(c));
  }
  return out;
}

/// tAt^-1.
inline Subgroup conjugate_subgroup(const GroupPtr& g, const Subgroup& a, Elem t) {
  require_subgroup_of(a, g, "conjugate_subgroup");
  if (t >= g->order()) throw StructureError("conjugate_subgroup: invalid element id");
  std::vector<Elem> out;
  out.reserve(a.size());
  for (auto x : a.elements()) out.push_back(g->conj(t, x));
  return Subgroup(g, std::move(out));
}

inline Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  std::vector<Elem> out;
  std::set_intersection(a.elements().begin(), a.elements().end(), b.elements().begin(), b.elements().end(),
                        std::back_inserter(out));
  return Subgroup(a.ambient(), std::move(out));
}

/// A is normalized by every element of B.
inline bool is_normalized_by(const Subgroup& a, const Subgroup& b) {
  const auto& g = *a.ambient();
  for (auto t : b.elements())
    for (auto x : a.elements())
      if (!a.contains(g.conj(t, x))) return false;
  return true;
}

}  // namespace bisets
