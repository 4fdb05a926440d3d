#pragma once

/// \file
/// Direct products H x G and subgroups of them: projections p1/p2, kernels
/// k1/k2, the twisted conjugate (t,1)X(t,1)^-1 and the star product Y * X.
///
/// Composite ids: (h, g) is stored as h * |G| + g.

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "bisets/error.hpp"
#include "bisets/group.hpp"

namespace bisets {

class ProductGroup {
 public:
  ProductGroup(GroupPtr left, GroupPtr right, std::size_t order_cap = 1024)
      : left_(std::move(left)), right_(std::move(right)) {
    const std::size_t a = left_->order(), b = right_->order();
    if (a * b > order_cap)
      throw SpecError("direct product " + left_->name() + " x " + right_->name() + " exceeds the order cap of " +
                      std::to_string(order_cap));
    const std::size_t n = a * b;
    std::vector<Elem> table(n * n);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        table[x * n + y] = static_cast<Elem>(left_->mul(static_cast<Elem>(x / b), static_cast<Elem>(y / b)) * b +
                                             right_->mul(static_cast<Elem>(x % b), static_cast<Elem>(y % b)));
    group_ = std::make_shared<const Group>(left_->name() + " x " + right_->name(), n, std::move(table));
  }

  [[nodiscard]] const GroupPtr& left() const { return left_; }
  [[nodiscard]] const GroupPtr& right() const { return right_; }
  [[nodiscard]] const GroupPtr& group() const { return group_; }
  [[nodiscard]] std::size_t order() const { return group_->order(); }

  [[nodiscard]] Elem pair(Elem h, Elem g) const { return h * static_cast<Elem>(right_->order()) + g; }
  [[nodiscard]] Elem first(Elem c) const { return c / static_cast<Elem>(right_->order()); }
  [[nodiscard]] Elem second(Elem c) const { return c % static_cast<Elem>(right_->order()); }

  [[nodiscard]] bool same_factors(const ProductGroup& o) const {
    return left_->same_table(*o.left_) && right_->same_table(*o.right_);
  }

 private:
  GroupPtr left_;
  GroupPtr right_;
  GroupPtr group_;
};

using ProductGroupPtr = std::shared_ptr<const ProductGroup>;

inline ProductGroupPtr direct_product(const GroupPtr& a, const GroupPtr& b, std::size_t order_cap = 1024) {
  return std::make_shared<const ProductGroup>(a, b, order_cap);
}

/// A subgroup X of H x G with its projections and kernels computed up front.
class ProductSubgroup {
 public:
  ProductSubgroup() = default;

  ProductSubgroup(ProductGroupPtr ambient, Subgroup sub) : ambient_(std::move(ambient)), sub_(std::move(sub)) {
    require_subgroup_of(sub_, ambient_->group(), "ProductSubgroup");
    std::vector<Elem> p1, k1, p2, k2;
    for (auto c : sub_.elements()) {
      const auto h = ambient_->first(c), g = ambient_->second(c);
      p1.push_back(h);
      p2.push_back(g);
      if (g == Group::identity) k1.push_back(h);
      if (h == Group::identity) k2.push_back(g);
    }
    p1_ = Subgroup(ambient_->left(), std::move(p1));
    k1_ = Subgroup(ambient_->left(), std::move(k1));
    p2_ = Subgroup(ambient_->right(), std::move(p2));
    k2_ = Subgroup(ambient_->right(), std::move(k2));
  }

  /// Subgroup generated by the given (h, g) pairs.
  static ProductSubgroup generated(const ProductGroupPtr& ambient, const std::vector<std::pair<Elem, Elem>>& gens) {
    std::vector<Elem> ids;
    for (const auto& [h, g] : gens) {
      if (h >= ambient->left()->order() || g >= ambient->right()->order())
        throw SpecError("generator (" + std::to_string(h) + "," + std::to_string(g) + ") is not an element of " +
                        ambient->group()->name());
      ids.push_back(ambient->pair(h, g));
    }
    return {ambient, subgroup_generated(ambient->group(), ids)};
  }

  static ProductSubgroup whole(const ProductGroupPtr& ambient) { return {ambient, Subgroup::whole(ambient->group())}; }
  static ProductSubgroup trivial(const ProductGroupPtr& ambient) {
    return {ambient, Subgroup::trivial(ambient->group())};
  }
  /// {(h, h)}; requires both factors to be the same group.
  static ProductSubgroup diagonal(const ProductGroupPtr& ambient) {
    if (!ambient->left()->same_table(*ambient->right())) throw StructureError("diagonal: factors differ");
    std::vector<Elem> ids;
    for (Elem h = 0; h < ambient->left()->order(); ++h) ids.push_back(ambient->pair(h, h));
    return {ambient, Subgroup(ambient->group(), std::move(ids))};
  }
  /// A x B for subgroups of the factors.
  static ProductSubgroup product_of(const ProductGroupPtr& ambient, const Subgroup& a, const Subgroup& b) {
    std::vector<Elem> ids;
    for (auto h : a.elements())
      for (auto g : b.elements()) ids.push_back(ambient->pair(h, g));
    return {ambient, Subgroup(ambient->group(), std::move(ids))};
  }

  [[nodiscard]] const ProductGroupPtr& ambient() const { return ambient_; }
  [[nodiscard]] const Subgroup& subgroup() const { return sub_; }
  [[nodiscard]] const std::vector<Elem>& elements() const { return sub_.elements(); }
  [[nodiscard]] std::size_t size() const { return sub_.size(); }
  [[nodiscard]] bool contains(Elem h, Elem g) const { return sub_.contains(ambient_->pair(h, g)); }

  [[nodiscard]] const Subgroup& p1() const { return p1_; }
  [[nodiscard]] const Subgroup& p2() const { return p2_; }
  [[nodiscard]] const Subgroup& k1() const { return k1_; }
  [[nodiscard]] const Subgroup& k2() const { return k2_; }

  friend bool operator==(const ProductSubgroup& a, const ProductSubgroup& b) {
    return a.ambient_->same_factors(*b.ambient_) && a.sub_.elements() == b.sub_.elements();
  }

 private:
  ProductGroupPtr ambient_;
  Subgroup sub_;
  Subgroup p1_, k1_, p2_, k2_;
};

inline const Subgroup& p1(const ProductSubgroup& x) { return x.p1(); }
inline const Subgroup& p2(const ProductSubgroup& x) { return x.p2(); }
inline const Subgroup& k1(const ProductSubgroup& x) { return x.k1(); }
inline const Subgroup& k2(const ProductSubgroup& x) { return x.k2(); }

/// (t,1) X (t,1)^-1 = {(t h t^-1, g) : (h, g) in X}.
inline ProductSubgroup conj_t1(const ProductSubgroup& x, Elem t) {
  const auto& amb = x.ambient();
  const auto& h_group = *amb->left();
  if (t >= h_group.order()) throw StructureError("conj_t1: t is not an element of the left factor");
  std::vector<Elem> ids;
  ids.reserve(x.size());
  for (auto c : x.elements()) ids.push_back(amb->pair(h_group.conj(t, amb->first(c)), amb->second(c)));
  return {amb, Subgroup(amb->group(), std::move(ids))};
}

inline void require_composable(const ProductSubgroup& y, const ProductSubgroup& x, const char* what) {
  if (!y.ambient()->right()->same_table(*x.ambient()->left()))
    throw StructureError(std::string(what) + ": middle groups differ");
}

/// Y * X = {(k, g) : exists h with (k, h) in Y and (h, g) in X}, as a subgroup of K x G.
/// `kg` may supply the ambient K x G so results share one product group.
inline ProductSubgroup star(const ProductSubgroup& y, const ProductSubgroup& x, ProductGroupPtr kg = nullptr) {
  require_composable(y, x, "star");
  if (!kg) kg = direct_product(y.ambient()->left(), x.ambient()->right());
  const auto& yh = *y.ambient();
  const auto& xh = *x.ambient();
  std::vector<std::vector<Elem>> by_middle(yh.right()->order());
  for (auto c : x.elements()) by_middle[xh.first(c)].push_back(xh.second(c));
  std::vector<char> in(kg->order(), 0);
  std::vector<Elem> ids;
  for (auto c : y.elements())
    for (auto g : by_middle[yh.second(c)]) {
      auto id = kg->pair(yh.first(c), g);
      if (!in[id]) {
        in[id] = 1;
        ids.push_back(id);
      }
    }
  try {
    return {kg, Subgroup(kg->group(), std::move(ids))};
  } catch (const StructureError& e) {
    throw AssertionFailure(std::string("star: result is not a subgroup: ") + e.what());
  }
}

/// k2(Y) ∩ t k1(X) t^-1, the subgroup of H the middle tensor is balanced over.
inline Subgroup middle_section(const ProductSubgroup& y, const ProductSubgroup& x, Elem t) {
  require_composable(y, x, "middle_section");
  return intersect(y.k2(), conjugate_subgroup(x.ambient()->left(), x.k1(), t));
}

}  // namespace bisets
