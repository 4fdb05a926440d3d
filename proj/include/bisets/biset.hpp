#pragma once

/// \file
/// Finite (H,G)-bisets with explicit action tables, viewed as groupoids:
/// objects are points, Hom(u, v) = {(h, g) : h u = v g}, composition
/// (h', g') o (h, g) = (h'h, g'g).

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "bisets/error.hpp"
#include "bisets/group.hpp"
#include "bisets/product.hpp"

namespace bisets {

class Biset {
 public:
  using Point = std::uint32_t;

  /// `left[h * points + u]` is h.u and `right[u * |G| + g]` is u.g.
  Biset(ProductGroupPtr ambient, std::size_t points, std::vector<Point> left, std::vector<Point> right)
      : ambient_(std::move(ambient)), points_(points), left_(std::move(left)), right_(std::move(right)) {
    validate();
  }

  [[nodiscard]] const ProductGroupPtr& ambient() const { return ambient_; }
  [[nodiscard]] const GroupPtr& left_group() const { return ambient_->left(); }
  [[nodiscard]] const GroupPtr& right_group() const { return ambient_->right(); }
  [[nodiscard]] std::size_t size() const { return points_; }

  [[nodiscard]] Point left(Elem h, Point u) const { return left_[h * points_ + u]; }
  [[nodiscard]] Point right(Point u, Elem g) const { return right_[u * right_group()->order() + g]; }
  /// h u g^-1: where the morphism (h, g) starting at u lands.
  [[nodiscard]] Point target(Elem h, Elem g, Point u) const { return left(h, right(u, right_group()->inv(g))); }
  [[nodiscard]] Point target(Elem composite, Point u) const {
    return target(ambient_->first(composite), ambient_->second(composite), u);
  }

  /// Hom(u, v) as composite ids of H x G.
  [[nodiscard]] std::vector<Elem> hom_set(Point u, Point v) const {
    std::vector<Elem> out;
    for (Elem h = 0; h < left_group()->order(); ++h)
      for (Elem g = 0; g < right_group()->order(); ++g)
        if (left(h, u) == right(v, g)) out.push_back(ambient_->pair(h, g));
    return out;
  }

  /// A(u) = Hom(u, u) as a subgroup of H x G.
  [[nodiscard]] ProductSubgroup aut_group(Point u) const {
    try {
      return {ambient_, Subgroup(ambient_->group(), hom_set(u, u))};
    } catch (const StructureError& e) {
      throw AssertionFailure(std::string("aut_group: hom set is not a subgroup: ") + e.what());
    }
  }

  /// (H,G)-orbit index of every point; orbits numbered by their minimum point.
  [[nodiscard]] std::vector<std::uint32_t> orbit_index() const {
    constexpr std::uint32_t unset = ~0u;
    std::vector<std::uint32_t> idx(points_, unset);
    std::uint32_t next = 0;
    for (Point p = 0; p < points_; ++p) {
      if (idx[p] != unset) continue;
      std::vector<Point> stack{p};
      idx[p] = next;
      while (!stack.empty()) {
        auto u = stack.back();
        stack.pop_back();
        for (Elem h = 0; h < left_group()->order(); ++h)
          for (Elem g = 0; g < right_group()->order(); ++g) {
            auto w = right(left(h, u), g);
            if (idx[w] == unset) {
              idx[w] = next;
              stack.push_back(w);
            }
          }
      }
      ++next;
    }
    return idx;
  }

  /// Minimum point of each (H,G)-orbit.
  [[nodiscard]] std::vector<Point> orbit_reps() const {
    auto idx = orbit_index();
    std::vector<Point> reps;
    for (Point p = 0; p < points_; ++p)
      if (idx[p] == reps.size()) reps.push_back(p);
    return reps;
  }

  [[nodiscard]] const std::vector<Point>& left_table() const { return left_; }
  [[nodiscard]] const std::vector<Point>& right_table() const { return right_; }

 private:
  void validate() const {
    const auto& hg = *left_group();
    const auto& gg = *right_group();
    if (left_.size() != hg.order() * points_ || right_.size() != points_ * gg.order())
      throw StructureError("Biset: action tables have the wrong size");
    for (auto p : left_)
      if (p >= points_) throw StructureError("Biset: left action leaves the point set");
    for (auto p : right_)
      if (p >= points_) throw StructureError("Biset: right action leaves the point set");
    for (Point u = 0; u < points_; ++u) {
      check(left(0, u) == u && right(u, 0) == u, "Biset: identity does not fix point " + std::to_string(u));
      for (Elem a = 0; a < hg.order(); ++a)
        for (Elem b = 0; b < hg.order(); ++b)
          check(left(hg.mul(a, b), u) == left(a, left(b, u)), "Biset: left table is not an action");
      for (Elem a = 0; a < gg.order(); ++a)
        for (Elem b = 0; b < gg.order(); ++b)
          check(right(u, gg.mul(a, b)) == right(right(u, a), b), "Biset: right table is not an action");
      for (Elem h = 0; h < hg.order(); ++h)
        for (Elem g = 0; g < gg.order(); ++g)
          check(right(left(h, u), g) == left(h, right(u, g)), "Biset: left and right actions do not commute");
    }
  }

  ProductGroupPtr ambient_;
  std::size_t points_;
  std::vector<Point> left_;
  std::vector<Point> right_;
};

using BisetPtr = std::shared_ptr<const Biset>;

/// (H x G)/X with h.(t,s)X.g = (ht, g^-1 s)X. Point i is the coset of cosets.reps[i];
/// point 0 is X itself.
struct TransitiveBiset {
  BisetPtr biset;
  ProductSubgroup subgroup;
  CosetTable cosets;

  [[nodiscard]] Elem rep(Biset::Point i) const { return cosets.reps[i]; }
};

inline TransitiveBiset transitive_biset(const ProductSubgroup& x) {
  const auto& amb = x.ambient();
  const auto& hg = *amb->group();
  auto cosets = left_cosets(amb->group(), x.subgroup());
  const std::size_t m = cosets.reps.size();
  const std::size_t nh = amb->left()->order(), ng = amb->right()->order();
  std::vector<Biset::Point> left(nh * m), right(m * ng);
  for (std::size_t i = 0; i < m; ++i) {
    const auto r = cosets.reps[i];
    for (Elem h = 0; h < nh; ++h) left[h * m + i] = cosets.coset_of[hg.mul(amb->pair(h, 0), r)];
    for (Elem g = 0; g < ng; ++g) right[i * ng + g] = cosets.coset_of[hg.mul(amb->pair(0, amb->right()->inv(g)), r)];
  }
  return {std::make_shared<const Biset>(amb, m, std::move(left), std::move(right)), x, std::move(cosets)};
}

/// V x_H U = (V x U)/H with (v,u).h = (vh, h^-1 u).
struct ComposedBiset {
  BisetPtr biset;
  BisetPtr left_factor;   // V, a (K,H)-biset
  BisetPtr right_factor;  // U, an (H,G)-biset
  std::vector<std::pair<Biset::Point, Biset::Point>> rep_pair;  // lexicographically least (v, u) per point
  std::vector<std::uint32_t> point_of_pair;                      // indexed by v * |U| + u
  std::vector<std::vector<std::uint32_t>> members;               // raw pairs of each point, sorted

  [[nodiscard]] std::uint32_t raw(Biset::Point v, Biset::Point u) const {
    return v * static_cast<std::uint32_t>(right_factor->size()) + u;
  }
  [[nodiscard]] std::uint32_t point_of(Biset::Point v, Biset::Point u) const { return point_of_pair[raw(v, u)]; }
  [[nodiscard]] std::pair<Biset::Point, Biset::Point> unraw(std::uint32_t r) const {
    const auto nu = static_cast<std::uint32_t>(right_factor->size());
    return {r / nu, r % nu};
  }
};

inline ComposedBiset compose_bisets(const BisetPtr& v, const BisetPtr& u, ProductGroupPtr kg = nullptr) {
  if (!v->right_group()->same_table(*u->left_group()))
    throw StructureError("compose_bisets: middle groups differ");
  const auto& h_group = *u->left_group();
  if (!kg) kg = direct_product(v->left_group(), u->right_group());
  ComposedBiset out;
  out.left_factor = v;
  out.right_factor = u;
  const std::size_t nv = v->size(), nu = u->size();
  constexpr std::uint32_t unset = ~0u;
  out.point_of_pair.assign(nv * nu, unset);
  for (std::uint32_t r = 0; r < nv * nu; ++r) {
    if (out.point_of_pair[r] != unset) continue;
    const auto w = static_cast<std::uint32_t>(out.rep_pair.size());
    const auto [pv, pu] = out.unraw(r);
    out.rep_pair.emplace_back(pv, pu);
    std::vector<std::uint32_t> mem;
    for (Elem h = 0; h < h_group.order(); ++h) {
      auto q = out.raw(v->right(pv, h), u->left(h_group.inv(h), pu));
      if (out.point_of_pair[q] == unset) {
        out.point_of_pair[q] = w;
        mem.push_back(q);
      }
    }
    std::sort(mem.begin(), mem.end());
    out.members.push_back(std::move(mem));
  }
  const std::size_t m = out.rep_pair.size();
  const std::size_t nk = kg->left()->order(), ng = kg->right()->order();
  std::vector<Biset::Point> left(nk * m), right(m * ng);
  for (std::size_t w = 0; w < m; ++w) {
    const auto [pv, pu] = out.rep_pair[w];
    for (Elem k = 0; k < nk; ++k) left[k * m + w] = out.point_of(v->left(k, pv), pu);
    for (Elem g = 0; g < ng; ++g) right[w * ng + g] = out.point_of(pv, u->right(pu, g));
  }
  out.biset = std::make_shared<const Biset>(kg, m, std::move(left), std::move(right));
  return out;
}

/// {(k, g) : k w = w g}, the automorphism group of w in the composed biset.
inline ProductSubgroup stabilizer(const ComposedBiset& c, Biset::Point w) { return c.biset->aut_group(w); }

}  // namespace bisets
