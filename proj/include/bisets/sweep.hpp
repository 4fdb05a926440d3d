#pragma once

/// \file
/// Catalog sweeps: every (K, H, G) from a group list, every Y <= K x H and
/// X <= H x G up to a maximum index, every pair of catalog modules. Cases are
/// numbered in enumeration order, which is deterministic.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "bisets/catalog.hpp"
#include "bisets/error.hpp"
#include "bisets/group.hpp"
#include "bisets/product.hpp"
#include "bisets/rep.hpp"
#include "bisets/theorem.hpp"

namespace bisets {

template <class F>
struct CatalogModule {
  std::string name;
  Rep<F> rep;
};

/// trivial, perm (on the cosets of the cyclic subgroup of the first generator)
/// and regular, each kept only if its dimension is at most `dim_cap` and it is
/// not a duplicate of an earlier entry.
template <class F>
std::vector<CatalogModule<F>> module_catalog(const Subgroup& y, const F& field, std::size_t dim_cap,
                                             const std::vector<std::string>& kinds = {"trivial", "perm", "regular"}) {
  const auto& g = y.as_group();
  std::vector<CatalogModule<F>> out;
  auto add = [&](std::string name, Rep<F> rep) {
    if (rep.dim() > dim_cap) return;
    for (const auto& m : out)
      if (m.rep.dim() == rep.dim() && m.rep.images() == rep.images()) return;
    out.push_back({std::move(name), std::move(rep)});
  };
  for (const auto& kind : kinds) {
    if (kind == "trivial") {
      add("trivial", trivial_rep(g, field));
    } else if (kind == "perm") {
      if (g->order() > 1) add("perm", perm_rep(g, subgroup_generated(g, {g->generators().front()}), field));
    } else if (kind == "regular") {
      add("regular", regular_rep(g, field));
    } else {
      throw SpecError("unknown catalog module '" + kind + "'");
    }
  }
  return out;
}

/// Module by catalog name (no dimension cap, no de-duplication).
template <class F>
Rep<F> catalog_module(const std::string& kind, const Subgroup& y, const F& field) {
  const auto& g = y.as_group();
  if (kind == "trivial") return trivial_rep(g, field);
  if (kind == "regular") return regular_rep(g, field);
  if (kind == "perm") {
    if (g->order() == 1) return trivial_rep(g, field);
    return perm_rep(g, subgroup_generated(g, {g->generators().front()}), field);
  }
  throw SpecError("unknown module '" + kind + "' (expected trivial, perm or regular)");
}

struct SweepSpec {
  std::vector<std::string> groups;
  std::vector<std::string> outer_left;   // K ranges over these instead of `groups` if non-empty
  std::vector<std::string> outer_right;  // same for G
  std::size_t max_index = 12;
  std::size_t dim_cap = 6;
  std::vector<std::string> modules{"trivial", "perm", "regular"};
  std::size_t max_product_order = 0;  // skip K x H or H x G above this order (0: no limit)
  std::size_t case_cap = 0;           // stop after this many cases (0: no limit)
};

/// Identifies a sweep case independently of the field.
struct SweepCaseInfo {
  std::size_t index = 0;
  std::string k, h, g;
  std::vector<Elem> y;  // elements of Y in K x H
  std::vector<Elem> x;  // elements of X in H x G
  std::string n, m;
};

/// Product-group data shared by all cases over the same pair of groups.
template <class F>
struct ProductCatalog {
  ProductGroupPtr product;
  std::vector<ProductSubgroup> subgroups;
  std::vector<std::vector<CatalogModule<F>>> modules;  // per subgroup
  std::size_t skipped_subgroups = 0;
  std::size_t skipped_modules = 0;
};

template <class F>
class SweepEnumerator {
 public:
  SweepEnumerator(SweepSpec spec, F field) : spec_(std::move(spec)), field_(std::move(field)) {
    if (spec_.max_index == 0 || spec_.dim_cap == 0) throw SpecError("sweep caps must be positive");
    hs_ = intern(spec_.groups);
    ks_ = spec_.outer_left.empty() ? hs_ : intern(spec_.outer_left);
    gs_ = spec_.outer_right.empty() ? hs_ : intern(spec_.outer_right);
  }

  /// Calls fn(info, case) for every case in order whose index passes `select`.
  /// Stops early if fn returns false.
  void for_each(const std::function<bool(const SweepCaseInfo&, const TheoremCase<F>&)>& fn,
                const std::function<bool(std::size_t)>& select = nullptr) {
    std::size_t index = 0;
    for (auto ki : ks_)
      for (auto hi : hs_)
        for (auto gi : gs_) {
          const auto& left = catalog(ki, hi);
          const auto& right = catalog(hi, gi);
          if (!left.product || !right.product) continue;
          auto kg = direct_product(groups_[ki], groups_[gi]);
          for (std::size_t yi = 0; yi < left.subgroups.size(); ++yi)
            for (std::size_t xi = 0; xi < right.subgroups.size(); ++xi)
              for (const auto& nmod : left.modules[yi])
                for (const auto& mmod : right.modules[xi]) {
                  if (spec_.case_cap && index >= spec_.case_cap) return;
                  if (select && !select(index)) {
                    ++index;
                    continue;
                  }
                  SweepCaseInfo info{index,
                                     names_[ki],
                                     names_[hi],
                                     names_[gi],
                                     left.subgroups[yi].elements(),
                                     right.subgroups[xi].elements(),
                                     nmod.name,
                                     mmod.name};
                  TheoremCase<F> c(left.subgroups[yi], right.subgroups[xi], nmod.rep, mmod.rep, kg);
                  ++index;
                  if (!fn(info, c)) return;
                }
        }
  }

  [[nodiscard]] std::size_t count() {
    std::size_t total = 0;
    for (auto ki : ks_)
      for (auto hi : hs_)
        for (auto gi : gs_) {
          const auto& left = catalog(ki, hi);
          const auto& right = catalog(hi, gi);
          if (!left.product || !right.product) continue;
          std::size_t nl = 0, nr = 0;
          for (const auto& m : left.modules) nl += m.size();
          for (const auto& m : right.modules) nr += m.size();
          total += nl * nr;
        }
    return spec_.case_cap ? std::min(total, spec_.case_cap) : total;
  }

  /// What the caps left out, over the product groups visited so far.
  struct Skipped {
    std::size_t subgroups_over_index = 0;
    std::size_t modules_over_dim_cap = 0;
    std::size_t products_over_order = 0;
  };
  [[nodiscard]] Skipped skipped() const {
    Skipped s;
    for (const auto& [key, pc] : cache_) {
      s.subgroups_over_index += pc.skipped_subgroups;
      s.modules_over_dim_cap += pc.skipped_modules;
      s.products_over_order += pc.product ? 0 : 1;
    }
    return s;
  }

  [[nodiscard]] const SweepSpec& spec() const { return spec_; }

 private:
  std::vector<std::size_t> intern(const std::vector<std::string>& specs) {
    std::vector<std::size_t> out;
    for (const auto& spec : specs) {
      auto it = std::find(names_.begin(), names_.end(), spec);
      if (it == names_.end()) {
        groups_.push_back(build_group(spec));
        names_.push_back(spec);
        it = names_.end() - 1;
      }
      out.push_back(static_cast<std::size_t>(it - names_.begin()));
    }
    return out;
  }

  const ProductCatalog<F>& catalog(std::size_t a, std::size_t b) {
    auto key = std::make_pair(a, b);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    ProductCatalog<F> pc;
    const auto order = groups_[a]->order() * groups_[b]->order();
    if (spec_.max_product_order == 0 || order <= spec_.max_product_order) {
      pc.product = direct_product(groups_[a], groups_[b]);
      for (auto& s : all_subgroups(pc.product->group())) {
        if (s.index() > spec_.max_index) {
          ++pc.skipped_subgroups;
          continue;
        }
        pc.modules.push_back(module_catalog(s, field_, spec_.dim_cap, spec_.modules));
        pc.skipped_modules += count_over_cap(s);
        pc.subgroups.emplace_back(pc.product, std::move(s));
      }
    }
    return cache_.emplace(key, std::move(pc)).first->second;
  }

  std::size_t count_over_cap(const Subgroup& s) const {
    std::size_t n = 0;
    const auto& g = s.as_group();
    for (const auto& kind : spec_.modules) {
      std::size_t dim = 1;
      if (kind == "regular") dim = s.size();
      if (kind == "perm" && s.size() > 1) dim = subgroup_generated(g, {g->generators().front()}).index();
      if (dim > spec_.dim_cap) ++n;
    }
    return n;
  }

  SweepSpec spec_;
  F field_;
  std::vector<GroupPtr> groups_;
  std::vector<std::string> names_;
  std::vector<std::size_t> ks_, hs_, gs_;
  std::map<std::pair<std::size_t, std::size_t>, ProductCatalog<F>> cache_;
};

/// Per-case seed: a splitmix64 step of (seed, index).
inline std::uint64_t case_seed(std::uint64_t seed, std::size_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(index) + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Deterministic per-mille selection of case indices from a seed.
inline bool subsample_selected(std::uint64_t seed, std::size_t index, std::size_t per_mille) {
  return case_seed(seed, index) % 1000 < per_mille;
}

}  // namespace bisets
