#pragma once

/// \file
/// Functors from the groupoid of a biset to vector spaces, and the tensor
/// product of two such functors over the composed biset V x_H U.
///
/// A functor M over an (H,G)-biset U assigns a space M(u) to every point and a
/// transport M(h,g): M(u) -> M(h u g^-1) to every morphism starting at u.
/// Transports are stored for every composite (h,g) and every point.

#include <algorithm>
#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bisets/biset.hpp"
#include "bisets/error.hpp"
#include "bisets/product.hpp"
#include "bisets/quotient.hpp"
#include "bisets/rep.hpp"
#include "bisets/tensor.hpp"

namespace bisets {

template <class F>
class FunctorOverBiset {
 public:
  using Point = Biset::Point;

  FunctorOverBiset() = default;
  FunctorOverBiset(BisetPtr biset, F field, std::vector<std::size_t> dims, std::vector<SparseMatrix<F>> transports)
      : biset_(std::move(biset)), field_(std::move(field)), dims_(std::move(dims)), transports_(std::move(transports)) {
    check(dims_.size() == biset_->size(), "FunctorOverBiset: one space per point");
    check(transports_.size() == biset_->ambient()->order() * biset_->size(), "FunctorOverBiset: transport count");
    for (Elem c = 0; c < biset_->ambient()->order(); ++c)
      for (Point u = 0; u < biset_->size(); ++u) {
        const auto& t = transport(c, u);
        check(t.cols() == dims_[u] && t.rows() == dims_[biset_->target(c, u)],
              "FunctorOverBiset: transport has the wrong shape");
      }
  }

  [[nodiscard]] const BisetPtr& biset() const { return biset_; }
  [[nodiscard]] const F& field() const { return field_; }
  [[nodiscard]] std::size_t dim(Point u) const { return dims_[u]; }
  [[nodiscard]] const std::vector<std::size_t>& dims() const { return dims_; }

  /// M(h,g) on M(u), for the composite id c = (h,g).
  [[nodiscard]] const SparseMatrix<F>& transport(Elem c, Point u) const { return transports_[c * biset_->size() + u]; }

  /// Identities go to identities and M(c'c) = M(c') M(c) on every point. With
  /// `exhaustive` every pair (c', c) is checked, otherwise c' runs over the
  /// generators of H x G, which already implies the rest.
  void check_functoriality(bool exhaustive = false) const {
    const auto& amb = *biset_->ambient();
    const auto& grp = *amb.group();
    for (Point u = 0; u < biset_->size(); ++u)
      check(transport(Group::identity, u).is_identity(), "functor: identity morphism at point " + std::to_string(u) +
                                                            " is not transported to the identity");
    std::vector<Elem> outer;
    if (exhaustive)
      for (Elem c = 0; c < grp.order(); ++c) outer.push_back(c);
    else
      outer = grp.generators();
    for (auto s : outer)
      for (Elem c = 0; c < grp.order(); ++c)
        for (Point u = 0; u < biset_->size(); ++u) {
          const auto v = biset_->target(c, u);
          check(product_equals(transport(s, v), transport(c, u), transport(grp.mul(s, c), u)),
                "functor: transports are not functorial at point " + std::to_string(u));
        }
  }

  /// M(u) as a representation of A(u) (indexed like aut_group(u).as_group()).
  [[nodiscard]] Rep<F> point_rep(Point u) const {
    auto a = biset_->aut_group(u);
    std::vector<SparseMatrix<F>> images;
    for (auto c : a.elements()) images.push_back(transport(c, u));
    return Rep<F>(a.subgroup().as_group(), field_, dims_[u], std::move(images));
  }

  /// Copy with one transport replaced (negative-control test hook; no checks).
  [[nodiscard]] FunctorOverBiset with_transport(Elem c, Point u, SparseMatrix<F> m) const {
    FunctorOverBiset out = *this;
    out.transports_[c * biset_->size() + u] = std::move(m);
    return out;
  }

 private:
  BisetPtr biset_;
  F field_{};
  std::vector<std::size_t> dims_;
  std::vector<SparseMatrix<F>> transports_;
};

/// The functor attached to an RX-module on U = (H x G)/X: every point carries
/// M, and M~(h,g) on the point of representative r is the action of the unique
/// x in X with (h,g) r = r' x for the representative r' of the target coset.
template <class F>
FunctorOverBiset<F> functor_from_module(const TransitiveBiset& u, const Rep<F>& m) {
  require_rep_of(m.group(), u.subgroup.subgroup(), "functor_from_module");
  const auto& amb = *u.biset->ambient();
  const auto& grp = *amb.group();
  const std::size_t points = u.biset->size();
  std::vector<SparseMatrix<F>> transports;
  transports.reserve(grp.order() * points);
  for (Elem c = 0; c < grp.order(); ++c)
    for (Biset::Point i = 0; i < points; ++i) {
      auto [j, x] = factor_through(grp, u.cosets, grp.mul(c, u.rep(i)));
      check(j == u.biset->target(c, i), "functor_from_module: coset factorization disagrees with the biset action");
      transports.push_back(m.image(u.subgroup.subgroup().local(x)));
    }
  FunctorOverBiset<F> out(u.biset, m.field(), std::vector<std::size_t>(points, m.dim()), std::move(transports));
  out.check_functoriality();
  return out;
}

/// Block offsets of Σ(M) = ⊕_u M(u).
template <class F>
std::vector<std::size_t> sigma_offsets(const FunctorOverBiset<F>& mf) {
  std::vector<std::size_t> off{0};
  for (auto d : mf.dims()) off.push_back(off.back() + d);
  return off;
}

/// Σ(M) = ⊕_u M(u) as an (H,G)-bimodule: (h,g) sends the block of u to the block
/// of h u g^-1 through M(h,g).
template <class F>
BimoduleRep<F> sigma(const FunctorOverBiset<F>& mf) {
  const auto& biset = *mf.biset();
  const auto& grp = *biset.ambient()->group();
  const auto off = sigma_offsets(mf);
  const std::size_t total = off.back();
  std::vector<SparseMatrix<F>> images;
  images.reserve(grp.order());
  for (Elem c = 0; c < grp.order(); ++c) {
    SparseMatrix<F> img(mf.field(), total, total);
    for (Biset::Point u = 0; u < biset.size(); ++u) {
      const auto v = biset.target(c, u);
      const auto& t = mf.transport(c, u);
      for (std::size_t j = 0; j < mf.dim(u); ++j) {
        auto col = t.column(j);
        for (auto& e : col) e.first += static_cast<std::uint32_t>(off[v]);
        img.set_column(off[u] + j, std::move(col));
      }
    }
    images.push_back(std::move(img));
  }
  return BimoduleRep<F>(biset.ambient(), Rep<F>(biset.ambient()->group(), mf.field(), total, std::move(images)));
}

/// One value of N ⊗_H M: the quotient of ⊕ N(v') ⊗ M(u') over the pairs (v', u')
/// of one H-orbit of V x U, by [n y ⊗ y^-1 m]_(v'y, y^-1 u') - [n ⊗ m]_(v', u').
template <class F>
struct TensorFunctorComponent {
  std::vector<std::uint32_t> pairs;    // raw pair ids (v * |U| + u), sorted
  std::vector<std::size_t> offsets;    // ambient offset of each pair's block; back() = ambient dim
  std::vector<std::size_t> right_dims; // dim M(u') for each pair
  QuotientSpace<F> quotient;
  std::vector<SparseVec<F>> relations;

  [[nodiscard]] std::uint32_t index(std::size_t pos, std::size_t i, std::size_t j) const {
    return static_cast<std::uint32_t>(offsets[pos] + i * right_dims[pos] + j);
  }
  /// (pair position, i, j) of an ambient index.
  [[nodiscard]] std::array<std::size_t, 3> decode(std::size_t idx) const {
    std::size_t pos = std::upper_bound(offsets.begin(), offsets.end(), idx) - offsets.begin() - 1;
    const auto local = idx - offsets[pos];
    return {pos, local / right_dims[pos], local % right_dims[pos]};
  }
};

template <class F>
struct TensorFunctor {
  ComposedBiset composed;
  std::vector<TensorFunctorComponent<F>> components;  // one per point of the composed biset
  std::vector<std::uint32_t> position;                // raw pair -> position inside its component
  FunctorOverBiset<F> functor;
};

/// N ⊗_H M over V x_H U, with outer transports k [n ⊗ m] g^-1 = [k n ⊗ m g^-1].
template <class F>
TensorFunctor<F> tensor_functors(const FunctorOverBiset<F>& nf, const FunctorOverBiset<F>& mf,
                                 ProductGroupPtr kg = nullptr) {
  const auto& vb = *nf.biset();
  const auto& ub = *mf.biset();
  if (!vb.right_group()->same_table(*ub.left_group())) throw StructureError("tensor_functors: middle groups differ");
  if (!(nf.field() == mf.field())) throw StructureError("tensor_functors: different coefficient fields");
  const F& field = nf.field();
  const auto& vamb = *vb.ambient();
  const auto& uamb = *ub.ambient();
  const auto& h_group = *ub.left_group();

  TensorFunctor<F> out;
  out.composed = compose_bisets(nf.biset(), mf.biset(), std::move(kg));
  const auto& comp = out.composed;
  out.position.assign(vb.size() * ub.size(), 0);
  const auto minus_one = field.neg(field.one());

  for (std::size_t w = 0; w < comp.members.size(); ++w) {
    TensorFunctorComponent<F> c;
    c.pairs = comp.members[w];
    c.offsets.push_back(0);
    for (std::size_t pos = 0; pos < c.pairs.size(); ++pos) {
      out.position[c.pairs[pos]] = static_cast<std::uint32_t>(pos);
      const auto [v, u] = comp.unraw(c.pairs[pos]);
      c.right_dims.push_back(mf.dim(u));
      c.offsets.push_back(c.offsets.back() + nf.dim(v) * mf.dim(u));
    }
    SparseEchelon<F> ech(field, c.offsets.back());
    for (std::size_t pos = 0; pos < c.pairs.size(); ++pos) {
      const auto [v, u] = comp.unraw(c.pairs[pos]);
      for (Elem y = 0; y < h_group.order(); ++y) {
        const auto yi = h_group.inv(y);
        const auto& ny = nf.transport(vamb.pair(0, yi), v);  // n -> n y, into N(v y)
        const auto& ym = mf.transport(uamb.pair(yi, 0), u);  // m -> y^-1 m, into M(y^-1 u)
        const auto to = out.position[comp.raw(vb.right(v, y), ub.left(yi, u))];
        for (std::size_t i = 0; i < nf.dim(v); ++i)
          for (std::size_t j = 0; j < mf.dim(u); ++j) {
            SparseVec<F> moved;
            for (const auto& [r, a] : ny.column(i))
              for (const auto& [s, b] : ym.column(j)) moved.emplace_back(c.index(to, r, s), field.mul(a, b));
            std::sort(moved.begin(), moved.end(), [](const auto& x, const auto& z) { return x.first < z.first; });
            auto rel = axpy(field, minus_one, SparseVec<F>{{c.index(pos, i, j), field.one()}}, moved);
            if (rel.empty()) continue;
            ech.add(rel);
            c.relations.push_back(std::move(rel));
          }
      }
    }
    c.quotient = QuotientSpace<F>(std::move(ech));
    out.components.push_back(std::move(c));
  }

  // Outer transports.
  const auto& cb = *comp.biset;
  const auto& kgp = *cb.ambient();
  const std::size_t points = cb.size();
  auto ambient_image = [&](Elem k, Elem g, std::size_t w, std::size_t idx) {
    const auto& src = out.components[w];
    const auto [pos, i, j] = src.decode(idx);
    const auto [v, u] = comp.unraw(src.pairs[pos]);
    const auto& kn = nf.transport(vamb.pair(k, 0), v);  // n -> k n
    const auto& mg = mf.transport(uamb.pair(0, g), u);  // m -> m g^-1
    const auto v2 = vb.left(k, v);
    const auto u2 = ub.right(u, kgp.right()->inv(g));
    const auto raw2 = comp.raw(v2, u2);
    const auto& dst = out.components[comp.point_of_pair[raw2]];
    const auto to = out.position[raw2];
    SparseVec<F> img;
    for (const auto& [r, a] : kn.column(i))
      for (const auto& [s, b] : mg.column(j)) img.emplace_back(dst.index(to, r, s), field.mul(a, b));
    std::sort(img.begin(), img.end(), [](const auto& x, const auto& z) { return x.first < z.first; });
    return img;
  };

  std::vector<char> is_gen(kgp.order(), 0);
  for (auto s : kgp.group()->generators()) is_gen[s] = 1;
  std::vector<SparseMatrix<F>> transports;
  transports.reserve(kgp.order() * points);
  std::vector<std::size_t> dims;
  for (const auto& c : out.components) dims.push_back(c.quotient.dim());
  for (Elem cid = 0; cid < kgp.order(); ++cid) {
    const auto k = kgp.first(cid), g = kgp.second(cid);
    for (std::size_t w = 0; w < points; ++w) {
      const auto w2 = cb.target(cid, static_cast<Biset::Point>(w));
      const auto& dst = out.components[w2];
      if (is_gen[cid]) {
        // well defined: relations of w land in the relation span of w2
        for (const auto& rel : out.components[w].relations) {
          std::vector<Entry<F>> raw;
          for (const auto& [idx, a] : rel)
            for (auto& [t, b] : ambient_image(k, g, w, idx)) raw.emplace_back(t, field.mul(a, b));
          check(dst.quotient.project(canonicalize(field, std::move(raw))).empty(),
                "tensor_functors: outer action does not descend to the quotient");
        }
      }
      transports.push_back(out.components[w].quotient.descend_to(
          dst.quotient, [&](std::size_t idx) { return ambient_image(k, g, w, idx); }));
    }
  }
  out.functor = FunctorOverBiset<F>(comp.biset, field, std::move(dims), std::move(transports));
  out.functor.check_functoriality();
  return out;
}

/// dim N(v) ⊗_{R H_{v,u}} M(u) with H_{v,u} = {h : v h = v, h u = u}, computed
/// directly from the point modules (independent of tensor_functors).
template <class F>
std::size_t balanced_point_tensor_dim(const FunctorOverBiset<F>& nf, const FunctorOverBiset<F>& mf, Biset::Point v,
                                      Biset::Point u) {
  const auto& vb = *nf.biset();
  const auto& ub = *mf.biset();
  const auto& h = ub.left_group();
  std::vector<Elem> stab;
  for (Elem x = 0; x < h->order(); ++x)
    if (vb.right(v, x) == v && ub.left(x, u) == u) stab.push_back(x);
  Subgroup hvu(h, stab);
  auto t = tensor_over_subgroup(
      nf.field(), nf.dim(v), mf.dim(u), hvu,
      [&](Elem x) -> const SparseMatrix<F>& { return nf.transport(vb.ambient()->pair(0, h->inv(x)), v); },
      [&](Elem x) -> const SparseMatrix<F>& { return mf.transport(ub.ambient()->pair(x, 0), u); });
  return t.dim();
}

/// Index bookkeeping for Σ(N) ⊗ Σ(M): (v, i) at offset_n[v] + i, and the tensor index
/// (offset_n[v] + i) * dim Σ(M) + offset_m[u] + j.
struct SigmaTensorLayout {
  std::vector<std::size_t> offset_n, offset_m;
  std::vector<std::uint32_t> point_n, point_m;  // per Σ index: owning point
  std::size_t dim_m = 0;

  template <class F>
  SigmaTensorLayout(const FunctorOverBiset<F>& nf, const FunctorOverBiset<F>& mf)
      : offset_n(sigma_offsets(nf)), offset_m(sigma_offsets(mf)), dim_m(offset_m.back()) {
    for (std::uint32_t v = 0; v + 1 < offset_n.size(); ++v) point_n.insert(point_n.end(), nf.dim(v), v);
    for (std::uint32_t u = 0; u + 1 < offset_m.size(); ++u) point_m.insert(point_m.end(), mf.dim(u), u);
  }
};

/// α: Σ(N ⊗_H M) -> Σ(N) ⊗_{RH} Σ(M), [n ⊗ m]_(v,u) -> n ⊗ m. Checks that the
/// relations of every component are sent to zero.
template <class F>
SparseMatrix<F> alpha(const FunctorOverBiset<F>& nf, const FunctorOverBiset<F>& mf, const TensorFunctor<F>& nm,
                      const BimoduleTensor<F>& target) {
  const F& field = nf.field();
  SigmaTensorLayout layout(nf, mf);
  const auto& comp = nm.composed;
  auto to_target = [&](std::size_t w, std::size_t idx) {
    const auto& c = nm.components[w];
    const auto [pos, i, j] = c.decode(idx);
    const auto [v, u] = comp.unraw(c.pairs[pos]);
    return static_cast<std::uint32_t>((layout.offset_n[v] + i) * layout.dim_m + layout.offset_m[u] + j);
  };
  const auto off = sigma_offsets(nm.functor);
  SparseMatrix<F> a(field, target.space.dim(), off.back());
  for (std::size_t w = 0; w < nm.components.size(); ++w) {
    const auto& c = nm.components[w];
    for (const auto& rel : c.relations) {
      std::vector<Entry<F>> raw;
      for (const auto& [idx, v] : rel) raw.emplace_back(to_target(w, idx), v);
      check(target.space.quotient.project(canonicalize(field, std::move(raw))).empty(),
            "alpha: a relation of the tensor functor is not killed");
    }
    const auto& free = c.quotient.free_columns();
    for (std::size_t q = 0; q < free.size(); ++q)
      a.set_column(off[w] + q, target.space.quotient.project_basis(to_target(w, free[q])));
  }
  return a;
}

/// β: Σ(N) ⊗_{RH} Σ(M) -> Σ(N ⊗_H M), n ⊗ m -> [n ⊗ m]_h for the h that moves
/// (v, u) to the stored representative of its class; in pair-indexed
/// components this is the summand of the pair (v, u) itself.
template <class F>
SparseMatrix<F> beta(const FunctorOverBiset<F>& nf, const FunctorOverBiset<F>& mf, const TensorFunctor<F>& nm,
                     const BimoduleTensor<F>& source) {
  const F& field = nf.field();
  SigmaTensorLayout layout(nf, mf);
  const auto& comp = nm.composed;
  const auto off = sigma_offsets(nm.functor);
  auto to_component = [&](std::size_t idx) {
    const auto a = idx / layout.dim_m, b = idx % layout.dim_m;
    const auto v = layout.point_n[a], u = layout.point_m[b];
    const auto raw = comp.raw(v, u);
    const auto w = comp.point_of_pair[raw];
    const auto& c = nm.components[w];
    return std::pair{w, c.index(nm.position[raw], a - layout.offset_n[v], b - layout.offset_m[u])};
  };
  auto image = [&](std::size_t idx) {
    const auto [w, local] = to_component(idx);
    auto col = nm.components[w].quotient.project_basis(local);
    for (auto& e : col) e.first += static_cast<std::uint32_t>(off[w]);
    return col;
  };
  for (const auto& rel : source.space.relations) {
    std::vector<Entry<F>> raw;
    for (const auto& [idx, v] : rel)
      for (const auto& [t, x] : image(idx)) raw.emplace_back(t, field.mul(v, x));
    check(canonicalize(field, std::move(raw)).empty(), "beta: a balancing relation is not killed");
  }
  const auto& free = source.space.quotient.free_columns();
  SparseMatrix<F> b(field, off.back(), free.size());
  for (std::size_t q = 0; q < free.size(); ++q) b.set_column(q, image(free[q]));
  return b;
}

}  // namespace bisets
