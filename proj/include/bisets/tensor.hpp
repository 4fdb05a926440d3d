#pragma once

/// \file
/// Tensor products balanced over a group: N ⊗_{RL} M as the quotient of N ⊗ M
/// by the span of (n.l) ⊗ m - n ⊗ (l.m), and P ⊗_{RH} Q for bimodules.
///
/// Tensor basis: e_i ⊗ e_j sits at index i * dim(M) + j.

#include <string>
#include <vector>

#include "bisets/error.hpp"
#include "bisets/product.hpp"
#include "bisets/quotient.hpp"
#include "bisets/rep.hpp"
#include "bisets/sparse.hpp"

namespace bisets {

/// Which group elements contribute relations. Generators span the same
/// relation space (the augmentation ideal is generated by s - 1 for generators s).
enum class RelationSpan { all_elements, generators };

template <class F>
struct AmalgamatedTensor {
  std::size_t left_dim = 0;
  std::size_t right_dim = 0;
  QuotientSpace<F> quotient;
  std::vector<SparseVec<F>> relations;

  [[nodiscard]] std::size_t dim() const { return quotient.dim(); }
  [[nodiscard]] std::uint32_t index(std::size_t i, std::size_t j) const {
    return static_cast<std::uint32_t>(i * right_dim + j);
  }

  /// Whether A ⊗ B maps every relation back into the relation span.
  [[nodiscard]] bool preserves_relations(const SparseMatrix<F>& a, const SparseMatrix<F>& b) const {
    for (const auto& r : relations)
      if (!quotient.project(kron_apply(a, b, r)).empty()) return false;
    return true;
  }

  /// The operator A ⊗ B descended to the quotient. With `verify`, first checks it
  /// is well defined there and throws AssertionFailure otherwise.
  [[nodiscard]] SparseMatrix<F> descend(const SparseMatrix<F>& a, const SparseMatrix<F>& b, bool verify = true) const {
    check(a.cols() == left_dim && b.cols() == right_dim, "AmalgamatedTensor::descend: operator shapes");
    if (verify) check(preserves_relations(a, b), "tensor action does not descend to the balanced quotient");
    return quotient.descend([&](std::size_t idx) { return kron_column(a, b, idx / right_dim, idx % right_dim); });
  }
};

/// N ⊗_{RL} M where `right_on_n(l)` is the matrix of n -> n.l and `left_on_m(l)`
/// that of m -> l.m, for l in `elements`.
template <class F, class RightFn, class LeftFn>
AmalgamatedTensor<F> amalgamated_tensor(const F& field, std::size_t dim_n, std::size_t dim_m,
                                        const std::vector<Elem>& elements, RightFn&& right_on_n, LeftFn&& left_on_m) {
  AmalgamatedTensor<F> out;
  out.left_dim = dim_n;
  out.right_dim = dim_m;
  const auto minus_one = field.neg(field.one());
  SparseEchelon<F> ech(field, dim_n * dim_m);
  for (auto l : elements) {
    const SparseMatrix<F>& a = right_on_n(l);
    const SparseMatrix<F>& b = left_on_m(l);
    for (std::size_t i = 0; i < dim_n; ++i)
      for (std::size_t j = 0; j < dim_m; ++j) {
        // (n_i . l) ⊗ m_j - n_i ⊗ (l . m_j)
        SparseVec<F> lhs;
        for (const auto& [r, v] : a.column(i)) lhs.emplace_back(out.index(r, j), v);
        SparseVec<F> rhs;
        for (const auto& [k, v] : b.column(j)) rhs.emplace_back(out.index(i, k), v);
        auto rel = axpy(field, minus_one, rhs, lhs);
        if (rel.empty()) continue;
        ech.add(rel);
        out.relations.push_back(std::move(rel));
      }
  }
  out.quotient = QuotientSpace<F>(std::move(ech));
  return out;
}

template <class F>
std::vector<Elem> relation_elements(const Subgroup& l, RelationSpan span) {
  if (span == RelationSpan::all_elements) return l.elements();
  std::vector<Elem> gens;
  for (auto s : l.as_group()->generators()) gens.push_back(l.ambient_id(s));
  return gens;
}

/// tensor_over_subgroup: N ⊗_{RL} M for L given as a subgroup of some group,
/// with the actions supplied per element of L.
template <class F, class RightFn, class LeftFn>
AmalgamatedTensor<F> tensor_over_subgroup(const F& field, std::size_t dim_n, std::size_t dim_m, const Subgroup& l,
                                          RightFn&& right_on_n, LeftFn&& left_on_m,
                                          RelationSpan span = RelationSpan::all_elements) {
  return amalgamated_tensor(field, dim_n, dim_m, relation_elements<F>(l, span), right_on_n, left_on_m);
}

/// P ⊗_{RH} Q for a (K,H)-bimodule P and an (H,G)-bimodule Q, with its quotient data.
template <class F>
struct BimoduleTensor {
  AmalgamatedTensor<F> space;
  BimoduleRep<F> module;  // over K x G
};

/// The (K,G)-bimodule P ⊗_{RH} Q; (k,g) acts on p ⊗ q as (k.p) ⊗ (q.g^-1).
template <class F>
BimoduleTensor<F> tensor_over_H(const BimoduleRep<F>& p, const BimoduleRep<F>& q,
                                RelationSpan span = RelationSpan::all_elements, ProductGroupPtr kg = nullptr) {
  if (!p.ambient->right()->same_table(*q.ambient->left())) throw StructureError("tensor_over_H: middle groups differ");
  const F& field = p.rep.field();
  if (!(field == q.rep.field())) throw StructureError("tensor_over_H: different coefficient fields");
  const auto& h_group = p.ambient->right();
  std::vector<Elem> middle;
  if (span == RelationSpan::all_elements)
    for (Elem h = 0; h < h_group->order(); ++h) middle.push_back(h);
  else
    middle = h_group->generators();
  BimoduleTensor<F> out;
  out.space = amalgamated_tensor(
      field, p.dim(), q.dim(), middle, [&](Elem h) -> const SparseMatrix<F>& { return p.right_action(h); },
      [&](Elem h) -> const SparseMatrix<F>& { return q.left_action(h); });
  if (!kg) kg = direct_product(p.ambient->left(), q.ambient->right());
  const auto& gens = kg->group()->generators();
  std::vector<SparseMatrix<F>> images;
  for (auto c : gens)
    images.push_back(out.space.descend(p.left_action(kg->first(c)), q.act(0, kg->second(c))));
  out.module = BimoduleRep<F>(kg, Rep<F>::from_generators(kg->group(), field, out.space.dim(), gens, images));
  return out;
}

}  // namespace bisets
