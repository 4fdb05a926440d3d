#pragma once

/// \file
/// Matrix representations of finite groups over exact fields.
///
/// A Rep stores one sparse matrix per group element. Representations of a
/// subgroup X live on X.as_group(), i.e. they are indexed by local ids.
///
/// Bimodules: a Rep of a product K x G is read as a (K,G)-bimodule through
/// k.m.g^-1 = (k,g).m. This is the only place left/right actions are
/// translated into the product group; every other module goes through it.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "bisets/error.hpp"
#include "bisets/group.hpp"
#include "bisets/matrix.hpp"
#include "bisets/product.hpp"
#include "bisets/sparse.hpp"

namespace bisets {

template <class F>
class Rep {
 public:
  using value_type = typename F::value_type;

  Rep() = default;

  Rep(GroupPtr group, F field, std::size_t dim, std::vector<SparseMatrix<F>> images)
      : group_(std::move(group)), field_(std::move(field)), dim_(dim), images_(std::move(images)) {
    validate();
  }

  /// Extends generator images to the whole group by right multiplication and
  /// checks that the result is a homomorphism.
  static Rep from_generators(GroupPtr group, F field, std::size_t dim, const std::vector<Elem>& gens,
                             const std::vector<SparseMatrix<F>>& gen_images) {
    check(gens.size() == gen_images.size(), "Rep::from_generators: one image per generator");
    std::vector<SparseMatrix<F>> images(group->order());
    std::vector<char> done(group->order(), 0);
    images[0] = SparseMatrix<F>::identity(field, dim);
    done[0] = 1;
    std::vector<Elem> queue{0};
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (std::size_t s = 0; s < gens.size(); ++s) {
        auto y = group->mul(queue[i], gens[s]);
        if (done[y]) continue;
        done[y] = 1;
        images[y] = images[queue[i]] * gen_images[s];
        queue.push_back(y);
      }
    check(queue.size() == group->order(), "Rep::from_generators: elements do not generate the group");
    return Rep(std::move(group), std::move(field), dim, std::move(images));
  }

  [[nodiscard]] const GroupPtr& group() const { return group_; }
  [[nodiscard]] const F& field() const { return field_; }
  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] const SparseMatrix<F>& image(Elem g) const { return images_.at(g); }
  [[nodiscard]] const std::vector<SparseMatrix<F>>& images() const { return images_; }

  /// Identity maps to identity and image(x s) = image(x) image(s) for every x and
  /// every generator s; together these force the homomorphism property.
  void validate() const {
    check(group_ != nullptr, "Rep: null group");
    check(images_.size() == group_->order(), "Rep: need one image per group element");
    for (const auto& m : images_)
      check(m.rows() == dim_ && m.cols() == dim_, "Rep: image has the wrong shape");
    check(images_[0].is_identity(), "Rep: identity element does not act as the identity");
    for (auto s : group_->generators())
      for (Elem x = 0; x < group_->order(); ++x)
        check(product_equals(images_[x], images_[s], images_[group_->mul(x, s)]),
              "Rep: images do not respect the group law of " + group_->name());
  }

 private:
  GroupPtr group_;
  F field_{};
  std::size_t dim_ = 0;
  std::vector<SparseMatrix<F>> images_;
};

/// A representation of K x G read as a (K,G)-bimodule via k.m.g^-1 = (k,g).m.
template <class F>
struct BimoduleRep {
  ProductGroupPtr ambient;
  Rep<F> rep;

  BimoduleRep() = default;
  BimoduleRep(ProductGroupPtr amb, Rep<F> r) : ambient(std::move(amb)), rep(std::move(r)) {
    check(ambient->group()->same_table(*rep.group()), "BimoduleRep: representation is not over the product group");
  }

  [[nodiscard]] std::size_t dim() const { return rep.dim(); }
  /// m -> k.m
  [[nodiscard]] const SparseMatrix<F>& left_action(Elem k) const { return rep.image(ambient->pair(k, 0)); }
  /// m -> m.g
  [[nodiscard]] const SparseMatrix<F>& right_action(Elem g) const {
    return rep.image(ambient->pair(0, ambient->right()->inv(g)));
  }
  /// m -> k.m.g^-1
  [[nodiscard]] const SparseMatrix<F>& act(Elem k, Elem g) const { return rep.image(ambient->pair(k, g)); }
};

/// Permutation matrix of `perm` (basis vector j goes to perm[j]).
template <class F>
SparseMatrix<F> permutation_matrix(const F& field, const std::vector<std::uint32_t>& perm) {
  SparseMatrix<F> m(field, perm.size(), perm.size());
  for (std::size_t j = 0; j < perm.size(); ++j) m.set_column(j, {{perm[j], field.one()}});
  return m;
}

template <class F>
Rep<F> trivial_rep(const GroupPtr& g, const F& field) {
  return Rep<F>(g, field, 1, std::vector<SparseMatrix<F>>(g->order(), SparseMatrix<F>::identity(field, 1)));
}

/// Permutation module on the left cosets G/A (basis ordered by left_coset_reps).
template <class F>
Rep<F> perm_rep(const GroupPtr& g, const Subgroup& a, const F& field) {
  auto cosets = left_cosets(g, a);
  const std::size_t n = cosets.reps.size();
  std::vector<SparseMatrix<F>> images;
  images.reserve(g->order());
  for (Elem x = 0; x < g->order(); ++x) {
    std::vector<std::uint32_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = cosets.coset_of[g->mul(x, cosets.reps[i])];
    images.push_back(permutation_matrix(field, perm));
  }
  return Rep<F>(g, field, n, std::move(images));
}

template <class F>
Rep<F> regular_rep(const GroupPtr& g, const F& field) {
  return perm_rep(g, Subgroup::trivial(g), field);
}

/// The restriction of M to A <= M.group(), as a representation of A.as_group().
template <class F>
Rep<F> restrict(const Rep<F>& m, const Subgroup& a) {
  require_subgroup_of(a, m.group(), "restrict");
  std::vector<SparseMatrix<F>> images;
  images.reserve(a.size());
  for (auto x : a.elements()) images.push_back(m.image(x));
  return Rep<F>(a.as_group(), m.field(), m.dim(), std::move(images));
}

inline void require_rep_of(const GroupPtr& rep_group, const Subgroup& x, const char* what) {
  if (!rep_group->same_table(*x.as_group()))
    throw StructureError(std::string(what) + ": module is not a representation of the given subgroup");
}

/// Ind_X^Γ M with basis (coset i, basis vector c) at index i * dim(M) + c.
/// γ (s_i ⊗ m) = s_j ⊗ x m where γ s_i = s_j x, s_j the minimum-id coset representative.
template <class F>
Rep<F> induce(const GroupPtr& gamma, const Subgroup& x, const Rep<F>& m) {
  require_subgroup_of(x, gamma, "induce");
  require_rep_of(m.group(), x, "induce");
  const F& field = m.field();
  auto cosets = left_cosets(gamma, x);
  const std::size_t n = cosets.reps.size(), d = m.dim();
  std::vector<SparseMatrix<F>> images;
  images.reserve(gamma->order());
  for (Elem g = 0; g < gamma->order(); ++g) {
    SparseMatrix<F> img(field, n * d, n * d);
    for (std::size_t i = 0; i < n; ++i) {
      auto [j, elem] = factor_through(*gamma, cosets, gamma->mul(g, cosets.reps[i]));
      const auto& block = m.image(x.local(elem));
      for (std::size_t c = 0; c < d; ++c) {
        auto col = block.column(c);
        for (auto& e : col) e.first += static_cast<std::uint32_t>(j * d);
        img.set_column(i * d + c, std::move(col));
      }
    }
    images.push_back(std::move(img));
  }
  return Rep<F>(gamma, field, n * d, std::move(images));
}

template <class F>
Rep<F> direct_sum(const Rep<F>& a, const Rep<F>& b) {
  check(a.group()->same_table(*b.group()), "direct_sum: representations of different groups");
  std::vector<SparseMatrix<F>> images;
  for (Elem g = 0; g < a.group()->order(); ++g) images.push_back(direct_sum(a.image(g), b.image(g)));
  return Rep<F>(a.group(), a.field(), a.dim() + b.dim(), std::move(images));
}

/// g -> T M(g) T^-1 for invertible T.
template <class F>
Rep<F> twist(const Rep<F>& m, const Matrix<F>& t) {
  auto t_inv = inverse(t);
  check(t_inv.has_value(), "twist: change of basis is singular");
  std::vector<SparseMatrix<F>> images;
  for (Elem g = 0; g < m.group()->order(); ++g)
    images.push_back((t * Matrix<F>::from_sparse(m.image(g)) * *t_inv).to_sparse());
  return Rep<F>(m.group(), m.field(), m.dim(), std::move(images));
}

/// Seeded random change of basis: a product of random unit lower and upper
/// triangular matrices, hence always invertible.
template <class F>
Matrix<F> random_invertible(const F& field, std::size_t n, std::mt19937_64& rng) {
  Matrix<F> lower = Matrix<F>::identity(field, n), upper = Matrix<F>::identity(field, n);
  auto draw = [&] { return field.from_int(static_cast<long>(rng() % 5) - 2); };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      lower(i, j) = draw();
      upper(j, i) = draw();
    }
  return lower * upper;
}

/// A direct sum of trivial / permutation / regular summands with total dimension
/// at most `dim_budget` (at least 1), conjugated by a seeded random basis change.
template <class F>
Rep<F> random_rep(const GroupPtr& g, std::size_t dim_budget, std::uint64_t seed, const F& field) {
  std::mt19937_64 rng(seed);
  std::vector<Subgroup> subs;
  if (g->order() <= 64) subs = all_subgroups(g);
  else
    for (Elem x = 0; x < g->order(); ++x) subs.push_back(subgroup_generated(g, {x}));
  std::size_t remaining = std::max<std::size_t>(dim_budget, 1);
  Rep<F> acc = trivial_rep(g, field);
  remaining -= 1;
  while (remaining > 0) {
    std::vector<const Subgroup*> fitting;
    for (const auto& s : subs)
      if (s.index() <= remaining) fitting.push_back(&s);
    const auto& pick = *fitting[rng() % fitting.size()];  // the whole group always fits
    acc = direct_sum(acc, perm_rep(g, pick, field));
    remaining -= pick.index();
    if (rng() % 3 == 0) break;
  }
  return twist(acc, random_invertible(field, acc.dim(), rng));
}

/// Class function: one trace value per conjugacy class (classes as in conjugacy_classes()).
template <class F>
struct Character {
  GroupPtr group;
  F field{};
  std::vector<std::vector<Elem>> classes;
  std::vector<typename F::value_type> values;

  friend bool operator==(const Character& a, const Character& b) {
    if (!a.group->same_table(*b.group) || a.values.size() != b.values.size()) return false;
    for (std::size_t i = 0; i < a.values.size(); ++i)
      if (!a.field.equal(a.values[i], b.values[i])) return false;
    return true;
  }

  [[nodiscard]] std::vector<std::string> formatted() const {
    std::vector<std::string> out;
    for (const auto& v : values) out.push_back(field.format(v));
    return out;
  }
};

template <class F>
Character<F> character(const Rep<F>& m) {
  Character<F> chi{m.group(), m.field(), conjugacy_classes(*m.group()), {}};
  for (const auto& c : chi.classes) chi.values.push_back(m.image(c.front()).trace());
  return chi;
}

/// Character equality. Decides isomorphism over Q; over F_p it is only a
/// necessary condition and callers must not treat it as evidence.
template <class F>
bool iso_by_character(const Rep<F>& a, const Rep<F>& b) {
  if (!a.group()->same_table(*b.group())) throw StructureError("iso_by_character: different groups");
  return a.dim() == b.dim() && character(a) == character(b);
}

}  // namespace bisets
