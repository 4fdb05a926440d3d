#pragma once

/// \file
/// Module homomorphisms: the space Hom_G(A, B) of intertwiners T with
/// T A(g) = B(g) T, and a search for an invertible one.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <type_traits>
#include <vector>

#include "bisets/error.hpp"
#include "bisets/field.hpp"
#include "bisets/matrix.hpp"
#include "bisets/quotient.hpp"
#include "bisets/rep.hpp"

namespace bisets {

/// D * S for dense D and sparse S.
template <class F>
Matrix<F> operator*(const Matrix<F>& d, const SparseMatrix<F>& s) {
  check(d.cols() == s.rows(), "dense * sparse: shape mismatch");
  const F& f = d.field();
  Matrix<F> out(f, d.rows(), s.cols());
  for (std::size_t j = 0; j < s.cols(); ++j)
    for (const auto& [l, v] : s.column(j))
      for (std::size_t i = 0; i < d.rows(); ++i) f.axpy_in(out(i, j), v, d(i, l));
  return out;
}

/// S * D for sparse S and dense D.
template <class F>
Matrix<F> operator*(const SparseMatrix<F>& s, const Matrix<F>& d) {
  check(s.cols() == d.rows(), "sparse * dense: shape mismatch");
  const F& f = d.field();
  Matrix<F> out(f, s.rows(), d.cols());
  for (std::size_t l = 0; l < s.cols(); ++l)
    for (const auto& [i, v] : s.column(l))
      for (std::size_t j = 0; j < d.cols(); ++j) f.axpy_in(out(i, j), v, d(l, j));
  return out;
}

/// T A(g) = B(g) T for every generator g of the group.
template <class F>
bool is_intertwiner(const Matrix<F>& t, const Rep<F>& a, const Rep<F>& b) {
  if (t.rows() != b.dim() || t.cols() != a.dim()) return false;
  for (auto g : a.group()->generators())
    if (!(t * a.image(g) == b.image(g) * t)) return false;
  return true;
}

namespace detail {

inline constexpr std::uint64_t certificate_prime = 2147483647ULL;  // 2^31 - 1

inline std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

inline std::size_t rank_mod(std::vector<std::uint64_t> a, std::size_t rows, std::size_t cols, std::uint64_t p) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[piv * cols + j], a[r * cols + j]);
    const auto inv = pow_mod(a[r * cols + c], p - 2, p);
    for (std::size_t j = c; j < cols; ++j) a[r * cols + j] = a[r * cols + j] * inv % p;
    for (std::size_t i = r + 1; i < rows; ++i) {
      const auto f = a[i * cols + c];
      if (f == 0) continue;
      for (std::size_t j = c; j < cols; ++j) a[i * cols + j] = (a[i * cols + j] + (p - f) * a[r * cols + j]) % p;
    }
    ++r;
  }
  return r;
}

/// Reduction of a rational matrix modulo p, or nullopt if p divides a denominator.
inline std::optional<std::vector<std::uint64_t>> reduce_mod(const Matrix<Rationals>& m, std::uint64_t p) {
  std::vector<std::uint64_t> out(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      auto r = m(i, j).mod(p);
      if (!r) return std::nullopt;
      out[i * m.cols() + j] = *r;
    }
  return out;
}

}  // namespace detail

/// Rank-n check. Over Q a full rank modulo 2^31-1 certifies invertibility
/// without rational arithmetic; otherwise falls back to exact elimination.
template <class F>
bool certify_invertible(const Matrix<F>& m) {
  if (!m.is_square()) return false;
  if constexpr (std::is_same_v<F, Rationals>) {
    if (auto red = detail::reduce_mod(m, detail::certificate_prime))
      if (detail::rank_mod(std::move(*red), m.rows(), m.cols(), detail::certificate_prime) == m.rows()) return true;
    return is_invertible(m);
  } else if constexpr (std::is_same_v<F, PrimeField>) {
    std::vector<std::uint64_t> a(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) a[i * m.cols() + j] = m(i, j);
    return detail::rank_mod(std::move(a), m.rows(), m.cols(), m.field().modulus()) == m.rows();
  } else {
    return is_invertible(m);
  }
}

/// Basis of Hom_G(A, B) as vectors of the dim(B) x dim(A) matrix entries
/// (entry (i, l) at i * dim(A) + l).
template <class F>
std::vector<SparseVec<F>> intertwiner_basis(const Rep<F>& a, const Rep<F>& b) {
  if (!a.group()->same_table(*b.group())) throw StructureError("intertwiner_basis: different groups");
  const F& f = a.field();
  const std::size_t da = a.dim(), db = b.dim();
  SparseEchelon<F> ech(f, da * db);
  for (auto g : a.group()->generators()) {
    const auto& am = a.image(g);
    const auto& bm = b.image(g);
    std::vector<std::vector<Entry<F>>> b_rows(db);
    for (std::size_t r = 0; r < db; ++r)
      for (const auto& [i, v] : bm.column(r)) b_rows[i].emplace_back(static_cast<std::uint32_t>(r), v);
    for (std::size_t i = 0; i < db; ++i)
      for (std::size_t j = 0; j < da; ++j) {
        std::vector<Entry<F>> raw;
        for (const auto& [l, v] : am.column(j)) raw.emplace_back(static_cast<std::uint32_t>(i * da + l), v);
        for (const auto& [r, v] : b_rows[i]) raw.emplace_back(static_cast<std::uint32_t>(r * da + j), f.neg(v));
        auto row = canonicalize(f, std::move(raw));
        if (!row.empty()) ech.add(std::move(row));
      }
  }
  return ech.kernel_basis();
}

enum class IsoStatus { found, not_isomorphic, undecided };

inline const char* to_string(IsoStatus s) {
  switch (s) {
    case IsoStatus::found: return "found";
    case IsoStatus::not_isomorphic: return "not_isomorphic";
    case IsoStatus::undecided: return "undecided";
  }
  return "?";
}

template <class F>
struct IsoSearch {
  IsoStatus status = IsoStatus::undecided;
  std::optional<Matrix<F>> iso;  // verified invertible intertwiner A -> B
  std::size_t hom_dim = 0;
  std::size_t attempts = 0;
  bool used_splitting = false;
};

struct IsoSearchOptions {
  std::uint64_t seed = 0x5eed;
  std::size_t random_attempts = 4;
  std::size_t split_attempts = 64;      // per level of the splitting search
};

namespace detail {

template <class F>
typename F::value_type random_scalar(const F& f, std::mt19937_64& rng) {
  if (f.characteristic() == 0) return f.from_int(static_cast<long>(rng() % 1000) + 1);
  return f.from_int(static_cast<long>(rng() % f.characteristic()));
}

/// Σ c_k basis_k as a rows x cols matrix (entry (i, l) at i * cols + l).
template <class F>
Matrix<F> combine(const F& f, const std::vector<SparseVec<F>>& basis, const std::vector<typename F::value_type>& coeff,
                  std::size_t rows, std::size_t cols) {
  Matrix<F> t(f, rows, cols);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (f.is_zero(coeff[k])) continue;
    for (const auto& [idx, v] : basis[k]) f.axpy_in(t(idx / cols, idx % cols), coeff[k], v);
  }
  return t;
}

template <class F>
Matrix<F> random_element(const F& f, const std::vector<SparseVec<F>>& basis, std::size_t rows, std::size_t cols,
                         std::mt19937_64& rng) {
  std::vector<typename F::value_type> coeff;
  coeff.reserve(basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) coeff.push_back(random_scalar(f, rng));
  return combine(f, basis, coeff, rows, cols);
}

/// A power of U whose rank no longer drops: its kernel and image give the
/// Fitting decomposition of U.
template <class F>
Matrix<F> fitting_power(Matrix<F> u) {
  auto r = rank(u);
  while (r > 0) {
    auto u2 = u * u;
    auto r2 = rank(u2);
    if (r2 == r) break;
    u = std::move(u2);
    r = r2;
  }
  return u;
}

/// Rows [begin, begin + count) of m.
template <class F>
Matrix<F> row_block(const Matrix<F>& m, std::size_t begin, std::size_t count) {
  Matrix<F> out(m.field(), count, m.cols());
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(begin + i, j);
  return out;
}

/// Constructive Krull-Schmidt search. For T: A -> B and S: B -> A, the Fitting
/// decompositions A = ker (ST)^N ⊕ im (ST)^N and B = ker (TS)^N ⊕ im (TS)^N are
/// module decompositions and T maps im (ST)^N isomorphically onto im (TS)^N.
/// When A ≅ B the kernels are isomorphic as well, and the search continues on
/// them. Every summand is kept as an inclusion W and a module projection P
/// (P W = 1), so Hom between summands is P_B Hom(A, B) W_A and no further
/// linear systems are solved.
template <class F>
std::optional<Matrix<F>> split_search(const F& f, std::size_t n, const std::vector<SparseVec<F>>& hab,
                                      const std::vector<SparseVec<F>>& hba, std::mt19937_64& rng,
                                      std::size_t attempts, std::size_t& work) {
  auto wa = Matrix<F>::identity(f, n), pa = wa, wb = wa, pb = wa;
  Matrix<F> total(f, n, n);
  std::size_t misses = 0;
  while (wa.cols() > 0) {
    if (misses >= attempts) return std::nullopt;
    ++work;
    auto t = pb * (random_element(f, hab, n, n, rng) * wa);
    if (certify_invertible(t)) return total + wb * t * pa;
    auto s = pa * (random_element(f, hba, n, n, rng) * wb);
    auto [a1, a0] = image_and_kernel(fitting_power(s * t));
    auto [b1, b0] = image_and_kernel(fitting_power(t * s));
    if (a1.cols() == 0 || a1.cols() != b1.cols()) {
      ++misses;
      continue;
    }
    auto ia = inverse(hconcat(a1, a0));
    auto ib = inverse(hconcat(b1, b0));
    check(ia.has_value() && ib.has_value(), "split_search: Fitting components do not span");
    const auto r1 = a1.cols(), r0 = a0.cols();
    total = total + wb * (t * (a1 * row_block(*ia, 0, r1))) * pa;
    wa = wa * a0;
    pa = row_block(*ia, r1, r0) * pa;
    wb = wb * b0;
    pb = row_block(*ib, r1, r0) * pb;
    misses = 0;
  }
  return total;
}

}  // namespace detail

/// Looks for an invertible T with T A(g) = B(g) T: random elements of Hom(A, B)
/// first, then the splitting search, which also works over tiny fields where
/// invertible elements are rare. Returns `not_isomorphic`
/// only when that is certain (dimension mismatch, Hom(A, B) = 0, or
/// dim Hom(A, B) differs from dim End(A)); a failed search reports `undecided`.
template <class F>
IsoSearch<F> find_intertwiner_iso(const Rep<F>& a, const Rep<F>& b, const IsoSearchOptions& opt = {}) {
  IsoSearch<F> out;
  if (!a.group()->same_table(*b.group())) throw StructureError("find_intertwiner_iso: different groups");
  if (a.dim() != b.dim()) {
    out.status = IsoStatus::not_isomorphic;
    return out;
  }
  const F& f = a.field();
  const std::size_t n = a.dim();
  if (n == 0) {
    out.status = IsoStatus::found;
    out.iso = Matrix<F>(f, 0, 0);
    return out;
  }
  auto basis = intertwiner_basis(a, b);
  out.hom_dim = basis.size();
  if (basis.empty()) {
    out.status = IsoStatus::not_isomorphic;
    return out;
  }

  auto accept = [&](Matrix<F> t) {
    ++out.attempts;
    if (!certify_invertible(t)) return false;
    check(is_intertwiner(t, a, b), "find_intertwiner_iso: candidate is not an intertwiner");
    out.status = IsoStatus::found;
    out.iso = std::move(t);
    return true;
  };

  std::mt19937_64 rng(opt.seed);
  std::vector<typename F::value_type> coeff(basis.size(), f.zero());
  if (basis.size() == 1) {
    coeff[0] = f.one();
    if (accept(detail::combine(f, basis, coeff, n, n))) return out;
  }
  for (std::size_t attempt = 0; attempt < opt.random_attempts; ++attempt) {
    for (auto& c : coeff) c = detail::random_scalar(f, rng);
    if (accept(detail::combine(f, basis, coeff, n, n))) return out;
  }

  out.used_splitting = true;
  std::size_t work = 0;
  if (auto t = detail::split_search(f, n, basis, intertwiner_basis(b, a), rng, opt.split_attempts, work)) {
    out.attempts += work;
    if (accept(std::move(*t))) return out;
  } else {
    out.attempts += work;
  }

  // A ≅ B forces dim Hom(A, B) = dim End(A) = dim End(B).
  if (intertwiner_basis(a, a).size() != basis.size() || intertwiner_basis(b, b).size() != basis.size())
    out.status = IsoStatus::not_isomorphic;
  return out;
}

}  // namespace bisets
