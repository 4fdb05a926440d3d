#pragma once

/// \file
/// Sparse vectors and column-major sparse matrices over an exact field.
///
/// Representations built from permutation modules are monomial, so almost
/// every matrix in a verification run has one or two entries per column.

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "bisets/error.hpp"

namespace bisets {

template <class F>
using Entry = std::pair<std::uint32_t, typename F::value_type>;

/// Sorted by index, no explicit zeros.
template <class F>
using SparseVec = std::vector<Entry<F>>;

/// Returns y + a*x.
template <class F>
SparseVec<F> axpy(const F& field, const typename F::value_type& a, const SparseVec<F>& x, const SparseVec<F>& y) {
  SparseVec<F> out;
  out.reserve(x.size() + y.size());
  auto ix = x.begin();
  auto iy = y.begin();
  while (ix != x.end() || iy != y.end()) {
    if (iy == y.end() || (ix != x.end() && ix->first < iy->first)) {
      auto v = field.mul(a, ix->second);
      if (!field.is_zero(v)) out.emplace_back(ix->first, std::move(v));
      ++ix;
    } else if (ix == x.end() || iy->first < ix->first) {
      out.push_back(*iy);
      ++iy;
    } else {
      auto v = iy->second;
      field.axpy_in(v, a, ix->second);
      if (!field.is_zero(v)) out.emplace_back(iy->first, std::move(v));
      ++ix;
      ++iy;
    }
  }
  return out;
}

template <class F>
SparseVec<F> scaled(const F& field, const typename F::value_type& a, const SparseVec<F>& x) {
  SparseVec<F> out;
  if (field.is_zero(a)) return out;
  out.reserve(x.size());
  for (const auto& [i, v] : x) out.emplace_back(i, field.mul(a, v));
  return out;
}

template <class F>
bool sparse_equal(const F& field, const SparseVec<F>& a, const SparseVec<F>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].first != b[i].first || !field.equal(a[i].second, b[i].second)) return false;
  return true;
}

/// Accumulates unsorted (index, value) contributions and emits a canonical SparseVec.
template <class F>
SparseVec<F> canonicalize(const F& field, std::vector<Entry<F>> raw) {
  std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec<F> out;
  out.reserve(raw.size());
  for (auto& e : raw) {
    if (!out.empty() && out.back().first == e.first) out.back().second = field.add(out.back().second, e.second);
    else out.push_back(std::move(e));
  }
  std::erase_if(out, [&](const auto& e) { return field.is_zero(e.second); });
  return out;
}

/// Column-major sparse matrix. Column j is the image of the j-th basis vector.
template <class F>
class SparseMatrix {
 public:
  using value_type = typename F::value_type;

  SparseMatrix() = default;
  SparseMatrix(F field, std::size_t rows, std::size_t cols) : field_(std::move(field)), rows_(rows), columns_(cols) {}

  static SparseMatrix identity(F field, std::size_t n) {
    SparseMatrix m(field, n, n);
    for (std::size_t j = 0; j < n; ++j) m.columns_[j].emplace_back(static_cast<std::uint32_t>(j), field.one());
    return m;
  }

  [[nodiscard]] const F& field() const { return field_; }
  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return columns_.size(); }

  [[nodiscard]] const SparseVec<F>& column(std::size_t j) const { return columns_[j]; }
  void set_column(std::size_t j, SparseVec<F> v) {
    check(v.empty() || v.back().first < rows_, "SparseMatrix::set_column: row index out of range");
    columns_[j] = std::move(v);
  }

  [[nodiscard]] value_type at(std::size_t i, std::size_t j) const {
    const auto& c = columns_[j];
    auto it = std::lower_bound(c.begin(), c.end(), i, [](const auto& e, std::size_t k) { return e.first < k; });
    if (it != c.end() && it->first == i) return it->second;
    return field_.zero();
  }

  /// Returns this * x.
  [[nodiscard]] SparseVec<F> apply(const SparseVec<F>& x) const {
    if (x.size() == 1) return scaled(field_, x[0].second, columns_[x[0].first]);
    std::vector<Entry<F>> raw;
    for (const auto& [j, a] : x)
      for (const auto& [i, v] : columns_[j]) raw.emplace_back(i, field_.mul(a, v));
    return canonicalize(field_, std::move(raw));
  }

  [[nodiscard]] value_type trace() const {
    value_type t = field_.zero();
    for (std::size_t j = 0; j < std::min(rows_, cols()); ++j) t = field_.add(t, at(j, j));
    return t;
  }

  [[nodiscard]] std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& c : columns_) n += c.size();
    return n;
  }

  [[nodiscard]] bool is_identity() const {
    if (rows_ != cols()) return false;
    for (std::size_t j = 0; j < cols(); ++j) {
      const auto& c = columns_[j];
      if (c.size() != 1 || c[0].first != j || !field_.is_one(c[0].second)) return false;
    }
    return true;
  }

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    check(a.cols() == b.rows(), "SparseMatrix product: shape mismatch");
    SparseMatrix out(a.field_, a.rows_, b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) out.columns_[j] = a.apply(b.columns_[j]);
    return out;
  }

  /// Whether a * b == c, without forming the product when columns are monomial.
  friend bool product_equals(const SparseMatrix& a, const SparseMatrix& b, const SparseMatrix& c) {
    if (a.cols() != b.rows() || c.rows() != a.rows() || c.cols() != b.cols()) return false;
    const F& f = a.field_;
    for (std::size_t j = 0; j < b.cols(); ++j) {
      const auto& bj = b.columns_[j];
      const auto& cj = c.columns_[j];
      if (bj.size() == 1) {
        const auto& ak = a.columns_[bj[0].first];
        if (ak.size() != cj.size()) return false;
        for (std::size_t i = 0; i < ak.size(); ++i)
          if (ak[i].first != cj[i].first || !f.equal(f.mul(ak[i].second, bj[0].second), cj[i].second)) return false;
        continue;
      }
      if (!sparse_equal(f, a.apply(bj), cj)) return false;
    }
    return true;
  }

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols() != b.cols()) return false;
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!sparse_equal(a.field_, a.columns_[j], b.columns_[j])) return false;
    return true;
  }

 private:
  F field_{};
  std::size_t rows_ = 0;
  std::vector<SparseVec<F>> columns_;
};

/// Kronecker image (A ⊗ B)(e_a ⊗ e_b) with index a * B.rows() + b.
template <class F>
SparseVec<F> kron_column(const SparseMatrix<F>& a, const SparseMatrix<F>& b, std::size_t col_a, std::size_t col_b) {
  const F& field = a.field();
  SparseVec<F> out;
  const auto& ca = a.column(col_a);
  const auto& cb = b.column(col_b);
  out.reserve(ca.size() * cb.size());
  const auto stride = static_cast<std::uint32_t>(b.rows());
  for (const auto& [i, x] : ca)
    for (const auto& [k, y] : cb) out.emplace_back(i * stride + k, field.mul(x, y));
  return out;
}

/// (A ⊗ B) applied to a vector in the tensor space.
template <class F>
SparseVec<F> kron_apply(const SparseMatrix<F>& a, const SparseMatrix<F>& b, const SparseVec<F>& x) {
  const F& field = a.field();
  const auto stride = b.cols();
  std::vector<Entry<F>> raw;
  for (const auto& [idx, coeff] : x) {
    auto col = kron_column(a, b, idx / stride, idx % stride);
    for (auto& [i, v] : col) raw.emplace_back(i, field.mul(coeff, v));
  }
  return canonicalize(field, std::move(raw));
}

/// Block-diagonal sum.
template <class F>
SparseMatrix<F> direct_sum(const SparseMatrix<F>& a, const SparseMatrix<F>& b) {
  SparseMatrix<F> out(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) out.set_column(j, a.column(j));
  const auto shift = static_cast<std::uint32_t>(a.rows());
  for (std::size_t j = 0; j < b.cols(); ++j) {
    auto c = b.column(j);
    for (auto& e : c) e.first += shift;
    out.set_column(a.cols() + j, std::move(c));
  }
  return out;
}

}  // namespace bisets
