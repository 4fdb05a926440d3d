#pragma once

/// \file
/// Quotients of coordinate spaces by relation subspaces, and kernels of
/// sparse linear systems, via incremental sparse row echelon form.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "bisets/error.hpp"
#include "bisets/sparse.hpp"

namespace bisets {

/// Rows are kept with leading coefficient 1 at their smallest index; every
/// other entry of a row sits at a larger index. Reduction of an incoming row
/// only needs to clear its leading entry, so two-term relations stay two-term.
template <class F>
class SparseEchelon {
 public:
  SparseEchelon(F field, std::size_t columns) : field_(std::move(field)), columns_(columns), pivot_of_(columns, -1) {}

  [[nodiscard]] std::size_t columns() const { return columns_; }
  [[nodiscard]] std::size_t rank() const { return rows_.size(); }
  [[nodiscard]] const F& field() const { return field_; }

  /// Reduces `v` against the current rows; returns the residual (empty iff v is in the span).
  [[nodiscard]] SparseVec<F> reduce(SparseVec<F> v) const {
    while (!v.empty()) {
      const auto lead = v.front().first;
      const auto r = pivot_of_[lead];
      if (r < 0) break;
      v = axpy(field_, field_.neg(v.front().second), rows_[r], v);
    }
    return v;
  }

  /// Adds a row; returns true when it enlarged the span.
  bool add(SparseVec<F> v) {
    check(v.empty() || v.back().first < columns_, "SparseEchelon::add: index out of range");
    v = reduce(std::move(v));
    if (v.empty()) return false;
    const auto lead = v.front().first;
    if (!field_.is_one(v.front().second)) v = scaled(field_, field_.inv(v.front().second), v);
    pivot_of_[lead] = static_cast<std::int32_t>(rows_.size());
    rows_.push_back(std::move(v));
    finalized_ = false;
    return true;
  }

  [[nodiscard]] bool is_pivot(std::size_t col) const { return pivot_of_[col] >= 0; }

  /// Back-substitutes so each pivot row mentions only its pivot and free columns.
  void finalize() {
    if (finalized_) return;
    std::vector<std::uint32_t> pivots;
    for (std::size_t c = 0; c < columns_; ++c)
      if (pivot_of_[c] >= 0) pivots.push_back(static_cast<std::uint32_t>(c));
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
      auto& row = rows_[pivot_of_[*it]];
      bool clean = true;
      for (std::size_t k = 1; k < row.size(); ++k)
        if (pivot_of_[row[k].first] >= 0) {
          clean = false;
          break;
        }
      if (clean) continue;
      std::vector<Entry<F>> raw;
      raw.push_back(row.front());
      for (std::size_t k = 1; k < row.size(); ++k) {
        const auto& [c, v] = row[k];
        const auto r = pivot_of_[c];
        if (r < 0) {
          raw.push_back(row[k]);
          continue;
        }
        const auto& sub = rows_[r];  // already clean, sub[0] is (c, 1)
        for (std::size_t s = 1; s < sub.size(); ++s) raw.emplace_back(sub[s].first, field_.neg(field_.mul(v, sub[s].second)));
      }
      row = canonicalize(field_, std::move(raw));
    }
    finalized_ = true;
  }

  /// Row whose leading column is `col` (after finalize(): only free columns besides col).
  [[nodiscard]] const SparseVec<F>& pivot_row(std::size_t col) const { return rows_[pivot_of_[col]]; }

  /// Basis of the solution space {x : row·x = 0 for every row}, one vector per free column.
  [[nodiscard]] std::vector<SparseVec<F>> kernel_basis() {
    finalize();
    std::vector<std::vector<Entry<F>>> buckets(columns_);
    for (std::size_t c = 0; c < columns_; ++c) {
      if (pivot_of_[c] < 0) continue;
      const auto& row = rows_[pivot_of_[c]];
      for (std::size_t k = 1; k < row.size(); ++k)
        buckets[row[k].first].emplace_back(static_cast<std::uint32_t>(c), field_.neg(row[k].second));
    }
    std::vector<SparseVec<F>> basis;
    for (std::size_t c = 0; c < columns_; ++c) {
      if (pivot_of_[c] >= 0) continue;
      auto raw = std::move(buckets[c]);
      raw.emplace_back(static_cast<std::uint32_t>(c), field_.one());
      basis.push_back(canonicalize(field_, std::move(raw)));
    }
    return basis;
  }

 private:
  F field_;
  std::size_t columns_;
  std::vector<std::int32_t> pivot_of_;
  std::vector<SparseVec<F>> rows_;
  bool finalized_ = true;
};

/// The quotient of F^n by the span of a set of relation vectors.
///
/// Quotient coordinates are the non-pivot ("free") ambient coordinates of the
/// echelonized relations; the section sends quotient coordinate j to the
/// ambient basis vector at free_columns()[j].
template <class F>
class QuotientSpace {
 public:
  QuotientSpace() = default;

  QuotientSpace(F field, std::size_t ambient_dim, const std::vector<SparseVec<F>>& relations) {
    SparseEchelon<F> ech(field, ambient_dim);
    for (const auto& r : relations) ech.add(r);
    *this = QuotientSpace(std::move(ech));
  }

  explicit QuotientSpace(SparseEchelon<F> ech) : field_(ech.field()), ambient_dim_(ech.columns()) {
    ech.finalize();
    coord_.assign(ambient_dim_, -1);
    for (std::size_t c = 0; c < ambient_dim_; ++c)
      if (!ech.is_pivot(c)) {
        coord_[c] = static_cast<std::int32_t>(free_.size());
        free_.push_back(static_cast<std::uint32_t>(c));
      }
    images_.resize(ambient_dim_);
    for (std::size_t c = 0; c < ambient_dim_; ++c) {
      if (coord_[c] >= 0) {
        images_[c] = {{static_cast<std::uint32_t>(coord_[c]), field_.one()}};
        continue;
      }
      const auto& row = ech.pivot_row(c);
      SparseVec<F> img;
      img.reserve(row.size() - 1);
      for (std::size_t k = 1; k < row.size(); ++k)
        img.emplace_back(static_cast<std::uint32_t>(coord_[row[k].first]), field_.neg(row[k].second));
      std::sort(img.begin(), img.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      images_[c] = std::move(img);
    }
  }

  [[nodiscard]] const F& field() const { return field_; }
  [[nodiscard]] std::size_t ambient_dim() const { return ambient_dim_; }
  [[nodiscard]] std::size_t dim() const { return free_.size(); }
  [[nodiscard]] std::size_t relation_rank() const { return ambient_dim_ - free_.size(); }
  [[nodiscard]] const std::vector<std::uint32_t>& free_columns() const { return free_; }

  /// Quotient coordinates of an ambient vector.
  [[nodiscard]] SparseVec<F> project(const SparseVec<F>& v) const {
    if (v.size() == 1) return scaled(field_, v[0].second, images_[v[0].first]);
    std::vector<Entry<F>> raw;
    for (const auto& [i, a] : v)
      for (const auto& [j, b] : images_[i]) raw.emplace_back(j, field_.mul(a, b));
    return canonicalize(field_, std::move(raw));
  }

  [[nodiscard]] const SparseVec<F>& project_basis(std::size_t ambient_index) const { return images_[ambient_index]; }

  /// Ambient lift of a quotient vector.
  [[nodiscard]] SparseVec<F> section(const SparseVec<F>& q) const {
    SparseVec<F> out;
    out.reserve(q.size());
    for (const auto& [j, a] : q) out.emplace_back(free_[j], a);
    return out;
  }

  /// Projection as a dim() x ambient_dim() matrix.
  [[nodiscard]] SparseMatrix<F> projection_matrix() const {
    SparseMatrix<F> m(field_, dim(), ambient_dim_);
    for (std::size_t c = 0; c < ambient_dim_; ++c) m.set_column(c, images_[c]);
    return m;
  }

  /// Section as an ambient_dim() x dim() matrix.
  [[nodiscard]] SparseMatrix<F> section_matrix() const {
    SparseMatrix<F> m(field_, ambient_dim_, dim());
    for (std::size_t j = 0; j < dim(); ++j) m.set_column(j, {{free_[j], field_.one()}});
    return m;
  }

  /// Matrix on the quotient induced by an ambient operator given column-wise:
  /// `column(i)` returns the ambient image of ambient basis vector i.
  template <class ColumnFn>
  [[nodiscard]] SparseMatrix<F> descend(ColumnFn&& column) const {
    SparseMatrix<F> m(field_, dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) m.set_column(j, project(column(free_[j])));
    return m;
  }

  /// Map from this quotient to `target`, induced by an ambient-to-ambient operator.
  template <class ColumnFn>
  [[nodiscard]] SparseMatrix<F> descend_to(const QuotientSpace& target, ColumnFn&& column) const {
    SparseMatrix<F> m(field_, target.dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) m.set_column(j, target.project(column(free_[j])));
    return m;
  }

 private:
  F field_{};
  std::size_t ambient_dim_ = 0;
  std::vector<std::uint32_t> free_;
  std::vector<std::int32_t> coord_;
  std::vector<SparseVec<F>> images_;
};

/// quotient_by(n, relations) for callers holding relations as vectors.
template <class F>
QuotientSpace<F> quotient_by(const F& field, std::size_t ambient_dim, const std::vector<SparseVec<F>>& relations) {
  return QuotientSpace<F>(field, ambient_dim, relations);
}

}  // namespace bisets
