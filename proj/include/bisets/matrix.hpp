#pragma once

/// \file
/// Dense exact matrices with row reduction, solving and inversion.

#include <cstdint>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "bisets/error.hpp"
#include "bisets/field.hpp"
#include "bisets/sparse.hpp"

namespace bisets {

template <class F>
class Matrix {
 public:
  using value_type = typename F::value_type;

  Matrix() = default;
  Matrix(F field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

  static Matrix identity(F field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = m.field_.one();
    return m;
  }

  /// Row-major list of integers, e.g. from_rows(Q, {{1, 2}, {2, 4}}).
  static Matrix from_rows(F field, const std::vector<std::vector<long>>& rows) {
    const std::size_t c = rows.empty() ? 0 : rows.front().size();
    Matrix m(field, rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      check(rows[i].size() == c, "Matrix::from_rows: ragged rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = m.field_.from_int(rows[i][j]);
    }
    return m;
  }

  static Matrix from_sparse(const SparseMatrix<F>& s) {
    Matrix m(s.field(), s.rows(), s.cols());
    for (std::size_t j = 0; j < s.cols(); ++j)
      for (const auto& [i, v] : s.column(j)) m(i, j) = v;
    return m;
  }

  [[nodiscard]] SparseMatrix<F> to_sparse() const {
    SparseMatrix<F> s(field_, rows_, cols_);
    for (std::size_t j = 0; j < cols_; ++j) {
      SparseVec<F> c;
      for (std::size_t i = 0; i < rows_; ++i)
        if (!field_.is_zero((*this)(i, j))) c.emplace_back(static_cast<std::uint32_t>(i), (*this)(i, j));
      s.set_column(j, std::move(c));
    }
    return s;
  }

  [[nodiscard]] const F& field() const { return field_; }
  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] bool is_square() const { return rows_ == cols_; }

  value_type& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const value_type& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  [[nodiscard]] Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  [[nodiscard]] bool is_zero() const {
    for (const auto& v : data_)
      if (!field_.is_zero(v)) return false;
    return true;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    check(a.cols_ == b.rows_, "Matrix product: shape mismatch");
    const F& f = a.field_;
    Matrix out(f, a.rows_, b.cols_);
    if constexpr (std::is_same_v<F, PrimeField>) {
      // residues are below 2^16: accumulate products in 64 bits, reduce once
      std::vector<std::uint64_t> acc(b.cols_);
      for (std::size_t i = 0; i < a.rows_; ++i) {
        std::fill(acc.begin(), acc.end(), 0);
        for (std::size_t k = 0; k < a.cols_; ++k) {
          const std::uint64_t aik = a(i, k);
          if (aik == 0) continue;
          const auto* row = &b.data_[k * b.cols_];
          for (std::size_t j = 0; j < b.cols_; ++j) acc[j] += aik * row[j];
        }
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) = static_cast<std::uint32_t>(acc[j] % f.modulus());
      }
      return out;
    }
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const auto& aik = a(i, k);
        if (f.is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) f.axpy_in(out(i, j), aik, b(k, j));
      }
    return out;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    check(a.rows_ == b.rows_ && a.cols_ == b.cols_, "Matrix difference: shape mismatch");
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] = a.field_.sub(a.data_[i], b.data_[i]);
    return out;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    check(a.rows_ == b.rows_ && a.cols_ == b.cols_, "Matrix sum: shape mismatch");
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] = a.field_.add(a.data_[i], b.data_[i]);
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.data_.size(); ++i)
      if (!a.field_.equal(a.data_[i], b.data_[i])) return false;
    return true;
  }

  [[nodiscard]] std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < rows_; ++i) {
      s += "[";
      for (std::size_t j = 0; j < cols_; ++j) s += (j ? " " : "") + field_.format((*this)(i, j));
      s += "]\n";
    }
    return s;
  }

 private:
  F field_{};
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<value_type> data_;
};

template <class F>
struct RrefResult {
  Matrix<F> reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

/// Reduced row echelon form by exact Gauss-Jordan elimination.
template <class F>
RrefResult<F> rref(Matrix<F> m) {
  const F& f = m.field();
  RrefResult<F> out;
  std::vector<std::size_t> support;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && f.is_zero(m(piv, col))) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
    const auto scale = f.inv(m(row, col));
    support.clear();
    for (std::size_t j = col; j < m.cols(); ++j) {
      if (f.is_zero(m(row, j))) continue;
      m(row, j) = f.mul(scale, m(row, j));
      support.push_back(j);
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || f.is_zero(m(i, col))) continue;
      const auto factor = f.neg(m(i, col));
      for (auto j : support) f.axpy_in(m(i, j), factor, m(row, j));
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.rank = out.pivots.size();
  out.reduced = std::move(m);
  return out;
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
  return rref(m).rank;
}

template <class F>
bool is_invertible(const Matrix<F>& a) {
  if (!a.is_square()) throw StructureError("is_invertible: matrix is not square");
  return rank(a) == a.rows();
}

/// Some X with A X = B, or nullopt when the system is inconsistent.
template <class F>
std::optional<Matrix<F>> solve_right(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.rows() != b.rows()) throw StructureError("solve_right: row counts differ");
  const F& f = a.field();
  Matrix<F> aug(f, a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) aug(i, a.cols() + j) = b(i, j);
  }
  auto r = rref(std::move(aug));
  Matrix<F> x(f, a.cols(), b.cols());
  for (std::size_t k = 0; k < r.rank; ++k) {
    const auto pc = r.pivots[k];
    if (pc >= a.cols()) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(pc, j) = r.reduced(k, a.cols() + j);
  }
  return x;
}

template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& a) {
  if (!a.is_square()) throw StructureError("inverse: matrix is not square");
  const std::size_t n = a.rows();
  Matrix<F> aug(a.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = a.field().one();
  }
  auto r = rref(std::move(aug));
  if (r.rank < n || (n > 0 && r.pivots[n - 1] >= n)) return std::nullopt;
  Matrix<F> x(a.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) x(i, j) = r.reduced(i, n + j);
  return x;
}

/// Columns of m at the pivot positions of its echelon form: a basis of the column space.
template <class F>
Matrix<F> column_space(const Matrix<F>& m) {
  auto r = rref(m);
  Matrix<F> out(m.field(), m.rows(), r.rank);
  for (std::size_t k = 0; k < r.rank; ++k)
    for (std::size_t i = 0; i < m.rows(); ++i) out(i, k) = m(i, r.pivots[k]);
  return out;
}

namespace detail {
template <class F>
Matrix<F> null_space_from(const Matrix<F>& m, const RrefResult<F>& r) {
  const F& f = m.field();
  std::vector<char> is_pivot(m.cols(), 0);
  for (auto p : r.pivots) is_pivot[p] = 1;
  Matrix<F> out(f, m.cols(), m.cols() - r.rank);
  std::size_t k = 0;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    out(c, k) = f.one();
    for (std::size_t i = 0; i < r.rank; ++i) out(r.pivots[i], k) = f.neg(r.reduced(i, c));
    ++k;
  }
  return out;
}
}  // namespace detail

/// Basis of {x : m x = 0}, one column per free variable.
template <class F>
Matrix<F> null_space(const Matrix<F>& m) {
  return detail::null_space_from(m, rref(m));
}

/// Column space and null space of m from one elimination.
template <class F>
std::pair<Matrix<F>, Matrix<F>> image_and_kernel(const Matrix<F>& m) {
  auto r = rref(m);
  Matrix<F> image(m.field(), m.rows(), r.rank);
  for (std::size_t k = 0; k < r.rank; ++k)
    for (std::size_t i = 0; i < m.rows(); ++i) image(i, k) = m(i, r.pivots[k]);
  return {std::move(image), detail::null_space_from(m, r)};
}

/// [a | b]
template <class F>
Matrix<F> hconcat(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.rows() != b.rows()) throw StructureError("hconcat: row counts differ");
  Matrix<F> out(a.field(), a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
  }
  return out;
}

}  // namespace bisets
