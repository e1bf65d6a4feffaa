#pragma once

// Dense matrices over an exact field. Pivoting is deterministic: columns are
// scanned left to right and the first row (top-down) with a nonzero entry in
// the current column becomes the pivot row.

#include "gcliff/scalars.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gcliff {

struct NotSquare : AlgebraError {
  using AlgebraError::AlgebraError;
};
struct DimensionMismatch : AlgebraError {
  using AlgebraError::AlgebraError;
};

template <Field K>
class Matrix {
 public:
  using value_type = typename K::value_type;

  Matrix(K field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

  static Matrix identity(const K& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  static Matrix from_rows(const K& field, const std::vector<std::vector<value_type>>& rows) {
    std::size_t c = rows.empty() ? 0 : rows.front().size();
    Matrix m(field, rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c) throw DimensionMismatch("ragged row list");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix from_ints(const K& field, const std::vector<std::vector<std::int64_t>>& rows) {
    std::vector<std::vector<value_type>> v;
    for (const auto& r : rows) {
      auto& out = v.emplace_back();
      for (auto x : r) out.push_back(field.from_int(x));
    }
    return from_rows(field, v);
  }

  const K& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  value_type& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const value_type& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const value_type> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  bool is_zero() const {
    for (const auto& v : data_)
      if (!field_.is_zero(v)) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.check_same_shape(b);
    Matrix r(a.field_, a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = a.field_.add(a.data_[i], b.data_[i]);
    return r;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.check_same_shape(b);
    Matrix r(a.field_, a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = a.field_.sub(a.data_[i], b.data_[i]);
    return r;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (!(a.field_ == b.field_)) throw FieldMismatch("matrix product over different fields");
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
    const K& k = a.field_;
    Matrix r(k, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t l = 0; l < a.cols_; ++l) {
        const auto& ail = a(i, l);
        if (k.is_zero(ail)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) = k.add(r(i, j), k.mul(ail, b(l, j)));
      }
    return r;
  }
  Matrix scaled(const value_type& c) const {
    Matrix r = *this;
    for (auto& v : r.data_) v = field_.mul(c, v);
    return r;
  }

  std::vector<value_type> apply(std::span<const value_type> v) const {
    if (v.size() != cols_) throw DimensionMismatch("matrix-vector shape mismatch");
    std::vector<value_type> out(rows_, field_.zero());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!field_.is_zero(v[j])) out[i] = field_.add(out[i], field_.mul((*this)(i, j), v[j]));
    return out;
  }

  value_type trace() const {
    if (rows_ != cols_) throw NotSquare("trace of a non-square matrix");
    value_type t = field_.zero();
    for (std::size_t i = 0; i < rows_; ++i) t = field_.add(t, (*this)(i, i));
    return t;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || !(a.field_ == b.field_)) return false;
    for (std::size_t i = 0; i < a.data_.size(); ++i)
      if (!a.field_.equal(a.data_[i], b.data_[i])) return false;
    return true;
  }

 private:
  void check_same_shape(const Matrix& b) const {
    if (!(field_ == b.field_)) throw FieldMismatch("matrices over different fields");
    if (rows_ != b.rows_ || cols_ != b.cols_) throw DimensionMismatch("matrix shape mismatch");
  }

  K field_;
  std::size_t rows_, cols_;
  std::vector<value_type> data_;
};

template <Field K>
struct RrefResult {
  Matrix<K> reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
};

template <Field K>
RrefResult<K> rref(Matrix<K> m) {
  const K& k = m.field();
  RrefResult<K> out{m, 0, {}};
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && k.is_zero(m(piv, col))) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
    auto inv = k.inv(m(row, col));
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = k.mul(m(row, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || k.is_zero(m(i, col))) continue;
      auto factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) = k.sub(m(i, j), k.mul(factor, m(row, j)));
    }
    out.pivot_columns.push_back(col);
    ++row;
  }
  out.rank = row;
  out.reduced = std::move(m);
  return out;
}

template <Field K>
std::size_t rank(const Matrix<K>& m) {
  return rref(m).rank;
}

/// Null-space basis. One vector per free column, with a 1 in that column and
/// zeros in the other free columns.
template <Field K>
std::vector<std::vector<typename K::value_type>> kernel(const Matrix<K>& m) {
  const K& k = m.field();
  auto r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : r.pivot_columns) is_pivot[c] = true;
  std::vector<std::vector<typename K::value_type>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<typename K::value_type> v(m.cols(), k.zero());
    v[free] = k.one();
    for (std::size_t i = 0; i < r.pivot_columns.size(); ++i) v[r.pivot_columns[i]] = k.neg(r.reduced(i, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

template <Field K>
typename K::value_type det(Matrix<K> m) {
  if (m.rows() != m.cols()) throw NotSquare("determinant of a non-square matrix");
  const K& k = m.field();
  auto d = k.one();
  const std::size_t n = m.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && k.is_zero(m(piv, col))) ++piv;
    if (piv == n) return k.zero();
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(col, j));
      d = k.neg(d);
    }
    d = k.mul(d, m(col, col));
    auto inv = k.inv(m(col, col));
    for (std::size_t i = col + 1; i < n; ++i) {
      if (k.is_zero(m(i, col))) continue;
      auto factor = k.mul(m(i, col), inv);
      for (std::size_t j = col; j < n; ++j) m(i, j) = k.sub(m(i, j), k.mul(factor, m(col, j)));
    }
  }
  return d;
}

/// Some solution of m * v = rhs, or nullopt if the system is inconsistent.
template <Field K>
std::optional<std::vector<typename K::value_type>> solve(const Matrix<K>& m,
                                                         std::span<const typename K::value_type> rhs) {
  const K& k = m.field();
  if (rhs.size() != m.rows()) throw DimensionMismatch("right-hand side length mismatch");
  Matrix<K> aug(k, m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = rhs[i];
  }
  auto r = rref(aug);
  if (!r.pivot_columns.empty() && r.pivot_columns.back() == m.cols()) return std::nullopt;
  std::vector<typename K::value_type> v(m.cols(), k.zero());
  for (std::size_t i = 0; i < r.pivot_columns.size(); ++i) v[r.pivot_columns[i]] = r.reduced(i, m.cols());
  return v;
}

template <Field K>
std::optional<Matrix<K>> inverse(const Matrix<K>& m) {
  if (m.rows() != m.cols()) throw NotSquare("inverse of a non-square matrix");
  const K& k = m.field();
  const std::size_t n = m.rows();
  Matrix<K> aug(k, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = k.one();
  }
  auto r = rref(aug);
  if (r.rank < n || r.pivot_columns[n - 1] != n - 1) return std::nullopt;
  Matrix<K> out(k, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = r.reduced(i, n + j);
  return out;
}

}  // namespace gcliff
