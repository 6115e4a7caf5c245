#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "binform/errors.hpp"
#include "binform/rational.hpp"

namespace binform {

using Vec = std::vector<Rational>;

/// Dense row-major matrix of rationals. Zero rows or zero columns are legal
/// and show up naturally (the basis of a zero subspace, a pencil on T = 0).
class Mat {
public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  /// Small literal matrices, mostly for tests: Mat{{1, 2}, {3, 4}}.
  Mat(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto &row : rows) {
      if (row.size() != cols_)
        throw InvalidArgument("ragged matrix literal");
      for (long v : row)
        data_.emplace_back(v);
    }
  }

  static Mat from_rows(const std::vector<Vec> &rows, std::size_t cols) {
    Mat m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols)
        throw InvalidArgument("row length does not match column count");
      std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
    }
    return m;
  }

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      m(i, i) = 1;
    return m;
  }

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }

  Rational &operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  const Rational &operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<Rational> row(std::size_t i) {
    return {data_.data() + i * cols_, cols_};
  }
  [[nodiscard]] std::span<const Rational> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  [[nodiscard]] Vec row_vec(std::size_t i) const {
    auto r = row(i);
    return {r.begin(), r.end()};
  }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i != j)
      std::swap_ranges(row(i).begin(), row(i).end(), row(j).begin());
  }

  [[nodiscard]] Mat transpose() const {
    Mat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        t(j, i) = (*this)(i, j);
    return t;
  }

  [[nodiscard]] bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(),
                       [](const Rational &q) { return sgn(q) == 0; });
  }

  friend bool operator==(const Mat &, const Mat &) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

inline Mat operator*(const Mat &lhs, const Mat &rhs) {
  if (lhs.cols() != rhs.rows())
    throw InvalidArgument("matrix product shape mismatch");
  Mat out(lhs.rows(), rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i)
    for (std::size_t k = 0; k < lhs.cols(); ++k) {
      const Rational &a = lhs(i, k);
      if (sgn(a) == 0)
        continue;
      for (std::size_t j = 0; j < rhs.cols(); ++j)
        out(i, j) += a * rhs(k, j);
    }
  return out;
}

inline Vec operator*(const Mat &m, const Vec &v) {
  if (m.cols() != v.size())
    throw InvalidArgument("matrix-vector shape mismatch");
  Vec out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (sgn(v[j]) != 0)
        out[i] += m(i, j) * v[j];
  return out;
}

/// Stack two matrices with equal column counts, `top` above `bottom`.
inline Mat vstack(const Mat &top, const Mat &bottom) {
  if (top.cols() != bottom.cols())
    throw InvalidArgument("vstack column mismatch");
  Mat out(top.rows() + bottom.rows(), top.cols());
  for (std::size_t i = 0; i < top.rows(); ++i)
    std::copy(top.row(i).begin(), top.row(i).end(), out.row(i).begin());
  for (std::size_t i = 0; i < bottom.rows(); ++i)
    std::copy(bottom.row(i).begin(), bottom.row(i).end(),
              out.row(top.rows() + i).begin());
  return out;
}

/// Gauss-Jordan elimination in place. Pivot = first nonzero entry in column
/// order; the result is the unique reduced row echelon form. Returns the
/// pivot columns, one per nonzero row (nonzero rows come first).
inline std::vector<std::size_t> reduce_rows(Mat &m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  Rational factor;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && sgn(m(p, c)) == 0)
      ++p;
    if (p == m.rows())
      continue;
    m.swap_rows(p, r);
    if (m(r, c) != 1) {
      const Rational inv = 1 / m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        m(r, j) *= inv;
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || sgn(m(i, c)) == 0)
        continue;
      factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (sgn(m(r, j)) != 0)
          m(i, j) -= factor * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline std::size_t rank(Mat m) { return reduce_rows(m).size(); }

} // namespace binform
