#pragma once

#include <cstddef>
#include <vector>

#include "binform/matrix.hpp"

namespace binform {

/// A linear subspace of Q^n stored by its reduced row echelon basis.
///
/// RREF is unique, so two subspaces are equal exactly when their basis grids
/// are equal; the defaulted operator== relies on that.
class Subspace {
public:
  Subspace() = default;

  /// Row space of `spanning_rows`. Idempotent; insensitive to row order and
  /// to rescaling of the input rows.
  static Subspace span(Mat spanning_rows) {
    Subspace s;
    s.ambient_ = spanning_rows.cols();
    s.pivots_ = reduce_rows(spanning_rows);
    Mat basis(s.pivots_.size(), s.ambient_);
    for (std::size_t i = 0; i < s.pivots_.size(); ++i)
      std::copy(spanning_rows.row(i).begin(), spanning_rows.row(i).end(),
                basis.row(i).begin());
    s.basis_ = std::move(basis);
    return s;
  }

  static Subspace span(const std::vector<Vec> &vectors, std::size_t ambient) {
    return span(Mat::from_rows(vectors, ambient));
  }

  static Subspace zero(std::size_t ambient) { return span(Mat(0, ambient)); }
  static Subspace full(std::size_t ambient) {
    return span(Mat::identity(ambient));
  }

  [[nodiscard]] std::size_t ambient_dim() const { return ambient_; }
  [[nodiscard]] std::size_t dim() const { return basis_.rows(); }
  [[nodiscard]] bool is_zero() const { return dim() == 0; }
  [[nodiscard]] bool is_full() const { return dim() == ambient_; }
  [[nodiscard]] const Mat &basis() const { return basis_; }
  [[nodiscard]] const std::vector<std::size_t> &pivots() const {
    return pivots_;
  }
  [[nodiscard]] std::vector<Vec> basis_vectors() const {
    std::vector<Vec> out;
    for (std::size_t i = 0; i < dim(); ++i)
      out.push_back(basis_.row_vec(i));
    return out;
  }

  /// Coordinates of `v` in the RREF basis: the entries of v at the pivot
  /// columns. Throws if v is not in the subspace.
  [[nodiscard]] Vec coordinates(const Vec &v) const {
    if (v.size() != ambient_)
      throw InvalidArgument("coordinates: ambient mismatch");
    Vec c(dim());
    Vec residue = v;
    for (std::size_t i = 0; i < dim(); ++i) {
      c[i] = v[pivots_[i]];
      if (sgn(c[i]) == 0)
        continue;
      for (std::size_t j = 0; j < ambient_; ++j)
        residue[j] -= c[i] * basis_(i, j);
    }
    for (const auto &q : residue)
      if (sgn(q) != 0)
        throw InvalidArgument("coordinates: vector not in subspace");
    return c;
  }

  [[nodiscard]] bool contains(const Vec &v) const {
    if (v.size() != ambient_)
      throw InvalidArgument("contains: ambient mismatch");
    Mat m = vstack(basis_, Mat::from_rows({v}, ambient_));
    return rank(std::move(m)) == dim();
  }

  friend bool operator==(const Subspace &, const Subspace &) = default;

private:
  std::size_t ambient_ = 0;
  Mat basis_;
  std::vector<std::size_t> pivots_;
};

/// {v : m v = 0}; dim = cols(m) - rank(m).
inline Subspace kernel(Mat m) {
  const std::size_t n = m.cols();
  const auto pivots = reduce_rows(m);
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots)
    is_pivot[p] = true;
  Mat basis(n - pivots.size(), n);
  std::size_t k = 0;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f])
      continue;
    basis(k, f) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      basis(k, pivots[i]) = -m(i, f);
    ++k;
  }
  return Subspace::span(std::move(basis));
}

inline void require_same_ambient(const Subspace &a, const Subspace &b,
                                 const char *what) {
  if (a.ambient_dim() != b.ambient_dim())
    throw InvalidArgument(std::string(what) + ": ambient dimension mismatch");
}

inline Subspace sum(const Subspace &a, const Subspace &b) {
  require_same_ambient(a, b, "sum");
  return Subspace::span(vstack(a.basis(), b.basis()));
}

/// Intersection via the kernel of the stacked coordinate system:
/// (alpha, beta) with alpha A = beta B, mapped back through A.
inline Subspace intersect(const Subspace &a, const Subspace &b) {
  require_same_ambient(a, b, "intersect");
  if (a.is_zero() || b.is_zero())
    return Subspace::zero(a.ambient_dim());
  const Mat stacked = vstack(a.basis(), b.basis());
  const Subspace relations = kernel(stacked.transpose());
  Mat out(relations.dim(), a.ambient_dim());
  for (std::size_t k = 0; k < relations.dim(); ++k)
    for (std::size_t i = 0; i < a.dim(); ++i) {
      const Rational &c = relations.basis()(k, i);
      if (sgn(c) == 0)
        continue;
      for (std::size_t j = 0; j < a.ambient_dim(); ++j)
        out(k, j) += c * a.basis()(i, j);
    }
  return Subspace::span(std::move(out));
}

/// Image m(A) of a subspace of the domain of m.
inline Subspace image(const Mat &m, const Subspace &a) {
  if (m.cols() != a.ambient_dim())
    throw InvalidArgument("image: dimension mismatch");
  return Subspace::span(a.basis() * m.transpose());
}

/// {v : m v in W}. Always contains kernel(m).
inline Subspace preimage(const Mat &m, const Subspace &w) {
  if (m.rows() != w.ambient_dim())
    throw InvalidArgument("preimage: dimension mismatch");
  if (w.is_full())
    return Subspace::full(m.cols());
  // Equations cutting out W, pulled back through m.
  const Subspace equations = kernel(w.basis());
  return kernel(equations.basis() * m);
}

/// True when a is a subspace of b.
inline bool is_subspace_of(const Subspace &a, const Subspace &b) {
  require_same_ambient(a, b, "is_subspace_of");
  return sum(a, b).dim() == b.dim();
}

} // namespace binform
