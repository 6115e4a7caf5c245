#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "binform/subspace.hpp"

namespace binform {

/// Binary form of degree d; coeffs[i] multiplies x^{d-i} y^i.
struct BinaryForm {
  int degree = 0;
  Vec coeffs{Rational(0)};

  BinaryForm() = default;
  BinaryForm(int d, Vec c) : degree(d), coeffs(std::move(c)) {
    if (d < 0 || coeffs.size() != static_cast<std::size_t>(d) + 1)
      throw InvalidArgument("binary form: need degree+1 coefficients");
  }

  static BinaryForm zero(int d) {
    return {d, Vec(static_cast<std::size_t>(d) + 1)};
  }
  /// x^{d-i} y^i
  static BinaryForm monomial(int d, int i) {
    auto f = zero(d);
    f.coeffs.at(static_cast<std::size_t>(i)) = 1;
    return f;
  }
  /// (alpha x + beta y)^d
  static BinaryForm linear_power(const Rational &alpha, const Rational &beta,
                                 int d);

  [[nodiscard]] bool is_zero() const {
    for (const auto &c : coeffs)
      if (sgn(c) != 0)
        return false;
    return true;
  }

  friend bool operator==(const BinaryForm &, const BinaryForm &) = default;
};

inline BinaryForm operator*(const BinaryForm &f, const BinaryForm &g) {
  auto h = BinaryForm::zero(f.degree + g.degree);
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
    if (sgn(f.coeffs[i]) == 0)
      continue;
    for (std::size_t j = 0; j < g.coeffs.size(); ++j)
      h.coeffs[i + j] += f.coeffs[i] * g.coeffs[j];
  }
  return h;
}

inline BinaryForm BinaryForm::linear_power(const Rational &alpha,
                                           const Rational &beta, int d) {
  BinaryForm out(0, {Rational(1)});
  const BinaryForm l(1, {alpha, beta});
  for (int k = 0; k < d; ++k)
    out = out * l;
  return out;
}

inline BinaryForm derivative_x(const BinaryForm &f) {
  if (f.degree == 0)
    throw InvalidArgument("derivative of a degree-0 form");
  const int d = f.degree;
  auto g = BinaryForm::zero(d - 1);
  for (int i = 0; i < d; ++i)
    g.coeffs[i] = f.coeffs[i] * (d - i);
  return g;
}

inline BinaryForm derivative_y(const BinaryForm &f) {
  if (f.degree == 0)
    throw InvalidArgument("derivative of a degree-0 form");
  const int d = f.degree;
  auto g = BinaryForm::zero(d - 1);
  for (int i = 1; i <= d; ++i)
    g.coeffs[i - 1] = f.coeffs[i] * i;
  return g;
}

/// d_x^{p} d_y^{q} f
inline BinaryForm mixed_partial(BinaryForm f, int p, int q) {
  for (int k = 0; k < p; ++k)
    f = derivative_x(f);
  for (int k = 0; k < q; ++k)
    f = derivative_y(f);
  return f;
}

/// Subspace T of S^dU, coordinates in the monomial basis x^{d-i} y^i.
struct FormSubspace {
  int degree = 0;
  Subspace space;

  FormSubspace() = default;
  FormSubspace(int d, Subspace s) : degree(d), space(std::move(s)) {
    if (d < 0 || space.ambient_dim() != static_cast<std::size_t>(d) + 1)
      throw InvalidArgument("form subspace: ambient must be degree+1");
  }

  static FormSubspace zero(int d) {
    return {d, Subspace::zero(static_cast<std::size_t>(d) + 1)};
  }
  static FormSubspace full(int d) {
    return {d, Subspace::full(static_cast<std::size_t>(d) + 1)};
  }
  static FormSubspace span(int d, const std::vector<BinaryForm> &forms) {
    std::vector<Vec> rows;
    for (const auto &f : forms) {
      if (f.degree != d)
        throw InvalidArgument("form subspace: mixed degrees");
      rows.push_back(f.coeffs);
    }
    return {d, Subspace::span(rows, static_cast<std::size_t>(d) + 1)};
  }

  [[nodiscard]] std::size_t dim() const { return space.dim(); }
  [[nodiscard]] bool is_zero() const { return space.is_zero(); }
  [[nodiscard]] bool is_full() const { return space.is_full(); }
  [[nodiscard]] bool contains(const BinaryForm &f) const {
    return f.degree == degree && space.contains(f.coeffs);
  }
  [[nodiscard]] std::vector<BinaryForm> basis_forms() const {
    std::vector<BinaryForm> out;
    for (auto &v : space.basis_vectors())
      out.emplace_back(degree, std::move(v));
    return out;
  }

  friend bool operator==(const FormSubspace &, const FormSubspace &) = default;
};

/// Subspace of S^dU* in the dual basis d_x^{d-i} d_y^i.
struct DualFormSubspace {
  int degree = 0;
  Subspace space;

  [[nodiscard]] std::size_t dim() const { return space.dim(); }
  friend bool operator==(const DualFormSubspace &,
                         const DualFormSubspace &) = default;
};

inline FormSubspace sum(const FormSubspace &a, const FormSubspace &b) {
  if (a.degree != b.degree)
    throw InvalidArgument("sum: degree mismatch");
  return {a.degree, sum(a.space, b.space)};
}

inline FormSubspace intersect(const FormSubspace &a, const FormSubspace &b) {
  if (a.degree != b.degree)
    throw InvalidArgument("intersect: degree mismatch");
  return {a.degree, intersect(a.space, b.space)};
}

inline bool is_subspace_of(const FormSubspace &a, const FormSubspace &b) {
  return a.degree == b.degree && is_subspace_of(a.space, b.space);
}

/// Matrix of alpha d_x + beta d_y : S^dU -> S^{d-1}U, shape d x (d+1).
inline Mat derivation_matrix(int d, const Rational &alpha,
                             const Rational &beta) {
  if (d < 1)
    throw InvalidArgument("derivation_matrix: degree must be >= 1");
  if (sgn(alpha) == 0 && sgn(beta) == 0)
    throw InvalidArgument("derivation_matrix: zero direction");
  Mat m(static_cast<std::size_t>(d), static_cast<std::size_t>(d) + 1);
  for (int i = 0; i <= d; ++i) {
    if (i < d)
      m(i, i) += alpha * (d - i);
    if (i > 0)
      m(i - 1, i) += beta * i;
  }
  return m;
}

/// dT computed as D T + E T for two independent directions D, E.
inline FormSubspace partial(const FormSubspace &t, std::array<Rational, 2> d1,
                            std::array<Rational, 2> d2) {
  if (t.degree < 1)
    throw InvalidArgument("partial: degree must be >= 1");
  if (d1[0] * d2[1] - d1[1] * d2[0] == 0)
    throw InvalidArgument("partial: directions must be independent");
  const Mat a = derivation_matrix(t.degree, d1[0], d1[1]);
  const Mat b = derivation_matrix(t.degree, d2[0], d2[1]);
  return {t.degree - 1, sum(image(a, t.space), image(b, t.space))};
}

inline FormSubspace partial(const FormSubspace &t) {
  return partial(t, {1, 0}, {0, 1});
}

/// Largest W in S^{d+1}U with dW inside T, as D^{-1}T cap E^{-1}T.
inline FormSubspace partial_inv(const FormSubspace &t,
                                std::array<Rational, 2> d1,
                                std::array<Rational, 2> d2) {
  if (d1[0] * d2[1] - d1[1] * d2[0] == 0)
    throw InvalidArgument("partial_inv: directions must be independent");
  const int up = t.degree + 1;
  const Mat a = derivation_matrix(up, d1[0], d1[1]);
  const Mat b = derivation_matrix(up, d2[0], d2[1]);
  return {up, intersect(preimage(a, t.space), preimage(b, t.space))};
}

inline FormSubspace partial_inv(const FormSubspace &t) {
  return partial_inv(t, {1, 0}, {0, 1});
}

inline FormSubspace partial_power(FormSubspace t, int times) {
  for (int k = 0; k < times; ++k)
    t = partial(t);
  return t;
}

inline FormSubspace partial_inv_power(FormSubspace t, int times) {
  for (int k = 0; k < times; ++k)
    t = partial_inv(t);
  return t;
}

/// Span of the r-th partials d_x^{r-i} d_y^i g in S^{deg-r}U. r = -1 gives
/// the zero subspace of S^{deg+1}U.
inline FormSubspace derivative_system(const BinaryForm &g, int r) {
  if (r > g.degree)
    throw InvalidArgument("derivative_system: order exceeds degree");
  if (r < -1)
    throw InvalidArgument("derivative_system: order must be >= -1");
  if (r == -1)
    return FormSubspace::zero(g.degree + 1);
  std::vector<BinaryForm> partials;
  for (int i = 0; i <= r; ++i)
    partials.push_back(mixed_partial(g, r - i, i));
  return FormSubspace::span(g.degree - r, partials);
}

/// Catalecticant A_r: row i holds the coefficients of d_x^{r-i} d_y^i g.
inline Mat catalecticant(const BinaryForm &g, int r) {
  if (r < 1 || r > g.degree)
    throw InvalidArgument("catalecticant: need 1 <= r <= degree");
  std::vector<Vec> rows;
  for (int i = 0; i <= r; ++i)
    rows.push_back(mixed_partial(g, r - i, i).coeffs);
  return Mat::from_rows(rows, static_cast<std::size_t>(g.degree - r) + 1);
}

/// [g] in Sec^{r-1} C_d, i.e. rank A_r <= r. The secant variety fills
/// P^d once 2r - 1 >= d.
inline bool secant_member(const BinaryForm &g, int r) {
  if (g.is_zero())
    throw InvalidArgument("secant_member: zero form has no projective point");
  if (r < 1 || r > g.degree)
    throw InvalidArgument("secant_member: need 1 <= r <= degree");
  if (2 * r - 1 >= g.degree)
    return true;
  return rank(catalecticant(g, r)) <= static_cast<std::size_t>(r);
}

/// Weight of the apolarity pairing <d_x^{d-i} d_y^i, x^{d-i} y^i>.
inline Integer apolarity_weight(int d, int i) {
  return factorial(static_cast<unsigned>(d - i)) *
         factorial(static_cast<unsigned>(i));
}

/// <phi, g> for phi in S^dU*, g in S^dU.
inline Rational apolarity_pairing(const Vec &phi, const BinaryForm &g) {
  if (phi.size() != g.coeffs.size())
    throw InvalidArgument("pairing: degree mismatch");
  Rational acc;
  for (std::size_t i = 0; i < phi.size(); ++i)
    acc += phi[i] * g.coeffs[i] *
           Rational(apolarity_weight(g.degree, static_cast<int>(i)));
  return acc;
}

/// T^perp in S^dU* under the apolarity pairing.
inline DualFormSubspace annihilator(const FormSubspace &t) {
  const std::size_t n = static_cast<std::size_t>(t.degree) + 1;
  Mat weighted = t.space.basis();
  for (std::size_t i = 0; i < weighted.rows(); ++i)
    for (std::size_t j = 0; j < n; ++j)
      weighted(i, j) *= Rational(apolarity_weight(t.degree, static_cast<int>(j)));
  return {t.degree, kernel(std::move(weighted))};
}

/// W S^kU*: products of a basis of W with all degree-k dual monomials.
inline DualFormSubspace dual_multiply(const DualFormSubspace &w, int k) {
  if (k < 0)
    throw InvalidArgument("dual_multiply: negative degree");
  const int out_degree = w.degree + k;
  const std::size_t n = static_cast<std::size_t>(out_degree) + 1;
  std::vector<Vec> rows;
  for (const auto &v : w.space.basis_vectors())
    for (int j = 0; j <= k; ++j) {
      Vec shifted(n);
      for (std::size_t i = 0; i < v.size(); ++i)
        shifted[i + static_cast<std::size_t>(j)] = v[i];
      rows.push_back(std::move(shifted));
    }
  return {out_degree, Subspace::span(rows, n)};
}

/// Matrix of S^d(g) on S^dU for g in GL(2) acting by x -> g00 x + g10 y,
/// y -> g01 x + g11 y. Column i is the image of x^{d-i} y^i.
inline Mat symmetric_power(const Mat &g, int d) {
  if (g.rows() != 2 || g.cols() != 2)
    throw InvalidArgument("symmetric_power: need a 2x2 matrix");
  const std::size_t n = static_cast<std::size_t>(d) + 1;
  Mat out(n, n);
  for (int i = 0; i <= d; ++i) {
    const BinaryForm col = BinaryForm::linear_power(g(0, 0), g(1, 0), d - i) *
                           BinaryForm::linear_power(g(0, 1), g(1, 1), i);
    for (std::size_t r = 0; r < n; ++r)
      out(r, static_cast<std::size_t>(i)) = col.coeffs[r];
  }
  return out;
}

inline FormSubspace act(const Mat &g, const FormSubspace &t) {
  return {t.degree, image(symmetric_power(g, t.degree), t.space)};
}

} // namespace binform
