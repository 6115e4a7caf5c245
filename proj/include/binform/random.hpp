#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "binform/forms.hpp"

namespace binform {

using Rng = std::mt19937_64;

/// Default bound N for integer draws in [-N, N].
inline constexpr long kDefaultCoeffBound = 100;
inline constexpr int kDefaultRetryBudget = 32;
inline constexpr std::uint64_t kDefaultSeed = 20240601;

/// Independent, reproducible stream for trial `index` under `seed`.
inline Rng sub_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

inline Rational random_integer(Rng &rng, long bound) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  return Rational(dist(rng));
}

/// Random integer combination of the basis of `s`; nonzero unless s = 0.
inline Vec random_element(const Subspace &s, Rng &rng,
                          long bound = kDefaultCoeffBound) {
  Vec v(s.ambient_dim());
  if (s.is_zero())
    return v;
  for (;;) {
    bool any = false;
    for (std::size_t i = 0; i < s.dim(); ++i) {
      const Rational c = random_integer(rng, bound);
      if (sgn(c) == 0)
        continue;
      any = true;
      for (std::size_t j = 0; j < v.size(); ++j)
        v[j] += c * s.basis()(i, j);
    }
    if (any)
      return v;
  }
}

inline BinaryForm random_form(int d, Rng &rng,
                              long bound = kDefaultCoeffBound) {
  for (;;) {
    auto f = BinaryForm::zero(d);
    for (auto &c : f.coeffs)
      c = random_integer(rng, bound);
    if (!f.is_zero())
      return f;
  }
}

/// Uniformly drawn integer spanning set of the requested dimension, redrawn
/// until it has full rank.
inline FormSubspace random_subspace(int d, std::size_t dim, Rng &rng,
                                    long bound = kDefaultCoeffBound) {
  const std::size_t n = static_cast<std::size_t>(d) + 1;
  if (dim > n)
    throw InvalidArgument("random_subspace: dimension exceeds ambient");
  for (;;) {
    Mat m(dim, n);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < n; ++j)
        m(i, j) = random_integer(rng, bound);
    auto s = Subspace::span(std::move(m));
    if (s.dim() == dim)
      return {d, std::move(s)};
  }
}

/// Random invertible 2x2 integer matrix.
inline Mat random_gl2(Rng &rng, long bound = 20) {
  for (;;) {
    Mat g(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        g(i, j) = random_integer(rng, bound);
    if (g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0) != 0)
      return g;
  }
}

} // namespace binform
