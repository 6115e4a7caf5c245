#pragma once

#include <functional>
#include <string>
#include <vector>

#include "binform/classify.hpp"

namespace binform {

namespace detail {

inline void require_admissible(const NumericalType &tau, int d,
                               const char *what) {
  if (!tau.admissible(d))
    throw InvalidArgument(std::string(what) + ": type " + to_string(tau) +
                          " is not admissible in degree " + std::to_string(d));
}

/// sum_i sum_{b_j >= b_i} (b_j - b_i + 1)
inline long overlap_sum(const std::vector<int> &bs) {
  long acc = 0;
  for (int bi : bs)
    for (int bj : bs)
      if (bj >= bi)
        acc += bj - bi + 1;
  return acc;
}

} // namespace detail

/// All admissible types of (e+1)-dimensional subspaces of S^dU, in
/// lexicographic order of (a, b_1, b_2, ...). e = d is the full space (d).
inline std::vector<NumericalType> enumerate_types(int d, int e) {
  if (d < 0 || e < -1 || e + 1 > d + 1)
    throw InvalidArgument("enumerate_types: need -1 <= e <= d");
  if (e == d)
    return {NumericalType{d, {}}};
  std::vector<NumericalType> out;
  // Parts p_i = b_i + 1 >= 1 partition e - a; dT has a+1 + sum(p_i+1) <= d.
  std::vector<int> parts;
  std::function<void(int, int, int)> extend = [&](int a, int remaining,
                                                  int max_part) {
    NumericalType t{a, {}};
    for (int p : parts)
      t.bs.push_back(p - 1);
    if (t.budget() > d)
      return;
    if (remaining == 0) {
      out.push_back(std::move(t));
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      parts.push_back(p);
      extend(a, remaining - p, p);
      parts.pop_back();
    }
  };
  for (int a = -1; a <= e; ++a)
    extend(a, e - a, e - a);
  std::sort(out.begin(), out.end());
  return out;
}

/// dim V_T = r a + sum_i sum_{b_j >= b_i} (b_j - b_i + 1)
inline long dim_VT(const NumericalType &tau) {
  if (!tau.well_formed())
    throw InvalidArgument("dim_VT: malformed type " + to_string(tau));
  return static_cast<long>(tau.r()) * tau.a + detail::overlap_sum(tau.bs);
}

/// dim G_tau = e + 1 + r (d - a - 1) - sum_i sum_{b_j >= b_i}(b_j - b_i + 1).
/// The full space (d) is a single point of Gr(d+1, d+1).
inline long dim_stratum(const NumericalType &tau, int d) {
  detail::require_admissible(tau, d, "dim_stratum");
  if (tau.a == d)
    return 0;
  const long r = tau.r();
  const long g = tau.dim() + r * (d - tau.a - 1) - detail::overlap_sum(tau.bs);
  const long via_vt = tau.a + 1 + r * d + tau.sum_b() - dim_VT(tau);
  if (g != via_vt)
    throw InternalInconsistency("dim G_tau formulas disagree");
  return g;
}

inline long grassmannian_dim(int d, int e) {
  return static_cast<long>(e + 1) * (d - e);
}

/// Type of a general (e+1)-dimensional subspace of S^dU.
inline NumericalType generic_type(int d, int e) {
  if (d < 0 || e < -1 || e > d)
    throw InvalidArgument("generic_type: need -1 <= e <= d");
  const int k = e + 1;
  NumericalType t;
  if (k == d + 1) {
    t = {d, {}};
  } else if (k == d) {
    t = {d - 1, {}};
  } else if (2 * k <= d) {
    t = {-1, std::vector<int>(static_cast<std::size_t>(k), 0)};
  } else {
    // r summands sharing s = 2(e+1) - d as evenly as possible.
    const int r = d - k;
    const int s = 2 * k - d;
    const int q = s / r;
    const int heavy = s - r * q;
    t.a = -1;
    t.bs.assign(static_cast<std::size_t>(heavy), q + 1);
    t.bs.insert(t.bs.end(), static_cast<std::size_t>(r - heavy), q);
    int total = 0;
    for (int b : t.bs)
      total += b + 1;
    if (total != k)
      throw InternalInconsistency("generic type does not have dim e+1");
  }
  if (dim_stratum(t, d) != grassmannian_dim(d, e))
    throw InternalInconsistency("generic type " + to_string(t) +
                                " is not dense in the Grassmannian");
  return t;
}

struct StratumReport {
  NumericalType tau;
  int d = 0;
  int e = 0;
  long dim_G = 0;
  long dim_VT = 0;
  bool is_generic = false;
  long codim = 0;
};

inline std::vector<StratumReport> strata_table(int d, int e) {
  std::vector<StratumReport> rows;
  const NumericalType generic = generic_type(d, e);
  for (auto &tau : enumerate_types(d, e)) {
    StratumReport rep;
    rep.d = d;
    rep.e = e;
    rep.dim_G = dim_stratum(tau, d);
    rep.dim_VT = dim_VT(tau);
    rep.codim = grassmannian_dim(d, e) - rep.dim_G;
    rep.is_generic = tau == generic;
    rep.tau = std::move(tau);
    rows.push_back(std::move(rep));
  }
  return rows;
}

/// Monomial subspace of the given type: a block x^d .. x^{d-a} y^a, then for
/// each b_i a block of b_i + 1 consecutive monomials, blocks separated by a
/// gap of one monomial.
inline FormSubspace monomial_fixture(int d, const NumericalType &tau) {
  detail::require_admissible(tau, d, "monomial_fixture");
  std::vector<BinaryForm> gens;
  for (int i = 0; i <= tau.a; ++i)
    gens.push_back(BinaryForm::monomial(d, i));
  int start = tau.a + 2;
  for (int b : tau.bs) {
    for (int i = start; i <= start + b; ++i)
      gens.push_back(BinaryForm::monomial(d, i));
    start += b + 2;
  }
  auto t = FormSubspace::span(d, gens);
  if (!t.is_full() && numerical_type(t) != tau)
    throw InternalInconsistency("fixture for " + to_string(tau) +
                                " classified as " +
                                to_string(numerical_type(t)));
  return t;
}

} // namespace binform
