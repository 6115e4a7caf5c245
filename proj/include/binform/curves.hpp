#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "binform/classify.hpp"
#include "binform/strata.hpp"

namespace binform {

/// Twists (a_1 >= ... >= a_s) of the restricted tangent bundle of a degree-d
/// rational curve in P^s, s = d - e - 1.
struct SplittingType {
  int d = 0;
  std::vector<int> twists;

  [[nodiscard]] int s() const { return static_cast<int>(twists.size()); }
  /// Vertex dimension: the curve is a projection from P(T), dim T = e + 1.
  [[nodiscard]] int e() const { return d - s() - 1; }
  [[nodiscard]] long total() const {
    return std::accumulate(twists.begin(), twists.end(), 0L);
  }
  friend bool operator==(const SplittingType &, const SplittingType &) =
      default;
};

inline std::string to_string(const SplittingType &st) {
  std::string out = "(";
  for (std::size_t i = 0; i < st.twists.size(); ++i)
    out += (i ? "," : "") + std::to_string(st.twists[i]);
  return out + ")";
}

/// Throws InvalidArgument naming the first violated constraint:
/// 1 <= s <= d - 1, sorted, a_s >= d + 1, sum a_i = (d - e) d.
inline void validate_splitting(const SplittingType &st) {
  const int d = st.d;
  if (st.s() < 1 || st.s() > d - 1)
    throw InvalidArgument("splitting type " + to_string(st) +
                          ": need 1 <= s <= d - 1 (s = " +
                          std::to_string(st.s()) + ", d = " +
                          std::to_string(d) + ")");
  if (!std::is_sorted(st.twists.begin(), st.twists.end(), std::greater<>()))
    throw InvalidArgument("splitting type " + to_string(st) +
                          ": twists must be non-increasing");
  if (st.twists.back() < d + 1)
    throw InvalidArgument("splitting type " + to_string(st) +
                          ": smallest twist must be >= d + 1 = " +
                          std::to_string(d + 1));
  const long expected = static_cast<long>(d - st.e()) * d;
  if (st.total() != expected)
    throw InvalidArgument("splitting type " + to_string(st) +
                          ": sum of twists is " + std::to_string(st.total()) +
                          " but (d - e) d = " + std::to_string(expected) +
                          " for s = " + std::to_string(st.s()) +
                          " (e = " + std::to_string(st.e()) + ")");
}

/// Sum_i max(a_i - k + 1, 0) = (d - e)(d - k + 1) + (k - 1) for
/// 1 <= k <= d + 1.
inline bool euler_identity_holds(const SplittingType &st) {
  for (int k = 1; k <= st.d + 1; ++k) {
    long lhs = 0;
    for (int a : st.twists)
      lhs += std::max(a - k + 1, 0);
    const long rhs = static_cast<long>(st.d - st.e()) * (st.d - k + 1) + (k - 1);
    if (lhs != rhs)
      return false;
  }
  return true;
}

/// Degree-d parametrization P^1 -> P^s by s + 1 forms in (u, v); the
/// coefficient index i multiplies u^{d-i} v^i.
struct CurveMap {
  int d = 0;
  int s = 0;
  std::vector<BinaryForm> components;
  FormSubspace vertex;
};

namespace detail {

/// Scales v by a positive rational so that its entries are coprime integers.
inline void make_primitive(Vec &v) {
  Integer den = 1, num = 0;
  for (const auto &q : v) {
    if (q == 0)
      continue;
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), q.get_num_mpz_t());
  }
  if (num == 0)
    return;
  Rational scale(den, num);
  scale.canonicalize();
  for (auto &q : v)
    q *= scale;
}

/// Univariate polynomial over Q, index = power of t.
using Poly = std::vector<Rational>;

inline void trim(Poly &p) {
  while (!p.empty() && sgn(p.back()) == 0)
    p.pop_back();
}

inline Poly poly_mod(Poly a, const Poly &b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    const Rational q = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] -= q * b[i];
    trim(a);
  }
  return a;
}

inline Poly poly_gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

} // namespace detail

/// Common zero of all forms on P^1: the point (1:0) when every u^d
/// coefficient vanishes, otherwise a nonconstant gcd of the dehomogenized
/// polynomials in t = u/v.
inline bool has_base_point(const std::vector<BinaryForm> &forms) {
  if (forms.empty())
    return true;
  bool all_vanish_at_infinity = true;
  for (const auto &f : forms)
    if (sgn(f.coeffs.front()) != 0)
      all_vanish_at_infinity = false;
  if (all_vanish_at_infinity)
    return true;
  detail::Poly g;
  for (const auto &f : forms) {
    detail::Poly p(f.coeffs.rbegin(), f.coeffs.rend());
    g = detail::poly_gcd(std::move(g), std::move(p));
  }
  detail::trim(g);
  return g.size() > 1;
}

/// Projection of C_d from P(T): g_j(u, v) = <phi_j, (u x + v y)^d> where
/// phi_j is the j-th RREF row of T^perp scaled to a primitive integer vector,
/// so every component has integer coefficients.
inline CurveMap project_curve(const FormSubspace &t) {
  const int d = t.degree;
  if (static_cast<int>(t.dim()) > d - 1)
    throw InvalidArgument("project_curve: need dim T <= d - 1");
  const NumericalType type = numerical_type(t);
  if (type.a != -1)
    throw InvalidArgument("project_curve: vertex meets C_d (type " +
                          to_string(type) + ")");
  const DualFormSubspace perp = annihilator(t);
  CurveMap curve;
  curve.d = d;
  curve.s = static_cast<int>(perp.dim()) - 1;
  curve.vertex = t;
  for (auto phi : perp.space.basis_vectors()) {
    detail::make_primitive(phi);
    auto g = BinaryForm::zero(d);
    for (int i = 0; i <= d; ++i)
      g.coeffs[i] = phi[i] * Rational(apolarity_weight(d, i) *
                                      binomial(static_cast<unsigned>(d),
                                               static_cast<unsigned>(i)));
    curve.components.push_back(std::move(g));
  }
  std::vector<Vec> rows;
  for (const auto &g : curve.components)
    rows.push_back(g.coeffs);
  if (Subspace::span(rows, static_cast<std::size_t>(d) + 1).dim() !=
      curve.components.size())
    throw InternalInconsistency("curve components are dependent");
  if (has_base_point(curve.components))
    throw InternalInconsistency("projected curve has a base point");
  return curve;
}

/// h_k = h^0 T(-k) for k = 1 .. k_max; h[k - 1] holds h_k.
struct CohomologyProfile {
  int d = 0;
  int e = 0;
  std::vector<long> h;

  [[nodiscard]] int k_max() const { return static_cast<int>(h.size()); }
  [[nodiscard]] long at(int k) const {
    return k <= k_max() ? h[static_cast<std::size_t>(k - 1)] : 0;
  }
};

/// For k <= d + 1 the Euler sequence gives h_k = (d - e)(d - k + 1) + k - 1.
/// For k >= d + 2 two routes must agree: route A = dim d^{-(k-d-2)} T,
/// route B = k - 1 - dim T^perp S^{k-d-2} U*. Default k_max = d + 2 + h0
/// where h0 is the first level with d^{-h0} T = 0 (= b_1 + 1).
inline CohomologyProfile cohomology_profile(const FormSubspace &t,
                                            std::optional<int> k_max = {}) {
  const int d = t.degree;
  if (static_cast<int>(t.dim()) > d - 1)
    throw InvalidArgument("cohomology_profile: need dim T <= d - 1");
  CohomologyProfile prof;
  prof.d = d;
  prof.e = static_cast<int>(t.dim()) - 1;
  for (int k = 1; k <= d + 1; ++k)
    prof.h.push_back(static_cast<long>(d - prof.e) * (d - k + 1) + (k - 1));

  const DualFormSubspace perp = annihilator(t);
  FormSubspace level = t;
  for (int k = d + 2;; ++k) {
    if (k_max && k > *k_max)
      break;
    const int step = k - d - 2;
    if (step > 0)
      level = partial_inv(level);
    const long route_a = static_cast<long>(level.dim());
    const long route_b =
        (k - 1) - static_cast<long>(dual_multiply(perp, step).dim());
    if (route_a != route_b)
      throw InternalInconsistency(
          "cohomology routes disagree at k = " + std::to_string(k) + ": " +
          std::to_string(route_a) + " vs " + std::to_string(route_b));
    prof.h.push_back(route_a);
    if (!k_max && route_a == 0)
      break;
    if (!k_max && step > d + 2)
      throw InternalInconsistency("d^{-h}T never reached zero");
  }
  if (k_max && *k_max < static_cast<int>(prof.h.size()))
    prof.h.resize(static_cast<std::size_t>(std::max(*k_max, 0)));
  return prof;
}

/// Recovers the twists from h_k = sum_i max(a_i - k + 1, 0): the number of
/// a_i >= k is h_k - h_{k+1}.
inline SplittingType splitting_from_cohomology(const CohomologyProfile &prof,
                                               int d, int s) {
  const int kmax = prof.k_max();
  if (kmax < d + 2)
    throw InvalidArgument("cohomology profile must reach k = d + 2");
  if (prof.at(d + 2) <= 0)
    throw InvalidArgument("cohomology profile has h_{d+2} = 0: empty vertex");
  if (prof.at(kmax) != 0)
    throw InvalidArgument("cohomology profile must end with h_kmax = 0");
  for (int k = 1; k <= kmax; ++k) {
    const long drop = prof.at(k) - prof.at(k + 1);
    const long next_drop = prof.at(k + 1) - prof.at(k + 2);
    if (prof.at(k) < 0 || drop < 0 || drop < next_drop)
      throw InvalidArgument("cohomology profile is not convex non-increasing");
  }
  SplittingType st;
  st.d = d;
  for (int k = kmax; k >= 1; --k) {
    const long ge_k = prof.at(k) - prof.at(k + 1);
    const long ge_next = prof.at(k + 1) - prof.at(k + 2);
    st.twists.insert(st.twists.end(), static_cast<std::size_t>(ge_k - ge_next),
                     k);
  }
  if (st.s() != s)
    throw InvalidArgument("cohomology profile yields " +
                          std::to_string(st.s()) + " twists, expected " +
                          std::to_string(s));
  validate_splitting(st);
  return st;
}

inline SplittingType splitting_from_cohomology(const CohomologyProfile &prof) {
  return splitting_from_cohomology(prof, prof.d, prof.d - prof.e - 1);
}

/// (b_1 + d + 2, ..., b_r + d + 2, d + 1, ..., d + 1) with s = d - e - 1.
inline SplittingType splitting_from_type(const NumericalType &tau, int d) {
  if (tau.a != -1)
    throw InvalidArgument("splitting_from_type: need a = -1, got " +
                          to_string(tau));
  detail::require_admissible(tau, d, "splitting_from_type");
  if (tau.dim() == 0)
    throw InvalidArgument("splitting_from_type: empty vertex (e + 1 = 0)");
  SplittingType st;
  st.d = d;
  const int s = d - tau.dim();
  if (tau.r() > s)
    throw InternalInconsistency("more summands than target dimension");
  for (int b : tau.bs)
    st.twists.push_back(b + d + 2);
  st.twists.insert(st.twists.end(), static_cast<std::size_t>(s - tau.r()),
                   d + 1);
  validate_splitting(st);
  return st;
}

/// Numerical type (-1, b_1, ..., b_r) forced by a splitting type.
inline NumericalType type_from_splitting(const SplittingType &st) {
  validate_splitting(st);
  NumericalType tau{-1, {}};
  for (int a : st.twists)
    if (a >= st.d + 2)
      tau.bs.push_back(a - st.d - 2);
  if (!tau.admissible(st.d))
    throw InvalidArgument("splitting type " + to_string(st) +
                          ": derived type " + to_string(tau) +
                          " violates sum(b_i + 2) <= d");
  return tau;
}

struct ConstructedCurve {
  FormSubspace vertex;
  NumericalType type;
  CurveMap curve;
  CohomologyProfile profile;
};

/// Random f_i in S^{d+b_i}U off Sec^{b_i} C_{d+b_i} with the sum of the
/// d^{b_i+1}(f_i) direct; T = sum d^{b_i}(f_i) is the projection vertex.
inline ConstructedCurve construct_with_splitting(
    const SplittingType &target, Rng &rng,
    int retry_budget = kDefaultRetryBudget, long bound = kDefaultCoeffBound) {
  const NumericalType tau = type_from_splitting(target);
  const int d = target.d;
  for (int attempt = 0; attempt < retry_budget; ++attempt) {
    std::vector<BinaryForm> fs;
    bool ok = true;
    for (int b : tau.bs) {
      fs.push_back(random_form(d + b, rng, bound));
      if (secant_member(fs.back(), b + 1)) {
        ok = false;
        break;
      }
    }
    if (!ok)
      continue;
    FormSubspace derived = FormSubspace::zero(d - 1);
    FormSubspace vertex = FormSubspace::zero(d);
    for (std::size_t i = 0; i < fs.size(); ++i) {
      derived = sum(derived, derivative_system(fs[i], tau.bs[i] + 1));
      vertex = sum(vertex, derivative_system(fs[i], tau.bs[i]));
    }
    if (static_cast<int>(derived.dim()) != tau.budget())
      continue;
    if (static_cast<int>(vertex.dim()) != tau.dim())
      throw InternalInconsistency("vertex dimension differs from e + 1");
    const NumericalType got = numerical_type(vertex);
    if (got != tau)
      throw InternalInconsistency("constructed vertex has type " +
                                  to_string(got) + ", expected " +
                                  to_string(tau));
    ConstructedCurve out{vertex, tau, project_curve(vertex),
                         cohomology_profile(vertex)};
    const SplittingType recovered = splitting_from_cohomology(out.profile);
    if (recovered != target)
      throw InternalInconsistency("constructed curve has splitting " +
                                  to_string(recovered) + ", expected " +
                                  to_string(target));
    return out;
  }
  throw BudgetExhausted("construct_with_splitting: no valid draw within " +
                        std::to_string(retry_budget) + " attempts");
}

/// Every admissible splitting type of degree-d curves with 1 <= s <= d - 1,
/// via the admissible types with a = -1.
inline std::vector<SplittingType> admissible_splittings(int d) {
  std::vector<SplittingType> out;
  for (int e = 0; e <= d - 2; ++e)
    for (const auto &tau : enumerate_types(d, e))
      if (tau.a == -1)
        out.push_back(splitting_from_type(tau, d));
  return out;
}

} // namespace binform
