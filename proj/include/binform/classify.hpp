#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "binform/forms.hpp"
#include "binform/random.hpp"

namespace binform {

/// PGL(2) invariant (a, b_1 >= ... >= b_r) of a proper subspace T of S^dU.
/// a + 1 is the dimension of the C_d-generated part; each b_i is the order of
/// a derivative-system summand d^{b_i}(f_i).
struct NumericalType {
  int a = -1;
  std::vector<int> bs;

  [[nodiscard]] int r() const { return static_cast<int>(bs.size()); }
  [[nodiscard]] int sum_b() const {
    return std::accumulate(bs.begin(), bs.end(), 0);
  }
  /// dim T = a + 1 + r + sum b_i
  [[nodiscard]] int dim() const { return a + 1 + r() + sum_b(); }
  /// a + 1 + sum (b_i + 2) = dim dT for every T of this type.
  [[nodiscard]] int budget() const { return a + 1 + sum_b() + 2 * r(); }

  [[nodiscard]] bool well_formed() const {
    return a >= -1 && std::all_of(bs.begin(), bs.end(),
                                  [](int b) { return b >= 0; }) &&
           std::is_sorted(bs.begin(), bs.end(), std::greater<>());
  }

  /// Realizable in degree d. The full space S^dU is the conventional (d).
  [[nodiscard]] bool admissible(int d) const {
    if (!well_formed() || d < 0)
      return false;
    if (a == d && bs.empty())
      return true;
    return budget() <= d;
  }

  friend bool operator==(const NumericalType &, const NumericalType &) =
      default;
  friend auto operator<=>(const NumericalType &lhs, const NumericalType &rhs) {
    if (auto c = lhs.a <=> rhs.a; c != 0)
      return c;
    return lhs.bs <=> rhs.bs;
  }
};

inline std::string to_string(const NumericalType &t) {
  std::ostringstream os;
  os << '(' << t.a;
  for (int b : t.bs)
    os << ',' << b;
  os << ')';
  return os.str();
}

/// Parses "a,b1,b2,..." (parentheses and spaces tolerated); sorts the b_i.
inline NumericalType parse_numerical_type(const std::string &text) {
  std::string cleaned;
  for (char c : text)
    if (c != '(' && c != ')' && c != ' ')
      cleaned.push_back(c);
  std::vector<int> values;
  std::stringstream ss(cleaned);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stoi(item, &used));
      if (used != item.size())
        throw std::invalid_argument(item);
    } catch (const std::exception &) {
      throw InvalidArgument("malformed numerical type '" + text + "'");
    }
  }
  if (values.empty())
    throw InvalidArgument("empty numerical type");
  NumericalType t{values.front(), {values.begin() + 1, values.end()}};
  std::sort(t.bs.begin(), t.bs.end(), std::greater<>());
  if (!t.well_formed())
    throw InvalidArgument("numerical type needs a >= -1 and b_i >= 0");
  return t;
}

/// Result of the d^{-1} iteration on T.
struct TypeProfile {
  NumericalType type;
  /// n_h = dim d^{-h}T for h = 0 .. stable_step + 2.
  std::vector<std::size_t> dims;
  /// The spaces d^{-h}T themselves, same indexing as dims.
  std::vector<FormSubspace> levels;
  /// First h with n_{h+1} = n_h; equals b_1 + 1, or 0 when r = 0.
  std::size_t stable_step = 0;
};

/// Numerical type from the profile n_h = dim d^{-h}T: a = n_{h*} - 1 and the
/// multiplicity of h among the b_i is the second difference
/// n_h - 2 n_{h+1} + n_{h+2}.
inline TypeProfile type_profile(const FormSubspace &t) {
  if (t.is_full())
    throw InvalidArgument(
        "numerical type is defined for proper subspaces only (T = S^dU)");
  TypeProfile out;
  out.levels.push_back(t);
  out.dims.push_back(t.dim());
  const std::size_t limit = static_cast<std::size_t>(t.degree) + 2;
  for (std::size_t h = 0;; ++h) {
    if (h > limit)
      throw InternalInconsistency("d^{-h}T profile did not stabilize");
    out.levels.push_back(partial_inv(out.levels.back()));
    out.dims.push_back(out.levels.back().dim());
    if (out.dims[h + 1] == out.dims[h]) {
      out.stable_step = h;
      break;
    }
  }
  out.levels.push_back(partial_inv(out.levels.back()));
  out.dims.push_back(out.levels.back().dim());
  const auto &n = out.dims;
  const std::size_t hs = out.stable_step;
  if (n[hs + 2] != n[hs])
    throw InternalInconsistency("d^{-h}T profile moved after stabilizing");

  NumericalType type;
  type.a = static_cast<int>(n[hs]) - 1;
  for (std::size_t h = hs; h-- > 0;) {
    const long mult = static_cast<long>(n[h]) - 2 * static_cast<long>(n[h + 1]) +
                      static_cast<long>(n[h + 2]);
    if (mult < 0)
      throw InternalInconsistency("negative multiplicity in d^{-h}T profile");
    type.bs.insert(type.bs.end(), static_cast<std::size_t>(mult),
                   static_cast<int>(h));
  }
  const long r_profile = static_cast<long>(n[0]) - static_cast<long>(n[1]);
  if (r_profile != type.r())
    throw InternalInconsistency("profile r disagrees with multiplicities");
  if (t.degree >= 1) {
    const long r_direct =
        static_cast<long>(partial(t).dim()) - static_cast<long>(t.dim());
    if (r_direct != type.r())
      throw InternalInconsistency("r != dim dT - dim T");
  } else if (type.r() != 0) {
    throw InternalInconsistency("nonzero r in degree 0");
  }
  out.type = std::move(type);
  return out;
}

inline NumericalType numerical_type(const FormSubspace &t) {
  return type_profile(t).type;
}

/// S_T = d^{h}(d^{-h}T) with h = b_1 + 1: the smallest subspace containing
/// the schematic intersection P(T) cap C_d.
inline FormSubspace c_generated_part(const TypeProfile &p) {
  const auto h = p.stable_step;
  FormSubspace s = partial_power(p.levels[h], static_cast<int>(h));
  if (static_cast<int>(s.dim()) != p.type.a + 1)
    throw InternalInconsistency("C_d-generated part has the wrong dimension");
  if (!s.is_zero() && s.degree >= 1 && partial(s).dim() != s.dim())
    throw InternalInconsistency("C_d-generated part has dim dS != dim S");
  return s;
}

inline FormSubspace c_generated_part(const FormSubspace &t) {
  return c_generated_part(type_profile(t));
}

/// T = S + d^{b_1}(f_1) + ... + d^{b_r}(f_r), all sums direct.
struct Decomposition {
  FormSubspace s;
  std::vector<BinaryForm> fs;
  NumericalType type;
};

/// Checks every defining property of a decomposition of t; returns an empty
/// string on success, otherwise the first failed condition.
inline std::string check_decomposition(const FormSubspace &t,
                                       const Decomposition &dec) {
  const auto &type = dec.type;
  if (dec.fs.size() != type.bs.size())
    return "wrong number of forms";
  FormSubspace whole = dec.s;
  std::size_t dims = dec.s.dim();
  const bool differentiable = t.degree >= 1;
  FormSubspace dwhole =
      differentiable ? partial(dec.s) : FormSubspace::zero(0);
  std::size_t ddims = dwhole.dim();
  for (std::size_t i = 0; i < dec.fs.size(); ++i) {
    const int b = type.bs[i];
    const auto &f = dec.fs[i];
    if (f.degree != t.degree + b)
      return "form f_" + std::to_string(i + 1) + " has the wrong degree";
    if (f.is_zero() || secant_member(f, b + 1))
      return "form f_" + std::to_string(i + 1) + " lies on Sec^b C_{d+b}";
    const auto piece = derivative_system(f, b);
    const auto dpiece = derivative_system(f, b + 1);
    whole = sum(whole, piece);
    dwhole = sum(dwhole, dpiece);
    dims += piece.dim();
    ddims += dpiece.dim();
  }
  if (whole.dim() != dims)
    return "sum S + d^{b_i}(f_i) is not direct";
  if (whole != t)
    return "summands do not reassemble T";
  if (differentiable) {
    if (dwhole.dim() != ddims)
      return "sum dS + d^{b_i+1}(f_i) is not direct";
    if (dwhole != partial(t))
      return "derived summands do not reassemble dT";
  }
  return {};
}

/// Randomized decomposition: f_i drawn from F_{T,b_i} = d^{-b_i}T, accepted
/// once every direct-sum and secant condition holds.
inline Decomposition decompose(const FormSubspace &t, Rng &rng,
                               int retry_budget = kDefaultRetryBudget,
                               long bound = kDefaultCoeffBound) {
  const TypeProfile p = type_profile(t);
  Decomposition dec{c_generated_part(p), {}, p.type};
  if (p.type.bs.empty()) {
    if (dec.s != t)
      throw InternalInconsistency("r = 0 but T differs from S_T");
    return dec;
  }
  for (int attempt = 0; attempt < retry_budget; ++attempt) {
    dec.fs.clear();
    for (int b : p.type.bs) {
      const auto &space = p.levels[static_cast<std::size_t>(b)];
      dec.fs.emplace_back(space.degree, random_element(space.space, rng, bound));
    }
    if (check_decomposition(t, dec).empty())
      return dec;
  }
  throw BudgetExhausted("decompose: no valid draw within " +
                        std::to_string(retry_budget) + " attempts");
}

/// Pencil lambda A + mu B of m x n matrices.
struct Pencil {
  Mat a;
  Mat b;
};

/// d_x|_T and d_y|_T as maps T -> dT in the RREF bases of T and dT.
inline Pencil pencil_of(const FormSubspace &t) {
  if (t.is_full())
    throw InvalidArgument("pencil_of: T must be proper");
  if (t.degree < 1 || t.is_zero())
    return {Mat(0, 0), Mat(0, 0)};
  const FormSubspace dt = partial(t);
  const std::size_t m = dt.dim();
  const std::size_t n = t.dim();
  Pencil p{Mat(m, n), Mat(m, n)};
  const auto basis = t.basis_forms();
  for (std::size_t j = 0; j < n; ++j) {
    const Vec cx = dt.space.coordinates(derivative_x(basis[j]).coeffs);
    const Vec cy = dt.space.coordinates(derivative_y(basis[j]).coeffs);
    for (std::size_t i = 0; i < m; ++i) {
      p.a(i, j) = cx[i];
      p.b(i, j) = cy[i];
    }
  }
  return p;
}

/// Rank of lambda A + mu B over Q(lambda, mu). Minors are homogeneous of
/// degree <= min(m, n), so min(m, n) + 1 distinct points of P^1 suffice.
inline std::size_t normal_rank(const Pencil &p) {
  const std::size_t m = p.a.rows();
  const std::size_t n = p.a.cols();
  std::size_t best = 0;
  for (std::size_t t = 0; t <= std::min(m, n); ++t) {
    Mat at(m, n);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j)
        at(i, j) = p.a(i, j) + Rational(static_cast<long>(t)) * p.b(i, j);
    best = std::max(best, rank(std::move(at)));
  }
  return best;
}

/// Left minimal indices of the pencil. l_j = dimension of homogeneous
/// degree-j row vectors w(lambda, mu) with w (lambda A + mu B) = 0; the
/// multiplicity of index eta is l_eta - 2 l_{eta-1} + l_{eta-2}.
/// Returned sorted non-increasing.
inline std::vector<int> kronecker_left_indices(const Pencil &p) {
  const std::size_t m = p.a.rows();
  const std::size_t n = p.a.cols();
  if (p.b.rows() != m || p.b.cols() != n)
    throw InvalidArgument("pencil matrices differ in shape");
  const std::size_t target = m - normal_rank(p);
  std::vector<int> indices;
  std::vector<long> ell;
  auto ell_at = [&](long j) { return j < 0 ? 0L : ell[static_cast<std::size_t>(j)]; };
  for (std::size_t j = 0; indices.size() < target; ++j) {
    if (j > n + 1)
      throw InternalInconsistency("left minimal indices not exhausted");
    // Unknowns w_0..w_j (each of length m); the coefficient of
    // lambda^{j+1-t} mu^t is w_t A + w_{t-1} B for t = 0..j+1.
    Mat sys((j + 2) * n, (j + 1) * m);
    for (std::size_t t = 0; t <= j + 1; ++t)
      for (std::size_t c = 0; c < n; ++c) {
        const std::size_t eq = t * n + c;
        if (t <= j)
          for (std::size_t r = 0; r < m; ++r)
            sys(eq, t * m + r) = p.a(r, c);
        if (t >= 1)
          for (std::size_t r = 0; r < m; ++r)
            sys(eq, (t - 1) * m + r) = p.b(r, c);
      }
    ell.push_back(static_cast<long>((j + 1) * m - rank(std::move(sys))));
    const long jj = static_cast<long>(j);
    const long mult = ell_at(jj) - 2 * ell_at(jj - 1) + ell_at(jj - 2);
    if (mult < 0)
      throw InternalInconsistency("negative left index multiplicity");
    indices.insert(indices.end(), static_cast<std::size_t>(mult),
                   static_cast<int>(j));
  }
  if (indices.size() != target)
    throw InternalInconsistency("left index count exceeds left nullity");
  std::sort(indices.begin(), indices.end(), std::greater<>());
  return indices;
}

/// The Kronecker oracle's prediction {b_i + 1} for a type.
inline std::vector<int> expected_left_indices(const NumericalType &t) {
  std::vector<int> out;
  for (int b : t.bs)
    out.push_back(b + 1);
  return out;
}

} // namespace binform
