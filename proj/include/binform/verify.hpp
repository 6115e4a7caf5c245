#pragma once

// Batch verification of the library's invariants over a range of degrees.
// Drives the `verify` CLI command; every trial draws from its own sub-seed so
// the report depends only on (options), never on scheduling.

#include <cstdint>
#include <functional>
#include <future>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "binform/curves.hpp"

namespace binform {

struct VerifyOptions {
  int d_min = 3;
  int d_max = 7;
  std::uint64_t seed = kDefaultSeed;
  /// Random trials per (check, d, e).
  int samples = 4;
  int jobs = 1;
};

struct CheckResult {
  std::string name;
  long trials = 0;
  long failures = 0;
  std::string first_failure;

  void record(bool ok, const std::function<std::string()> &what) {
    ++trials;
    if (ok)
      return;
    if (failures++ == 0)
      first_failure = what();
  }
};

struct VerifyReport {
  VerifyOptions options;
  std::vector<CheckResult> checks;

  [[nodiscard]] bool ok() const {
    for (const auto &c : checks)
      if (c.failures != 0)
        return false;
    return true;
  }

  [[nodiscard]] std::string to_text() const {
    std::ostringstream os;
    os << "verify d=" << options.d_min << ".." << options.d_max
       << " seed=" << options.seed << " samples=" << options.samples << '\n';
    for (const auto &c : checks) {
      os << (c.failures == 0 ? "PASS " : "FAIL ") << c.name << " trials="
         << c.trials << " failures=" << c.failures;
      if (c.failures != 0)
        os << " first=\"" << c.first_failure << '"';
      os << '\n';
    }
    os << (ok() ? "ALL PASS" : "FAILURES PRESENT") << '\n';
    return os.str();
  }
};

namespace detail {

/// p_1^deg + ... + p_count^deg for random linear forms p_i: a point of
/// Sec^{count-1} C_deg.
inline BinaryForm sum_of_powers(int deg, int count, Rng &rng) {
  auto g = BinaryForm::zero(deg);
  for (int i = 0; i < count; ++i) {
    const auto p = BinaryForm::linear_power(random_integer(rng, 9),
                                            random_integer(rng, 9), deg);
    for (std::size_t j = 0; j < g.coeffs.size(); ++j)
      g.coeffs[j] += p.coeffs[j];
  }
  return g;
}

using CheckTable = std::map<std::string, CheckResult>;

inline CheckResult &check(CheckTable &table, const std::string &name) {
  auto &c = table[name];
  c.name = name;
  return c;
}

inline std::string describe(const FormSubspace &t) {
  std::ostringstream os;
  os << "d=" << t.degree << " basis=[";
  for (std::size_t i = 0; i < t.dim(); ++i) {
    os << (i ? ";" : "");
    for (std::size_t j = 0; j < t.space.ambient_dim(); ++j)
      os << (j ? "," : "") << to_string(t.space.basis()(i, j));
  }
  return os.str() + "]";
}

/// Trials for a single degree d, seeded from (seed, d).
inline CheckTable verify_degree(int d, const VerifyOptions &opt) {
  CheckTable table;
  const auto n = static_cast<std::size_t>(d) + 1;
  auto rng_for = [&](std::uint64_t check_id) {
    return sub_rng(opt.seed, static_cast<std::uint64_t>(d) * 1000 + check_id);
  };

  // exact-linalg
  {
    Rng rng = rng_for(1);
    auto &modular = check(table, "linalg.modular_law");
    auto &canon = check(table, "linalg.canonicalize_invariance");
    auto &nullity = check(table, "linalg.rank_nullity");
    for (int i = 0; i < opt.samples; ++i) {
      std::uniform_int_distribution<std::size_t> pick(0, n);
      const auto a = random_subspace(d, pick(rng), rng).space;
      const auto b = random_subspace(d, pick(rng), rng).space;
      modular.record(sum(a, b).dim() + intersect(a, b).dim() ==
                         a.dim() + b.dim(),
                     [&] { return "d=" + std::to_string(d); });

      Mat shuffled(a.dim(), n);
      for (std::size_t r = 0; r < a.dim(); ++r)
        for (std::size_t c = 0; c < n; ++c)
          shuffled(a.dim() - 1 - r, c) = a.basis()(r, c) * Rational(r + 2);
      const auto again = Subspace::span(shuffled);
      canon.record(again == a && Subspace::span(a.basis()) == a,
                   [&] { return "d=" + std::to_string(d); });

      Mat m(pick(rng), n);
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < n; ++c)
          m(r, c) = random_integer(rng, 2);
      nullity.record(rank(m) + kernel(m).dim() == n,
                     [&] { return "d=" + std::to_string(d); });
    }
  }

  // forms
  {
    Rng rng = rng_for(2);
    auto &dirs = check(table, "forms.partial_inv_direction_independence");
    auto &incl = check(table, "forms.partial_inv_inclusions");
    auto &perp_law = check(table, "forms.annihilator_of_partial_inv");
    auto &adj = check(table, "forms.apolarity_adjunction");
    for (int e = 0; e <= d - 1; ++e)
      for (int i = 0; i < opt.samples; ++i) {
        const auto t = random_subspace(d, static_cast<std::size_t>(e) + 1, rng);
        Rational a0 = random_integer(rng, 9), a1 = random_integer(rng, 9);
        Rational b0 = random_integer(rng, 9), b1 = random_integer(rng, 9);
        if (a0 * b1 - a1 * b0 == 0) {
          a0 = 1, a1 = 2, b0 = 3, b1 = 5;
        }
        dirs.record(partial_inv(t, {a0, a1}, {b0, b1}) == partial_inv(t),
                    [&] { return describe(t); });
        incl.record(is_subspace_of(partial(partial_inv(t)), t) &&
                        is_subspace_of(t, partial_inv(partial(t))),
                    [&] { return describe(t); });
        const int k = 1 + i % 3;
        perp_law.record(annihilator(partial_inv_power(t, k)) ==
                        dual_multiply(annihilator(t), k),
                    [&] { return describe(t) + " k=" + std::to_string(k); });
      }
    for (int i = 0; i < opt.samples; ++i) {
      const auto g = random_form(d, rng);
      auto f = BinaryForm::zero(d - 1);
      for (auto &c : f.coeffs)
        c = random_integer(rng, 20);
      const Rational alpha = random_integer(rng, 9), beta = random_integer(rng, 9);
      // f * l with l = alpha d_x + beta d_y, and D_l g.
      const BinaryForm fl = f * BinaryForm(1, {alpha, beta});
      BinaryForm dlg = BinaryForm::zero(d - 1);
      const auto gx = derivative_x(g), gy = derivative_y(g);
      for (std::size_t j = 0; j < dlg.coeffs.size(); ++j)
        dlg.coeffs[j] = alpha * gx.coeffs[j] + beta * gy.coeffs[j];
      adj.record(apolarity_pairing(fl.coeffs, g) ==
                     apolarity_pairing(f.coeffs, dlg),
                 [&] { return "d=" + std::to_string(d); });
    }
  }

  {
    Rng rng = rng_for(3);
    auto &filt = check(table, "forms.secant_filtration_increasing");
    auto &sysdim = check(table, "forms.derivative_system_dimension");
    for (int i = 0; i < opt.samples; ++i)
      for (int count = 1; count <= (d + 1) / 2 + 1; ++count) {
        const auto g = i % 2 == 0 ? sum_of_powers(d, count, rng)
                                  : random_form(d, rng);
        if (g.is_zero())
          continue;
        for (int r = 1; r < d; ++r) {
          filt.record(!secant_member(g, r) || secant_member(g, r + 1),
                      [&] { return "d=" + std::to_string(d); });
        }
        for (int r = 1; r <= d; ++r)
          sysdim.record((derivative_system(g, r).dim() ==
                         static_cast<std::size_t>(r) + 1) ==
                            !secant_member(g, r),
                        [&] { return "d=" + std::to_string(d) +
                                     " r=" + std::to_string(r); });
      }
  }

  {
    // Direct sums A + B with dT = dA + dB built from derivative systems.
    Rng rng = rng_for(4);
    auto &direct = check(table, "forms.partial_inv_direct_sum");
    for (int i = 0; i < opt.samples; ++i)
      for (int b = 0; b + 4 <= d; ++b)
        for (int c = 0; b + 2 + c + 2 <= d; ++c) {
          const auto a = derivative_system(random_form(d + b, rng), b);
          const auto bb = derivative_system(random_form(d + c, rng), c);
          const auto t = sum(a, bb);
          if (t.dim() != a.dim() + bb.dim())
            continue;
          const auto da = partial(a), db = partial(bb), dt = partial(t);
          if (dt.dim() != da.dim() + db.dim())
            continue;
          const auto ia = partial_inv(a), ib = partial_inv(bb);
          direct.record(partial_inv(t) == sum(ia, ib) &&
                            sum(ia, ib).dim() == ia.dim() + ib.dim(),
                        [&] { return describe(t); });
        }
  }

  // classify
  {
    Rng rng = rng_for(5);
    auto &law = check(table, "classify.type_constraints");
    auto &pgl = check(table, "classify.pgl2_invariance");
    auto &kron = check(table, "classify.kronecker_agreement");
    auto &shift = check(table, "classify.partial_inv_shifts_type");
    auto &nrank = check(table, "classify.pencil_normal_rank");
    auto &dec = check(table, "classify.decomposition_round_trip");
    for (int e = -1; e <= d - 1; ++e)
      for (int i = 0; i < opt.samples; ++i) {
        const auto t = random_subspace(d, static_cast<std::size_t>(e + 1), rng);
        const auto tau = numerical_type(t);
        const long r_direct = static_cast<long>(partial(t).dim()) -
                              static_cast<long>(t.dim());
        law.record(tau.a >= -1 && tau.well_formed() && tau.budget() <= d &&
                       tau.dim() == static_cast<int>(t.dim()) &&
                       r_direct == tau.r(),
                   [&] { return describe(t); });
        const Mat g = random_gl2(rng);
        pgl.record(numerical_type(act(g, t)) == tau,
                   [&] { return describe(t); });
        const Pencil p = pencil_of(t);
        kron.record(kronecker_left_indices(p) == expected_left_indices(tau),
                    [&] { return describe(t); });
        nrank.record(normal_rank(p) == t.dim(), [&] { return describe(t); });
        const auto up = partial_inv(t);
        if (!up.is_zero() && !up.is_full()) {
          NumericalType expect{tau.a, {}};
          for (int b : tau.bs)
            if (b >= 1)
              expect.bs.push_back(b - 1);
          shift.record(numerical_type(up) == expect,
                       [&] { return describe(t); });
        }
        const auto decomp = decompose(t, rng);
        dec.record(check_decomposition(t, decomp).empty(),
                   [&] { return describe(t); });
      }
  }

  // strata and curves, over every admissible type
  {
    Rng rng = rng_for(6);
    auto &unique = check(table, "strata.unique_generic_type");
    auto &empirical = check(table, "strata.empirical_genericity");
    auto &vt = check(table, "strata.dim_VT_on_fixture");
    auto &fixture_kron = check(table, "classify.kronecker_on_fixtures");
    auto &equiv = check(table, "curves.type_splitting_equivalence");
    auto &euler = check(table, "curves.euler_identity");
    auto &budget = check(table, "curves.degree_budget");
    auto &bpf = check(table, "curves.base_point_free");
    auto &roundtrip = check(table, "curves.construct_round_trip");
    for (int e = -1; e <= d; ++e) {
      const auto types = enumerate_types(d, e);
      const auto generic = generic_type(d, e);
      int dense = 0;
      bool dense_is_generic = false;
      for (const auto &tau : types)
        if (dim_stratum(tau, d) == grassmannian_dim(d, e)) {
          ++dense;
          dense_is_generic = tau == generic;
        }
      unique.record(dense == 1 && dense_is_generic, [&] {
        return "d=" + std::to_string(d) + " e=" + std::to_string(e);
      });
      if (e < d)
        for (int i = 0; i < opt.samples; ++i) {
          const auto t =
              random_subspace(d, static_cast<std::size_t>(e + 1), rng);
          empirical.record(numerical_type(t) == generic,
                           [&] { return describe(t); });
        }
      for (const auto &tau : types) {
        if (tau.a == d)
          continue;
        const auto t = monomial_fixture(d, tau);
        const auto p = type_profile(t);
        long direct = 0;
        for (int b : tau.bs)
          direct += static_cast<long>(p.levels[static_cast<std::size_t>(b)].dim()) - 1;
        vt.record(direct == dim_VT(tau), [&] { return to_string(tau); });
        fixture_kron.record(kronecker_left_indices(pencil_of(t)) ==
                                expected_left_indices(tau),
                            [&] { return to_string(tau); });
        if (tau.a != -1 || tau.dim() == 0 || tau.dim() > d - 1)
          continue;
        const auto from_type = splitting_from_type(tau, d);
        const auto from_coh = splitting_from_cohomology(cohomology_profile(t));
        equiv.record(from_type == from_coh, [&] { return to_string(tau); });
        euler.record(euler_identity_holds(from_coh),
                     [&] { return to_string(tau); });
        budget.record(from_coh.total() ==
                          static_cast<long>(d - from_coh.e()) * d,
                      [&] { return to_string(tau); });
        const auto built = construct_with_splitting(from_type, rng);
        roundtrip.record(splitting_from_cohomology(built.profile) == from_type,
                         [&] { return to_string(from_type); });
        bpf.record(!has_base_point(built.curve.components),
                   [&] { return to_string(from_type); });
      }
    }
  }
  return table;
}

} // namespace detail

/// Runs every invariant check for d in [d_min, d_max]. Exceptions raised
/// inside a degree are reported as a failed check, not propagated.
inline VerifyReport run_verification(const VerifyOptions &opt) {
  if (opt.d_min < 2 || opt.d_max < opt.d_min)
    throw InvalidArgument("verify: need 2 <= d_min <= d_max");
  const int count = opt.d_max - opt.d_min + 1;
  std::vector<detail::CheckTable> tables(static_cast<std::size_t>(count));

  auto run_one = [&opt](int d) {
    try {
      return detail::verify_degree(d, opt);
    } catch (const std::exception &ex) {
      detail::CheckTable t;
      auto &c = detail::check(t, "exception");
      c.record(false, [&] {
        return "d=" + std::to_string(d) + ": " + ex.what();
      });
      return t;
    }
  };
  const int jobs = std::max(1, opt.jobs);
  for (int start = 0; start < count; start += jobs) {
    std::vector<std::future<detail::CheckTable>> batch;
    for (int k = start; k < std::min(count, start + jobs); ++k)
      batch.push_back(std::async(jobs > 1 ? std::launch::async
                                          : std::launch::deferred,
                                 run_one, opt.d_min + k));
    for (std::size_t k = 0; k < batch.size(); ++k)
      tables[static_cast<std::size_t>(start) + k] = batch[k].get();
  }

  // Merge in degree order so the report is independent of scheduling.
  std::map<std::string, CheckResult> merged;
  for (const auto &table : tables)
    for (const auto &[name, res] : table) {
      auto &m = merged[name];
      m.name = name;
      if (m.failures == 0 && res.failures != 0)
        m.first_failure = res.first_failure;
      m.trials += res.trials;
      m.failures += res.failures;
    }
  VerifyReport report{opt, {}};
  for (auto &[name, res] : merged)
    report.checks.push_back(std::move(res));
  return report;
}

} // namespace binform
