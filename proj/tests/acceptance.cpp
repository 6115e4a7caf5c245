// Acceptance driver: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Usage: acceptance <path-to-binform-cli> [criterion...]

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "binform/json.hpp"
#include "oracle.hpp"

using namespace binform;

namespace {

std::string g_cli;

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string &why) {
    if (ok)
      detail = why;
    ok = false;
  }
};

FormSubspace random_of_type(int d, const NumericalType &tau, Rng &rng) {
  for (;;) {
    FormSubspace t = FormSubspace::zero(d);
    for (int i = 0; i <= tau.a; ++i)
      t = sum(t, FormSubspace::span(d, {BinaryForm::linear_power(
                                        1, random_integer(rng, 60), d)}));
    for (int b : tau.bs)
      t = sum(t, derivative_system(random_form(d + b, rng), b));
    // Two equal points or a dependent draw shrink the sum; redraw.
    if (static_cast<int>(t.dim()) == tau.dim())
      return t;
  }
}

// The shared sample for criteria 2 and 3: 500 proper subspaces with
// 3 <= d <= 9, 0 <= e <= d-2. Even indices are uniformly random subspaces,
// odd indices are random members of a randomly chosen stratum so that every
// type is exercised, not only the generic one.
std::vector<FormSubspace> type_law_sample() {
  std::vector<FormSubspace> out;
  for (std::uint64_t i = 0; i < 500; ++i) {
    Rng rng = sub_rng(kDefaultSeed, 1000 + i);
    std::uniform_int_distribution<int> pick_d(3, 9);
    const int d = pick_d(rng);
    std::uniform_int_distribution<int> pick_e(0, d - 2);
    const int e = pick_e(rng);
    if (i % 2 == 0) {
      out.push_back(random_subspace(d, static_cast<std::size_t>(e + 1), rng));
    } else {
      const auto types = enumerate_types(d, e);
      std::uniform_int_distribution<std::size_t> pick(0, types.size() - 1);
      out.push_back(random_of_type(d, types[pick(rng)], rng));
    }
  }
  return out;
}

Outcome criterion1() {
  Outcome o;
  struct Case {
    NumericalType tau;
    SplittingType split;
    std::vector<std::pair<int, long>> h;
  };
  const std::array<Case, 2> cases{
      Case{{-1, {1}}, {5, {8, 6, 6}}, {{7, 2}, {8, 1}, {9, 0}}},
      Case{{-1, {0, 0}}, {5, {7, 7, 6}}, {{7, 2}, {8, 0}}}};
  for (const auto &c : cases) {
    const auto t = monomial_fixture(5, c.tau);
    if (numerical_type(t) != c.tau)
      o.fail("fixture " + to_string(c.tau) + " misclassified");
    if (splitting_from_type(c.tau, 5) != c.split)
      o.fail("splitting_from_type " + to_string(c.tau));
    const auto prof = cohomology_profile(t);
    if (splitting_from_cohomology(prof) != c.split)
      o.fail("splitting_from_cohomology " + to_string(c.tau));
    for (auto [k, h] : c.h)
      if (prof.at(k) != h)
        o.fail("h_" + std::to_string(k) + " = " + std::to_string(prof.at(k)) +
               " for " + to_string(c.tau));
  }
  return o;
}

Outcome criterion2(const std::vector<FormSubspace> &sample) {
  Outcome o;
  for (const auto &t : sample) {
    const int d = t.degree;
    const NumericalType tau = numerical_type(t);
    long bsum = 0, budget = tau.a + 1;
    bool sorted = true;
    for (std::size_t i = 0; i < tau.bs.size(); ++i) {
      bsum += tau.bs[i];
      budget += tau.bs[i] + 2;
      if (tau.bs[i] < 0 || (i && tau.bs[i] > tau.bs[i - 1]))
        sorted = false;
    }
    const long r = static_cast<long>(tau.bs.size());
    const long dim = static_cast<long>(t.dim());
    const long dpart = static_cast<long>(partial(t).dim());
    if (tau.a < -1 || !sorted)
      o.fail("malformed type " + to_string(tau));
    if (budget > d)
      o.fail("budget exceeded by " + to_string(tau));
    if (dim != tau.a + 1 + r + bsum)
      o.fail("dim T mismatch for " + to_string(tau));
    if (r != dpart - dim)
      o.fail("r != dim dT - dim T for " + to_string(tau));
  }
  return o;
}

void oracle_checks(const FormSubspace &t, Outcome &o) {
  const NumericalType tau = numerical_type(t);
  if (kronecker_left_indices(pencil_of(t)) != expected_left_indices(tau))
    o.fail("Kronecker indices differ for " + to_string(tau) + " in degree " +
           std::to_string(t.degree));
  // The profile is fully independent: fresh combined systems per level.
  oracle::Type ot = oracle::type_of(t.space.basis_vectors(), t.degree);
  if (ot.a != tau.a ||
      ot.bs != std::vector<long>(tau.bs.begin(), tau.bs.end()))
    o.fail("oracle type differs for " + to_string(tau));
  if (static_cast<int>(t.dim()) <= t.degree - 1) {
    // Both routes are compared inside cohomology_profile at every k and any
    // disagreement throws. Vertices meeting C_d never reach zero, so cap k.
    const int kmax = t.degree + 4 + (tau.bs.empty() ? 0 : tau.bs.front());
    cohomology_profile(t, tau.a == -1 ? std::optional<int>{}
                                      : std::optional<int>{kmax});
    const auto perp = annihilator(t);
    for (int k = 0; k <= 3; ++k)
      if (annihilator(partial_inv_power(t, k)) != dual_multiply(perp, k))
        o.fail("perp of d^{-k}T differs from T^perp S^k at k=" +
               std::to_string(k));
  }
}

Outcome criterion3(const std::vector<FormSubspace> &sample) {
  Outcome o;
  for (const auto &t : sample)
    oracle_checks(t, o);
  for (int d = 1; d <= 9; ++d)
    for (int e = -1; e < d; ++e)
      for (const auto &tau : enumerate_types(d, e))
        oracle_checks(monomial_fixture(d, tau), o);
  return o;
}

Outcome criterion4() {
  Outcome o;
  for (std::uint64_t i = 0; i < 100; ++i) {
    Rng rng = sub_rng(kDefaultSeed, 5000 + i);
    const int d = 3 + static_cast<int>(i % 7);
    const int e = static_cast<int>((i / 7) % static_cast<std::uint64_t>(d - 1));
    const auto types = enumerate_types(d, e);
    const auto t = i % 2 ? random_of_type(d, types[i % types.size()], rng)
                         : random_subspace(d, static_cast<std::size_t>(e + 1), rng);
    const Mat g = random_gl2(rng);
    if (numerical_type(act(g, t)) != numerical_type(t))
      o.fail("type changed under PGL(2) in degree " + std::to_string(d));
  }
  return o;
}

Outcome criterion5() {
  Outcome o;
  for (int d = 1; d <= 8; ++d)
    for (int e = -1; e < d; ++e) {
      int codim0 = 0;
      NumericalType codim0_type;
      for (const auto &tau : enumerate_types(d, e)) {
        const auto t = monomial_fixture(d, tau);
        long direct = 0;
        for (int b : tau.bs)
          direct += static_cast<long>(partial_inv_power(t, b).dim()) - 1;
        if (dim_VT(tau) != direct)
          o.fail("dim_VT " + to_string(tau));
        long overlap = 0;
        for (int bi : tau.bs)
          for (int bj : tau.bs)
            if (bj >= bi)
              overlap += bj - bi + 1;
        const long r = static_cast<long>(tau.bs.size());
        const long formula =
            tau.a == d ? 0 : (e + 1) + r * (d - tau.a - 1) - overlap;
        if (dim_stratum(tau, d) != formula)
          o.fail("dim_stratum " + to_string(tau) + " d=" + std::to_string(d));
        if (formula == static_cast<long>(e + 1) * (d - e)) {
          ++codim0;
          codim0_type = tau;
        }
      }
      if (codim0 != 1 || codim0_type != generic_type(d, e))
        o.fail("codim-0 stratum not unique/generic at d=" + std::to_string(d) +
               " e=" + std::to_string(e));
      if (e < 0)
        continue;
      for (std::uint64_t i = 0; i < 50; ++i) {
        Rng rng = sub_rng(kDefaultSeed,
                          static_cast<std::uint64_t>(100000 + d * 1000 + e * 50) + i);
        if (numerical_type(random_subspace(d, static_cast<std::size_t>(e + 1),
                                           rng)) != generic_type(d, e))
          o.fail("random subspace not generic at d=" + std::to_string(d) +
                 " e=" + std::to_string(e));
      }
    }
  return o;
}

Outcome criterion6(const std::vector<FormSubspace> &sample) {
  Outcome o;
  Rng rng = sub_rng(kDefaultSeed, 7);
  for (int d = 2; d <= 8; ++d) {
    // (a) a point of C_d lifts to the next power; a point off C_d has no lift.
    const Rational u = random_integer(rng, 30), v = random_integer(rng, 30) + 61;
    const auto pd = FormSubspace::span(d, {BinaryForm::linear_power(u, v, d)});
    if (partial_inv(pd) !=
        FormSubspace::span(d + 1, {BinaryForm::linear_power(u, v, d + 1)}))
      o.fail("(a) power of a linear form");
    const auto f = random_form(d, rng);
    if (!secant_member(f, 1) && !partial_inv(FormSubspace::span(d, {f})).is_zero())
      o.fail("(a) form off C_d");

    // (b) C_d-generated subspaces of every proper dimension.
    for (int k = 1; k <= d; ++k) {
      std::vector<BinaryForm> pts;
      for (int i = 0; i < k; ++i)
        pts.push_back(BinaryForm::linear_power(1, 7 * i - 13, d));
      const auto s = FormSubspace::span(d, pts);
      const auto inv = partial_inv(s);
      if (inv.dim() != s.dim() || partial(inv) != s)
        o.fail("(b) C_d-generated, d=" + std::to_string(d));
    }

    // (c) d^b(f) with [f] off Sec^b C_{d+b}.
    for (int b = 1; b + 1 < d; ++b) {
      const auto g = random_form(d + b, rng);
      if (secant_member(g, b + 1))
        continue;
      if (partial_inv(derivative_system(g, b)) != derivative_system(g, b - 1))
        o.fail("(c) d=" + std::to_string(d) + " b=" + std::to_string(b));
    }
  }

  // (d) d^{-1} distributes over sums that stay direct after differentiation.
  int pairs = 0;
  for (std::uint64_t i = 0; pairs < 50; ++i) {
    if (i > 500) {
      o.fail("(d) could not draw 50 direct pairs");
      break;
    }
    Rng r = sub_rng(kDefaultSeed, 9000 + i);
    const int d = 5 + static_cast<int>(i % 5);
    std::uniform_int_distribution<int> pick_b(1, (d - 4) > 1 ? d - 4 : 1);
    const int b1 = pick_b(r);
    const int room = d - (b1 + 2);
    FormSubspace a = derivative_system(random_form(d + b1, r), b1);
    FormSubspace bsp;
    if (i % 2 == 0 && room >= 2) {
      std::uniform_int_distribution<int> pick_b2(0, room - 2);
      const int b2 = pick_b2(r);
      bsp = derivative_system(random_form(d + b2, r), b2);
    } else {
      std::vector<BinaryForm> pts;
      for (int j = 0; j < std::max(1, room); ++j)
        pts.push_back(BinaryForm::linear_power(1, random_integer(r, 40), d));
      bsp = FormSubspace::span(d, pts);
    }
    const auto t = sum(a, bsp);
    if (t.dim() != a.dim() + bsp.dim() ||
        partial(t).dim() != partial(a).dim() + partial(bsp).dim())
      continue;
    ++pairs;
    const auto ia = partial_inv(a), ib = partial_inv(bsp);
    const auto it = partial_inv(t);
    if (it != sum(ia, ib) || it.dim() != ia.dim() + ib.dim())
      o.fail("(d) pair " + std::to_string(i));
  }

  for (const auto &t : sample)
    if (!is_subspace_of(partial(partial_inv(t)), t) ||
        !is_subspace_of(t, partial_inv(partial(t))))
      o.fail("inclusions fail in degree " + std::to_string(t.degree));
  return o;
}

Outcome criterion7() {
  Outcome o;
  for (int d = 2; d <= 7; ++d) {
    const auto targets = admissible_splittings(d);
    for (std::size_t i = 0; i < targets.size(); ++i) {
      const auto &target = targets[i];
      Rng rng = sub_rng(kDefaultSeed, static_cast<std::uint64_t>(d * 100) + i);
      try {
        const auto c = construct_with_splitting(target, rng);
        if (splitting_from_cohomology(cohomology_profile(c.vertex)) != target)
          o.fail("recomputed splitting differs for " + to_string(target));
        if (target.total() != static_cast<long>(d - target.e()) * d)
          o.fail("degree budget for " + to_string(target));
        if (has_base_point(c.curve.components))
          o.fail("base point for " + to_string(target));
      } catch (const std::exception &ex) {
        o.fail(to_string(target) + ": " + ex.what());
      }
    }
  }
  return o;
}

std::string capture(const std::string &cmd, int &status) {
  std::string out;
  FILE *pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    out.append(buf.data(), n);
  status = pclose(pipe);
  return out;
}

Outcome criterion8() {
  Outcome o;
  if (g_cli.empty()) {
    o.fail("no CLI path given");
    return o;
  }
  const std::string cmd =
      "'" + g_cli + "' verify --d-min 3 --d-max 6 --seed 12345 --jobs 4";
  int s1 = 0, s2 = 0;
  const std::string r1 = capture(cmd, s1);
  const std::string r2 = capture(cmd, s2);
  if (s1 != 0 || s2 != 0)
    o.fail("verify exited nonzero");
  if (r1.empty() || r1 != r2)
    o.fail("reports differ between runs");
  const std::string c = "'" + g_cli + "' construct --d 5 --splitting 8,6,6 --seed 7";
  if (capture(c, s1) != capture(c, s2) || s1 != 0 || s2 != 0)
    o.fail("construct output differs between runs");
  return o;
}

} // namespace

int main(int argc, char **argv) {
  if (argc > 1)
    g_cli = argv[1];
  std::set<int> only;
  for (int i = 2; i < argc; ++i)
    only.insert(std::stoi(argv[i]));

  // Built lazily by whichever criterion runs first, so criterion 2 is timed
  // including the construction of its sample.
  std::vector<FormSubspace> sample;
  auto need_sample = [&] {
    if (sample.empty())
      sample = type_law_sample();
  };

  struct Criterion {
    int id;
    const char *name;
    double limit_seconds; // 0: no time limit
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "quintic example: types, splittings and h0 profile", 1.0, criterion1},
      {2, "type law on 500 random proper subspaces", 30.0,
       [&] { need_sample(); return criterion2(sample); }},
      {3, "Kronecker, oracle profile and cohomology routes agree", 0,
       [&] { need_sample(); return criterion3(sample); }},
      {4, "PGL(2) invariance on 100 pairs", 0, criterion4},
      {5, "dimension formulas and genericity for d <= 8", 0, criterion5},
      {6, "contraction properties (a)-(d) and inclusions", 0,
       [&] { need_sample(); return criterion6(sample); }},
      {7, "construction round trip for every splitting with d <= 7", 0,
       criterion7},
      {8, "verify and construct are byte-deterministic", 0, criterion8},
  };

  int failures = 0;
  for (const auto &c : criteria) {
    if (!only.empty() && !only.count(c.id))
      continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception &ex) {
      o.fail(std::string("exception: ") + ex.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    if (c.limit_seconds > 0 && secs >= c.limit_seconds)
      o.fail("took " + std::to_string(secs) + " s, limit " +
             std::to_string(c.limit_seconds) + " s");
    std::ostringstream line;
    line << (o.ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name
         << " (" << std::fixed;
    line.precision(3);
    line << secs << " s)";
    if (!o.ok)
      line << " -- " << o.detail;
    std::cout << line.str() << std::endl;
    failures += o.ok ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
