#include <gtest/gtest.h>

#include "binform/strata.hpp"
#include "oracle.hpp"

using namespace binform;

namespace {

FormSubspace monos(int d, std::initializer_list<int> is) {
  std::vector<BinaryForm> fs;
  for (int i : is)
    fs.push_back(BinaryForm::monomial(d, i));
  return FormSubspace::span(d, fs);
}

NumericalType ty(int a, std::vector<int> bs) { return {a, std::move(bs)}; }

oracle::Type as_oracle(const NumericalType &t) {
  oracle::Type o;
  o.a = t.a;
  for (int b : t.bs)
    o.bs.push_back(b);
  return o;
}

// Random subspace of a prescribed type: a+1 points of C_d plus derivative
// systems of random forms, redrawn until the sum is direct.
FormSubspace random_of_type(int d, const NumericalType &tau, Rng &rng) {
  for (;;) {
    FormSubspace t = FormSubspace::zero(d);
    for (int i = 0; i <= tau.a; ++i)
      t = sum(t, FormSubspace::span(d, {BinaryForm::linear_power(
                                        1, random_integer(rng, 50), d)}));
    for (int b : tau.bs)
      t = sum(t, derivative_system(random_form(d + b, rng), b));
    // Two equal points or a dependent draw shrink the sum; redraw.
    if (static_cast<int>(t.dim()) == tau.dim())
      return t;
  }
}

} // namespace

TEST(NumericalType, ParseAndPrint) {
  const auto t = parse_numerical_type("0,0,1");
  EXPECT_EQ(t, ty(0, {1, 0}));
  EXPECT_EQ(to_string(t), "(0,1,0)");
  EXPECT_EQ(t.dim(), 4);
  EXPECT_EQ(t.budget(), 6);
  EXPECT_TRUE(t.admissible(7));
  EXPECT_FALSE(t.admissible(5));
  EXPECT_THROW(parse_numerical_type("x"), InvalidArgument);
  EXPECT_THROW(parse_numerical_type("-2"), InvalidArgument);
}

TEST(Classify, Examples) {
  EXPECT_EQ(numerical_type(monos(6, {0})), ty(0, {}));
  const auto t = monos(5, {1, 3});
  const auto p = type_profile(t);
  EXPECT_EQ(p.type, ty(-1, {0, 0}));
  EXPECT_EQ(p.dims[0], 2u);
  EXPECT_EQ(p.dims[1], 0u);
  EXPECT_EQ(oracle::partial_inv_dim(t.space.basis_vectors(), 5, 1), 0u);
  EXPECT_EQ(numerical_type(FormSubspace::zero(4)), ty(-1, {}));
  EXPECT_THROW(numerical_type(FormSubspace::full(4)), InvalidArgument);
}

TEST(Classify, FixtureDegreeSeven) {
  const auto t = monos(7, {0, 2, 3, 5});
  const auto p = type_profile(t);
  EXPECT_EQ(p.type, ty(0, {1, 0}));
  ASSERT_GE(p.dims.size(), 4u);
  EXPECT_EQ(p.dims[0], 4u);
  EXPECT_EQ(p.dims[1], 2u);
  EXPECT_EQ(p.dims[2], 1u);
  EXPECT_EQ(p.dims[3], 1u);
  EXPECT_EQ(c_generated_part(p), monos(7, {0}));
  EXPECT_EQ(kronecker_left_indices(pencil_of(t)), (std::vector<int>{2, 1}));
  EXPECT_EQ(as_oracle(p.type), oracle::type_of(t.space.basis_vectors(), 7));
}

TEST(Classify, CGeneratedPartExamples) {
  const auto t = monos(6, {0, 6});
  EXPECT_EQ(c_generated_part(t), t);
  Rng rng = sub_rng(41, 0);
  for (int d = 3; d <= 7; ++d) {
    const auto f = random_form(d + 1, rng);
    EXPECT_TRUE(c_generated_part(derivative_system(f, 1)).is_zero());
  }
}

TEST(Classify, RandomTypesAgreeWithOracle) {
  Rng rng = sub_rng(42, 0);
  for (int d = 3; d <= 8; ++d)
    for (int e = 0; e <= d - 2; ++e)
      for (const auto &tau : enumerate_types(d, e)) {
        const auto t = random_of_type(d, tau, rng);
        const auto got = numerical_type(t);
        EXPECT_EQ(got, tau) << "d=" << d << " " << to_string(tau);
        EXPECT_EQ(as_oracle(got), oracle::type_of(t.space.basis_vectors(), d));
        EXPECT_EQ(static_cast<int>(partial(t).dim() - t.dim()), got.r());
      }
}

TEST(Classify, PglInvariance) {
  Rng rng = sub_rng(43, 0);
  for (int d = 3; d <= 7; ++d)
    for (const auto &tau : enumerate_types(d, d / 2)) {
      const auto t = monomial_fixture(d, tau);
      const Mat g = random_gl2(rng);
      EXPECT_EQ(numerical_type(act(g, t)), tau);
    }
}

TEST(Classify, PartialInvShiftsType) {
  for (int d = 4; d <= 8; ++d)
    for (const auto &tau : enumerate_types(d, d / 2)) {
      const auto inv = partial_inv(monomial_fixture(d, tau));
      if (inv.is_zero())
        continue;
      NumericalType expect{tau.a, {}};
      for (int b : tau.bs)
        if (b >= 1)
          expect.bs.push_back(b - 1);
      EXPECT_EQ(numerical_type(inv), expect);
    }
}

TEST(Decompose, Examples) {
  Rng rng = sub_rng(44, 0);
  const auto single = derivative_system(random_form(7, rng), 2);
  const auto dec = decompose(single, rng);
  ASSERT_EQ(dec.fs.size(), 1u);
  EXPECT_EQ(derivative_system(dec.fs[0], 2), single);
  EXPECT_EQ(check_decomposition(single, dec), "");

  const auto fix = monos(7, {0, 2, 3, 5});
  const auto d2 = decompose(fix, rng);
  EXPECT_EQ(d2.s, monos(7, {0}));
  EXPECT_EQ(partial_inv(fix).dim(), 2u);
  EXPECT_EQ(check_decomposition(fix, d2), "");
}

TEST(Decompose, RoundTripReassembles) {
  Rng rng = sub_rng(45, 0);
  for (int d = 4; d <= 8; ++d)
    for (const auto &tau : enumerate_types(d, d / 2)) {
      const auto t = random_of_type(d, tau, rng);
      const auto dec = decompose(t, rng);
      FormSubspace back = dec.s;
      for (std::size_t i = 0; i < dec.fs.size(); ++i)
        back = sum(back, derivative_system(dec.fs[i], tau.bs[i]));
      EXPECT_EQ(back, t);
      EXPECT_EQ(check_decomposition(t, dec), "");
    }
}

TEST(Decompose, RejectsWrongDecomposition) {
  const auto fix = monos(7, {0, 2, 3, 5});
  Decomposition bad{FormSubspace::zero(7), {}, ty(0, {1, 0})};
  EXPECT_NE(check_decomposition(fix, bad), "");
}

TEST(Kronecker, Examples) {
  Rng rng = sub_rng(46, 0);
  const auto f = random_form(5, rng);
  EXPECT_EQ(kronecker_left_indices(pencil_of(FormSubspace::span(5, {f}))),
            (std::vector<int>{1}));
  const auto s = FormSubspace::span(
      6, {BinaryForm::linear_power(1, 2, 6), BinaryForm::linear_power(1, -5, 6),
          BinaryForm::linear_power(3, 1, 6)});
  EXPECT_TRUE(kronecker_left_indices(pencil_of(s)).empty());
  const auto pencil = pencil_of(s);
  EXPECT_EQ(pencil.a.rows(), pencil.a.cols());
}

TEST(Kronecker, AgreesWithTypeAndNormalRank) {
  Rng rng = sub_rng(47, 0);
  for (int d = 3; d <= 8; ++d)
    for (int e = 0; e <= d - 2; ++e)
      for (const auto &tau : enumerate_types(d, e)) {
        const auto t = random_of_type(d, tau, rng);
        const auto p = pencil_of(t);
        EXPECT_EQ(kronecker_left_indices(p), expected_left_indices(tau));
        EXPECT_EQ(normal_rank(p), t.dim());
      }
}
