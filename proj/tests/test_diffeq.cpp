#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "frieze/diffeq.hpp"

using namespace frieze;

namespace {

SymmetricDiffEq positive_w2_eq() {
  return SymmetricDiffEq(fixtures::ints({6, 3, 1, 3, 4, 2, 1}), fixtures::ints({3, 14, 1, 2, 6, 5, 1}));
}

bool all_zero(const std::vector<Scalar>& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

}  // namespace

TEST(DiffEq, RecurrenceStep) {
  auto eq = positive_w2_eq();
  Solution s = solve(eq, fixtures::ints({1, 2, 3, 4}), 1, 1);
  // V_1 = a_1 V_0 - b_1 V_{-1} + a_0 V_{-2} - V_{-3}
  EXPECT_EQ(s.at(1), Scalar(3 * 4 - 14 * 3 + 6 * 2 - 1));
  EXPECT_EQ(s.offset, -3);
}

TEST(DiffEq, BasisRunsMatchHandComputation) {
  // Coefficients of (x, y, z, t) = (V_{-3}, V_{-2}, V_{-1}, V_0) in V_1..V_7.
  const long expect[7][4] = {{-1, 6, -14, 3}, {-1, 5, -11, 2}, {-1, 3, -6, 1}, {-1, 0, 0, 0},
                             {0, -1, 0, 0},   {0, 0, -1, 0},   {0, 0, 0, -1}};
  auto eq = positive_w2_eq();
  for (int e = 0; e < 4; ++e) {
    std::vector<Scalar> init(4, Scalar(0));
    init[static_cast<size_t>(e)] = Scalar(1);
    Solution s = solve(eq, init, 1, 7);
    for (int j = 1; j <= 7; ++j) EXPECT_EQ(s.at(j), Scalar(expect[j - 1][e])) << "V_" << j << " basis " << e;
  }
}

TEST(DiffEq, TripleEquivalenceOnFixture) {
  auto eq = positive_w2_eq();
  EXPECT_TRUE(is_superperiodic(eq));
  EXPECT_EQ(monodromy(eq), -Matrix::identity(4));
  auto res = variety_residuals(eq);
  EXPECT_EQ(res.size(), 10u);
  EXPECT_TRUE(all_zero(res));
}

TEST(DiffEq, PerturbationBreaksAllThreeVerdicts) {
  for (int which = 0; which < 14; ++which) {
    auto eq = positive_w2_eq();
    auto& v = which < 7 ? eq.a : eq.b;
    v[static_cast<size_t>(which % 7)] += 1;
    EXPECT_FALSE(is_superperiodic(eq)) << which;
    EXPECT_NE(monodromy(eq), -Matrix::identity(4)) << which;
    EXPECT_FALSE(all_zero(variety_residuals(eq))) << which;
  }
}

TEST(DiffEq, CompanionMatricesAreUnimodularAndOrdered) {
  auto eq = positive_w2_eq();
  Matrix prod = Matrix::identity(4);
  for (int j = 0; j < eq.n(); ++j) {
    Matrix e = companion(eq, j);
    EXPECT_EQ(det(e), Scalar(1));
    prod = prod * e;
  }
  EXPECT_EQ(prod, monodromy(eq));
}

TEST(DiffEq, CompanionAdvancesConsecutiveBlocks) {
  auto eq = positive_w2_eq();
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> d(-5, 5);
  // Row k of D_j holds V_{j-3..j} of the k-th solution.
  std::vector<Solution> sols;
  for (int k = 0; k < 4; ++k) sols.push_back(solve(eq, fixtures::ints({d(rng), d(rng), d(rng), d(rng)}), 1, 10));
  auto block = [&](int j) {
    Matrix m(4, 4);
    for (size_t k = 0; k < 4; ++k)
      for (size_t c = 0; c < 4; ++c) m(k, c) = sols[k].at(j - 3 + static_cast<int>(c));
    return m;
  };
  for (int j = 0; j < 7; ++j) EXPECT_EQ(block(j) * companion(eq, j), block(j + 1)) << j;
}

TEST(DiffEq, WidthOneFamilyIsSuperperiodic) {
  for (auto [a, b] : {std::pair<long, long>{1, 2}, {2, 1}, {3, 5}, {-2, 7}}) {
    auto eq = width1_family(Scalar(a), Scalar(b));
    EXPECT_EQ(eq.n(), 6);
    EXPECT_TRUE(is_superperiodic(eq)) << a << "," << b;
    EXPECT_TRUE(all_zero(variety_residuals(eq)));
  }
  EXPECT_THROW(width1_family(Scalar(0), Scalar(2)), ZeroParameter);
}

TEST(DiffEq, GaussianAndFloatKinds) {
  FriezeGrid g = fixtures::grid(fixtures::w1_gaussian);
  Coeffs c = extract_coeffs(g);
  SymmetricDiffEq eq(c.a, c.b);
  EXPECT_EQ(eq.kind(), ScalarKind::Gaussian);

  std::vector<Scalar> ga, gb;
  for (long x : {6, 3, 1, 3, 4, 2, 1}) ga.push_back(Scalar::from_int(x, ScalarKind::Gaussian));
  for (long x : {3, 14, 1, 2, 6, 5, 1}) gb.push_back(Scalar::from_int(x, ScalarKind::Gaussian));
  SymmetricDiffEq ge(ga, gb);
  EXPECT_TRUE(is_superperiodic(ge));
  EXPECT_EQ(monodromy(ge), -Matrix::identity(4, ScalarKind::Gaussian));

  std::vector<Scalar> a, b;
  for (long x : {6, 3, 1, 3, 4, 2, 1}) a.push_back(Scalar::complex(static_cast<double>(x)));
  for (long x : {3, 14, 1, 2, 6, 5, 1}) b.push_back(Scalar::complex(static_cast<double>(x)));
  SymmetricDiffEq f(a, b);
  EXPECT_TRUE(is_superperiodic(f));
  EXPECT_EQ(monodromy(f), -Matrix::identity(4, ScalarKind::Complex));
}

TEST(DiffEq, MismatchedLengthsRejected) {
  EXPECT_THROW(SymmetricDiffEq(fixtures::ints({1, 2, 3}), fixtures::ints({1, 2})), DimensionError);
}
