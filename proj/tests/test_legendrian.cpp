#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "frieze/legendrian.hpp"

using namespace frieze;
using fixtures::grid;

namespace {

// The heptagon read off a 4x7 black block of w2_positive, with its form.
Polygon heptagon() {
  Polygon p;
  p.first = 1;
  for (const auto& col : std::vector<std::vector<long>>{
           {1, 0, 0, 0}, {4, 1, 0, 0}, {3, 2, 1, 0}, {1, 1, 1, 1}, {0, 1, 3, 6}, {0, 0, 1, 4}, {0, 0, 0, 1}}) {
    Vec4 v;
    for (long x : col) v.push_back(Scalar(x));
    p.vertices.push_back(v);
  }
  p.form = SymplecticForm{Scalar(4), FormVariant::OmegaCheck};
  return p;
}

Polygon to_complex(Polygon p) {
  p.form.a = p.form.a.as(ScalarKind::Complex);
  for (auto& v : p.vertices)
    for (auto& x : v) x = x.as(ScalarKind::Complex);
  return p;
}

FriezeGrid random_frieze(std::mt19937& rng, int w) {
  std::uniform_int_distribution<int> num(1, 9), den(1, 3);
  std::vector<Scalar> v;
  for (int i = 0; i < 2 * w; ++i) v.push_back(Scalar::rational(num(rng), den(rng)));
  return propagate_from_zigzag(make_zigzag(straight_shape(w, 0), v), w, ScalarKind::Rational);
}

}  // namespace

TEST(Forms, MatricesAreInverseUpToSign) {
  Scalar a = Scalar::rational(5, 3);
  Matrix o = omega_matrix(a), c = omega_check_matrix(a);
  EXPECT_EQ(o * c, -Matrix::identity(4));
  EXPECT_EQ(o.transpose(), -o);
  EXPECT_EQ(det(o), Scalar(1));
  Matrix expect{{0, 0, 1, 0}, {0, 0, -4, 1}, {-1, 4, 0, 0}, {0, -1, 0, 0}};
  EXPECT_EQ(omega_check_matrix(Scalar(4)), expect);
}

TEST(Heptagon, PairingsAreNormalized) {
  Polygon p = heptagon();
  EXPECT_EQ(omega(p.form, p.vertex(2), p.vertex(5)), Scalar(6));
  for (int i = 1; i <= 14; ++i) {
    EXPECT_EQ(omega(p.form, p.vertex(i), p.vertex(i + 1)), Scalar(0)) << i;
    EXPECT_EQ(omega(p.form, p.vertex(i), p.vertex(i + 2)), Scalar(1)) << i;
  }
  EXPECT_NO_THROW(check_normalized(p));
}

TEST(Heptagon, ReproducesFriezeByPairingAndDeterminants) {
  Polygon p = heptagon();
  FriezeGrid g = frieze_from_polygon(p);
  EXPECT_EQ(g, translate(grid(fixtures::w2_positive), 4));
  for (int i = 0; i < 7; ++i)
    for (int j = i; j < i + 2; ++j) {
      auto [black, white] = frieze_entries_by_4x4(p, i, j);
      EXPECT_EQ(black, g.black(i, j)) << i << "," << j;
      EXPECT_EQ(white, g.white(i - 1, j - 1)) << i << "," << j;
    }
}

TEST(Heptagon, CoefficientsFromVertices) {
  Coeffs c = coeffs_from_polygon(heptagon());
  Coeffs expect = extract_coeffs(translate(grid(fixtures::w2_positive), 4));
  EXPECT_EQ(c.a, expect.a);
  EXPECT_EQ(c.b, expect.b);
}

TEST(Polygon, FriezeRoundTrip) {
  std::mt19937 rng(61);
  std::vector<FriezeGrid> friezes{grid(fixtures::w1_positive), grid(fixtures::w2_positive), grid(fixtures::w3_positive)};
  for (int t = 0; t < 8; ++t) friezes.push_back(random_frieze(rng, 1 + t % 4));
  for (const auto& g : friezes)
    for (int i0 : {0, 1, 3}) {
      Polygon p = polygon_from_frieze(g, i0);
      EXPECT_NO_THROW(check_normalized(p));
      EXPECT_EQ(frieze_from_polygon(p), g);
      Coeffs c = coeffs_from_polygon(p), e = extract_coeffs(g);
      EXPECT_EQ(c.a, e.a);
      EXPECT_EQ(c.b, e.b);
    }
}

TEST(Polygon, BlockIdentityHoldsOnFixtures) {
  EXPECT_TRUE(block_symplectic_check(grid(fixtures::w1_positive)));
  EXPECT_TRUE(block_symplectic_check(grid(fixtures::w2_positive)));
  EXPECT_TRUE(block_symplectic_check(grid(fixtures::w3_positive)));
  Matrix d = block_d(grid(fixtures::w2_positive), 0, 3);
  EXPECT_EQ(det(d), Scalar(1));
}

TEST(Polygon, SymplecticTransvectionsPreserveInvariants) {
  Polygon p = heptagon();
  FriezeGrid g = frieze_from_polygon(p);
  Coeffs c = coeffs_from_polygon(p);
  std::mt19937 rng(62);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int t = 0; t < 10; ++t) {
    Vec4 u{Scalar(d(rng)), Scalar(d(rng)), Scalar(d(rng)), Scalar(d(rng))};
    Scalar s = Scalar::rational(d(rng), 2);
    Polygon q = p;
    for (auto& v : q.vertices) {
      Scalar k = s * omega(p.form, u, v);
      for (size_t i = 0; i < 4; ++i) v[i] += k * u[i];
    }
    EXPECT_EQ(frieze_from_polygon(q), g);
    Coeffs cq = coeffs_from_polygon(q);
    EXPECT_EQ(cq.a, c.a);
    EXPECT_EQ(cq.b, c.b);
  }
}

TEST(Normalization, RecoversScaledVertices) {
  Polygon p = to_complex(heptagon());
  Polygon scaled = p;
  for (auto& x : scaled.vertices[1]) x = x * Scalar::complex(2.5);
  for (auto& x : scaled.vertices[4]) x = x * Scalar::complex(-0.75, 0.25);
  EXPECT_THROW(check_normalized(scaled), NormalizationViolated);
  Polygon back = normalize_lift(scaled);
  double best = 1e300;
  for (double sign : {1.0, -1.0}) {
    double err = 0;
    for (size_t k = 0; k < 7; ++k)
      for (size_t i = 0; i < 4; ++i)
        err = std::max(err, std::abs(back.vertices[k][i].z() - sign * p.vertices[k][i].z()));
    best = std::min(best, err);
  }
  EXPECT_LE(best, 1e-9);
  EXPECT_NO_THROW(check_normalized(back));
}

TEST(Normalization, Errors) {
  EXPECT_THROW(normalize_lift(polygon_from_frieze(grid(fixtures::w1_positive), 0)), EvenPeriod);
  Polygon p = heptagon();
  p.vertices[2] = Vec4(4, Scalar(0));
  EXPECT_THROW(normalize_lift(p), DegenerateGamma);
  Polygon q = heptagon();
  q.vertices[1] = q.vertices[0];
  EXPECT_THROW(coeffs_from_polygon(q), Error);
}
