#include <gtest/gtest.h>

#include <queue>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "frieze/cluster.hpp"

using namespace frieze;

namespace {

Laurent x(int nvars, int i) { return Laurent::variable(nvars, i); }
Laurent one(int nvars) { return Laurent::constant(nvars, 1); }

// B = S * diag(d) with S skew-symmetric; diag(d) B is then skew-symmetric.
ExchangeMatrix random_exchange(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> e(-2, 2), dd(1, 3);
  std::vector<int> d(static_cast<size_t>(n));
  for (auto& v : d) v = dd(rng);
  std::vector<std::vector<int>> s(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int v = e(rng);
      s[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
      s[static_cast<size_t>(j)][static_cast<size_t>(i)] = -v;
    }
  std::vector<std::vector<int>> b = s;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b[static_cast<size_t>(i)][static_cast<size_t>(j)] *= d[static_cast<size_t>(j)];
  return ExchangeMatrix(b);
}

// x_k * x_k' = prod x_i^[b_ik]+ + prod x_i^[-b_ik]+ before the mutation.
bool exchange_relation_holds(const Seed& before, const Seed& after, int k) {
  const int m = before.matrix.size();
  Laurent p = one(m), q = one(m);
  for (int i = 0; i < m; ++i) {
    int e = before.matrix(i, k);
    for (int t = 0; t < std::abs(e); ++t) (e > 0 ? p : q) *= before.cluster[static_cast<size_t>(i)];
  }
  return before.cluster[static_cast<size_t>(k)] * after.cluster[static_cast<size_t>(k)] == p + q;
}

std::set<Laurent> cluster_set(const Seed& s) { return {s.cluster.begin(), s.cluster.end()}; }

struct ExchangeGraph {
  std::set<std::set<Laurent>> clusters;
  std::set<Laurent> variables;
};

ExchangeGraph explore(const ExchangeMatrix& b, size_t limit) {
  ExchangeGraph g;
  std::queue<Seed> todo;
  todo.push(initial_seed(b));
  g.clusters.insert(cluster_set(todo.front()));
  while (!todo.empty() && g.clusters.size() < limit) {
    Seed s = todo.front();
    todo.pop();
    for (const auto& v : s.cluster) g.variables.insert(v);
    for (int k = 0; k < b.size(); ++k) {
      Seed t = mutate_seed(s, k);
      if (g.clusters.insert(cluster_set(t)).second) todo.push(t);
    }
  }
  return g;
}

}  // namespace

TEST(Laurent, ArithmeticAndPrinting) {
  Laurent a = x(2, 0), b = x(2, 1);
  Laurent e = (one(2) + b * b) / a;
  EXPECT_EQ(e.str(), "x1^-1*x2^2 + x1^-1");
  EXPECT_EQ(e * a, one(2) + b * b);
  EXPECT_EQ((a + b).pow(2), a * a + Laurent::constant(2, 2) * a * b + b * b);
  EXPECT_EQ(a.pow(-2) * a.pow(2), one(2));
  EXPECT_TRUE(e.positive_coefficients());
  EXPECT_FALSE((a - b).positive_coefficients());
}

TEST(Laurent, InexactDivisionThrows) {
  Laurent a = x(2, 0), b = x(2, 1);
  EXPECT_THROW(divide_exact(a + one(2), a + Laurent::constant(2, 2)), NonLaurentQuotient);
  EXPECT_THROW(divide_exact(a, a + b), NonLaurentQuotient);
  EXPECT_EQ(divide_exact(a * a - b * b, a + b), a - b);
  EXPECT_THROW((a + b).pow(-1), NonLaurentQuotient);
}

TEST(Laurent, Evaluation) {
  Laurent e = (one(2) + x(2, 0)) / x(2, 1);
  EXPECT_EQ(e.evaluate({Scalar(3), Scalar(2)}), Scalar(2));
  EXPECT_THROW(e.evaluate({Scalar(3), Scalar(0)}), ZeroSubstitution);
}

TEST(ExchangeMatrix, Validation) {
  EXPECT_THROW(ExchangeMatrix({{0, 1}, {1, 0}}), NotSkewSymmetrizable);
  EXPECT_THROW(ExchangeMatrix({{1, 0}, {0, 0}}), NotSkewSymmetrizable);
  EXPECT_THROW(ExchangeMatrix({{0, 1, 0}, {-1, 0}}), DimensionError);
  ExchangeMatrix b({{0, 1}, {-2, 0}});
  EXPECT_EQ(b.symmetrizer().size(), 2u);
  EXPECT_EQ(b.opposite().opposite(), b);
}

TEST(ExchangeMatrix, MutationIsInvolutive) {
  std::mt19937 rng(51);
  for (int t = 0; t < 100; ++t) {
    ExchangeMatrix b = random_exchange(rng, 2 + t % 5);
    for (int k = 0; k < b.size(); ++k) EXPECT_EQ(mutate_matrix(mutate_matrix(b, k), k), b);
  }
}

TEST(ValuedQuiver, MutationCommutesWithMatrixMutation) {
  std::mt19937 rng(52);
  for (int t = 0; t < 100; ++t) {
    ExchangeMatrix b = random_exchange(rng, 2 + t % 5);
    EXPECT_EQ(matrix_of(quiver_of(b)), b);
    for (int k = 0; k < b.size(); ++k)
      EXPECT_EQ(mutate_quiver(quiver_of(b), k), quiver_of(mutate_matrix(b, k))) << b.str() << " k=" << k;
  }
}

TEST(ValuedQuiver, ProductQuiverMutatesToF4) {
  ExchangeMatrix b = mutate_matrix(mutate_matrix(mutate_matrix(c2_square_aw(2), 0), 2), 0);
  ValuedQuiver q = quiver_of(b);
  std::vector<Arrow> expect{{0, 1, 1, 1}, {2, 0, 2, 1}, {3, 2, 1, 1}};
  EXPECT_EQ(q.arrows, expect);
  // Underlying valued graph: path 2 - 1 = 3 - 4 with the double bond in the middle.
  std::multiset<int> bonds;
  for (const auto& a : q.arrows) bonds.insert(a.w_from * a.w_to);
  EXPECT_EQ(bonds, (std::multiset<int>{1, 1, 2}));
}

TEST(ValuedQuiver, ProductShapeForWidthOne) {
  ValuedQuiver q = quiver_of(c2_square_aw(1));
  ASSERT_EQ(q.arrows.size(), 1u);
  EXPECT_EQ(q.arrows[0].w_from * q.arrows[0].w_to, 2);
}

TEST(Bipartite, ColoringAndFailure) {
  for (int w = 1; w <= 4; ++w) {
    ExchangeMatrix b = c2_square_aw(w);
    auto c = bipartite_coloring(b);
    for (int i = 0; i < b.size(); ++i)
      for (int j = 0; j < b.size(); ++j)
        if (b(i, j) != 0) EXPECT_NE(c[static_cast<size_t>(i)], c[static_cast<size_t>(j)]);
    EXPECT_EQ(c[0], 0);
  }
  EXPECT_THROW(bipartite_coloring(ExchangeMatrix({{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}})), NotBipartite);
}

TEST(Seeds, LaurentPhenomenonOnRandomMutationWords) {
  std::mt19937 rng(53);
  int words = 0;
  for (int w = 1; w <= 3; ++w) {
    ExchangeMatrix b = c2_square_aw(w);
    for (int t = 0; t < 334; ++t, ++words) {
      std::uniform_int_distribution<int> len(1, 8), vert(0, b.size() - 1);
      Seed s = initial_seed(b);
      const int l = len(rng);
      int last = -1;
      for (int step = 0; step < l; ++step) {
        int k = vert(rng);
        if (k == last) k = (k + 1) % b.size();
        Seed next;
        ASSERT_NO_THROW(next = mutate_seed(s, k));
        ASSERT_TRUE(exchange_relation_holds(s, next, k));
        ASSERT_TRUE(next.cluster[static_cast<size_t>(k)].positive_coefficients());
        s = next;
        last = k;
      }
    }
  }
  EXPECT_GE(words, 1000);
}

TEST(Seeds, ExchangeGraphOfC2) {
  ExchangeGraph g = explore(ExchangeMatrix({{0, 1}, {-2, 0}}), 100);
  EXPECT_EQ(g.clusters.size(), 6u);
  EXPECT_EQ(g.variables.size(), 6u);
}

TEST(Seeds, ExchangeGraphOfF4ContainsFriezeEntries) {
  ExchangeMatrix b = c2_square_aw(2);
  ExchangeGraph g = explore(b, 1000);
  EXPECT_EQ(g.variables.size(), 28u);
  EXPECT_EQ(g.clusters.size(), 105u);
  FormalFrieze f = formal_frieze(2);
  std::set<Laurent> entries;
  for (int r = 0; r < 2; ++r)
    for (int x = 0; x < f.columns(); ++x) entries.insert(f.cell(r, x));
  EXPECT_EQ(entries.size(), 14u);
  for (const auto& e : entries) EXPECT_TRUE(g.variables.count(e)) << e.str();
}

TEST(Belt, PeriodicityIsStrictSeedEquality) {
  for (int w = 1; w <= 2; ++w) {
    Seed start = initial_seed(c2_square_aw(w)), s = start;
    const int steps = 2 * (4 + w + 1);
    for (int t = 0; t < steps; ++t) s = belt_step(belt_step(s, BeltSign::Minus), BeltSign::Plus);
    EXPECT_TRUE(same_seed(s, start)) << "w=" << w;
  }
}

TEST(FormalFrieze, WidthOneExpressions) {
  FormalFrieze f = formal_frieze(1);
  Laurent x1 = x(2, 0), x2 = x(2, 1), u = one(2);
  const std::vector<Laurent> expect{x1,
                                    x2,
                                    (u + x2 * x2) / x1,
                                    (u + x1 + x2 * x2) / (x1 * x2),
                                    ((u + x1) * (u + x1) + x2 * x2) / (x1 * x2 * x2),
                                    (u + x1) / x2};
  for (int k = 0; k < 6; ++k) EXPECT_EQ(f.at(0, k + 1), expect[static_cast<size_t>(k)]) << k;
}

TEST(FormalFrieze, EntriesArePositiveLaurentPolynomials) {
  for (int w = 1; w <= 3; ++w) {
    FormalFrieze f = formal_frieze(w);
    for (int r = 0; r < w; ++r)
      for (int x = 0; x < f.columns(); ++x) EXPECT_TRUE(f.cell(r, x).positive_coefficients());
  }
}

TEST(FormalFrieze, BeltClustersAreColumnPairs) {
  for (int w = 1; w <= 3; ++w) {
    FormalFrieze f = formal_frieze(w);
    std::vector<std::set<Laurent>> pairs;
    for (int x = 0; x < f.columns(); ++x) {
      std::set<Laurent> s;
      for (int r = 0; r < w; ++r) {
        s.insert(f.at(r, x));
        s.insert(f.at(r, x + 1));
      }
      pairs.push_back(s);
    }
    Seed s = initial_seed(c2_square_aw(w));
    for (int t = 0; t < 2 * (w + 5); ++t) {
      bool found = std::find(pairs.begin(), pairs.end(), cluster_set(s)) != pairs.end();
      EXPECT_TRUE(found) << "w=" << w << " half-step " << t;
      s = belt_step(s, t % 2 ? BeltSign::Plus : BeltSign::Minus);
    }
  }
}

TEST(ZigZag, StraightShapesGiveProductQuiver) {
  for (int w = 1; w <= 4; ++w) {
    EXPECT_EQ(zigzag_matrix(straight_shape(w, 1)), c2_square_aw(w));
    EXPECT_EQ(zigzag_matrix(straight_shape(w, 2)), c2_square_aw(w).opposite());
  }
}

TEST(ZigZag, ElementaryMoveIsMutation) {
  // Moving one row of the zig-zag replaces one cell by the cell two columns
  // over; the seed of the new shape is the mutation of the old one.
  std::mt19937 rng(54);
  for (int w = 1; w <= 3; ++w) {
    FormalFrieze f = formal_frieze(w);
    ZigZagShape s = straight_shape(w, 1);
    Seed seed = initial_seed(zigzag_matrix(s));
    for (int step = 0; step < 25; ++step) {
      std::uniform_int_distribution<int> row(0, w - 1), dir(0, 1);
      const int r = row(rng);
      const int d = dir(rng) ? 1 : -1;
      ZigZagShape t = s;
      t.left[static_cast<size_t>(r)] += d;
      if (!valid_shape(t)) continue;
      const int gone = d > 0 ? s.left[static_cast<size_t>(r)] : s.left[static_cast<size_t>(r)] + 1;
      int v = -1;
      for (int u = 0; u < 2 * w; ++u)
        if (vertex_cell(s, u) == GridIndex::at(r, gone)) v = u;
      ASSERT_GE(v, 0);
      seed = mutate_seed(seed, v);
      EXPECT_EQ(seed.matrix, zigzag_matrix(t)) << "w=" << w << " step " << step;
      for (int u = 0; u < 2 * w; ++u) EXPECT_EQ(seed.cluster[static_cast<size_t>(u)], f.at(vertex_cell(t, u)));
      s = t;
    }
  }
}

TEST(ZigZag, ShapeFromDisplayHasSixteenArrows) {
  ValuedQuiver q = zigzag_quiver(ZigZagShape{{3, 4, 3, 3, 2}});
  EXPECT_EQ(q.vertices, 10);
  EXPECT_EQ(q.arrows.size(), 16u);
}

TEST(Evaluate, MatchesFormalFriezeAtPoint) {
  std::mt19937 rng(55);
  std::uniform_int_distribution<int> d(1, 6);
  for (int w = 1; w <= 3; ++w) {
    FormalFrieze f = formal_frieze(w);
    std::vector<Scalar> pt;
    for (int i = 0; i < 2 * w; ++i) pt.push_back(Scalar(d(rng)));
    FriezeGrid g = evaluate_frieze(initial_seed(c2_square_aw(w)), w, pt);
    for (int r = 0; r < w; ++r)
      for (int x = 0; x < g.columns(); ++x) EXPECT_EQ(g.cell(r, x), f.cell(r, x).evaluate(pt));
  }
}

TEST(Evaluate, MutatedChartAgreesWithInitialChart) {
  const int w = 2;
  Seed chi = mutate_seed(mutate_seed(initial_seed(c2_square_aw(w)), 1), 2);
  std::vector<Scalar> base{2, 3, 1, 5};
  FriezeGrid g0 = evaluate_frieze(initial_seed(c2_square_aw(w)), w, base);
  std::vector<Scalar> pt;
  for (const auto& c : chi.cluster) pt.push_back(c.evaluate(base));
  EXPECT_EQ(evaluate_frieze(chi, w, pt), g0);
}

TEST(Evaluate, UnitPointGivesWidthOneFrieze) {
  FriezeGrid a = evaluate_frieze(initial_seed(c2_square_aw(1)), 1, {Scalar(1), Scalar(1)});
  FriezeGrid b = evaluate_frieze(initial_seed(c2_square_aw(1)), 1, {Scalar(1), Scalar(2)});
  FriezeGrid w1_positive = fixtures::grid(fixtures::w1_positive);
  auto translate_of = [&](const FriezeGrid& g) {
    for (int s = 0; s < g.columns(); s += 2)
      if (translate(w1_positive, s) == g) return true;
    return false;
  };
  EXPECT_TRUE(translate_of(a));
  EXPECT_TRUE(translate_of(mirror(b)));
  EXPECT_THROW(evaluate_frieze(initial_seed(c2_square_aw(1)), 1, {Scalar(0), Scalar(1)}), ZeroSubstitution);
}
