#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"
#include "frieze/search.hpp"

using namespace frieze;

namespace {

bool positive_integers(const FriezeGrid& g) {
  for (int r = 0; r < g.width(); ++r)
    for (int x = 0; x < g.columns(); ++x)
      if (!g.cell(r, x).is_integer() || !g.cell(r, x).is_positive()) return false;
  return true;
}

std::vector<FriezeGrid> search(int w, int bound, Dedup d = Dedup::None, unsigned threads = 1) {
  SearchConfig c;
  c.w = w;
  c.bound = bound;
  c.dedup = d;
  c.threads = threads;
  return enumerate(c);
}

}  // namespace

TEST(Search, WidthOneCountsAndOrbits) {
  auto all = search(1, 5);
  EXPECT_EQ(all.size(), 6u);
  EXPECT_EQ(search(1, 5, Dedup::Translation).size(), 2u);
  EXPECT_EQ(search(1, 5, Dedup::Dihedral).size(), 1u);
  auto orbits = dihedral_orbits(all);
  ASSERT_EQ(orbits.size(), 1u);
  EXPECT_EQ(orbits[0].members.size(), 6u);
}

TEST(Search, ResultsAreTamePositiveFriezes) {
  for (const auto& g : search(2, 8)) {
    EXPECT_TRUE(positive_integers(g));
    EXPECT_TRUE(check_local_rules(g).empty());
    EXPECT_TRUE(check_tame(g).tame);
    EXPECT_TRUE(check_glide(g));
  }
}

TEST(Search, ContainsKnownFixtures) {
  auto all = search(2, 14);
  FriezeGrid f = fixtures::grid(fixtures::w2_positive);
  bool found = false;
  for (const auto& g : all) found |= canonical_form(g, true) == canonical_form(f, true);
  EXPECT_TRUE(found);
  auto w1 = search(1, 5);
  EXPECT_TRUE(std::find(w1.begin(), w1.end(), fixtures::grid(fixtures::w1_positive)) != w1.end());
}

TEST(Search, NoDuplicates) {
  auto all = search(2, 10);
  std::set<std::string> seen;
  for (const auto& g : all) {
    std::string key;
    for (int r = 0; r < 2; ++r)
      for (int x = 0; x < g.columns(); ++x) key += g.cell(r, x).str() + ",";
    EXPECT_TRUE(seen.insert(key).second);
  }
}

TEST(Search, RoundTripsOnFiftyFriezes) {
  auto all = search(2, 30);
  ASSERT_GE(all.size(), 50u);
  for (size_t k = 0; k < 50; ++k) {
    const FriezeGrid& g = all[k];
    Coeffs c = extract_coeffs(g);
    EXPECT_EQ(propagate_from_coeffs(c.a, c.b), g);
    ZigZagShape s = straight_shape(2, 0);
    std::vector<Scalar> v;
    for (GridIndex idx : shape_cells(s)) v.push_back(g.at(idx));
    EXPECT_EQ(propagate_from_zigzag(make_zigzag(s, v), 2, ScalarKind::Rational), g);
  }
}

TEST(Search, CanonicalFormIsOrbitInvariant) {
  FriezeGrid g = fixtures::grid(fixtures::w3_positive);
  FriezeGrid c = canonical_form(g, true);
  for (int s = 0; s < g.columns(); s += 2) {
    EXPECT_EQ(canonical_form(translate(g, s), true), c);
    EXPECT_EQ(canonical_form(mirror(translate(g, s)), true), c);
    EXPECT_EQ(canonical_form(translate(g, s), false), canonical_form(g, false));
  }
}

TEST(Search, ThreadCountDoesNotChangeResult) {
  EXPECT_EQ(search(2, 12, Dedup::None, 1), search(2, 12, Dedup::None, 4));
}

TEST(Search, OrbitsRejectMixedWidths) {
  std::vector<FriezeGrid> mixed{fixtures::grid(fixtures::w1_positive), fixtures::grid(fixtures::w2_positive)};
  EXPECT_THROW(dihedral_orbits(mixed), WidthMismatch);
}

TEST(Search, WidthZeroHasOneFrieze) {
  EXPECT_EQ(search(0, 3).size(), 1u);
}
