#include <gtest/gtest.h>

#include <algorithm>
#include <atomic>
#include <numeric>
#include <set>
#include <thread>
#include <vector>

#include <ngcurves/classify.hpp>
#include <ngcurves/curve.hpp>
#include <ngcurves/verification.hpp>

using namespace ngcurves;

namespace {

Curve curve(std::vector<Int> v) { return Curve(Sequence(std::move(v))); }

std::vector<Point> sorted(std::vector<Point> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Curves of length 2..4 with a_n <= max_an.
std::vector<Sequence> small_sequences(Int max_an) {
  std::vector<Sequence> out;
  for (int n = 2; n <= 4; ++n) {
    auto s = enumerate_sequences(n, max_an);
    out.insert(out.end(), s.begin(), s.end());
  }
  return out;
}

}  // namespace

TEST(Curve, Generators) {
  auto c = curve({1, 2, 3, 4});
  std::vector<Point> g(c.generators().begin(), c.generators().end());
  EXPECT_EQ(g, (std::vector<Point>{{0, 4}, {1, 3}, {2, 2}, {3, 1}, {4, 0}}));
  for (Point p : c.generators()) EXPECT_EQ(c.degree(p), 1);
}

TEST(Curve, RejectsInvalidSequences) {
  EXPECT_THROW(curve({2, 4, 6}), Error);
  EXPECT_THROW(curve({5}), Error);
  EXPECT_THROW(curve({3, 2, 5}), Error);
  try {
    curve({2, 4, 6});
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::gcd_not_one);
  }
}

TEST(Curve, Projections) {
  auto c = curve({6, 7, 13});
  EXPECT_EQ(c.s1().generators(), (std::vector<Int>{6, 7, 13}));
  EXPECT_EQ(c.s2().generators(), (std::vector<Int>{6, 7, 13}));
  EXPECT_EQ(c.s1().frobenius(), 29);
  EXPECT_EQ(c.s2().frobenius(), 29);
  auto d = curve({5, 7, 12, 19});
  EXPECT_EQ(d.s2().generators(), (std::vector<Int>{7, 12, 14, 19}));
}

TEST(Curve, Degree) {
  auto c = curve({6, 7, 13});
  EXPECT_EQ(c.degree({0, 0}), 0);
  EXPECT_EQ(c.degree({-29, -23}), -4);
  EXPECT_EQ(c.degree({1, 0}), std::nullopt);
}

TEST(Curve, Lattice) {
  auto c = curve({1, 2, 3, 4});
  EXPECT_FALSE(c.lattice_contains({1, 0}));
  EXPECT_TRUE(c.lattice_contains({-3, 3}));
  EXPECT_TRUE(c.lattice_contains({1, -1}));
}

// (1,-1) is an integer combination of generator differences on every curve:
// search small coefficient vectors explicitly.
TEST(Curve, UnitAntidiagonalIsInTheLattice) {
  for (auto v : std::vector<std::vector<Int>>{{2, 3, 5}, {6, 7, 13}, {3, 5, 8, 10}, {4, 9}}) {
    auto c = curve(v);
    auto gens = c.generators();
    bool found = false;
    std::vector<Int> coef(gens.size(), -12);
    while (!found) {
      Point sum{0, 0};
      for (std::size_t i = 0; i < gens.size(); ++i) sum = sum + coef[i] * gens[i];
      if (sum == Point{1, -1}) found = true;
      std::size_t i = 0;
      while (i < coef.size() && coef[i] == 12) coef[i++] = -12;
      if (i == coef.size()) break;
      ++coef[i];
    }
    EXPECT_TRUE(found);
    EXPECT_TRUE(c.lattice_contains({1, -1}));
  }
}

TEST(Curve, Membership) {
  EXPECT_TRUE(curve({2, 3, 5}).contains({6, 4}));
  EXPECT_FALSE(curve({2, 3, 5}).contains({1, 4}));
  auto c = curve({5, 7, 12, 19});
  EXPECT_FALSE(c.contains({23, 53}));
  // no 4-element multiset of {0,5,7,12,19} sums to 23
  const std::vector<Int> vals{0, 5, 7, 12, 19};
  int hits = 0;
  for (Int a : vals)
    for (Int b : vals)
      for (Int x : vals)
        for (Int y : vals) hits += (a + b + x + y == 23);
  EXPECT_EQ(hits, 0);
  EXPECT_TRUE(c.contains({0, 0}));
  EXPECT_FALSE(c.contains({-5, 24}));
}

TEST(Curve, AperyTables) {
  auto t = curve({2, 3, 5}).apery_table();
  EXPECT_EQ(sorted(t.points), sorted({{5, 0}, {0, 5}, {2, 3}, {4, 6}, {3, 2}, {6, 4}}));
  EXPECT_TRUE(t.good);

  t = curve({1, 2, 3}).apery_table();
  EXPECT_EQ(sorted(t.points), sorted({{3, 0}, {0, 3}, {1, 2}, {2, 1}}));
  EXPECT_TRUE(t.good);

  t = curve({1, 2, 3, 4}).apery_table();
  EXPECT_EQ(t.points, (std::vector<Point>{{0, 4}, {1, 3}, {2, 2}, {3, 1}, {4, 0}}));
  EXPECT_TRUE(t.good);
}

TEST(Curve, CohenMacaulay) {
  EXPECT_TRUE(curve({2, 3, 5}).is_cm());
  EXPECT_FALSE(curve({3, 5, 8, 10}).is_cm());
  EXPECT_TRUE(curve({2, 3, 5, 7}).is_cm());
}

TEST(Curve, Type) {
  EXPECT_EQ(curve({2, 3, 5}).cm_type(), 2);
  EXPECT_EQ(curve({6, 7, 13, 20}).cm_type(), 1);
  EXPECT_EQ(curve({5, 7, 12, 19}).cm_type(), 3);
  try {
    curve({3, 5, 8, 10}).cm_type();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_cohen_macaulay);
  }
}

TEST(Curve, GorensteinSymmetry) {
  EXPECT_TRUE(curve({6, 7, 13, 20}).is_gorenstein_symmetry());
  EXPECT_FALSE(curve({2, 3, 5}).is_gorenstein_symmetry());
  EXPECT_TRUE(curve({3, 4, 7, 11}).is_gorenstein_symmetry());
  EXPECT_THROW(curve({3, 5, 8, 10}).is_gorenstein_symmetry(), Error);
}

TEST(Curve, Dual) {
  EXPECT_EQ(dual(Sequence({5, 7, 12, 19})).values(), (std::vector<Int>{7, 12, 14, 19}));
  EXPECT_EQ(dual(Sequence({1, 2, 3, 4})).values(), (std::vector<Int>{1, 2, 3, 4}));
  for (const auto& s : enumerate_sequences(4, 15)) EXPECT_EQ(dual(dual(s)), s);
}

TEST(Curve, NonCohenMacaulayWitness) {
  auto c = curve({3, 5, 8, 10});
  auto w = c.find_non_cm_witness(c.default_witness_degree_bound());
  ASSERT_TRUE(w);
  EXPECT_FALSE(c.contains(*w));
  EXPECT_TRUE(c.lattice_contains(*w));
  EXPECT_TRUE(c.contains(*w + c.vertical()));
  EXPECT_TRUE(c.contains(*w + c.horizontal()));
  // the explicit witness (2a, 2b - 2a)
  EXPECT_FALSE(c.contains({6, 4}));
  EXPECT_TRUE(c.contains({6, 14}));
  EXPECT_TRUE(c.contains({16, 4}));

  auto d = curve({3, 7, 10, 17});
  EXPECT_TRUE(d.find_non_cm_witness(d.default_witness_degree_bound()));
  EXPECT_FALSE(d.contains({18, 67}));
  EXPECT_TRUE(d.contains(Point{18, 67} + d.vertical()));
  EXPECT_TRUE(d.contains(Point{18, 67} + d.horizontal()));

  auto cm = curve({6, 7, 13});
  for (Int bound : {1, 5, 20, 60}) EXPECT_FALSE(cm.find_non_cm_witness(bound));
}

// 2 (F1 + F2 + 2 a_n) / a_n alone is 4 here, one short of the first witness.
TEST(Curve, WitnessDegreeBoundWhenProjectionIsN) {
  auto c = curve({1, 6, 7});
  EXPECT_FALSE(c.is_cm());
  EXPECT_EQ(c.s1().frobenius(), -1);
  EXPECT_FALSE(c.find_non_cm_witness(4));
  EXPECT_EQ(c.find_non_cm_witness(5), (Point{5, 23}));
  EXPECT_EQ(c.default_witness_degree_bound(), 5);
  EXPECT_EQ(curve({3, 5, 8, 10}).default_witness_degree_bound(), 7);
}

TEST(CurveProperty, AperyTableShape) {
  for (const auto& s : small_sequences(30)) {
    const Curve c(s);
    const auto& t = c.apery_table();
    const Int an = s.back();
    ASSERT_EQ(static_cast<Int>(t.points.size()), an + 1);
    std::set<Int> residues;
    for (Point b : t.inner()) {
      residues.insert(b.x % an);
      EXPECT_TRUE(c.contains(b));
      EXPECT_FALSE(c.contains(b - Point{0, an}));  // second coordinate is minimal
      for (Point g : {c.vertical(), c.horizontal()}) {
        const Point moved = b + g;
        EXPECT_TRUE(std::find(t.points.begin(), t.points.end(), moved) == t.points.end());
      }
    }
    EXPECT_EQ(static_cast<Int>(residues.size()), an - 1);
    EXPECT_EQ(residues.count(0), 0u);
    std::vector<Int> nus{an};
    for (Point b : t.inner()) nus.push_back(b.x);
    std::sort(nus.begin(), nus.end());
    EXPECT_EQ(nus, c.s1().apery(an).sorted());
    for (Point b : t.b_tilde) EXPECT_TRUE(std::find(t.points.begin(), t.points.end(), b) != t.points.end());
  }
}

// Cohen-Macaulayness from the good Apery set agrees with the existence of a
// witness below the default degree bound.
TEST(CurveProperty, GoodAperyIffNoWitness) {
  for (const auto& s : small_sequences(30)) {
    const Curve c(s);
    const bool witness = c.find_non_cm_witness(c.default_witness_degree_bound()).has_value();
    ASSERT_EQ(c.is_cm(), !witness) << to_string(s);
  }
}

TEST(CurveProperty, SymmetryIffTypeOne) {
  for (const auto& s : small_sequences(30)) {
    const Curve c(s);
    if (!c.is_cm()) continue;
    ASSERT_EQ(c.is_gorenstein_symmetry(), c.cm_type() == 1) << to_string(s);
  }
}

TEST(CurveProperty, MembershipMatchesBruteForce) {
  for (const auto& s : small_sequences(15)) {
    const Curve c(s);
    const Int an = s.back();
    for (Int d = 0; d <= 6; ++d)
      for (Int x = -1; x <= d * an + 1; ++x) {
        const Point p{x, d * an - x};
        ASSERT_EQ(c.contains(p), verification::brute_curve_contains(c, p)) << to_string(s) << " " << to_string(p);
      }
  }
}

TEST(CurveProperty, TwoElementSequencesAreGorenstein) {
  for (const auto& s : enumerate_sequences(2, 40)) {
    const Curve c(s);
    ASSERT_TRUE(c.is_cm());
    EXPECT_EQ(c.cm_type(), 1) << to_string(s);
  }
}

TEST(CurveProperty, ConsecutiveSumCohenMacaulayIffAdjacent) {
  for (Int b = 2; 2 * b < 40; ++b)
    for (Int a = 1; a < b && a + b <= 40; ++a) {
      if (std::gcd(a, b) != 1) continue;
      const Curve c(Sequence({a, b, a + b}));
      EXPECT_EQ(c.is_cm(), b == a + 1) << a << "," << b;
    }
}

TEST(CurveProperty, ConcurrentQueriesAgree) {
  const Curve c(Sequence({7, 9, 16, 25}));
  std::vector<std::uint8_t> expected;
  for (Int x = 0; x < 2000; ++x) expected.push_back(c.contains({x, 25 * 80 - x}));
  const Curve fresh(Sequence({7, 9, 16, 25}));
  std::vector<std::jthread> pool;
  std::atomic<int> mismatches{0};
  for (int t = 0; t < 4; ++t)
    pool.emplace_back([&, t] {
      for (Int x = 1999 - t; x >= 0; --x)
        if (fresh.contains({x, 25 * 80 - x}) != static_cast<bool>(expected[static_cast<std::size_t>(x)])) ++mismatches;
    });
  pool.clear();
  EXPECT_EQ(mismatches, 0);
}

// B~ by its definition: b + b_i leaves the table for every table point b_i.
TEST(CurveProperty, MaximalPointsMatchDefinition) {
  for (const auto& s : small_sequences(30)) {
    const Curve c(s);
    if (!c.is_cm()) continue;
    const auto& t = c.apery_table();
    const std::set<Point> table(t.points.begin(), t.points.end());
    std::vector<Point> literal;
    for (Point b : t.inner())
      if (std::none_of(t.points.begin(), t.points.end(), [&](Point bi) { return table.count(b + bi) > 0; }))
        literal.push_back(b);
    ASSERT_EQ(t.b_tilde, literal) << to_string(s);
  }
}
