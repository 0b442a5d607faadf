#include <gtest/gtest.h>

#include <random>

#include "hkd/errors.hpp"
#include "hkd/polytope.hpp"

using namespace hkd;

namespace {

Polytope box(const std::vector<std::pair<long, long>>& sides) {
  std::vector<HalfSpace> hs;
  const std::size_t d = sides.size();
  for (std::size_t i = 0; i < d; ++i) {
    ZVec lo(d, 0);
    lo[i] = 1;
    hs.push_back(HalfSpace::make(lo, -sides[i].first));
    ZVec hi(d, 0);
    hi[i] = -1;
    hs.push_back(HalfSpace::make(hi, sides[i].second));
  }
  return vertex_enumeration(hs, d);
}

std::vector<QVec> random_points(std::mt19937& rng, std::size_t n, std::size_t d, int bound, int den) {
  std::uniform_int_distribution<int> num(-bound * den, bound * den);
  std::vector<QVec> pts;
  for (std::size_t i = 0; i < n; ++i) {
    QVec p;
    for (std::size_t j = 0; j < d; ++j) p.push_back(make_rational(num(rng), den));
    pts.push_back(std::move(p));
  }
  return pts;
}

std::uint64_t brute_force_count(const Polytope& p, long dilation, bool interior) {
  Polytope q = scale(p, dilation);
  if (q.is_empty()) return 0;
  QVec lo = q.lower_bounds();
  QVec hi = q.upper_bounds();
  const std::size_t d = q.ambient_dim();
  std::uint64_t count = 0;
  QVec x(d);
  auto rec = [&](auto&& self, std::size_t j) -> void {
    if (j == d) {
      bool in = interior ? q.contains_in_relative_interior(x) : q.contains(x);
      if (in) ++count;
      return;
    }
    for (Integer v = hkd::ceil(lo[j]); v <= hkd::floor(hi[j]); ++v) {
      x[j] = v;
      self(self, j + 1);
    }
  };
  rec(rec, 0);
  return count;
}

}  // namespace

TEST(HalfSpace, NormalizationIsCanonical) {
  auto a = HalfSpace::make({2, -4}, 6);
  EXPECT_EQ(a, HalfSpace::make({1, -2}, 3));
  auto b = HalfSpace::from_rational({make_rational(1, 2), -1}, make_rational(3, 2));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.negated().negated(), a);
  EXPECT_EQ(a.slack({1, 1}), 2);
}

TEST(VertexEnumeration, UnitCube) {
  Polytope c = box({{0, 1}, {0, 1}, {0, 1}});
  EXPECT_EQ(c.vertices().size(), 8U);
  EXPECT_EQ(c.facets().size(), 6U);
  EXPECT_EQ(c.intrinsic_dim(), 3);
  EXPECT_EQ(volume(c), 1);
}

TEST(VertexEnumeration, RedundantConstraintsDropped) {
  std::vector<HalfSpace> hs = {HalfSpace::make({1, 0}, 0), HalfSpace::make({0, 1}, 0),
                               HalfSpace::make({-1, -1}, 2), HalfSpace::make({-1, 0}, 5)};
  Polytope t = vertex_enumeration(hs, 2);
  EXPECT_EQ(t.vertices().size(), 3U);
  EXPECT_EQ(t.facets().size(), 3U);
  EXPECT_EQ(volume(t), 2);
}

TEST(VertexEnumeration, UnboundedAndEmpty) {
  std::vector<HalfSpace> wedge = {HalfSpace::make({1, 0}, 0), HalfSpace::make({0, 1}, 0)};
  EXPECT_THROW(vertex_enumeration(wedge, 2), InvalidInput);
  std::vector<HalfSpace> strip = {HalfSpace::make({1, 0}, 0), HalfSpace::make({-1, 0}, 1),
                                  HalfSpace::make({0, 1}, 0), HalfSpace::make({-1, 1}, 0)};
  EXPECT_THROW(vertex_enumeration(strip, 2), InvalidInput);
  std::vector<HalfSpace> infeasible = {HalfSpace::make({1, 0}, -2), HalfSpace::make({-1, 0}, 1),
                                       HalfSpace::make({0, 1}, 0), HalfSpace::make({0, -1}, 1)};
  EXPECT_TRUE(vertex_enumeration(infeasible, 2).is_empty());
}

TEST(VertexEnumeration, DegenerateToSegment) {
  std::vector<HalfSpace> hs = {HalfSpace::make({0, 1}, 0), HalfSpace::make({0, -1}, 0),
                               HalfSpace::make({1, 0}, 0), HalfSpace::make({-1, 0}, 3)};
  Polytope s = vertex_enumeration(hs, 2);
  EXPECT_EQ(s.intrinsic_dim(), 1);
  EXPECT_EQ(s.equalities().size(), 1U);
  EXPECT_EQ(s.facets().size(), 2U);
  EXPECT_EQ(relative_volume(s), 3);
  EXPECT_EQ(volume(s), 0);
}

TEST(ConvexHull, ContainsInputAndVerticesAreExtreme) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t d = 2 + trial % 2;
    auto pts = random_points(rng, 8 + trial % 5, d, 3, 1 + trial % 3);
    Polytope p = convex_hull(pts, d);
    for (const auto& x : pts) EXPECT_TRUE(p.contains(x));
    for (std::size_t i = 0; i < p.vertices().size(); ++i) {
      std::vector<QVec> others = p.vertices();
      others.erase(others.begin() + static_cast<long>(i));
      EXPECT_FALSE(convex_hull(others, d).contains(p.vertices()[i]));
    }
    // Round trip through the facet description.
    Polytope q = vertex_enumeration(p.facets(), d);
    EXPECT_EQ(q.vertices(), p.vertices());
  }
}

TEST(ConvexHull, LowerDimensionalInput) {
  std::vector<QVec> pts = {{0, 0, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 2}, {make_rational(1, 2), make_rational(1, 2), 1}};
  Polytope p = convex_hull(pts, 3);
  EXPECT_EQ(p.intrinsic_dim(), 2);
  EXPECT_EQ(p.vertices().size(), 4U);
  EXPECT_EQ(p.facets().size(), 4U);
  EXPECT_EQ(relative_volume(p), 1);
}

TEST(Volume, TriangulationOrderIndependent) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 25; ++trial) {
    std::size_t d = 2 + trial % 3;
    auto pts = random_points(rng, d + 4, d, 2, 2);
    Polytope p = convex_hull(pts, d);
    EXPECT_EQ(volume(p, TriangulationOrder::kFirstVertexApex),
              volume(p, TriangulationOrder::kLastVertexApex));
  }
}

TEST(Volume, AdditiveUnderCutting) {
  std::mt19937 rng(29);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t d = 2 + trial % 3;
    Polytope p = convex_hull(random_points(rng, d + 5, d, 3, 1), d);
    ZVec n(d);
    for (auto& x : n) x = coef(rng);
    if (std::all_of(n.begin(), n.end(), [](const Integer& x) { return x == 0; })) n[0] = 1;
    HalfSpace h = HalfSpace::make(n, coef(rng));
    EXPECT_EQ(volume(clip(p, h)) + volume(clip(p, h.negated())), volume(p));
  }
}

TEST(Volume, PickTheorem) {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    Polytope p = convex_hull(random_points(rng, 7, 2, 4, 1), 2);
    if (!p.is_full_dimensional()) continue;
    auto all = count_lattice_points(p);
    auto interior = count_lattice_points(p, 1, true);
    auto boundary = all - interior;
    EXPECT_EQ(volume(p), Rational(interior) + make_rational(static_cast<long>(boundary), 2) - 1);
  }
}

TEST(Volume, UnimodularInvariance) {
  std::mt19937 rng(37);
  for (int trial = 0; trial < 20; ++trial) {
    auto pts = random_points(rng, 6, 3, 2, 1 + trial % 2);
    Polytope p = convex_hull(pts, 3);
    std::vector<QVec> mapped;
    for (const auto& x : pts) mapped.push_back({x[0] + 2 * x[1], x[1] - x[2], x[2] + 1});
    Polytope q = convex_hull(mapped, 3);
    EXPECT_EQ(volume(p), volume(q));
    EXPECT_EQ(count_lattice_points(p), count_lattice_points(q));
  }
}

TEST(RelativeVolume, LatticeNormalized) {
  Polytope seg = convex_hull({{0, 0}, {2, 4}}, 2);
  EXPECT_EQ(relative_volume(seg), 2);
  Polytope tri = convex_hull({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3);
  EXPECT_EQ(relative_volume(tri), make_rational(1, 2));
  EXPECT_EQ(relative_volume(Polytope::point({make_rational(1, 3), 0})), 1);
  // Scaling law: rVol(rP) = r^dim rVol(P).
  EXPECT_EQ(relative_volume(scale(tri, make_rational(3, 2))), make_rational(9, 8));
}

TEST(Clip, MatchesVertexEnumeration) {
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t d = 2 + trial % 3;
    Polytope p = box(std::vector<std::pair<long, long>>(d, {-2, 2}));
    std::vector<HalfSpace> hs = p.facets();
    for (int k = 0; k < 3; ++k) {
      ZVec n(d);
      for (auto& x : n) x = coef(rng);
      if (std::all_of(n.begin(), n.end(), [](const Integer& x) { return x == 0; })) continue;
      HalfSpace h = HalfSpace::make(n, coef(rng));
      p = clip(p, h);
      hs.push_back(h);
    }
    Polytope q = vertex_enumeration(hs, d);
    EXPECT_EQ(p.vertices(), q.vertices());
    EXPECT_EQ(p.intrinsic_dim(), q.intrinsic_dim());
  }
}

TEST(Subtract, PiecesTileTheDifference) {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 25; ++trial) {
    std::size_t d = 2 + trial % 2;
    Polytope k = convex_hull(random_points(rng, d + 4, d, 3, 1), d);
    Polytope t = convex_hull(random_points(rng, d + 3, d, 3, 1), d);
    auto pieces = subtract(k, t);
    Rational total = volume(intersect(k, t));
    for (const auto& piece : pieces) total += volume(piece);
    EXPECT_EQ(total, volume(k));
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      EXPECT_FALSE(overlaps_in_dimension(pieces[i], t, static_cast<int>(d)));
      for (std::size_t j = i + 1; j < pieces.size(); ++j) {
        EXPECT_FALSE(overlaps_in_dimension(pieces[i], pieces[j], static_cast<int>(d)));
      }
    }
  }
}

TEST(Subtract, LowerDimensionalPieces) {
  Polytope edge = convex_hull({{0, 0}, {4, 0}}, 2);
  Polytope square = box({{1, 2}, {-1, 1}});
  auto pieces = subtract(edge, square);
  Rational total = 0;
  for (const auto& p : pieces) total += relative_volume(p);
  EXPECT_EQ(total, 3);
  // Touching only at a point leaves the segment whole.
  Polytope corner = box({{4, 5}, {0, 1}});
  EXPECT_EQ(subtract(edge, corner).size(), 1U);
}

TEST(LatticeCount, MatchesBruteForce) {
  std::mt19937 rng(47);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t d = 1 + trial % 3;
    Polytope p = convex_hull(random_points(rng, d + 3, d, 2, 1 + trial % 3), d);
    for (long n = 0; n <= 3; ++n) {
      EXPECT_EQ(count_lattice_points(p, n, false), brute_force_count(p, n, false));
      if (n > 0) EXPECT_EQ(count_lattice_points(p, n, true), brute_force_count(p, n, true));
    }
  }
}

TEST(LatticeCount, LowerDimensionalRelativeInterior) {
  Polytope seg = convex_hull({{0, 0}, {2, 4}}, 2);
  EXPECT_EQ(count_lattice_points(seg), 3U);
  EXPECT_EQ(count_lattice_points(seg, 1, true), 1U);
  EXPECT_EQ(lattice_points(seg).size(), 3U);
}

TEST(Denominator, Examples) {
  EXPECT_EQ(rational_denominator(convex_hull({{0}, {make_rational(1, 2)}}, 1)), 2);
  EXPECT_EQ(rational_denominator(convex_hull({{0, 0}, {2, 0}, {0, 2}}, 2)), make_rational(1, 2));
  EXPECT_EQ(rational_denominator(Polytope::point({0, 0})), 1);
  EXPECT_EQ(rational_denominator(convex_hull({{make_rational(2, 3)}, {make_rational(4, 5)}}, 1)),
            make_rational(15, 2));
}

TEST(Constructions, ProductsAndSums) {
  Polytope sq = box({{0, 1}, {0, 1}});
  EXPECT_EQ(volume(minkowski_sum(sq, sq)), 4);
  Polytope seg = box({{0, 3}});
  Polytope prism = cartesian_product(sq, seg);
  EXPECT_EQ(prism.facets().size(), 6U);
  EXPECT_EQ(volume(prism), 3);
  EXPECT_EQ(support_value(prism, {1, 1, 1}), 5);
  Polytope moved = translate(scale(sq, 3), {1, -1});
  EXPECT_EQ(moved.lower_bounds(), (QVec{1, -1}));
  EXPECT_TRUE(moved.contains({4, 2}));
  EXPECT_FALSE(moved.contains({4, make_rational(5, 2)}));
  EXPECT_EQ(volume(moved), 9);
}
