#include <gtest/gtest.h>

#include <random>

#include "hkd/errors.hpp"
#include "hkd/toric_region.hpp"

using namespace hkd;

namespace {

Polytope from_inequalities(const std::vector<std::pair<ZVec, long>>& rows, std::size_t d) {
  std::vector<HalfSpace> hs;
  for (const auto& [n, a] : rows) hs.push_back(HalfSpace::make(n, a));
  return vertex_enumeration(hs, d);
}

Polytope hirzebruch(long a, long c, long d) {
  return from_inequalities({{{1, 0}, c}, {{0, 1}, 0}, {{0, -1}, d}, {{-1, a}, 0}}, 2);
}

Polytope simplex2() { return convex_hull({{0, 0}, {1, 0}, {0, 1}}, 2); }
Polytope segment() { return convex_hull({{0}, {1}}, 1); }
Polytope unit_square() { return convex_hull({{0, 0}, {1, 0}, {0, 1}, {1, 1}}, 2); }
Polytope prism() { return cartesian_product(simplex2(), segment()); }

/// Volume of the part of lambda P covered by translates, by inclusion-exclusion.
Rational covered_volume(const ToricPair& pair, const Rational& lambda) {
  if (lambda <= 1) return 0;
  Polytope big = scale(pair.polytope, lambda);
  std::vector<Polytope> ts;
  for (const auto& u : pair.lattice_points) ts.push_back(translate_slice(pair, u, lambda));
  Rational total = 0;
  const int dim = static_cast<int>(pair.d) - 1;
  auto rec = [&](auto&& self, std::size_t start, const Polytope& acc, int size) -> void {
    for (std::size_t i = start; i < ts.size(); ++i) {
      Polytope next = intersect(acc, ts[i]);
      if (next.intrinsic_dim() < dim) continue;
      total += (size % 2 == 0 ? 1 : -1) * volume(next);
      self(self, i + 1, next, size + 1);
    }
  };
  rec(rec, 0, big, 0);
  return total;
}

/// Boundary measure of the union of cells: every cell facet minus the parts
/// shared with a neighbouring cell.
Rational boundary_from_cells(const std::vector<Polytope>& cells, std::size_t d) {
  Rational total = 0;
  const int fdim = static_cast<int>(d) - 2;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (std::size_t f = 0; f < cells[i].facets().size(); ++f) {
      Polytope facet = cells[i].facet(f);
      std::vector<Polytope> pieces = {facet};
      for (std::size_t j = 0; j < cells.size(); ++j) {
        if (j == i || !overlaps_in_dimension(facet, cells[j], fdim)) continue;
        std::vector<Polytope> next;
        for (const auto& p : pieces) {
          for (auto& q : subtract(p, cells[j])) next.push_back(std::move(q));
        }
        pieces = std::move(next);
      }
      for (const auto& p : pieces) total += relative_volume(p);
    }
  }
  return total;
}

std::vector<Rational> sample_lambdas(const ToricPair& pair, int per_interval) {
  auto bps = breakpoint_superset(pair);
  std::vector<Rational> out;
  for (std::size_t i = 0; i + 1 < bps.size(); ++i) {
    for (int k = 1; k <= per_interval; ++k) {
      out.push_back(bps[i] + (bps[i + 1] - bps[i]) * make_rational(k, per_interval + 1));
    }
  }
  return out;
}

}  // namespace

TEST(BuildPair, SimplexCone) {
  ToricPair pair = build_pair(simplex2());
  EXPECT_EQ(pair.d, 3U);
  EXPECT_EQ(pair.lattice_points.size(), 3U);
  EXPECT_EQ(pair.cone.halfspaces.size(), 4U);
  EXPECT_TRUE(pair.cone.contains({0, 0}, 0));
  EXPECT_TRUE(pair.cone.contains({1, 1}, 2));
  EXPECT_FALSE(pair.cone.contains({1, 1}, 1));
  EXPECT_FALSE(pair.cone.contains({0, 0}, -1));
}

TEST(BuildPair, LatticeCounts) {
  EXPECT_EQ(build_pair(hirzebruch(1, 1, 1)).lattice_points.size(), 5U);
  EXPECT_EQ(build_pair(segment()).lattice_points.size(), 2U);
  EXPECT_THROW(build_pair(convex_hull({{0}, {make_rational(1, 2)}}, 1)), InvalidInput);
  EXPECT_THROW(build_pair(convex_hull({{0, 0}, {1, 1}}, 2)), InvalidInput);
}

TEST(HirzebruchPolytope, VerticesAndArea) {
  Polytope p = hirzebruch(1, 2, 1);
  std::vector<QVec> expected = {{-2, 0}, {-2, 1}, {0, 0}, {1, 1}};
  EXPECT_EQ(p.vertices(), expected);
  EXPECT_EQ(volume(p), make_rational(5, 2));
  EXPECT_EQ(volume(hirzebruch(2, 3, 2)), 3 * 2 + 2 * 4 / 2);
}

TEST(Slice, BelowOneIsScaledPolytope) {
  ToricPair pair = build_pair(simplex2());
  SliceRegion r = slice(pair, make_rational(1, 2));
  ASSERT_EQ(r.cells.size(), 1U);
  EXPECT_EQ(r.cells[0].vertices(), scale(pair.polytope, make_rational(1, 2)).vertices());
  EXPECT_TRUE(r.inner_boundary.empty());
  auto m = boundary_measures(r);
  EXPECT_EQ(m.outer, make_rational(3, 2));
  EXPECT_EQ(m.inner, 0);
}

TEST(Slice, SegmentPair) {
  ToricPair pair = build_pair(segment());
  SliceRegion r = slice(pair, make_rational(3, 2));
  ASSERT_EQ(r.cells.size(), 1U);
  EXPECT_EQ(r.cells[0].vertices(), (std::vector<QVec>{{make_rational(1, 2)}, {1}}));
  EXPECT_TRUE(r.outer_boundary.empty());
  ASSERT_EQ(r.inner_boundary.size(), 2U);
  auto m = boundary_measures(r);
  EXPECT_EQ(m.outer, 0);
  EXPECT_EQ(m.inner, 2);
}

TEST(Slice, UnitSquareCross) {
  ToricPair pair = build_pair(unit_square());
  SliceRegion r = slice(pair, make_rational(3, 2));
  auto m = boundary_measures(r);
  EXPECT_EQ(m.outer, 2);
  EXPECT_EQ(m.inner, 4);
  Rational area = 0;
  for (const auto& c : r.cells) area += volume(c);
  EXPECT_EQ(area, make_rational(5, 4));
}

TEST(Slice, EmptyAtAndBeyondTop) {
  ToricPair pair = build_pair(simplex2());
  EXPECT_TRUE(slice(pair, 3).cells.empty());
  EXPECT_TRUE(slice(pair, make_rational(7, 2)).cells.empty());
  EXPECT_FALSE(slice(pair, make_rational(5, 2)).cells.empty());
  auto zero = boundary_measures(slice(pair, 0));
  EXPECT_EQ(zero.outer, 0);
  EXPECT_EQ(zero.inner, 0);
}

TEST(Breakpoints, ContainKnownBranchPoints) {
  auto contains = [](const std::vector<Rational>& v, const Rational& x) {
    return std::find(v.begin(), v.end(), x) != v.end();
  };
  auto s = breakpoint_superset(build_pair(simplex2()));
  for (int k = 0; k <= 3; ++k) EXPECT_TRUE(contains(s, k));
  auto h = breakpoint_superset(build_pair(hirzebruch(1, 2, 1)));
  for (const auto& x : {Rational(0), Rational(1), make_rational(4, 3), make_rational(3, 2), Rational(2)}) {
    EXPECT_TRUE(contains(h, x)) << to_string(x);
  }
  auto g = breakpoint_superset(build_pair(segment()));
  for (int k = 0; k <= 2; ++k) EXPECT_TRUE(contains(g, k));
  EXPECT_TRUE(std::is_sorted(h.begin(), h.end()));
}

TEST(Breakpoints, SupportHeight) {
  EXPECT_EQ(support_height(build_pair(simplex2())), 3);
  EXPECT_EQ(support_height(build_pair(segment())), 2);
  ToricPair h = build_pair(hirzebruch(1, 2, 1));
  Rational top = support_height(h);
  EXPECT_TRUE(slice_cells(h, top + make_rational(1, 100)).empty());
  EXPECT_FALSE(slice_cells(h, top - make_rational(1, 100)).empty());
}

class SliceProperties : public ::testing::TestWithParam<int> {
 protected:
  ToricPair pair() const {
    switch (GetParam()) {
      case 0: return build_pair(simplex2());
      case 1: return build_pair(hirzebruch(1, 2, 1));
      case 2: return build_pair(hirzebruch(1, 1, 2));
      case 3: return build_pair(unit_square());
      case 4: return build_pair(convex_hull({{-1, -1}, {2, -1}, {-1, 2}}, 2));
      default: return build_pair(prism());
    }
  }
};

TEST_P(SliceProperties, VolumeConservation) {
  ToricPair p = pair();
  for (const auto& lambda : sample_lambdas(p, p.d == 4 ? 1 : 2)) {
    Rational cells = 0;
    for (const auto& c : slice_cells(p, lambda)) cells += volume(c);
    EXPECT_EQ(volume(scale(p.polytope, lambda)), cells + covered_volume(p, lambda)) << to_string(lambda);
  }
}

TEST_P(SliceProperties, BoundaryCensusIsExhaustive) {
  ToricPair p = pair();
  for (const auto& lambda : sample_lambdas(p, 1)) {
    SliceRegion r = slice(p, lambda);
    auto m = boundary_measures(r);
    EXPECT_EQ(m.outer + m.inner, boundary_from_cells(r.cells, p.d)) << to_string(lambda);
    for (const auto& piece : r.outer_boundary) {
      bool on_facet = false;
      Polytope big = scale(p.polytope, lambda);
      for (const auto& f : big.facets()) {
        bool all = true;
        for (const auto& v : piece.vertices()) all = all && f.slack(v) == 0;
        on_facet = on_facet || all;
      }
      EXPECT_TRUE(on_facet);
    }
    if (lambda < 1) EXPECT_TRUE(r.inner_boundary.empty());
  }
}

TEST_P(SliceProperties, MembershipAgreesWithCountingPredicate) {
  ToricPair p = pair();
  std::mt19937 rng(100 + GetParam());
  const std::size_t n = p.d - 1;
  QVec lo = p.polytope.lower_bounds();
  QVec hi = p.polytope.upper_bounds();
  std::uniform_int_distribution<int> frac(0, 997);
  int checked = 0;
  for (const auto& lambda : sample_lambdas(p, 1)) {
    auto cells = slice_cells(p, lambda);
    std::vector<Polytope> ts;
    if (lambda > 1) {
      for (const auto& u : p.lattice_points) ts.push_back(translate_slice(p, u, lambda));
    }
    for (int k = 0; k < (p.d == 4 ? 15 : 60); ++k) {
      QVec x(n);
      for (std::size_t i = 0; i < n; ++i) {
        x[i] = lambda * (lo[i] + (hi[i] - lo[i]) * make_rational(frac(rng), 997));
      }
      bool on_edge = false;
      for (const auto& c : cells) on_edge = on_edge || (c.contains(x) && !c.contains_in_relative_interior(x));
      for (const auto& t : ts) on_edge = on_edge || (t.contains(x) && !t.contains_in_relative_interior(x));
      if (on_edge) continue;
      bool in_cells = false;
      for (const auto& c : cells) in_cells = in_cells || c.contains(x);
      EXPECT_EQ(in_cells, in_eto_region(p, x, lambda));
      ++checked;
    }
  }
  EXPECT_GT(checked, 50);
}

TEST_P(SliceProperties, CellsAreInteriorDisjoint) {
  ToricPair p = pair();
  const int dim = static_cast<int>(p.d) - 1;
  for (const auto& lambda : sample_lambdas(p, 1)) {
    auto cells = slice_cells(p, lambda);
    for (std::size_t i = 0; i < cells.size(); ++i) {
      EXPECT_EQ(cells[i].intrinsic_dim(), dim);
      for (std::size_t j = i + 1; j < cells.size(); ++j) {
        EXPECT_FALSE(overlaps_in_dimension(cells[i], cells[j], dim));
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Pairs, SliceProperties, ::testing::Range(0, 6));
