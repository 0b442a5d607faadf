#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "hkd/rational.hpp"

namespace hkd {

/// {x : <x, normal> + offset >= 0}, i.e. <x, normal> >= -offset.
/// Stored with gcd(normal, offset) = 1, which makes equal sets compare equal.
struct HalfSpace {
  ZVec normal;
  Integer offset;

  static HalfSpace make(ZVec normal, Integer offset);
  static HalfSpace from_rational(const QVec& normal, const Rational& offset);

  std::size_t dim() const { return normal.size(); }
  Rational slack(const QVec& x) const { return dot(normal, x) + offset; }
  /// Closure of the complement.
  HalfSpace negated() const;
  /// <x, normal> + factor * offset >= 0 (the half-space of a dilate).
  HalfSpace with_scaled_offset(const Rational& factor) const;
  /// The half-space of the translate t + P.
  HalfSpace translated(const QVec& t) const;

  bool operator==(const HalfSpace&) const = default;
};

/// Small dynamic bitset over vertex indices.
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(std::size_t n, bool filled = false);
  void insert(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool contains(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  std::size_t count() const;
  std::vector<std::size_t> members() const;
  IndexSet operator&(const IndexSet& other) const;
  bool operator==(const IndexSet&) const = default;
  auto operator<=>(const IndexSet&) const = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Convex polytope in dual representation. The vertex list holds exactly the
/// extreme points; `facets` holds one irredundant half-space per facet and
/// `equalities` a canonical set of implicit equations (nonempty only for
/// lower-dimensional polytopes). Values are immutable after construction.
class Polytope {
 public:
  Polytope() = default;
  static Polytope empty(std::size_t ambient_dim);
  static Polytope point(const QVec& p);

  /// Builds from points known to contain all vertices and candidate
  /// half-spaces known to contain every facet; redundant entries are dropped.
  static Polytope assemble(std::size_t ambient_dim, std::vector<QVec> points,
                           const std::vector<HalfSpace>& candidates);

  std::size_t ambient_dim() const { return ambient_; }
  /// -1 for the empty polytope.
  int intrinsic_dim() const { return dim_; }
  bool is_empty() const { return dim_ < 0; }
  bool is_full_dimensional() const { return dim_ == static_cast<int>(ambient_); }

  const std::vector<QVec>& vertices() const { return vertices_; }
  const std::vector<HalfSpace>& facets() const { return facets_; }
  const std::vector<HalfSpace>& equalities() const { return equalities_; }
  const std::vector<IndexSet>& facet_incidence() const { return incidence_; }

  /// All constraints as inequalities: facets plus both orientations of every
  /// implicit equation.
  std::vector<HalfSpace> halfspaces() const;

  bool contains(const QVec& x) const;
  bool contains_in_relative_interior(const QVec& x) const;

  /// The facet as a polytope of its own.
  Polytope facet(std::size_t i) const;

  /// Axis-aligned bounds of the vertices (empty polytope: empty vectors).
  QVec lower_bounds() const;
  QVec upper_bounds() const;

 private:
  friend Polytope scale(const Polytope& p, const Rational& factor);
  friend Polytope translate(const Polytope& p, const QVec& shift);

  std::size_t ambient_ = 0;
  int dim_ = -1;
  std::vector<QVec> vertices_;
  std::vector<HalfSpace> facets_;
  std::vector<HalfSpace> equalities_;
  std::vector<IndexSet> incidence_;
};

/// Exact H -> V conversion by brute-force intersection of d-subsets of
/// planes with a feasibility filter. Throws InvalidInput("unbounded region")
/// for unbounded input; infeasible input yields the empty polytope.
Polytope vertex_enumeration(const std::vector<HalfSpace>& halfspaces, std::size_t ambient_dim);

/// V -> H conversion (convex hull of a finite point set).
Polytope convex_hull(const std::vector<QVec>& points, std::size_t ambient_dim);

/// P ∩ {h >= 0}, computed incrementally from the vertex/facet structure.
Polytope clip(const Polytope& p, const HalfSpace& h);
Polytope intersect(const Polytope& a, const Polytope& b);

/// rP for r >= 0 (0P is the origin).
Polytope scale(const Polytope& p, const Rational& factor);
Polytope translate(const Polytope& p, const QVec& shift);
Polytope cartesian_product(const Polytope& a, const Polytope& b);
Polytope minkowski_sum(const Polytope& a, const Polytope& b);

/// Interior-disjoint convex pieces of dimension dim(K) whose union is the
/// closure of K minus T. Pieces of lower dimension are dropped.
std::vector<Polytope> subtract(const Polytope& k, const Polytope& t);

/// True when the two polytopes overlap in a set of dimension >= dim.
bool overlaps_in_dimension(const Polytope& a, const Polytope& b, int dim);

enum class TriangulationOrder { kFirstVertexApex, kLastVertexApex };

/// Euclidean volume; 0 unless the polytope is full dimensional.
Rational volume(const Polytope& p, TriangulationOrder order = TriangulationOrder::kFirstVertexApex);

/// Volume normalized by the integer lattice of the affine hull's direction
/// space (a point has relative volume 1).
Rational relative_volume(const Polytope& p);

/// h(P, v) = max <v, x> over P.
Rational support_value(const Polytope& p, const QVec& direction);

/// Smallest positive rational r with rP integral (1 for the origin).
Rational rational_denominator(const Polytope& p);

/// Integer points of nP (or of its relative interior), without listing them.
std::uint64_t count_lattice_points(const Polytope& p, const Integer& dilation = 1,
                                   bool relative_interior = false);

/// Calls `visit` for every integer point of nP.
void for_each_lattice_point(const Polytope& p, const Integer& dilation, bool relative_interior,
                            const std::function<void(const std::vector<long>&)>& visit);

/// Integer points of P in lexicographic order.
std::vector<ZVec> lattice_points(const Polytope& p);

}  // namespace hkd
