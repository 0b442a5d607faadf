#pragma once

#include <cstddef>
#include <vector>

#include "hkd/polytope.hpp"

namespace hkd {

/// C_D = {(x, z) : z >= 0, <x, v_i> + a_i z >= 0} in R^d, last coordinate z.
struct Cone {
  std::vector<HalfSpace> halfspaces;

  bool contains(const QVec& x, const Rational& z) const;
};

/// A projective toric pair given by its lattice polytope P in R^(d-1).
struct ToricPair {
  std::size_t d = 0;
  Polytope polytope;
  std::vector<ZVec> lattice_points;
  Cone cone;
};

/// Throws InvalidInput for non-lattice or lower-dimensional input.
ToricPair build_pair(const Polytope& p);

/// Height-lambda slice closure(lambda P minus the translates u + (lambda-1) P).
struct SliceRegion {
  Rational lambda;
  std::vector<Polytope> cells;           // interior-disjoint, full dimensional
  std::vector<Polytope> outer_boundary;  // pieces of the boundary of lambda P
  std::vector<Polytope> inner_boundary;  // pieces on translate facets
};

SliceRegion slice(const ToricPair& pair, const Rational& lambda);

/// Only the cells (no boundary census).
std::vector<Polytope> slice_cells(const ToricPair& pair, const Rational& lambda);

struct BoundaryMeasures {
  Rational outer;
  Rational inner;
};

BoundaryMeasures boundary_measures(const SliceRegion& region);

/// Finite set of heights in [0, d] containing every height at which the
/// slice combinatorics can change. Sorted, without duplicates, contains 0,
/// 1 and d.
std::vector<Rational> breakpoint_superset(const ToricPair& pair);

/// Smallest candidate breakpoint above which every slice is empty.
Rational support_height(const ToricPair& pair);

/// Membership in the Eto region with closed cones and strict exclusion:
/// (x, z) lies in C_D and, for every lattice point u of P, outside the
/// closed translate (u, 1) + C_D.
bool in_eto_region(const ToricPair& pair, const QVec& x, const Rational& z);

/// u + (lambda - 1) P, the height-lambda slice of (u, 1) + C_D.
Polytope translate_slice(const ToricPair& pair, const ZVec& u, const Rational& lambda);

}  // namespace hkd
