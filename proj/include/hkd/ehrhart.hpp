#pragma once

#include <cstdint>
#include <vector>

#include "hkd/polytope.hpp"

namespace hkd {

/// n -> #(nP ∩ Z^d) as one polynomial per residue class of n mod period.
struct QuasiPolynomial {
  int degree = -1;
  Rational tau = 1;                 // smallest rational r with rP integral
  std::uint64_t period = 1;         // numerator of tau
  std::vector<QVec> coefficients;   // [n mod period] -> C_0..C_degree

  const QVec& coefficients_at(long n) const;
  Rational operator()(long n) const;
};

/// Fits i(P, n) by interpolation on each residue class and verifies two extra
/// dilates per class. Throws ComputationError("period too small") on a
/// verification failure and UnsupportedDimension above ambient dimension 4.
QuasiPolynomial ehrhart_qp(const Polytope& p);

/// n in [0, n_max] where the fitted quasi-polynomial disagrees with counting.
std::vector<long> qp_mismatches(const Polytope& p, const QuasiPolynomial& qp, long n_max);

struct ReciprocityViolation {
  long n = 0;
  std::uint64_t interior = 0;
  Rational predicted;
};

struct ReciprocityReport {
  int dim = -1;
  long n_max = 0;
  std::size_t checked = 0;
  std::vector<ReciprocityViolation> violations;
};

/// Compares #(relint(nP) ∩ Z^d) with (-1)^dim i(P, -n) for 1 <= n <= n_max.
ReciprocityReport reciprocity_check(const Polytope& p, const QuasiPolynomial& qp, long n_max);

/// #((r1 P1 + r2 P2) ∩ Z^d), with 0P the origin.
std::uint64_t minkowski_count(const Polytope& p1, const Polytope& p2, const Rational& r1, const Rational& r2);

/// The line h1 r1 + h2 r2 = <z, v> in the (r1, r2) plane, where v is the
/// outer normal of facet j of P1 + P2 and h_i = h(P_i, v).
struct ChamberLine {
  std::size_t j = 0;
  ZVec normal;
  ZVec z;
  Rational h1;
  Rational h2;
  Integer k;  // <z, v>

  Rational value(const Rational& r1, const Rational& r2) const { return h1 * r1 + h2 * r2 - Rational(k); }
};

/// Lines meeting the period rectangle (0, tau1] x (0, tau2].
struct ChamberSet {
  Rational tau1;
  Rational tau2;
  std::vector<ChamberLine> lines;
};

/// Requires dim(P1 + P2) = ambient dimension; throws InvalidInput otherwise.
ChamberSet chamber_lines(const Polytope& p1, const Polytope& p2);

struct ConstancyReport {
  std::size_t samples = 0;
  std::size_t on_line = 0;     // samples dropped for lying on a line
  std::size_t components = 0;  // distinct sign vectors seen
  std::size_t evaluations = 0;
  std::size_t violations = 0;
};

/// Samples points of the period rectangle off the chamber lines, groups them
/// by sign vector, and checks that minkowski_count is constant on each group
/// shifted by u ⊙ tau for u in {0,1,2}^2.
ConstancyReport cell_constancy_check(const Polytope& p1, const Polytope& p2, std::size_t samples,
                                     std::uint64_t seed = 1, unsigned threads = 0);

/// P ∩ {x_d = lambda}, as a polytope in the first d-1 coordinates.
Polytope horizontal_slice(const Polytope& p, const Rational& lambda);

struct SliceScanEntry {
  Rational lambda;
  long n = 0;
  QVec coefficients;  // C_0..C_{d-1} of the slice quasi-polynomial at n
  std::uint64_t count = 0;
};

struct SliceScanReport {
  std::size_t d = 0;
  std::vector<SliceScanEntry> entries;
  QVec max_abs;  // per degree, over all entries
  bool top_constant = true;            // C_{d-1} independent of n for each lambda
  bool top_equals_volume = true;       // C_{d-1} = rVol of a full-dimensional slice
};

/// C_i(P_lambda, n) for every lambda and every 1 <= n <= n_max with
/// n lambda integral. Throws InvalidInput("insufficient sample points") when
/// some lambda has no such n.
SliceScanReport slice_coefficient_scan(const Polytope& p, const std::vector<Rational>& lambdas, long n_max,
                                       unsigned threads = 0);

}  // namespace hkd
