#pragma once

#include <cstddef>
#include <vector>

#include "hkd/piecewise.hpp"
#include "hkd/toric_region.hpp"

namespace hkd {

/// Largest cone dimension with an exact slicing path.
inline constexpr std::size_t kMaxExactDimension = 4;

/// Volume of the height-lambda slice (the density f).
Rational f_exact(const ToricPair& pair, const Rational& lambda);

/// (outer - inner) / 2 of the height-lambda slice boundary (the density g).
Rational g_exact(const ToricPair& pair, const Rational& lambda);

enum class DensityKind { kF, kG };

/// Exact piecewise form of f or g, interpolated between candidate
/// breakpoints, verified, and merged. Throws ComputationError("missing
/// breakpoint ...") when verification fails after one subdivision.
PiecewisePolynomial piecewise_fit(const ToricPair& pair, DensityKind which, unsigned threads = 0);

/// Exact integral over [0, oo).
Rational integrate(const PiecewisePolynomial& p);

/// Hilbert polynomial densities F = vol(P) l^(d-1), G = e1 l^(d-2).
struct HilbertDensity {
  std::size_t d = 0;
  Rational e0;        // (d-1)! vol(P)
  Rational e1_tilde;  // half the lattice surface measure of P
  PiecewisePolynomial F;
  PiecewisePolynomial G;
};

HilbertDensity hilbert_density(const ToricPair& pair);

struct DensityReport {
  std::size_t d = 0;
  PiecewisePolynomial f;
  PiecewisePolynomial g;
  Rational e_hk;
  Rational beta;
  Rational lambda_max;
  std::vector<Rational> breakpoints;        // union of the merged f and g breakpoints
  std::vector<Rational> g_discontinuities;  // where g jumps
  std::vector<int> f_degrees;               // per merged f piece
  std::vector<int> g_degrees;               // per merged g piece
};

DensityReport analyze(const ToricPair& pair, unsigned threads = 0);

/// g of the Segre product from the factors' densities.
PiecewisePolynomial segre_g(const DensityReport& a, const HilbertDensity& ha, const DensityReport& b,
                            const HilbertDensity& hb);

/// G of the Segre product, G_A F_B + G_B F_A.
PiecewisePolynomial segre_G(const HilbertDensity& ha, const HilbertDensity& hb);

/// Pair of P_A x P_B (cone dimension dA + dB - 1).
ToricPair product_pair(const ToricPair& a, const ToricPair& b);

}  // namespace hkd
