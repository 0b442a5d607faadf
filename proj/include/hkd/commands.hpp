#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hkd/density.hpp"
#include "hkd/pair_spec.hpp"

namespace hkd {

inline constexpr const char* kSchema = "hk-beta/1";

Json piecewise_json(const PiecewisePolynomial& p);

/// {"schema", "command": "density", "pair", "d", "e_hk", "beta", ...}.
Json cmd_density(const ToricPair& pair, unsigned threads, bool with_float);

/// CSV "q,m,count"; one row for `m`, or every degree up to the last nonzero
/// one when `m` is empty.
std::string cmd_count(const ToricPair& pair, std::uint64_t q, std::optional<std::uint64_t> m, unsigned threads);

struct ConvergeOptions {
  std::vector<std::uint64_t> qs;
  std::size_t grid = 40;
  Rational margin = make_rational(1, 64);
  unsigned threads = 0;
};

struct ConvergePoint {
  std::uint64_t q = 0;
  Rational lambda, f, g, f_n, g_n;
};

struct ConvergeResult {
  Rational lambda_max;
  std::vector<Rational> dropped;  // grid points within the margin of a breakpoint
  std::vector<ConvergePoint> points;
  std::vector<Rational> max_err_f;  // per q
  std::vector<Rational> max_err_g;  // per q
  double order_g = 0;               // least-squares slope of -log max_err_g against log q
};

/// Grid k lambda_max / (grid + 1) for k = 1..grid.
ConvergeResult converge(const ToricPair& pair, const DensityReport& report, const ConvergeOptions& opts);

/// CSV "kind,q,lambda,f,g,f_n,g_n,err_f,err_g" with point, dropped, summary
/// and order rows.
std::string cmd_converge(const ToricPair& pair, const ConvergeOptions& opts);

struct EhrhartOptions {
  std::string mode = "qp";  // qp | reciprocity | minkowski | slice-scan | chambers
  std::optional<Polytope> second;
  std::vector<Rational> lambdas;
  long n_max = 20;
  Rational r1 = 1, r2 = 1;
  std::size_t samples = 200;
  std::uint64_t seed = 1;
  unsigned threads = 0;
};

Json cmd_ehrhart(const Polytope& p, const EhrhartOptions& opts);

/// {"schema", "command": "segre", "direct_g", "formula_g", "equal", ...};
/// "direct_g", "direct" and "equal" are null when the product is too large.
Json cmd_segre(const ToricPair& a, const ToricPair& b, unsigned threads);

}  // namespace hkd
