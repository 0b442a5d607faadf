#include "hkd/ehrhart.hpp"

#include <map>
#include <random>
#include <set>
#include <string>

#include "hkd/errors.hpp"
#include "hkd/parallel.hpp"
#include "hkd/piecewise.hpp"

namespace hkd {

namespace {

std::size_t residue(long n, std::uint64_t period) {
  const long p = static_cast<long>(period);
  return static_cast<std::size_t>(((n % p) + p) % p);
}

Rational count_at(const Polytope& p, long n, bool interior = false) {
  return Rational(static_cast<unsigned long>(count_lattice_points(p, Integer(n), interior)));
}

/// w with <w, v> = gcd of the entries of v.
ZVec bezout_vector(const ZVec& v) {
  ZVec w(v.size(), 0);
  Integer g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    Integer ng, a, b;
    mpz_gcdext(ng.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t(), g.get_mpz_t(), v[i].get_mpz_t());
    for (std::size_t j = 0; j < i; ++j) w[j] *= a;
    w[i] = b;
    g = ng;
  }
  return w;
}

}  // namespace

const QVec& QuasiPolynomial::coefficients_at(long n) const { return coefficients[residue(n, period)]; }

Rational QuasiPolynomial::operator()(long n) const {
  if (degree < 0) return 0;
  Rational value = 0;
  Rational power = 1;
  for (const auto& c : coefficients_at(n)) {
    value += c * power;
    power *= n;
  }
  return value;
}

QuasiPolynomial ehrhart_qp(const Polytope& p) {
  if (p.ambient_dim() > 4) {
    throw UnsupportedDimension("Ehrhart fitting supports ambient dimension <= 4, got " +
                               std::to_string(p.ambient_dim()));
  }
  QuasiPolynomial qp;
  if (p.is_empty()) {
    qp.coefficients = {QVec{}};
    return qp;
  }
  qp.degree = p.intrinsic_dim();
  qp.tau = rational_denominator(p);
  qp.period = qp.tau.get_num().get_ui();
  const std::size_t m = static_cast<std::size_t>(qp.degree);
  const long period = static_cast<long>(qp.period);
  qp.coefficients.resize(qp.period);
  for (long r = 0; r < period; ++r) {
    QVec xs, ys;
    for (std::size_t k = 1; k <= m + 3; ++k) {
      const long n = r + static_cast<long>(k) * period;
      xs.push_back(n);
      ys.push_back(count_at(p, n));
    }
    Polynomial fit = Polynomial::interpolate(QVec(xs.begin(), xs.begin() + static_cast<long>(m + 1)),
                                             QVec(ys.begin(), ys.begin() + static_cast<long>(m + 1)));
    for (std::size_t i = m + 1; i < xs.size(); ++i) {
      if (fit(xs[i]) != ys[i]) throw ComputationError("period too small");
    }
    QVec c(m + 1);
    for (std::size_t i = 0; i <= m; ++i) c[i] = fit.coefficient(i);
    qp.coefficients[static_cast<std::size_t>(r)] = std::move(c);
  }
  return qp;
}

std::vector<long> qp_mismatches(const Polytope& p, const QuasiPolynomial& qp, long n_max) {
  std::vector<long> bad;
  for (long n = 0; n <= n_max; ++n) {
    if (qp(n) != count_at(p, n)) bad.push_back(n);
  }
  return bad;
}

ReciprocityReport reciprocity_check(const Polytope& p, const QuasiPolynomial& qp, long n_max) {
  ReciprocityReport report;
  report.dim = qp.degree;
  report.n_max = n_max;
  if (p.is_empty()) return report;
  const int sign = qp.degree % 2 == 0 ? 1 : -1;
  for (long n = 1; n <= n_max; ++n) {
    const std::uint64_t interior = count_lattice_points(p, Integer(n), true);
    const Rational predicted = sign * qp(-n);
    ++report.checked;
    if (predicted != Rational(static_cast<unsigned long>(interior))) report.violations.push_back({n, interior, predicted});
  }
  return report;
}

std::uint64_t minkowski_count(const Polytope& p1, const Polytope& p2, const Rational& r1, const Rational& r2) {
  return count_lattice_points(minkowski_sum(scale(p1, r1), scale(p2, r2)));
}

ChamberSet chamber_lines(const Polytope& p1, const Polytope& p2) {
  Polytope sum = minkowski_sum(p1, p2);
  if (!sum.is_full_dimensional()) throw InvalidInput("P1 + P2 must be full dimensional");
  ChamberSet set;
  set.tau1 = rational_denominator(p1);
  set.tau2 = rational_denominator(p2);
  std::set<std::tuple<Rational, Rational, Rational>> seen;
  for (std::size_t j = 0; j < sum.facets().size(); ++j) {
    ZVec v = sum.facets()[j].normal;
    for (auto& x : v) x = -x;
    const Rational h1 = support_value(p1, to_qvec(v));
    const Rational h2 = support_value(p2, to_qvec(v));
    if (h1 == 0 && h2 == 0) continue;
    // Values of h1 r1 + h2 r2 over the rectangle; an end is attained only
    // when no coordinate has to reach its open end at 0.
    Rational lo = 0, hi = 0;
    bool lo_closed = true, hi_closed = true;
    for (auto [h, tau] : {std::pair{h1, set.tau1}, std::pair{h2, set.tau2}}) {
      if (h > 0) {
        hi += h * tau;
        lo_closed = false;
      } else if (h < 0) {
        lo += h * tau;
        hi_closed = false;
      }
    }
    Integer k_lo = ceil(lo);
    if (!lo_closed && Rational(k_lo) == lo) ++k_lo;
    Integer k_hi = floor(hi);
    if (!hi_closed && Rational(k_hi) == hi) --k_hi;
    const ZVec w = bezout_vector(v);
    const Rational scale_by = h1 != 0 ? h1 : h2;
    for (Integer k = k_lo; k <= k_hi; ++k) {
      auto key = std::make_tuple(Rational(h1 / scale_by), Rational(h2 / scale_by), Rational(Rational(k) / scale_by));
      if (!seen.insert(key).second) continue;
      ChamberLine line;
      line.j = j;
      line.normal = v;
      line.z = w;
      for (auto& x : line.z) x *= k;
      line.h1 = h1;
      line.h2 = h2;
      line.k = k;
      set.lines.push_back(std::move(line));
    }
  }
  return set;
}

ConstancyReport cell_constancy_check(const Polytope& p1, const Polytope& p2, std::size_t samples,
                                     std::uint64_t seed, unsigned threads) {
  ChamberSet set = chamber_lines(p1, p2);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> pick(1, 97);
  struct Point {
    Rational r1, r2;
    std::vector<int> signs;
  };
  std::vector<Point> points;
  ConstancyReport report;
  report.samples = samples;
  for (std::size_t s = 0; s < samples; ++s) {
    Point pt{set.tau1 * make_rational(pick(rng), 97), set.tau2 * make_rational(pick(rng), 97), {}};
    bool on_line = false;
    for (const auto& line : set.lines) {
      const int side = sgn(line.value(pt.r1, pt.r2));
      if (side == 0) on_line = true;
      pt.signs.push_back(side);
    }
    if (on_line) {
      ++report.on_line;
      continue;
    }
    points.push_back(std::move(pt));
  }
  constexpr std::size_t kShifts = 9;
  std::vector<std::uint64_t> counts(points.size() * kShifts);
  parallel_for(counts.size(), threads, [&](std::size_t i) {
    const Point& pt = points[i / kShifts];
    const long u1 = static_cast<long>(i % kShifts) / 3;
    const long u2 = static_cast<long>(i % kShifts) % 3;
    counts[i] = minkowski_count(p1, p2, pt.r1 + u1 * set.tau1, pt.r2 + u2 * set.tau2);
  });
  std::map<std::pair<std::vector<int>, std::size_t>, std::uint64_t> first;
  std::set<std::vector<int>> components;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const Point& pt = points[i / kShifts];
    components.insert(pt.signs);
    auto [it, inserted] = first.emplace(std::make_pair(pt.signs, i % kShifts), counts[i]);
    if (!inserted && it->second != counts[i]) ++report.violations;
  }
  report.evaluations = counts.size();
  report.components = components.size();
  return report;
}

Polytope horizontal_slice(const Polytope& p, const Rational& lambda) {
  const std::size_t d = p.ambient_dim();
  QVec up(d, 0);
  up.back() = 1;
  QVec down(d, 0);
  down.back() = -1;
  Polytope cut = clip(clip(p, HalfSpace::from_rational(up, -lambda)), HalfSpace::from_rational(down, lambda));
  std::vector<QVec> pts;
  for (const auto& v : cut.vertices()) pts.emplace_back(v.begin(), v.end() - 1);
  return convex_hull(pts, d - 1);
}

SliceScanReport slice_coefficient_scan(const Polytope& p, const std::vector<Rational>& lambdas, long n_max,
                                       unsigned threads) {
  SliceScanReport report;
  report.d = p.ambient_dim();
  const std::size_t d = report.d;
  std::vector<std::vector<SliceScanEntry>> per_lambda(lambdas.size());
  std::vector<char> constant(lambdas.size(), 1), matches(lambdas.size(), 1);
  for (const auto& l : lambdas) {
    if (l.get_den() > static_cast<unsigned long>(n_max)) throw InvalidInput("insufficient sample points");
  }
  parallel_for(lambdas.size(), threads, [&](std::size_t i) {
    const Rational& lambda = lambdas[i];
    Polytope slice = horizontal_slice(p, lambda);
    QuasiPolynomial qp = ehrhart_qp(slice);
    const long step = static_cast<long>(lambda.get_den().get_si());
    const Rational rvol = slice.intrinsic_dim() == static_cast<int>(d) - 1 ? relative_volume(slice) : Rational(0);
    for (long n = step; n <= n_max; n += step) {
      SliceScanEntry e;
      e.lambda = lambda;
      e.n = n;
      e.coefficients.assign(d, 0);
      if (qp.degree >= 0) {
        const QVec& c = qp.coefficients_at(n);
        for (std::size_t k = 0; k < c.size(); ++k) e.coefficients[k] = c[k];
      }
      e.count = count_lattice_points(slice, Integer(n));
      if (qp(n) != Rational(static_cast<unsigned long>(e.count))) {
        throw ComputationError("slice quasi-polynomial disagrees with counting at n=" + std::to_string(n));
      }
      if (!per_lambda[i].empty() && per_lambda[i].front().coefficients[d - 1] != e.coefficients[d - 1]) {
        constant[i] = 0;
      }
      if (e.coefficients[d - 1] != rvol) matches[i] = 0;
      per_lambda[i].push_back(std::move(e));
    }
  });
  report.max_abs.assign(d, 0);
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    report.top_constant = report.top_constant && constant[i];
    report.top_equals_volume = report.top_equals_volume && matches[i];
    for (auto& e : per_lambda[i]) {
      for (std::size_t k = 0; k < d; ++k) report.max_abs[k] = std::max(report.max_abs[k], Rational(abs(e.coefficients[k])));
      report.entries.push_back(std::move(e));
    }
  }
  return report;
}

}  // namespace hkd
