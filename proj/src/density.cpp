#include "hkd/density.hpp"

#include <set>
#include <string>

#include "hkd/errors.hpp"
#include "hkd/parallel.hpp"

namespace hkd {

namespace {

void require_exact_dimension(const ToricPair& pair) {
  if (pair.d > kMaxExactDimension) {
    throw UnsupportedDimension("exact slicing supports cone dimension <= " + std::to_string(kMaxExactDimension) +
                               ", got " + std::to_string(pair.d));
  }
}

struct Sample {
  Rational f;
  Rational g;
};

Sample sample(const ToricPair& pair, const Rational& lambda) {
  SliceRegion r = slice(pair, lambda);
  Sample s{0, 0};
  for (const auto& c : r.cells) s.f += volume(c);
  auto m = boundary_measures(r);
  s.g = (m.outer - m.inner) / 2;
  return s;
}

/// count interior nodes of (a, b) with denominators carrying the prime 97.
QVec interior_nodes(const Rational& a, const Rational& b, std::size_t count) {
  QVec xs;
  for (std::size_t k = 1; k <= count; ++k) {
    long n = static_cast<long>((97 * k + (count + 1) / 2) / (count + 1));
    xs.push_back(a + (b - a) * make_rational(n, 97));
  }
  return xs;
}

struct IntervalFit {
  std::vector<Rational> starts;  // one per piece
  std::vector<Polynomial> f;
  std::vector<Polynomial> g;
};

bool fit_once(const ToricPair& pair, const Rational& a, const Rational& b, Polynomial& f, Polynomial& g) {
  const std::size_t df = pair.d - 1;
  const std::size_t dg = pair.d - 2;
  QVec xs = interior_nodes(a, b, df + 3);
  QVec fs, gs;
  for (const auto& x : xs) {
    Sample s = sample(pair, x);
    fs.push_back(s.f);
    gs.push_back(s.g);
  }
  f = Polynomial::interpolate(QVec(xs.begin(), xs.begin() + static_cast<long>(df + 1)),
                              QVec(fs.begin(), fs.begin() + static_cast<long>(df + 1)));
  g = Polynomial::interpolate(QVec(xs.begin(), xs.begin() + static_cast<long>(dg + 1)),
                              QVec(gs.begin(), gs.begin() + static_cast<long>(dg + 1)));
  for (std::size_t i = df + 1; i < xs.size(); ++i) {
    if (f(xs[i]) != fs[i]) return false;
  }
  for (std::size_t i = dg + 1; i < xs.size(); ++i) {
    if (g(xs[i]) != gs[i]) return false;
  }
  return true;
}

IntervalFit fit_interval(const ToricPair& pair, const Rational& a, const Rational& b) {
  IntervalFit out;
  Polynomial f, g;
  if (fit_once(pair, a, b, f, g)) {
    out.starts = {a};
    out.f = {f};
    out.g = {g};
    return out;
  }
  const Rational mid = (a + b) / 2;
  Polynomial f1, g1, f2, g2;
  if (!fit_once(pair, a, mid, f1, g1) || !fit_once(pair, mid, b, f2, g2)) {
    throw ComputationError("missing breakpoint in [" + to_string(a) + ", " + to_string(b) + "]");
  }
  out.starts = {a, mid};
  out.f = {f1, f2};
  out.g = {g1, g2};
  return out;
}

std::pair<PiecewisePolynomial, PiecewisePolynomial> fit_both(const ToricPair& pair, unsigned threads) {
  require_exact_dimension(pair);
  auto cands = breakpoint_superset(pair);
  std::vector<IntervalFit> fits(cands.size() - 1);
  parallel_for(fits.size(), threads, [&](std::size_t i) { fits[i] = fit_interval(pair, cands[i], cands[i + 1]); });
  std::vector<Rational> breaks;
  std::vector<Polynomial> fp, gp;
  for (auto& fit : fits) {
    breaks.insert(breaks.end(), fit.starts.begin(), fit.starts.end());
    fp.insert(fp.end(), fit.f.begin(), fit.f.end());
    gp.insert(gp.end(), fit.g.begin(), fit.g.end());
  }
  breaks.push_back(cands.back());
  PiecewisePolynomial f(breaks, fp, {});
  PiecewisePolynomial g(breaks, gp, {});
  return {f.merged(), g.merged()};
}

}  // namespace

Rational f_exact(const ToricPair& pair, const Rational& lambda) {
  require_exact_dimension(pair);
  Rational total = 0;
  for (const auto& c : slice_cells(pair, lambda)) total += volume(c);
  return total;
}

Rational g_exact(const ToricPair& pair, const Rational& lambda) {
  require_exact_dimension(pair);
  auto m = boundary_measures(slice(pair, lambda));
  return (m.outer - m.inner) / 2;
}

PiecewisePolynomial piecewise_fit(const ToricPair& pair, DensityKind which, unsigned threads) {
  auto [f, g] = fit_both(pair, threads);
  return which == DensityKind::kF ? f : g;
}

Rational integrate(const PiecewisePolynomial& p) { return p.integrate(); }

HilbertDensity hilbert_density(const ToricPair& pair) {
  HilbertDensity h;
  h.d = pair.d;
  const Rational vol = volume(pair.polytope);
  Rational fact = 1;
  for (std::size_t i = 2; i < pair.d; ++i) fact *= static_cast<unsigned long>(i);
  h.e0 = fact * vol;
  Rational surface = 0;
  for (std::size_t i = 0; i < pair.polytope.facets().size(); ++i) {
    surface += relative_volume(pair.polytope.facet(i));
  }
  h.e1_tilde = surface / 2;
  h.F = PiecewisePolynomial::single(Polynomial::monomial(vol, static_cast<unsigned>(pair.d - 1)));
  h.G = PiecewisePolynomial::single(Polynomial::monomial(h.e1_tilde, static_cast<unsigned>(pair.d - 2)));
  return h;
}

DensityReport analyze(const ToricPair& pair, unsigned threads) {
  DensityReport r;
  r.d = pair.d;
  auto fg = fit_both(pair, threads);
  r.f = std::move(fg.first);
  r.g = std::move(fg.second);
  r.e_hk = r.f.integrate();
  r.beta = r.g.integrate();
  r.lambda_max = r.f.breakpoints().back();
  std::set<Rational> all(r.f.breakpoints().begin(), r.f.breakpoints().end());
  all.insert(r.g.breakpoints().begin(), r.g.breakpoints().end());
  r.breakpoints.assign(all.begin(), all.end());
  for (const auto& x : r.g.discontinuities()) {
    if (x > 0) r.g_discontinuities.push_back(x);  // the domain starts at 0
  }
  for (const auto& p : r.f.pieces()) r.f_degrees.push_back(p.degree());
  for (const auto& p : r.g.pieces()) r.g_degrees.push_back(p.degree());
  return r;
}

PiecewisePolynomial segre_G(const HilbertDensity& ha, const HilbertDensity& hb) {
  return (ha.G * hb.F + hb.G * ha.F).merged();
}

PiecewisePolynomial segre_g(const DensityReport& a, const HilbertDensity& ha, const DensityReport& b,
                            const HilbertDensity& hb) {
  PiecewisePolynomial result =
      segre_G(ha, hb) - (ha.G - a.g) * (hb.F - b.f) - (hb.G - b.g) * (ha.F - a.f);
  return result.merged();
}

ToricPair product_pair(const ToricPair& a, const ToricPair& b) {
  return build_pair(cartesian_product(a.polytope, b.polytope));
}

}  // namespace hkd
