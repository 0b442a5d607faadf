#include "hkd/commands.hpp"

#include <cmath>
#include <sstream>

#include "hkd/ehrhart.hpp"
#include "hkd/errors.hpp"
#include "hkd/lattice_count.hpp"

namespace hkd {

namespace {

Json rationals(const std::vector<Rational>& v) { return to_json(QVec(v.begin(), v.end())); }

Json header(const char* command) { return Json{{"schema", kSchema}, {"command", command}}; }

Rational abs_q(const Rational& r) { return r < 0 ? Rational(-r) : r; }

Json qp_json(const QuasiPolynomial& qp) {
  Json classes = Json::array();
  for (std::size_t r = 0; r < qp.coefficients.size(); ++r) {
    classes.push_back({{"residue", r}, {"coefficients", to_json(qp.coefficients[r])}});
  }
  return {{"degree", qp.degree}, {"tau", to_json(qp.tau)}, {"period", qp.period}, {"classes", classes}};
}

}  // namespace

Json piecewise_json(const PiecewisePolynomial& p) {
  Json pieces = Json::array();
  const auto& b = p.breakpoints();
  for (std::size_t i = 0; i < p.pieces().size(); ++i) {
    pieces.push_back({{"from", to_json(b[i])},
                      {"to", to_json(b[i + 1])},
                      {"coefficients", to_json(p.pieces()[i].coefficients())},
                      {"text", p.pieces()[i].to_string("l")}});
  }
  Json out{{"pieces", pieces}};
  out["tail"] = {{"from", b.empty() ? Json(to_json(Rational(0))) : Json(to_json(b.back()))},
                 {"coefficients", to_json(p.tail().coefficients())}};
  return out;
}

Json cmd_density(const ToricPair& pair, unsigned threads, bool with_float) {
  DensityReport r = analyze(pair, threads);
  Json out = header("density");
  out["pair"] = echo(pair.polytope);
  out["d"] = r.d;
  out["e_hk"] = to_json(r.e_hk);
  out["beta"] = to_json(r.beta);
  out["lambda_max"] = to_json(r.lambda_max);
  out["breakpoints"] = rationals(r.breakpoints);
  out["g_discontinuities"] = rationals(r.g_discontinuities);
  out["f"] = piecewise_json(r.f);
  out["g"] = piecewise_json(r.g);
  out["f_degrees"] = r.f_degrees;
  out["g_degrees"] = r.g_degrees;
  if (with_float) {
    out["approximate"] = {{"e_hk", r.e_hk.get_d()}, {"beta", r.beta.get_d()}};
  }
  return out;
}

std::string cmd_count(const ToricPair& pair, std::uint64_t q, std::optional<std::uint64_t> m, unsigned threads) {
  if (q == 0) throw InvalidInput("q must be positive");
  std::ostringstream out;
  out << "q,m,count\n";
  if (m) {
    out << q << ',' << *m << ',' << count_slice(pair, q, *m) << '\n';
    return out.str();
  }
  CountTable t = count_table(pair, q, threads);
  for (std::uint64_t k = 0; k < t.per_degree.size(); ++k) out << q << ',' << k << ',' << t.per_degree[k] << '\n';
  return out.str();
}

ConvergeResult converge(const ToricPair& pair, const DensityReport& report, const ConvergeOptions& opts) {
  ConvergeResult res;
  res.lambda_max = report.lambda_max;
  std::vector<Rational> grid;
  for (std::size_t k = 1; k <= opts.grid; ++k) {
    Rational x = report.lambda_max * make_rational(static_cast<long>(k), static_cast<long>(opts.grid + 1));
    bool near = false;
    for (const auto& b : report.breakpoints) near = near || abs_q(x - b) < opts.margin;
    (near ? res.dropped : grid).push_back(x);
  }
  for (std::uint64_t q : opts.qs) {
    if (q == 0) throw InvalidInput("q must be positive");
    CountTable t = count_table(pair, q, opts.threads);
    Rational ef = 0, eg = 0;
    for (const auto& x : grid) {
      ConvergePoint p{q, x, report.f(x), report.g(x), f_n(t, pair.d, x), g_n(t, pair.d, x, report.f)};
      ef = std::max(ef, abs_q(p.f_n - p.f));
      eg = std::max(eg, abs_q(p.g_n - p.g));
      res.points.push_back(std::move(p));
    }
    res.max_err_f.push_back(ef);
    res.max_err_g.push_back(eg);
  }
  // Least-squares slope of log(err) against log(q).
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t n = 0;
  for (std::size_t i = 0; i < opts.qs.size(); ++i) {
    if (res.max_err_g[i] <= 0) continue;
    const double x = std::log(static_cast<double>(opts.qs[i]));
    const double y = std::log(res.max_err_g[i].get_d());
    sx += x, sy += y, sxx += x * x, sxy += x * y;
    ++n;
  }
  if (n >= 2) res.order_g = -(n * sxy - sx * sy) / (n * sxx - sx * sx);
  return res;
}

std::string cmd_converge(const ToricPair& pair, const ConvergeOptions& opts) {
  std::ostringstream out;
  out << "kind,q,lambda,f,g,f_n,g_n,err_f,err_g\n";
  if (opts.grid == 0 || opts.qs.empty()) return out.str();
  DensityReport report = analyze(pair, opts.threads);
  ConvergeResult res = converge(pair, report, opts);
  for (const auto& x : res.dropped) out << "dropped,," << to_string(x) << ",,,,,,\n";
  for (const auto& p : res.points) {
    out << "point," << p.q << ',' << to_string(p.lambda) << ',' << to_string(p.f) << ',' << to_string(p.g) << ','
        << to_string(p.f_n) << ',' << to_string(p.g_n) << ',' << to_string(abs_q(p.f_n - p.f)) << ','
        << to_string(abs_q(p.g_n - p.g)) << '\n';
  }
  for (std::size_t i = 0; i < opts.qs.size(); ++i) {
    out << "summary," << opts.qs[i] << ",,,,,," << to_string(res.max_err_f[i]) << ',' << to_string(res.max_err_g[i])
        << '\n';
  }
  out << "order,,,,,,,," << res.order_g << '\n';
  return out.str();
}

Json cmd_ehrhart(const Polytope& p, const EhrhartOptions& opts) {
  Json out = header("ehrhart");
  out["mode"] = opts.mode;
  out["polytope"] = echo(p);
  if (opts.mode == "qp") {
    QuasiPolynomial qp = ehrhart_qp(p);
    out["quasi_polynomial"] = qp_json(qp);
    out["relative_volume"] = to_json(relative_volume(p));
    return out;
  }
  if (opts.mode == "reciprocity") {
    QuasiPolynomial qp = ehrhart_qp(p);
    ReciprocityReport r = reciprocity_check(p, qp, opts.n_max);
    Json bad = Json::array();
    for (const auto& v : r.violations) {
      bad.push_back({{"n", v.n}, {"interior", v.interior}, {"predicted", to_json(v.predicted)}});
    }
    out["quasi_polynomial"] = qp_json(qp);
    out["n_max"] = r.n_max;
    out["checked"] = r.checked;
    out["violations"] = bad;
    return out;
  }
  if (opts.mode == "slice-scan") {
    SliceScanReport r = slice_coefficient_scan(p, opts.lambdas, opts.n_max, opts.threads);
    Json entries = Json::array();
    for (const auto& e : r.entries) {
      entries.push_back(
          {{"lambda", to_json(e.lambda)}, {"n", e.n}, {"count", e.count}, {"coefficients", to_json(e.coefficients)}});
    }
    out["entries"] = entries;
    out["max_abs"] = to_json(r.max_abs);
    out["top_constant"] = r.top_constant;
    out["top_equals_volume"] = r.top_equals_volume;
    return out;
  }
  if (!opts.second) throw InvalidInput("mode '" + opts.mode + "' needs a second polytope");
  out["second"] = echo(*opts.second);
  if (opts.mode == "minkowski") {
    out["r1"] = to_json(opts.r1);
    out["r2"] = to_json(opts.r2);
    out["count"] = minkowski_count(p, *opts.second, opts.r1, opts.r2);
    return out;
  }
  if (opts.mode == "chambers") {
    ChamberSet s = chamber_lines(p, *opts.second);
    Json lines = Json::array();
    for (const auto& l : s.lines) {
      Json normal = Json::array(), z = Json::array();
      for (const auto& x : l.normal) normal.push_back(to_string(x));
      for (const auto& x : l.z) z.push_back(to_string(x));
      lines.push_back({{"j", l.j}, {"normal", normal}, {"z", z}, {"h1", to_json(l.h1)}, {"h2", to_json(l.h2)},
                       {"k", to_string(l.k)}});
    }
    ConstancyReport c = cell_constancy_check(p, *opts.second, opts.samples, opts.seed, opts.threads);
    out["tau"] = {to_json(s.tau1), to_json(s.tau2)};
    out["lines"] = lines;
    out["constancy"] = {{"samples", c.samples},         {"on_line", c.on_line},
                        {"components", c.components},   {"evaluations", c.evaluations},
                        {"violations", c.violations}};
    return out;
  }
  throw InvalidInput("unknown ehrhart mode '" + opts.mode + "'");
}

Json cmd_segre(const ToricPair& a, const ToricPair& b, unsigned threads) {
  Json out = header("segre");
  out["a"] = echo(a.polytope);
  out["b"] = echo(b.polytope);
  DensityReport ra = analyze(a, threads);
  DensityReport rb = analyze(b, threads);
  HilbertDensity ha = hilbert_density(a);
  HilbertDensity hb = hilbert_density(b);
  PiecewisePolynomial formula = segre_g(ra, ha, rb, hb);
  PiecewisePolynomial big_g = segre_G(ha, hb);
  const std::size_t d = a.d + b.d - 1;
  out["d"] = d;
  out["formula_g"] = piecewise_json(formula);
  out["formula_G"] = piecewise_json(big_g);
  out["e1_tilde_formula"] = to_json(big_g(1));  // G = e1 l^(d-2)
  if (d > kMaxExactDimension) {
    out["direct"] = nullptr;
    out["direct_g"] = nullptr;
    out["equal"] = nullptr;
    return out;
  }
  ToricPair prod = product_pair(a, b);
  DensityReport rp = analyze(prod, threads);
  out["direct"] = {{"e_hk", to_json(rp.e_hk)}, {"beta", to_json(rp.beta)},
                   {"e1_tilde", to_json(hilbert_density(prod).e1_tilde)}};
  out["direct_g"] = piecewise_json(rp.g);
  out["equal"] = formula.equals(rp.g);
  return out;
}

}  // namespace hkd
