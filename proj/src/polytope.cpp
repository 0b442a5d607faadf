#include "hkd/polytope.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

#include "hkd/errors.hpp"
#include "hkd/exact_linalg.hpp"

namespace hkd {

// ---------------------------------------------------------------- HalfSpace

HalfSpace HalfSpace::make(ZVec normal, Integer offset) {
  Integer g = offset;
  for (const auto& x : normal) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  g = abs(g);
  if (g > 1) {
    for (auto& x : normal) x /= g;
    offset /= g;
  }
  return HalfSpace{std::move(normal), std::move(offset)};
}

HalfSpace HalfSpace::from_rational(const QVec& normal, const Rational& offset) {
  Integer l = offset.get_den();
  for (const auto& x : normal) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  ZVec n;
  n.reserve(normal.size());
  for (const auto& x : normal) {
    Rational s = x * l;
    n.push_back(s.get_num());
  }
  Rational o = offset * l;
  return make(std::move(n), o.get_num());
}

HalfSpace HalfSpace::negated() const {
  ZVec n(normal.size());
  for (std::size_t i = 0; i < n.size(); ++i) n[i] = -normal[i];
  return HalfSpace{std::move(n), -offset};
}

HalfSpace HalfSpace::with_scaled_offset(const Rational& factor) const {
  return from_rational(to_qvec(normal), factor * offset);
}

HalfSpace HalfSpace::translated(const QVec& t) const {
  return from_rational(to_qvec(normal), Rational(offset) - dot(normal, t));
}

// ---------------------------------------------------------------- IndexSet

IndexSet::IndexSet(std::size_t n, bool filled) : size_(n), words_((n + 63) / 64, 0) {
  if (filled) {
    for (std::size_t i = 0; i < n; ++i) insert(i);
  }
}

std::size_t IndexSet::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
  return c;
}

std::vector<std::size_t> IndexSet::members() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size_; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

IndexSet IndexSet::operator&(const IndexSet& other) const {
  IndexSet out = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] &= other.words_[i];
  return out;
}

// ---------------------------------------------------------------- helpers

namespace {

template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& visit) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    visit(idx);
    if (k == 0) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

int affine_rank(const std::vector<QVec>& pts, const std::vector<std::size_t>& which) {
  if (which.empty()) return -1;
  std::vector<QVec> diffs;
  diffs.reserve(which.size());
  for (std::size_t i = 1; i < which.size(); ++i) {
    diffs.push_back(subtract(pts[which[i]], pts[which[0]]));
  }
  return static_cast<int>(rank(std::move(diffs)));
}


Rational factorial(std::size_t n) {
  Rational f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= static_cast<unsigned long>(i);
  return f;
}

/// Sum of |det| over a pulling triangulation of a full-dimensional polytope
/// in R^m given by points and facet incidences, divided by m!.
Rational triangulated_volume(const std::vector<QVec>& pts, const std::vector<IndexSet>& facets,
                             std::size_t m, bool last_apex) {
  if (m == 0) return 1;
  std::map<IndexSet, int> dim_cache;
  auto face_dim = [&](const IndexSet& s) {
    auto it = dim_cache.find(s);
    if (it != dim_cache.end()) return it->second;
    int d = affine_rank(pts, s.members());
    dim_cache.emplace(s, d);
    return d;
  };
  Rational total = 0;
  std::vector<std::size_t> prefix;
  auto rec = [&](auto&& self, const IndexSet& face, int k) -> void {
    auto mem = face.members();
    const std::size_t apex = last_apex ? mem.back() : mem.front();
    prefix.push_back(apex);
    if (k == 0) {
      std::vector<QVec> rows;
      rows.reserve(m);
      for (std::size_t i = 1; i < prefix.size(); ++i) {
        rows.push_back(subtract(pts[prefix[i]], pts[prefix[0]]));
      }
      total += abs(determinant(std::move(rows)));
    } else {
      std::set<IndexSet> subs;
      for (const auto& f : facets) {
        IndexSet s = face & f;
        if (s == face || s.contains(apex)) continue;
        if (s.count() < static_cast<std::size_t>(k)) continue;
        if (face_dim(s) != k - 1) continue;
        subs.insert(std::move(s));
      }
      for (const auto& s : subs) self(self, s, k - 1);
    }
    prefix.pop_back();
  };
  rec(rec, IndexSet(pts.size(), true), static_cast<int>(m));
  return total / factorial(m);
}

}  // namespace

// ---------------------------------------------------------------- Polytope

Polytope Polytope::empty(std::size_t ambient_dim) {
  Polytope p;
  p.ambient_ = ambient_dim;
  return p;
}

Polytope Polytope::point(const QVec& x) { return assemble(x.size(), {x}, {}); }

Polytope Polytope::assemble(std::size_t d, std::vector<QVec> pts,
                            const std::vector<HalfSpace>& candidates) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  Polytope p;
  p.ambient_ = d;
  if (pts.empty()) return p;

  std::vector<QVec> dirs;
  for (std::size_t i = 1; i < pts.size(); ++i) dirs.push_back(subtract(pts[i], pts[0]));
  auto normals = nullspace(dirs, d);
  p.dim_ = static_cast<int>(d - normals.size());
  for (const auto& n : normals) {
    ZVec zn = primitive_direction(n);
    Rational off = -dot(zn, pts[0]);
    p.equalities_.push_back(HalfSpace::from_rational(to_qvec(zn), off));
  }

  auto collect_facets = [&](const std::vector<QVec>& points) {
    std::vector<HalfSpace> facets;
    std::vector<IndexSet> incidence;
    for (const auto& h : candidates) {
      IndexSet tight(points.size());
      for (std::size_t j = 0; j < points.size(); ++j) {
        Rational s = h.slack(points[j]);
        if (s < 0) throw std::logic_error("assemble: point violates candidate half-space");
        if (s == 0) tight.insert(j);
      }
      const std::size_t c = tight.count();
      if (c == points.size() || c < static_cast<std::size_t>(p.dim_)) continue;
      if (std::find(incidence.begin(), incidence.end(), tight) != incidence.end()) continue;
      if (affine_rank(points, tight.members()) != p.dim_ - 1) continue;
      facets.push_back(h);
      incidence.push_back(std::move(tight));
    }
    return std::make_pair(std::move(facets), std::move(incidence));
  };

  auto [facets, incidence] = collect_facets(pts);

  // Keep only extreme points: the active constraints must have full rank.
  std::vector<QVec> extreme;
  for (std::size_t j = 0; j < pts.size(); ++j) {
    std::vector<QVec> rows;
    for (const auto& e : p.equalities_) rows.push_back(to_qvec(e.normal));
    for (std::size_t f = 0; f < facets.size(); ++f) {
      if (incidence[f].contains(j)) rows.push_back(to_qvec(facets[f].normal));
    }
    if (rank(std::move(rows)) == d) extreme.push_back(pts[j]);
  }
  if (extreme.size() != pts.size()) {
    auto recomputed = collect_facets(extreme);
    facets = std::move(recomputed.first);
    incidence = std::move(recomputed.second);
    pts = std::move(extreme);
  }
  p.vertices_ = std::move(pts);
  p.facets_ = std::move(facets);
  p.incidence_ = std::move(incidence);
  return p;
}

std::vector<HalfSpace> Polytope::halfspaces() const {
  std::vector<HalfSpace> out = facets_;
  for (const auto& e : equalities_) {
    out.push_back(e);
    out.push_back(e.negated());
  }
  return out;
}

bool Polytope::contains(const QVec& x) const {
  if (is_empty()) return false;
  for (const auto& e : equalities_) {
    if (e.slack(x) != 0) return false;
  }
  for (const auto& f : facets_) {
    if (f.slack(x) < 0) return false;
  }
  return true;
}

bool Polytope::contains_in_relative_interior(const QVec& x) const {
  if (is_empty()) return false;
  for (const auto& e : equalities_) {
    if (e.slack(x) != 0) return false;
  }
  for (const auto& f : facets_) {
    if (f.slack(x) <= 0) return false;
  }
  return true;
}

Polytope Polytope::facet(std::size_t i) const {
  std::vector<QVec> pts;
  for (auto j : incidence_.at(i).members()) pts.push_back(vertices_[j]);
  return assemble(ambient_, std::move(pts), facets_);
}

QVec Polytope::lower_bounds() const {
  if (vertices_.empty()) return {};
  QVec lo = vertices_.front();
  for (const auto& v : vertices_) {
    for (std::size_t i = 0; i < ambient_; ++i) lo[i] = std::min(lo[i], v[i]);
  }
  return lo;
}

QVec Polytope::upper_bounds() const {
  if (vertices_.empty()) return {};
  QVec hi = vertices_.front();
  for (const auto& v : vertices_) {
    for (std::size_t i = 0; i < ambient_; ++i) hi[i] = std::max(hi[i], v[i]);
  }
  return hi;
}

// ---------------------------------------------------------------- conversions

Polytope vertex_enumeration(const std::vector<HalfSpace>& hs, std::size_t d) {
  for (const auto& h : hs) {
    if (h.dim() != d) throw InvalidInput("half-space dimension mismatch");
  }
  if (d == 0) {
    for (const auto& h : hs) {
      if (h.offset < 0) return Polytope::empty(0);
    }
    return Polytope::point({});
  }
  std::vector<QVec> normals;
  for (const auto& h : hs) normals.push_back(to_qvec(h.normal));
  if (rank(normals) < d) throw InvalidInput("unbounded region");

  std::vector<QVec> verts;
  for_each_subset(hs.size(), d, [&](const std::vector<std::size_t>& idx) {
    std::vector<QVec> a;
    QVec b;
    for (auto i : idx) {
      a.push_back(normals[i]);
      b.emplace_back(-hs[i].offset);
    }
    auto x = solve_unique(a, b);
    if (!x) return;
    for (const auto& h : hs) {
      if (h.slack(*x) < 0) return;
    }
    verts.push_back(std::move(*x));
  });
  if (verts.empty()) return Polytope::empty(d);

  bool unbounded = false;
  for_each_subset(hs.size(), d - 1, [&](const std::vector<std::size_t>& idx) {
    if (unbounded) return;
    std::vector<QVec> a;
    for (auto i : idx) a.push_back(normals[i]);
    auto ns = nullspace(a, d);
    if (ns.size() != 1) return;
    bool all_nonneg = true;
    bool all_nonpos = true;
    for (const auto& n : normals) {
      Rational s = dot(n, ns[0]);
      if (s < 0) all_nonneg = false;
      if (s > 0) all_nonpos = false;
    }
    if (all_nonneg || all_nonpos) unbounded = true;
  });
  if (unbounded) throw InvalidInput("unbounded region");
  return Polytope::assemble(d, std::move(verts), hs);
}

Polytope convex_hull(const std::vector<QVec>& input, std::size_t d) {
  std::vector<QVec> pts = input;
  for (const auto& p : pts) {
    if (p.size() != d) throw InvalidInput("point dimension mismatch");
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.empty()) return Polytope::empty(d);

  std::vector<QVec> dirs;
  for (std::size_t i = 1; i < pts.size(); ++i) dirs.push_back(subtract(pts[i], pts[0]));
  auto pivots = row_reduce(dirs);
  const std::size_t m = pivots.size();
  if (m == 0) return Polytope::assemble(d, pts, {});

  // The affine hull is a graph over the pivot coordinates, so facets found
  // in that projection lift by padding with zeros.
  std::vector<QVec> proj;
  for (const auto& p : pts) {
    QVec y(m);
    for (std::size_t k = 0; k < m; ++k) y[k] = p[pivots[k]];
    proj.push_back(std::move(y));
  }
  std::vector<HalfSpace> candidates;
  std::vector<IndexSet> found;
  for_each_subset(proj.size(), m, [&](const std::vector<std::size_t>& idx) {
    for (const auto& f : found) {
      bool inside = true;
      for (auto i : idx) {
        if (!f.contains(i)) {
          inside = false;
          break;
        }
      }
      if (inside) return;
    }
    std::vector<QVec> diffs;
    for (std::size_t i = 1; i < idx.size(); ++i) diffs.push_back(subtract(proj[idx[i]], proj[idx[0]]));
    auto ns = nullspace(diffs, m);
    if (ns.size() != 1) return;
    QVec n = ns[0];
    Rational off = -dot(n, proj[idx[0]]);
    bool any_pos = false;
    bool any_neg = false;
    IndexSet tight(proj.size());
    for (std::size_t j = 0; j < proj.size(); ++j) {
      Rational s = dot(n, proj[j]) + off;
      if (s > 0) any_pos = true;
      if (s < 0) any_neg = true;
      if (s == 0) tight.insert(j);
    }
    if (any_pos && any_neg) return;
    if (any_neg) {
      for (auto& x : n) x = -x;
      off = -off;
    }
    QVec lifted(d);
    for (std::size_t k = 0; k < m; ++k) lifted[pivots[k]] = n[k];
    candidates.push_back(HalfSpace::from_rational(lifted, off));
    found.push_back(std::move(tight));
  });
  return Polytope::assemble(d, std::move(pts), candidates);
}

Polytope clip(const Polytope& p, const HalfSpace& h) {
  if (p.is_empty()) return p;
  const auto& verts = p.vertices();
  std::vector<Rational> s;
  s.reserve(verts.size());
  bool any_neg = false;
  bool any_nonneg = false;
  for (const auto& v : verts) {
    s.push_back(h.slack(v));
    if (s.back() < 0) {
      any_neg = true;
    } else {
      any_nonneg = true;
    }
  }
  if (!any_neg) return p;
  if (!any_nonneg) return Polytope::empty(p.ambient_dim());

  std::vector<QVec> pts;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (s[i] >= 0) pts.push_back(verts[i]);
  }
  const auto& inc = p.facet_incidence();
  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (s[i] <= 0) continue;
    for (std::size_t j = 0; j < verts.size(); ++j) {
      if (s[j] >= 0) continue;
      IndexSet common(verts.size(), true);
      for (const auto& f : inc) {
        if (f.contains(i) && f.contains(j)) common = common & f;
      }
      if (common.count() != 2) continue;
      Rational t = s[i] / (s[i] - s[j]);
      QVec x(verts[i].size());
      for (std::size_t k = 0; k < x.size(); ++k) x[k] = verts[i][k] + t * (verts[j][k] - verts[i][k]);
      pts.push_back(std::move(x));
    }
  }
  std::vector<HalfSpace> candidates = p.facets();
  candidates.push_back(h);
  return Polytope::assemble(p.ambient_dim(), std::move(pts), candidates);
}

Polytope intersect(const Polytope& a, const Polytope& b) {
  if (a.is_empty() || b.is_empty()) return Polytope::empty(a.ambient_dim());
  Polytope r = a;
  for (const auto& h : b.halfspaces()) {
    r = clip(r, h);
    if (r.is_empty()) break;
  }
  return r;
}

Polytope scale(const Polytope& p, const Rational& factor) {
  if (factor < 0) throw InvalidInput("negative dilation factor");
  if (p.is_empty()) return p;
  if (factor == 0) return Polytope::point(QVec(p.ambient_dim()));
  Polytope r = p;
  for (auto& v : r.vertices_) v = scaled(v, factor);
  for (auto& f : r.facets_) f = f.with_scaled_offset(factor);
  for (auto& e : r.equalities_) e = e.with_scaled_offset(factor);
  return r;
}

Polytope translate(const Polytope& p, const QVec& shift) {
  if (p.is_empty()) return p;
  Polytope r = p;
  for (auto& v : r.vertices_) v = add(v, shift);
  for (auto& f : r.facets_) f = f.translated(shift);
  for (auto& e : r.equalities_) e = e.translated(shift);
  return r;
}

Polytope cartesian_product(const Polytope& a, const Polytope& b) {
  const std::size_t da = a.ambient_dim();
  const std::size_t db = b.ambient_dim();
  if (a.is_empty() || b.is_empty()) return Polytope::empty(da + db);
  std::vector<QVec> pts;
  for (const auto& u : a.vertices()) {
    for (const auto& v : b.vertices()) {
      QVec w = u;
      w.insert(w.end(), v.begin(), v.end());
      pts.push_back(std::move(w));
    }
  }
  std::vector<HalfSpace> candidates;
  for (const auto& f : a.facets()) {
    ZVec n = f.normal;
    n.resize(da + db, 0);
    candidates.push_back(HalfSpace{std::move(n), f.offset});
  }
  for (const auto& f : b.facets()) {
    ZVec n(da, 0);
    n.insert(n.end(), f.normal.begin(), f.normal.end());
    candidates.push_back(HalfSpace{std::move(n), f.offset});
  }
  return Polytope::assemble(da + db, std::move(pts), candidates);
}

Polytope minkowski_sum(const Polytope& a, const Polytope& b) {
  if (a.is_empty() || b.is_empty()) return Polytope::empty(a.ambient_dim());
  std::vector<QVec> pts;
  for (const auto& u : a.vertices()) {
    for (const auto& v : b.vertices()) pts.push_back(add(u, v));
  }
  return convex_hull(pts, a.ambient_dim());
}

std::vector<Polytope> subtract(const Polytope& k, const Polytope& t) {
  if (k.is_empty()) return {};
  const int kd = k.intrinsic_dim();
  if (t.is_empty() || intersect(k, t).intrinsic_dim() < kd) return {k};
  std::vector<Polytope> pieces;
  Polytope rem = k;
  for (const auto& h : t.halfspaces()) {
    bool flat = true;
    for (const auto& v : rem.vertices()) {
      if (h.slack(v) != 0) {
        flat = false;
        break;
      }
    }
    if (flat) continue;
    Polytope out = clip(rem, h.negated());
    if (out.intrinsic_dim() == kd) pieces.push_back(std::move(out));
    rem = clip(rem, h);
    if (rem.intrinsic_dim() < kd) break;
  }
  return pieces;
}

bool overlaps_in_dimension(const Polytope& a, const Polytope& b, int dim) {
  return intersect(a, b).intrinsic_dim() >= dim;
}

// ---------------------------------------------------------------- measures

Rational volume(const Polytope& p, TriangulationOrder order) {
  if (!p.is_full_dimensional()) return 0;
  return triangulated_volume(p.vertices(), p.facet_incidence(), p.ambient_dim(),
                             order == TriangulationOrder::kLastVertexApex);
}

Rational relative_volume(const Polytope& p) {
  if (p.is_empty()) return 0;
  if (p.intrinsic_dim() == 0) return 1;
  auto frame = frame_through(p.vertices());
  std::vector<QVec> coords;
  coords.reserve(p.vertices().size());
  for (const auto& v : p.vertices()) coords.push_back(lattice_coordinates(frame, v));
  return triangulated_volume(coords, p.facet_incidence(), frame.dim(), false);
}

Rational support_value(const Polytope& p, const QVec& direction) {
  if (p.is_empty()) throw InvalidInput("support value of empty polytope");
  Rational best = dot(direction, p.vertices().front());
  for (const auto& v : p.vertices()) best = std::max(best, dot(direction, v));
  return best;
}

Rational rational_denominator(const Polytope& p) {
  if (p.is_empty()) throw InvalidInput("denominator of empty polytope");
  Integer num_lcm = 1;
  Integer den_gcd = 0;
  for (const auto& v : p.vertices()) {
    for (const auto& x : v) {
      if (x == 0) continue;
      mpz_lcm(num_lcm.get_mpz_t(), num_lcm.get_mpz_t(), x.get_den_mpz_t());
      Integer a = abs(x.get_num());
      mpz_gcd(den_gcd.get_mpz_t(), den_gcd.get_mpz_t(), a.get_mpz_t());
    }
  }
  if (den_gcd == 0) return 1;
  Rational r(num_lcm, den_gcd);
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------- lattice points

namespace {

long to_long_checked(const Integer& z) {
  if (!z.fits_slong_p() || abs(z) > (Integer(1) << 40)) {
    throw ComputationError("lattice enumeration: coefficient too large");
  }
  return z.get_si();
}

struct Row {
  std::vector<long> c;
  long b;  // c.x + b >= t
  long t;
};

template <class Visit>
void enumerate_rows(const std::vector<Row>& rows, const std::vector<long>& lo,
                    const std::vector<long>& hi, Visit&& visit) {
  const std::size_t d = lo.size();
  std::vector<long> x(d);
  std::vector<long> partial(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) partial[i] = rows[i].b;
  auto rec = [&](auto&& self, std::size_t j) -> void {
    if (j + 1 == d || d == 0) {
      if (d == 0) {
        for (std::size_t i = 0; i < rows.size(); ++i) {
          if (partial[i] < rows[i].t) return;
        }
        visit(x, 0, 0);
        return;
      }
      long a = lo[j];
      long z = hi[j];
      for (std::size_t i = 0; i < rows.size() && a <= z; ++i) {
        const long c = rows[i].c[j];
        const long need = rows[i].t - partial[i];  // c * x_j >= need
        if (c > 0) {
          long q = need >= 0 ? (need + c - 1) / c : -((-need) / c);
          a = std::max(a, q);
        } else if (c < 0) {
          long cc = -c;  // x_j <= -need / cc
          long q = -need >= 0 ? (-need) / cc : -((need + cc - 1) / cc);
          z = std::min(z, q);
        } else if (need > 0) {
          return;
        }
      }
      if (a <= z) visit(x, a, z);
      return;
    }
    for (long v = lo[j]; v <= hi[j]; ++v) {
      x[j] = v;
      for (std::size_t i = 0; i < rows.size(); ++i) partial[i] += rows[i].c[j] * v;
      self(self, j + 1);
      for (std::size_t i = 0; i < rows.size(); ++i) partial[i] -= rows[i].c[j] * v;
    }
  };
  rec(rec, 0);
}

struct Enumeration {
  std::vector<Row> rows;
  std::vector<long> lo;
  std::vector<long> hi;
  bool empty = false;
};

Enumeration prepare(const Polytope& p, const Integer& n, bool interior) {
  Enumeration e;
  if (p.is_empty() || n < 0) {
    e.empty = true;
    return e;
  }
  const std::size_t d = p.ambient_dim();
  if (n == 0) {
    // 0P is the origin; its relative interior is itself.
    e.lo.assign(d, 0);
    e.hi.assign(d, 0);
    return e;
  }
  auto add_row = [&](const HalfSpace& h, long t) {
    Row r;
    for (const auto& c : h.normal) r.c.push_back(to_long_checked(c));
    r.b = to_long_checked(h.offset * n);
    r.t = t;
    e.rows.push_back(std::move(r));
  };
  for (const auto& f : p.facets()) add_row(f, interior ? 1 : 0);
  for (const auto& q : p.equalities()) {
    add_row(q, 0);
    add_row(q.negated(), 0);
  }
  QVec lo = p.lower_bounds();
  QVec hi = p.upper_bounds();
  for (std::size_t i = 0; i < d; ++i) {
    e.lo.push_back(to_long_checked(ceil(lo[i] * n)));
    e.hi.push_back(to_long_checked(floor(hi[i] * n)));
    if (e.lo.back() > e.hi.back()) e.empty = true;
  }
  return e;
}

}  // namespace

std::uint64_t count_lattice_points(const Polytope& p, const Integer& dilation, bool interior) {
  Enumeration e = prepare(p, dilation, interior);
  if (e.empty) return 0;
  std::uint64_t total = 0;
  enumerate_rows(e.rows, e.lo, e.hi, [&](const std::vector<long>&, long a, long z) {
    total += static_cast<std::uint64_t>(z - a + 1);
  });
  return total;
}

void for_each_lattice_point(const Polytope& p, const Integer& dilation, bool interior,
                            const std::function<void(const std::vector<long>&)>& visit) {
  Enumeration e = prepare(p, dilation, interior);
  if (e.empty) return;
  const std::size_t d = e.lo.size();
  enumerate_rows(e.rows, e.lo, e.hi, [&](const std::vector<long>& x, long a, long z) {
    if (d == 0) {
      visit(x);
      return;
    }
    std::vector<long> y = x;
    for (long v = a; v <= z; ++v) {
      y[d - 1] = v;
      visit(y);
    }
  });
}

std::vector<ZVec> lattice_points(const Polytope& p) {
  std::vector<ZVec> out;
  for_each_lattice_point(p, 1, false, [&](const std::vector<long>& x) {
    ZVec z;
    for (long v : x) z.emplace_back(v);
    out.push_back(std::move(z));
  });
  return out;
}

}  // namespace hkd
