#include "hkd/toric_region.hpp"

#include <algorithm>
#include <set>

#include "hkd/errors.hpp"
#include "hkd/exact_linalg.hpp"

namespace hkd {

bool Cone::contains(const QVec& x, const Rational& z) const {
  QVec p = x;
  p.push_back(z);
  for (const auto& h : halfspaces) {
    if (h.slack(p) < 0) return false;
  }
  return true;
}

ToricPair build_pair(const Polytope& p) {
  if (p.is_empty() || p.ambient_dim() == 0 || !p.is_full_dimensional()) {
    throw InvalidInput("P_D must be a full-dimensional polytope of dimension >= 1");
  }
  for (const auto& v : p.vertices()) {
    if (!is_integral(v)) throw InvalidInput("P_D must be a lattice polytope");
  }
  ToricPair pair;
  pair.d = p.ambient_dim() + 1;
  pair.polytope = p;
  pair.lattice_points = lattice_points(p);
  for (const auto& f : p.facets()) {
    ZVec n = f.normal;
    n.push_back(f.offset);
    pair.cone.halfspaces.push_back(HalfSpace::make(std::move(n), 0));
  }
  ZVec up(pair.d, 0);
  up.back() = 1;
  pair.cone.halfspaces.push_back(HalfSpace{std::move(up), 0});
  return pair;
}

Polytope translate_slice(const ToricPair& pair, const ZVec& u, const Rational& lambda) {
  return translate(scale(pair.polytope, lambda - 1), to_qvec(u));
}

namespace {

bool boxes_overlap(const Polytope& a, const Polytope& b) {
  QVec alo = a.lower_bounds();
  QVec ahi = a.upper_bounds();
  QVec blo = b.lower_bounds();
  QVec bhi = b.upper_bounds();
  for (std::size_t i = 0; i < alo.size(); ++i) {
    if (ahi[i] < blo[i] || bhi[i] < alo[i]) return false;
  }
  return true;
}

std::vector<Polytope> subtract_all(std::vector<Polytope> pieces, const std::vector<Polytope>& covers) {
  for (const auto& t : covers) {
    std::vector<Polytope> next;
    for (auto& k : pieces) {
      if (!boxes_overlap(k, t)) {
        next.push_back(std::move(k));
        continue;
      }
      for (auto& piece : subtract(k, t)) next.push_back(std::move(piece));
    }
    pieces = std::move(next);
    if (pieces.empty()) break;
  }
  return pieces;
}

std::vector<Polytope> translates(const ToricPair& pair, const Rational& lambda) {
  std::vector<Polytope> out;
  if (lambda <= 1) return out;
  out.reserve(pair.lattice_points.size());
  for (const auto& u : pair.lattice_points) out.push_back(translate_slice(pair, u, lambda));
  return out;
}

}  // namespace

std::vector<Polytope> slice_cells(const ToricPair& pair, const Rational& lambda) {
  if (lambda < 0) throw InvalidInput("slice height must be nonnegative");
  Polytope big = scale(pair.polytope, lambda);
  return subtract_all({big}, translates(pair, lambda));
}

SliceRegion slice(const ToricPair& pair, const Rational& lambda) {
  if (lambda < 0) throw InvalidInput("slice height must be nonnegative");
  SliceRegion region;
  region.lambda = lambda;
  Polytope big = scale(pair.polytope, lambda);
  auto ts = translates(pair, lambda);
  region.cells = subtract_all({big}, ts);
  if (lambda == 0) return region;

  for (std::size_t i = 0; i < big.facets().size(); ++i) {
    for (auto& piece : subtract_all({big.facet(i)}, ts)) region.outer_boundary.push_back(std::move(piece));
  }

  const int facet_dim = static_cast<int>(pair.d) - 2;
  for (std::size_t ui = 0; ui < ts.size(); ++ui) {
    const Polytope& t = ts[ui];
    if (!t.is_full_dimensional()) continue;
    for (std::size_t fi = 0; fi < t.facets().size(); ++fi) {
      const HalfSpace& plane = t.facets()[fi];
      if (std::find(big.facets().begin(), big.facets().end(), plane) != big.facets().end()) continue;
      Polytope g = t.facet(fi);
      std::vector<Polytope> covers;
      for (std::size_t wi = 0; wi < ts.size(); ++wi) {
        if (wi == ui) continue;
        const Polytope& w = ts[wi];
        bool reaches_outside = false;
        for (const auto& v : w.vertices()) {
          if (plane.slack(v) < 0) {
            reaches_outside = true;
            break;
          }
        }
        bool earlier_twin = wi < ui && std::find(w.facets().begin(), w.facets().end(), plane) != w.facets().end();
        if (!reaches_outside && !earlier_twin) continue;
        if (!boxes_overlap(g, w)) continue;
        if (overlaps_in_dimension(g, w, facet_dim)) covers.push_back(w);
      }
      for (auto& piece : subtract_all({g}, covers)) region.inner_boundary.push_back(std::move(piece));
    }
  }
  return region;
}

BoundaryMeasures boundary_measures(const SliceRegion& region) {
  BoundaryMeasures m{0, 0};
  for (const auto& p : region.outer_boundary) m.outer += relative_volume(p);
  for (const auto& p : region.inner_boundary) m.inner += relative_volume(p);
  return m;
}

std::vector<Rational> breakpoint_superset(const ToricPair& pair) {
  const std::size_t d = pair.d;
  // Plane family <n, (x, z)> = c with n = (v_i, a_i) and c from the cone
  // itself (0) or a translate (<u, v_i> + a_i); plus z = 0 and z = 1.
  std::vector<ZVec> normals;
  std::vector<std::vector<Rational>> constants;
  for (const auto& f : pair.polytope.facets()) {
    ZVec n = f.normal;
    n.push_back(f.offset);
    std::set<Rational> cs{Rational(0)};
    for (const auto& u : pair.lattice_points) cs.insert(Rational(dot(f.normal, u) + f.offset));
    normals.push_back(std::move(n));
    constants.emplace_back(cs.begin(), cs.end());
  }
  ZVec ez(d, 0);
  ez.back() = 1;
  normals.push_back(ez);
  constants.push_back({0, 1});

  const Rational top(static_cast<unsigned long>(d));
  std::set<Rational> heights{Rational(0), Rational(1), top};
  const std::size_t k = normals.size();
  QVec target = to_qvec(ez);
  for (std::size_t size = 1; size <= std::min(d, k); ++size) {
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      // Solve sum mu_s n_s = e_z with the subset's normals as columns.
      std::vector<QVec> a(d, QVec(size));
      for (std::size_t s = 0; s < size; ++s) {
        for (std::size_t r = 0; r < d; ++r) a[r][s] = normals[idx[s]][r];
      }
      std::vector<QVec> rows;
      for (auto i : idx) rows.push_back(to_qvec(normals[i]));
      auto mu = rank(rows) == size ? solve_any(a, target) : std::nullopt;
      if (mu) {
        std::vector<std::size_t> choice(size, 0);
        while (true) {
          Rational z = 0;
          for (std::size_t s = 0; s < size; ++s) z += (*mu)[s] * constants[idx[s]][choice[s]];
          if (z >= 0 && z <= top) heights.insert(z);
          std::size_t s = 0;
          while (s < size && ++choice[s] == constants[idx[s]].size()) choice[s++] = 0;
          if (s == size) break;
        }
      }
      std::size_t i = size;
      while (i > 0 && idx[i - 1] == k - size + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return {heights.begin(), heights.end()};
}

Rational support_height(const ToricPair& pair) {
  auto bps = breakpoint_superset(pair);
  for (std::size_t i = bps.size() - 1; i > 0; --i) {
    Rational mid = (bps[i - 1] + bps[i]) / 2;
    if (!slice_cells(pair, mid).empty()) return bps[i];
  }
  return 0;
}

bool in_eto_region(const ToricPair& pair, const QVec& x, const Rational& z) {
  if (!pair.cone.contains(x, z)) return false;
  const Rational zs = z - 1;
  if (zs < 0) return true;
  for (const auto& u : pair.lattice_points) {
    QVec y = subtract(x, to_qvec(u));
    if (pair.cone.contains(y, zs)) return false;
  }
  return true;
}

}  // namespace hkd
