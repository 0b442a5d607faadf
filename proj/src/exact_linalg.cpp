#include "hkd/exact_linalg.hpp"

#include <algorithm>
#include <utility>

#include "hkd/errors.hpp"

namespace hkd {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<ZVec>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

ZVec IntMatrix::row(std::size_t i) const {
  return ZVec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
              data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  IntMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
    }
  }
  return out;
}

namespace {

// Replace rows (r, i) by (s*r + t*i, -(b/g)*r + (a/g)*i); the 2x2 transform
// has determinant one.
void gcd_combine(IntMatrix& m, std::size_t r, std::size_t i, const Integer& s, const Integer& t,
                 const Integer& b_g, const Integer& a_g) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Integer x = m(r, j);
    Integer y = m(i, j);
    m(r, j) = s * x + t * y;
    m(i, j) = a_g * y - b_g * x;
  }
}

void add_row_multiple(IntMatrix& m, std::size_t target, std::size_t source, const Integer& factor) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(target, j) += factor * m(source, j);
}

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

}  // namespace

HermiteDecomposition hermite_normal_form(const IntMatrix& m) {
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < h.cols() && pivot_row < h.rows(); ++col) {
    for (std::size_t i = pivot_row + 1; i < h.rows(); ++i) {
      if (h(i, col) == 0) continue;
      Integer a = h(pivot_row, col);
      Integer b = h(i, col);
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      Integer a_g = a / g;
      Integer b_g = b / g;
      gcd_combine(h, pivot_row, i, s, t, b_g, a_g);
      gcd_combine(u, pivot_row, i, s, t, b_g, a_g);
    }
    if (h(pivot_row, col) == 0) continue;
    if (h(pivot_row, col) < 0) {
      for (std::size_t j = 0; j < h.cols(); ++j) h(pivot_row, j) = -h(pivot_row, j);
      for (std::size_t j = 0; j < u.cols(); ++j) u(pivot_row, j) = -u(pivot_row, j);
    }
    const Integer pivot = h(pivot_row, col);
    for (std::size_t i = 0; i < pivot_row; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h(i, col).get_mpz_t(), pivot.get_mpz_t());
      if (q == 0) continue;
      add_row_multiple(h, i, pivot_row, -q);
      add_row_multiple(u, i, pivot_row, -q);
    }
    ++pivot_row;
  }
  return {std::move(h), std::move(u)};
}

bool is_hermite_normal_form(const IntMatrix& h) {
  std::ptrdiff_t last_pivot = -1;
  bool seen_zero_row = false;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    std::ptrdiff_t pivot = -1;
    for (std::size_t j = 0; j < h.cols(); ++j) {
      if (h(i, j) != 0) {
        pivot = static_cast<std::ptrdiff_t>(j);
        break;
      }
    }
    if (pivot < 0) {
      seen_zero_row = true;
      continue;
    }
    if (seen_zero_row || pivot <= last_pivot) return false;
    const auto pc = static_cast<std::size_t>(pivot);
    if (h(i, pc) <= 0) return false;
    for (std::size_t k = 0; k < i; ++k) {
      if (h(k, pc) < 0 || h(k, pc) >= h(i, pc)) return false;
    }
    last_pivot = pivot;
  }
  return true;
}

Integer determinant(const IntMatrix& m) {
  // Bareiss elimination.
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && a(swap_with, k) == 0) ++swap_with;
      if (swap_with == n) return 0;
      swap_rows(a, k, swap_with);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::vector<ZVec> integer_kernel(const IntMatrix& a) {
  const std::size_t n = a.cols();
  if (a.rows() == 0) {
    std::vector<ZVec> basis;
    IntMatrix id = IntMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i) basis.push_back(id.row(i));
    return basis;
  }
  // U * A^T = H; rows of U opposite zero rows of H span the left kernel of
  // A^T, i.e. the kernel of A.
  auto [h, u] = hermite_normal_form(a.transposed());
  std::vector<ZVec> basis;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    bool zero = true;
    for (std::size_t j = 0; j < h.cols() && zero; ++j) zero = h(i, j) == 0;
    if (zero) basis.push_back(u.row(i));
  }
  return basis;
}

std::vector<ZVec> saturated_lattice_basis(const std::vector<ZVec>& spanning) {
  if (spanning.empty()) throw InvalidInput("degenerate span");
  const std::size_t d = spanning.front().size();
  IntMatrix b = IntMatrix::from_rows(spanning, d);

  std::vector<ZVec> perp = integer_kernel(b);
  std::vector<ZVec> saturated;
  if (perp.size() == d) throw InvalidInput("degenerate span");
  if (perp.empty()) {
    IntMatrix id = IntMatrix::identity(d);
    for (std::size_t i = 0; i < d; ++i) saturated.push_back(id.row(i));
  } else {
    saturated = integer_kernel(IntMatrix::from_rows(perp, d));
  }
  auto [h, u] = hermite_normal_form(IntMatrix::from_rows(saturated, d));
  std::vector<ZVec> out;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    ZVec r = h.row(i);
    if (std::any_of(r.begin(), r.end(), [](const Integer& x) { return x != 0; })) {
      out.push_back(std::move(r));
    }
  }
  return out;
}

AffineLatticeFrame frame_through(const std::vector<QVec>& points) {
  if (points.empty()) throw InvalidInput("frame of empty point set");
  AffineLatticeFrame frame;
  frame.base_point = points.front();
  std::vector<ZVec> directions;
  for (std::size_t i = 1; i < points.size(); ++i) {
    QVec diff = subtract(points[i], points.front());
    if (std::all_of(diff.begin(), diff.end(), [](const Rational& x) { return x == 0; })) continue;
    directions.push_back(primitive_direction(diff));
  }
  if (!directions.empty()) frame.direction_basis = saturated_lattice_basis(directions);
  return frame;
}

QVec lattice_coordinates(const AffineLatticeFrame& frame, const QVec& p) {
  const std::size_t d = frame.base_point.size();
  const std::size_t m = frame.dim();
  std::vector<QVec> a(d, QVec(m));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < m; ++j) a[i][j] = frame.direction_basis[j][i];
  }
  auto sol = solve_any(a, subtract(p, frame.base_point));
  if (!sol) throw InvalidInput("point outside affine hull");
  return *sol;
}

QVec from_lattice_coordinates(const AffineLatticeFrame& frame, const QVec& c) {
  QVec p = frame.base_point;
  for (std::size_t j = 0; j < c.size(); ++j) {
    for (std::size_t i = 0; i < p.size(); ++i) p[i] += c[j] * frame.direction_basis[j][i];
  }
  return p;
}

std::vector<std::size_t> row_reduce(std::vector<QVec>& rows) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    const Rational inv = 1 / rows[r][c];
    for (std::size_t j = c; j < cols; ++j) rows[r][j] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(std::vector<QVec> rows) { return row_reduce(rows).size(); }

std::vector<QVec> nullspace(std::vector<QVec> rows, std::size_t cols) {
  auto pivots = row_reduce(rows);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<QVec> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    QVec v(cols);
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -rows[k][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

namespace {

std::optional<QVec> solve_impl(const std::vector<QVec>& a, const QVec& b, bool require_unique) {
  const std::size_t n = a.empty() ? 0 : a.front().size();
  std::vector<QVec> aug(a.size(), QVec(n + 1));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n] = b[i];
  }
  auto pivots = row_reduce(aug);
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;  // inconsistent
  if (require_unique && pivots.size() != n) return std::nullopt;
  QVec x(n);
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug[k][n];
  return x;
}

}  // namespace

std::optional<QVec> solve_unique(const std::vector<QVec>& a, const QVec& b) {
  return solve_impl(a, b, true);
}

std::optional<QVec> solve_any(const std::vector<QVec>& a, const QVec& b) {
  return solve_impl(a, b, false);
}

Rational determinant(std::vector<QVec> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

}  // namespace hkd
