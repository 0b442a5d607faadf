#include "hkd/piecewise.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "hkd/errors.hpp"

namespace hkd {

// ---------------------------------------------------------------- Polynomial

Polynomial::Polynomial(QVec coefficients) : c_(std::move(coefficients)) { trim(); }

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Polynomial Polynomial::monomial(const Rational& c, unsigned degree) {
  QVec v(degree + 1, Rational(0));
  v[degree] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::interpolate(const QVec& xs, const QVec& ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("interpolate: size mismatch");
  // Newton divided differences, then expansion.
  const std::size_t n = xs.size();
  QVec coef = ys;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = n - 1; i >= j; --i) {
      Rational dx = xs[i] - xs[i - j];
      if (dx == 0) throw std::invalid_argument("interpolate: repeated node");
      coef[i] = (coef[i] - coef[i - 1]) / dx;
      if (i == j) break;
    }
  }
  Polynomial result;
  for (std::size_t k = n; k-- > 0;) {
    result = result * Polynomial(QVec{-xs[k], 1}) + Polynomial(QVec{coef[k]});
  }
  return result;
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

Polynomial Polynomial::antiderivative() const {
  QVec v(c_.size() + 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) v[i + 1] = c_[i] / static_cast<unsigned long>(i + 1);
  return Polynomial(std::move(v));
}

Rational Polynomial::integrate(const Rational& a, const Rational& b) const {
  Polynomial p = antiderivative();
  return p(b) - p(a);
}

Polynomial Polynomial::shifted(const Rational& shift) const {
  Polynomial result;
  Polynomial base(QVec{-shift, 1});
  for (std::size_t i = c_.size(); i-- > 0;) result = result * base + Polynomial(QVec{c_[i]});
  return result;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  QVec v(std::max(c_.size(), o.c_.size()), Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + o * Rational(-1); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  QVec v(c_.size() + o.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  }
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator*(const Rational& s) const {
  QVec v = c_;
  for (auto& x : v) x *= s;
  return Polynomial(std::move(v));
}

std::string Polynomial::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    Rational a = abs(c_[i]);
    if (out.empty()) {
      if (c_[i] < 0) out += "-";
    } else {
      out += c_[i] < 0 ? " - " : " + ";
    }
    out += hkd::to_string(a);
    if (i >= 1) out += "*" + var;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

// ---------------------------------------------------------------- PiecewisePolynomial

PiecewisePolynomial::PiecewisePolynomial(std::vector<Rational> breakpoints, std::vector<Polynomial> pieces,
                                         Polynomial tail)
    : breaks_(std::move(breakpoints)), pieces_(std::move(pieces)), tail_(std::move(tail)) {
  if (breaks_.empty()) {
    if (!pieces_.empty()) throw std::invalid_argument("piecewise: pieces without breakpoints");
    breaks_.push_back(0);
  }
  if (pieces_.size() + 1 != breaks_.size()) throw std::invalid_argument("piecewise: piece count mismatch");
  for (std::size_t i = 1; i < breaks_.size(); ++i) {
    if (!(breaks_[i - 1] < breaks_[i])) throw std::invalid_argument("piecewise: breakpoints not increasing");
  }
}

PiecewisePolynomial PiecewisePolynomial::single(const Polynomial& p, const Rational& start) {
  return PiecewisePolynomial({start}, {}, p);
}

Polynomial PiecewisePolynomial::piece_at(const Rational& x) const {
  if (breaks_.empty() || x < breaks_.front()) return {};
  auto it = std::upper_bound(breaks_.begin(), breaks_.end(), x);
  std::size_t i = static_cast<std::size_t>(it - breaks_.begin()) - 1;
  return i < pieces_.size() ? pieces_[i] : tail_;
}

Rational PiecewisePolynomial::operator()(const Rational& x) const { return piece_at(x)(x); }

Rational PiecewisePolynomial::left_limit(const Rational& x) const {
  if (breaks_.empty() || x <= breaks_.front()) return 0;
  auto it = std::lower_bound(breaks_.begin(), breaks_.end(), x);
  std::size_t i = static_cast<std::size_t>(it - breaks_.begin()) - 1;
  const Polynomial& p = i < pieces_.size() ? pieces_[i] : tail_;
  return p(x);
}

Rational PiecewisePolynomial::integrate() const {
  if (!tail_.is_zero()) throw ComputationError("integral diverges: nonzero tail");
  Rational total = 0;
  for (std::size_t i = 0; i < pieces_.size(); ++i) total += pieces_[i].integrate(breaks_[i], breaks_[i + 1]);
  return total;
}

PiecewisePolynomial PiecewisePolynomial::refined(const std::vector<Rational>& points) const {
  std::set<Rational> all(breaks_.begin(), breaks_.end());
  for (const auto& p : points) all.insert(p);
  std::vector<Rational> b(all.begin(), all.end());
  std::vector<Polynomial> pieces;
  for (std::size_t i = 0; i + 1 < b.size(); ++i) pieces.push_back(piece_at(b[i]));
  return PiecewisePolynomial(b, pieces, piece_at(b.back()));
}

template <class Op>
PiecewisePolynomial PiecewisePolynomial::combine(const PiecewisePolynomial& o, Op op) const {
  PiecewisePolynomial a = refined(o.breaks_);
  PiecewisePolynomial b = o.refined(breaks_);
  std::vector<Polynomial> pieces;
  for (std::size_t i = 0; i < a.pieces_.size(); ++i) pieces.push_back(op(a.pieces_[i], b.pieces_[i]));
  return PiecewisePolynomial(a.breaks_, pieces, op(a.tail_, b.tail_));
}

PiecewisePolynomial PiecewisePolynomial::operator+(const PiecewisePolynomial& o) const {
  return combine(o, [](const Polynomial& x, const Polynomial& y) { return x + y; });
}

PiecewisePolynomial PiecewisePolynomial::operator-(const PiecewisePolynomial& o) const {
  return combine(o, [](const Polynomial& x, const Polynomial& y) { return x - y; });
}

PiecewisePolynomial PiecewisePolynomial::operator*(const PiecewisePolynomial& o) const {
  return combine(o, [](const Polynomial& x, const Polynomial& y) { return x * y; });
}

PiecewisePolynomial PiecewisePolynomial::merged() const {
  if (pieces_.empty()) return *this;
  std::vector<Rational> starts = {breaks_.front()};
  std::vector<Polynomial> kept;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (!kept.empty() && kept.back() == pieces_[i]) continue;
    if (!kept.empty()) starts.push_back(breaks_[i]);
    kept.push_back(pieces_[i]);
  }
  if (kept.back() == tail_) {
    // The tail absorbs the last piece and starts where that piece started.
    kept.pop_back();
    return PiecewisePolynomial(starts, kept, tail_);
  }
  starts.push_back(breaks_.back());
  return PiecewisePolynomial(starts, kept, tail_);
}

std::vector<Rational> PiecewisePolynomial::discontinuities() const {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < breaks_.size(); ++i) {
    if ((*this)(breaks_[i]) != left_limit(breaks_[i])) out.push_back(breaks_[i]);
  }
  return out;
}

bool PiecewisePolynomial::equals(const PiecewisePolynomial& o) const {
  PiecewisePolynomial diff = (*this - o).merged();
  if (!diff.tail_.is_zero()) return false;
  for (const auto& p : diff.pieces_) {
    if (!p.is_zero()) return false;
  }
  return true;
}

}  // namespace hkd
