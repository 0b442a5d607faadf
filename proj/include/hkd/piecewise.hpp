#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hkd/rational.hpp"

namespace hkd {

/// Dense univariate polynomial with rational coefficients, c[i] * x^i.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(QVec coefficients);
  static Polynomial monomial(const Rational& c, unsigned degree);
  /// Exact interpolation through (x_i, y_i); nodes must be distinct.
  static Polynomial interpolate(const QVec& xs, const QVec& ys);

  const QVec& coefficients() const { return c_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rational coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

  Rational operator()(const Rational& x) const;
  Polynomial antiderivative() const;
  Rational integrate(const Rational& a, const Rational& b) const;
  /// p(x - shift) expanded.
  Polynomial shifted(const Rational& shift) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& s) const;
  bool operator==(const Polynomial& o) const = default;

  /// Human-readable form such as "3/2*x^2 - 1*x + 1/2".
  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  QVec c_;
};

/// Polynomial pieces on [b_i, b_{i+1}) plus a tail polynomial on [b_k, oo);
/// zero left of b_0. Evaluation is right-continuous.
class PiecewisePolynomial {
 public:
  PiecewisePolynomial() = default;
  PiecewisePolynomial(std::vector<Rational> breakpoints, std::vector<Polynomial> pieces, Polynomial tail = {});
  static PiecewisePolynomial single(const Polynomial& p, const Rational& start = 0);

  const std::vector<Rational>& breakpoints() const { return breaks_; }
  const std::vector<Polynomial>& pieces() const { return pieces_; }
  const Polynomial& tail() const { return tail_; }

  Rational operator()(const Rational& x) const;
  /// Limit from the left at x (value of the piece ending at x).
  Rational left_limit(const Rational& x) const;
  /// The polynomial in force at x (right-continuous convention).
  Polynomial piece_at(const Rational& x) const;

  /// Exact integral over [b_0, oo); throws ComputationError when the tail
  /// is nonzero.
  Rational integrate() const;

  PiecewisePolynomial operator+(const PiecewisePolynomial& o) const;
  PiecewisePolynomial operator-(const PiecewisePolynomial& o) const;
  PiecewisePolynomial operator*(const PiecewisePolynomial& o) const;

  /// Same function on a common refinement with `points` added.
  PiecewisePolynomial refined(const std::vector<Rational>& points) const;
  /// Adjacent equal pieces merged (also into the tail); canonical form.
  PiecewisePolynomial merged() const;

  /// Breakpoints where the function jumps.
  std::vector<Rational> discontinuities() const;

  /// Equality as functions on [min b_0, oo).
  bool equals(const PiecewisePolynomial& o) const;

 private:
  template <class Op>
  PiecewisePolynomial combine(const PiecewisePolynomial& o, Op op) const;

  std::vector<Rational> breaks_;
  std::vector<Polynomial> pieces_;
  Polynomial tail_;
};

}  // namespace hkd
