#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace hkd {

using Integer = mpz_class;
using Rational = mpq_class;
using QVec = std::vector<Rational>;
using ZVec = std::vector<Integer>;

inline Rational make_rational(long num, long den = 1) {
  Rational r{Integer(num), Integer(den)};
  r.canonicalize();
  return r;
}

/// Reduced "p/q" form with q > 0; integers are written "p/1".
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

/// Accepts "p/q", "p" and optional surrounding whitespace.
Rational parse_rational(std::string_view text);

Integer floor(const Rational& r);
Integer ceil(const Rational& r);
Rational pow(const Rational& base, unsigned exponent);

QVec to_qvec(const ZVec& v);
Rational dot(const ZVec& a, const QVec& b);
Rational dot(const QVec& a, const QVec& b);
Integer dot(const ZVec& a, const ZVec& b);

/// Least common multiple of the denominators of all entries.
Integer common_denominator(const QVec& v);

/// Scales a nonzero rational vector to the primitive integer vector on the
/// same ray.
ZVec primitive_direction(const QVec& v);

bool is_integral(const QVec& v);

QVec add(const QVec& a, const QVec& b);
QVec subtract(const QVec& a, const QVec& b);
QVec scaled(const QVec& v, const Rational& s);

}  // namespace hkd
