#pragma once

#include <cstdint>
#include <vector>

#include "hkd/piecewise.hpp"
#include "hkd/toric_region.hpp"

namespace hkd {

/// Degree-graded lattice-point counts of q times the Eto region.
struct CountTable {
  std::uint64_t q = 0;
  std::vector<std::uint64_t> per_degree;  // index m; trailing zeros trimmed
  std::uint64_t total = 0;

  std::uint64_t at(std::uint64_t m) const { return m < per_degree.size() ? per_degree[m] : 0; }
};

/// #{x in Z^(d-1) : (x, m) in C_D, (x - q u, m - q) not in C_D for all u in L}.
std::uint64_t count_slice(const ToricPair& pair, std::uint64_t q, std::uint64_t m);

/// All nonzero degrees; threads = 0 uses the hardware concurrency.
CountTable count_table(const ToricPair& pair, std::uint64_t q, unsigned threads = 0);

/// Sum over all degrees of count_slice.
std::uint64_t hk_value(const ToricPair& pair, std::uint64_t q, unsigned threads = 0);

/// count_slice(q, floor(lambda q)) / q^(d-1).
Rational f_n(const ToricPair& pair, std::uint64_t q, const Rational& lambda);
Rational f_n(const CountTable& table, std::size_t d, const Rational& lambda);

/// (count_slice(q, m) - f(m/q) q^(d-1)) / q^(d-2) with m = floor(lambda q).
Rational g_n(const ToricPair& pair, std::uint64_t q, const Rational& lambda, const PiecewisePolynomial& f);
Rational g_n(const CountTable& table, std::size_t d, const Rational& lambda, const PiecewisePolynomial& f);

bool is_prime_power(std::uint64_t q);

}  // namespace hkd
