#include "hkd/lattice_count.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "hkd/errors.hpp"

namespace hkd {

namespace {

using i64 = std::int64_t;

i64 to_i64(const Integer& z) {
  if (!z.fits_slong_p()) throw ComputationError("coefficient does not fit in 64 bits");
  return z.get_si();
}

i64 ceil_div(i64 a, i64 b) {  // b > 0
  return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

i64 floor_div(i64 a, i64 b) {  // b > 0
  return a >= 0 ? a / b : -((-a + b - 1) / b);
}

/// Integer data of the pair, extracted once per count.
struct Kernel {
  std::size_t n = 0;                  // dimension of P
  std::vector<std::vector<i64>> v;    // facet normals
  std::vector<i64> a;                 // facet offsets
  std::vector<std::vector<i64>> uv;   // uv[k][i] = <u_k, v_i>
  std::vector<i64> lo, hi;            // bounding box of P

  explicit Kernel(const ToricPair& pair) : n(pair.d - 1) {
    for (const auto& f : pair.polytope.facets()) {
      std::vector<i64> row;
      for (const auto& c : f.normal) row.push_back(to_i64(c));
      v.push_back(std::move(row));
      a.push_back(to_i64(f.offset));
    }
    for (const auto& u : pair.lattice_points) {
      std::vector<i64> row;
      for (const auto& f : pair.polytope.facets()) row.push_back(to_i64(dot(f.normal, u)));
      uv.push_back(std::move(row));
    }
    for (const auto& x : pair.polytope.lower_bounds()) lo.push_back(to_i64(x.get_num()));
    for (const auto& x : pair.polytope.upper_bounds()) hi.push_back(to_i64(x.get_num()));
  }

  std::uint64_t count(i64 q, i64 m) const {
    const std::size_t nf = v.size();
    // <x, v_i> >= need_i keeps x in mP.
    std::vector<i64> need(nf);
    for (std::size_t i = 0; i < nf; ++i) need[i] = -a[i] * m;
    // <x, v_i> >= thr[k][i] for all i puts x in the translate q u_k + (m-q) P.
    std::vector<std::vector<i64>> thr;
    if (m >= q) {
      thr.resize(uv.size(), std::vector<i64>(nf));
      for (std::size_t k = 0; k < uv.size(); ++k) {
        for (std::size_t i = 0; i < nf; ++i) thr[k][i] = q * uv[k][i] - a[i] * (m - q);
      }
    }
    std::vector<i64> box_lo(n), box_hi(n);
    for (std::size_t j = 0; j < n; ++j) {
      box_lo[j] = lo[j] * m;
      box_hi[j] = hi[j] * m;
    }
    std::vector<i64> partial(nf, 0);
    std::vector<std::pair<i64, i64>> excluded;
    excluded.reserve(thr.size());
    std::uint64_t total = 0;
    const std::size_t last = n - 1;

    // Feasible range of the last coordinate for <x, v_i> >= bound_i.
    auto line_range = [&](const std::vector<i64>& bound, i64 lo_x, i64 hi_x) {
      for (std::size_t i = 0; i < nf && lo_x <= hi_x; ++i) {
        const i64 c = v[i][last];
        const i64 rest = bound[i] - partial[i];  // c * x_last >= rest
        if (c > 0) {
          lo_x = std::max(lo_x, ceil_div(rest, c));
        } else if (c < 0) {
          hi_x = std::min(hi_x, floor_div(-rest, -c));
        } else if (rest > 0) {
          hi_x = lo_x - 1;
        }
      }
      return std::make_pair(lo_x, hi_x);
    };

    auto rec = [&](auto&& self, std::size_t j) -> void {
      if (j == last) {
        auto [x0, x1] = line_range(need, box_lo[last], box_hi[last]);
        if (x0 > x1) return;
        excluded.clear();
        for (const auto& t : thr) {
          auto r = line_range(t, x0, x1);
          if (r.first <= r.second) excluded.push_back(r);
        }
        i64 covered = 0;
        if (!excluded.empty()) {
          std::sort(excluded.begin(), excluded.end());
          i64 cur_lo = excluded[0].first;
          i64 cur_hi = excluded[0].second;
          for (std::size_t k = 1; k < excluded.size(); ++k) {
            if (excluded[k].first <= cur_hi + 1) {
              cur_hi = std::max(cur_hi, excluded[k].second);
            } else {
              covered += cur_hi - cur_lo + 1;
              cur_lo = excluded[k].first;
              cur_hi = excluded[k].second;
            }
          }
          covered += cur_hi - cur_lo + 1;
        }
        total += static_cast<std::uint64_t>(x1 - x0 + 1 - covered);
        return;
      }
      for (i64 x = box_lo[j]; x <= box_hi[j]; ++x) {
        for (std::size_t i = 0; i < nf; ++i) partial[i] += v[i][j] * x;
        self(self, j + 1);
        for (std::size_t i = 0; i < nf; ++i) partial[i] -= v[i][j] * x;
      }
    };
    rec(rec, 0);
    return total;
  }
};

Rational pow_int(std::uint64_t q, std::size_t e) {
  Integer r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= static_cast<unsigned long>(q);
  return Rational(r);
}

Rational ratio(std::uint64_t a, std::uint64_t b) {
  Rational r{Integer(static_cast<unsigned long>(a)), Integer(static_cast<unsigned long>(b))};
  r.canonicalize();
  return r;
}

std::uint64_t degree_of(std::uint64_t q, const Rational& lambda) {
  if (lambda < 0) throw InvalidInput("lambda must be nonnegative");
  Integer m = hkd::floor(lambda * static_cast<unsigned long>(q));
  return m.get_ui();
}

}  // namespace

std::uint64_t count_slice(const ToricPair& pair, std::uint64_t q, std::uint64_t m) {
  if (q == 0) throw InvalidInput("q must be positive");
  // The region lies below height d, so degree >= d q is empty.
  if (m >= pair.d * q) return 0;
  return Kernel(pair).count(static_cast<i64>(q), static_cast<i64>(m));
}

CountTable count_table(const ToricPair& pair, std::uint64_t q, unsigned threads) {
  if (q == 0) throw InvalidInput("q must be positive");
  const Kernel kernel(pair);
  const std::uint64_t top = pair.d * q;
  CountTable table;
  table.q = q;
  table.per_degree.assign(top, 0);
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, top));
  std::atomic<std::uint64_t> next{0};
  auto work = [&] {
    for (std::uint64_t m = next++; m < top; m = next++) {
      table.per_degree[m] = kernel.count(static_cast<i64>(q), static_cast<i64>(m));
    }
  };
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  while (!table.per_degree.empty() && table.per_degree.back() == 0) table.per_degree.pop_back();
  for (auto c : table.per_degree) table.total += c;
  return table;
}

std::uint64_t hk_value(const ToricPair& pair, std::uint64_t q, unsigned threads) {
  return count_table(pair, q, threads).total;
}

Rational f_n(const ToricPair& pair, std::uint64_t q, const Rational& lambda) {
  return Rational(Integer(static_cast<unsigned long>(count_slice(pair, q, degree_of(q, lambda))))) /
         pow_int(q, pair.d - 1);
}

Rational f_n(const CountTable& table, std::size_t d, const Rational& lambda) {
  return Rational(Integer(static_cast<unsigned long>(table.at(degree_of(table.q, lambda))))) /
         pow_int(table.q, d - 1);
}

Rational g_n(const ToricPair& pair, std::uint64_t q, const Rational& lambda, const PiecewisePolynomial& f) {
  const std::uint64_t m = degree_of(q, lambda);
  Rational count(Integer(static_cast<unsigned long>(count_slice(pair, q, m))));
  Rational at = f(ratio(m, q));
  return (count - at * pow_int(q, pair.d - 1)) / pow_int(q, pair.d - 2);
}

Rational g_n(const CountTable& table, std::size_t d, const Rational& lambda, const PiecewisePolynomial& f) {
  const std::uint64_t m = degree_of(table.q, lambda);
  Rational count(Integer(static_cast<unsigned long>(table.at(m))));
  Rational at = f(ratio(m, table.q));
  return (count - at * pow_int(table.q, d - 1)) / pow_int(table.q, d - 2);
}

bool is_prime_power(std::uint64_t q) {
  if (q < 2) return false;
  for (std::uint64_t p = 2; p * p <= q; ++p) {
    if (q % p != 0) continue;
    while (q % p == 0) q /= p;
    return q == 1;
  }
  return true;
}

}  // namespace hkd
