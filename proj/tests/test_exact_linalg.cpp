#include <gtest/gtest.h>

#include <random>

#include "hkd/errors.hpp"
#include "hkd/exact_linalg.hpp"

using namespace hkd;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
  }
  return m;
}

Rational rational_det(const IntMatrix& m) {
  std::vector<QVec> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(to_qvec(m.row(i)));
  return determinant(rows);
}

}  // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rational(" -3 ")), "-3/1");
  EXPECT_EQ(to_string(Rational(0)), "0/1");
  EXPECT_THROW(parse_rational("1/0"), InvalidInput);
  EXPECT_THROW(parse_rational("x"), InvalidInput);
  EXPECT_THROW(parse_rational("1.5"), InvalidInput);
}

TEST(Rational, FloorCeil) {
  EXPECT_EQ(hkd::floor(make_rational(-7, 2)), -4);
  EXPECT_EQ(hkd::ceil(make_rational(-7, 2)), -3);
  EXPECT_EQ(hkd::floor(make_rational(7, 2)), 3);
  EXPECT_EQ(hkd::ceil(make_rational(6, 2)), 3);
}

TEST(Hermite, KnownExample) {
  IntMatrix m = IntMatrix::from_rows({{2, 4}, {6, 8}}, 2);
  auto hd = hermite_normal_form(m);
  IntMatrix expected = IntMatrix::from_rows({{2, 0}, {0, 4}}, 2);
  EXPECT_EQ(hd.hermite, expected);
  EXPECT_EQ(hd.transform * m, hd.hermite);
}

TEST(Hermite, RandomPropertiesHold) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t r = 1 + trial % 4;
    std::size_t c = 1 + (trial / 4) % 4;
    IntMatrix m = random_matrix(rng, r, c, 6);
    auto hd = hermite_normal_form(m);
    EXPECT_TRUE(is_hermite_normal_form(hd.hermite));
    EXPECT_EQ(hd.transform * m, hd.hermite);
    Integer det = determinant(hd.transform);
    EXPECT_TRUE(det == 1 || det == -1);
  }
}

TEST(Hermite, UniqueUnderUnimodularChange) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    IntMatrix m = random_matrix(rng, 3, 3, 5);
    // Multiply by an elementary unimodular matrix on the left.
    IntMatrix e = IntMatrix::identity(3);
    e(0, 1) = 1 + trial % 3;
    e(2, 0) = -1;
    EXPECT_EQ(hermite_normal_form(e * m).hermite, hermite_normal_form(m).hermite);
  }
}

TEST(Determinant, BareissMatchesRational) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 1 + trial % 5;
    IntMatrix m = random_matrix(rng, n, n, 9);
    EXPECT_EQ(Rational(determinant(m)), rational_det(m));
  }
}

TEST(Kernel, VectorsAnnihilateAndAreSaturated) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    IntMatrix a = random_matrix(rng, 2, 4, 4);
    auto ker = integer_kernel(a);
    for (const auto& k : ker) {
      for (std::size_t i = 0; i < a.rows(); ++i) EXPECT_EQ(dot(a.row(i), k), 0);
    }
    if (ker.empty()) continue;
    // Saturation: the kernel basis already spans all integer points of its span.
    auto sat = saturated_lattice_basis(ker);
    IntMatrix kb = IntMatrix::from_rows(ker, 4);
    EXPECT_EQ(hermite_normal_form(kb).hermite, IntMatrix::from_rows(sat, 4));
  }
}

TEST(Saturation, RecoversPrimitiveDirection) {
  auto b = saturated_lattice_basis({{2, 4, 6}});
  ASSERT_EQ(b.size(), 1U);
  EXPECT_EQ(b[0], (ZVec{1, 2, 3}));
  EXPECT_THROW(saturated_lattice_basis({{0, 0}}), InvalidInput);
}

TEST(Frame, CoordinatesRoundTrip) {
  std::vector<QVec> pts = {{make_rational(1, 2), 0, 1}, {make_rational(5, 2), 4, 1}, {make_rational(1, 2), 0, 3}};
  auto frame = frame_through(pts);
  EXPECT_EQ(frame.dim(), 2U);
  for (const auto& p : pts) {
    auto c = lattice_coordinates(frame, p);
    EXPECT_EQ(from_lattice_coordinates(frame, c), p);
  }
  EXPECT_THROW(lattice_coordinates(frame, QVec{0, 0, 0}), InvalidInput);
}

TEST(RationalLinalg, SolveAndNullspace) {
  std::vector<QVec> a = {{1, 2}, {3, 4}};
  auto x = solve_unique(a, {5, 6});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ((*x)[0], -4);
  EXPECT_EQ((*x)[1], make_rational(9, 2));
  auto ns = nullspace({{1, 1, 1}}, 3);
  EXPECT_EQ(ns.size(), 2U);
  for (const auto& v : ns) EXPECT_EQ(v[0] + v[1] + v[2], 0);
  EXPECT_FALSE(solve_unique({{1, 1}, {2, 2}}, {1, 3}).has_value());
  EXPECT_FALSE(solve_any({{1, 1}, {2, 2}}, {1, 3}).has_value());
  EXPECT_TRUE(solve_any({{1, 1}, {2, 2}}, {1, 2}).has_value());
}
