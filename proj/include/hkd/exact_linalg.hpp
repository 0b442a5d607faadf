#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hkd/rational.hpp"

namespace hkd {

/// Dense rectangular matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<ZVec>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  ZVec row(std::size_t i) const;
  IntMatrix transposed() const;
  IntMatrix operator*(const IntMatrix& other) const;
  bool operator==(const IntMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

struct HermiteDecomposition {
  IntMatrix hermite;     // H
  IntMatrix transform;   // U, unimodular, U * M = H
};

/// Row-style Hermite normal form: H is in row echelon form, every pivot is
/// positive and entries above a pivot lie in [0, pivot).
HermiteDecomposition hermite_normal_form(const IntMatrix& m);

bool is_hermite_normal_form(const IntMatrix& h);

/// Exact determinant by fraction-free elimination (square input).
Integer determinant(const IntMatrix& m);

/// Lattice basis of {x in Z^n : A x = 0}; empty when the kernel is trivial.
std::vector<ZVec> integer_kernel(const IntMatrix& a);

/// Basis of span_Q(spanning) ∩ Z^d, in Hermite normal form.
/// Throws InvalidInput("degenerate span") on rank-zero input.
std::vector<ZVec> saturated_lattice_basis(const std::vector<ZVec>& spanning);

/// An affine subspace together with a basis of the integer points of its
/// direction space. Coordinates with respect to this basis are the
/// lattice-normalizing chart used for relative volumes.
struct AffineLatticeFrame {
  QVec base_point;
  std::vector<ZVec> direction_basis;

  std::size_t dim() const { return direction_basis.size(); }
};

/// Frame for the affine hull of a nonempty point set.
AffineLatticeFrame frame_through(const std::vector<QVec>& points);

/// Coordinates c with p = base + sum c_i basis_i. Throws InvalidInput("point
/// outside affine hull") when p is off the hull.
QVec lattice_coordinates(const AffineLatticeFrame& frame, const QVec& p);
QVec from_lattice_coordinates(const AffineLatticeFrame& frame, const QVec& c);

// Rational helpers shared by the geometry code.

std::size_t rank(std::vector<QVec> rows);

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(std::vector<QVec>& rows);

/// Basis of {x : rows * x = 0}.
std::vector<QVec> nullspace(std::vector<QVec> rows, std::size_t cols);

/// Solution of A x = b if it exists and is unique.
std::optional<QVec> solve_unique(const std::vector<QVec>& a, const QVec& b);

/// Some solution of A x = b, if the system is consistent.
std::optional<QVec> solve_any(const std::vector<QVec>& a, const QVec& b);

Rational determinant(std::vector<QVec> m);

}  // namespace hkd
