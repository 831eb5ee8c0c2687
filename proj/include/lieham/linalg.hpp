#pragma once

#include <vector>

#include "lieham/matrix.hpp"

namespace lieham {

struct RrefResult {
  ScalarMatrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

/// Fraction-free forward elimination (first nonzero pivot in column order)
/// followed by exact back-substitution.
RrefResult rref(const ScalarMatrix& m);

/// One basis vector per free column: that coordinate is 1, other free
/// coordinates are 0, pivot coordinates are read off the reduced matrix.
std::vector<Vector> nullspace(const ScalarMatrix& m);

std::size_t rank(const ScalarMatrix& m);
ScalarMatrix inverse(const ScalarMatrix& m);
Scalar determinant(const ScalarMatrix& m);

/// Determinant by Laplace expansion with memoized minors.
Poly determinant(const PolyMatrix& m);

/// Canonical basis (nonzero rows of the reduced form) of the span of the vectors.
std::vector<Vector> span_basis(const std::vector<Vector>& vectors, std::size_t length);

ScalarMatrix rows_to_matrix(const std::vector<Vector>& rows, std::size_t cols);
Vector mat_vec(const ScalarMatrix& m, const Vector& v);

}  // namespace lieham
