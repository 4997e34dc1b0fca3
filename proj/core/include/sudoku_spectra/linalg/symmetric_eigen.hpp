#pragma once

#include <vector>

#include "sudoku_spectra/linalg/matrix.hpp"

namespace sudoku_spectra {

struct SymmetricEigen {
  /// Ascending.
  std::vector<double> values;
  /// Column j is the unit eigenvector for values[j].
  RealMatrix vectors;
  /// max_j ||a v_j - values[j] v_j||_2
  double max_residual = 0.0;
};

/// Cyclic Jacobi eigensolver for symmetric matrices. This is the floating-point
/// oracle; exact answers come from char_poly.
///
/// Throws ConvergenceError if some residual exceeds 1e-8 * ||a||_F after the
/// sweep limit, DimensionMismatch if `a` is not symmetric.
SymmetricEigen symmetric_eigen(const IntMatrix& a);
SymmetricEigen symmetric_eigen(const RealMatrix& a);

/// Eigenvalues only, ascending.
std::vector<double> float_eigen(const IntMatrix& a);

/// Numerical rank of a vector family by Householder QR with column pivoting
/// on unit-normalised columns; |R_ii| is the singular value proxy compared
/// against `threshold`.
std::size_t numerical_rank(const std::vector<RealVector>& vectors, double threshold = 1e-8);

}  // namespace sudoku_spectra
