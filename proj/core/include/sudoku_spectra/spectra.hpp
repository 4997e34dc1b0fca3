#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "sudoku_spectra/linalg/exact.hpp"
#include "sudoku_spectra/linalg/matrix.hpp"
#include "sudoku_spectra/linalg/polynomial.hpp"

namespace sudoku_spectra {

/// Eigenvalue multiset: integer eigenvalues with multiplicities plus the
/// factor of the characteristic polynomial carrying the non-integer ones.
struct Spectrum {
  /// Ascending by eigenvalue, multiplicities positive.
  std::vector<std::pair<BigInt, std::size_t>> integer_part;
  /// Constant 1 when every eigenvalue is an integer.
  IntPolynomial residual = IntPolynomial::constant(1);

  std::size_t integer_count() const;
  std::size_t residual_degree() const;
  std::size_t dimension() const { return integer_count() + residual_degree(); }
  bool is_integral() const { return residual.is_constant(); }

  /// Integer eigenvalues expanded by multiplicity, ascending.
  std::vector<BigInt> integer_values() const;

  friend bool operator==(const Spectrum&, const Spectrum&) = default;
};

/// char_poly followed by integer_roots, candidates bounded by the max row sum.
Spectrum exact_spectrum(const IntMatrix& a);

bool is_integral(const IntMatrix& a);

/// Characteristic polynomial of the complete multipartite graph with the given
/// part sizes: x^(n-k) (x^k - sum_{j=2..k} (j-1) e_j x^(k-j)), where e_j is the
/// j-th elementary symmetric polynomial of the part sizes and n their sum.
IntPolynomial multipartite_charpoly(const std::vector<std::size_t>& parts);

/// Spectrum of K_{q,...,q} with k parts: 0 with multiplicity kq - k,
/// (k-1)q once, -q with multiplicity k-1.
Spectrum multipartite_spectrum(std::size_t q, std::size_t k);

/// Adjacency matrix of K_{p_1,...,p_k}, parts laid out consecutively.
IntMatrix complete_multipartite(const std::vector<std::size_t>& parts);

}  // namespace sudoku_spectra
