#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sudoku_spectra/linalg/matrix.hpp"
#include "sudoku_spectra/linalg/polynomial.hpp"

namespace sudoku_spectra {

/// det(a) by Bareiss fraction-free elimination.
BigInt determinant(IntMatrix a);

/// Rank over the rationals by Bareiss fraction-free elimination.
std::size_t rank(IntMatrix a);
std::size_t rank(const RationalMatrix& a);

/// Rank of a family of vectors (treated as rows).
std::size_t rank(std::span<const RationalVector> vectors);

/// det(xI - a), exactly.
///
/// The polynomial is computed modulo a sequence of 62-bit primes (Hessenberg
/// reduction over each prime field) and lifted by Chinese remaindering until
/// the modulus exceeds twice the coefficient bound (1 + D)^n, where D is the
/// largest absolute row sum. Every eigenvalue has modulus at most D, so each
/// coefficient, an elementary symmetric function of the eigenvalues, is below
/// that bound and the symmetric lift is exact.
IntPolynomial char_poly(const IntMatrix& a);

struct IntegerRoots {
  /// Ascending by root.
  std::vector<std::pair<BigInt, std::size_t>> roots;
  /// Factor left after removing every integer root; has no integer roots.
  IntPolynomial residual;

  std::size_t root_count() const;
};

/// Splits a monic polynomial into its integer roots (with multiplicity) and
/// an integer-root-free residual.
///
/// Candidates are the divisors of the constant term with |r| <= bound. When
/// no bound is supplied the Fujiwara bound of the polynomial is used.
IntegerRoots integer_roots(const IntPolynomial& p,
                           const std::optional<BigInt>& bound = std::nullopt);

/// Exact basis of ker(a - lambda I), one primitive integer vector per free
/// column, first nonzero entry positive, sorted lexicographically.
/// Empty iff lambda is not an eigenvalue.
std::vector<RationalVector> rational_kernel(const IntMatrix& a, const BigInt& lambda);

/// Scales v to a primitive integer vector whose first nonzero entry is positive.
RationalVector primitive(const RationalVector& v);

}  // namespace sudoku_spectra
