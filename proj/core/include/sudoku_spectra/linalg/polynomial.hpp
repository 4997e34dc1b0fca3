#pragma once

#include <string>
#include <vector>

#include "sudoku_spectra/linalg/matrix.hpp"

namespace sudoku_spectra {

/// Univariate polynomial with big-integer coefficients, stored degree-ascending.
/// The zero polynomial has no coefficients and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);

  static IntPolynomial constant(const BigInt& c);
  static IntPolynomial monomial(std::size_t degree, const BigInt& c = 1);
  /// x - r
  static IntPolynomial linear_root(const BigInt& r);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  /// Coefficient of x^i; zero past the degree.
  BigInt coeff(std::size_t i) const;
  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }

  BigInt evaluate(const BigInt& x) const;
  Rational evaluate(const Rational& x) const;

  /// Human-readable form, highest degree first, e.g. "x^3 - 3x^2".
  std::string to_string() const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void normalize();

  std::vector<BigInt> coeffs_;
};

IntPolynomial pow(const IntPolynomial& p, std::size_t e);

/// Divides p by (x - r). Returns the quotient; `remainder` receives p(r).
IntPolynomial divide_linear(const IntPolynomial& p, const BigInt& r, BigInt& remainder);

}  // namespace sudoku_spectra
