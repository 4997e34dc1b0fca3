#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "sudoku_spectra/errors.hpp"

namespace sudoku_spectra {

using BigInt = mpz_class;
using Rational = mpq_class;

using RationalVector = std::vector<Rational>;
using RealVector = std::vector<double>;

/// Dense row-major matrix. Entry type is BigInt, Rational or double.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  explicit Matrix(std::size_t n) : Matrix(n, n) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Matrix ones(std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    for (auto& x : m.data_) x = 1;
    return m;
  }
  static Matrix ones(std::size_t n) { return ones(n, n); }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  std::span<const T> data() const noexcept { return data_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<BigInt>;
using RationalMatrix = Matrix<Rational>;
using RealMatrix = Matrix<double>;

namespace detail {

inline void require_same_shape(std::size_t r1, std::size_t c1, std::size_t r2, std::size_t c2,
                               const char* op) {
  if (r1 != r2 || c1 != c2) {
    throw DimensionMismatch(std::string(op) + ": " + std::to_string(r1) + "x" +
                            std::to_string(c1) + " vs " + std::to_string(r2) + "x" +
                            std::to_string(c2));
  }
}

}  // namespace detail

template <typename T>
Matrix<T> operator+(const Matrix<T>& a, const Matrix<T>& b) {
  detail::require_same_shape(a.rows(), a.cols(), b.rows(), b.cols(), "add");
  Matrix<T> out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
  return out;
}

template <typename T>
Matrix<T> operator-(const Matrix<T>& a, const Matrix<T>& b) {
  detail::require_same_shape(a.rows(), a.cols(), b.rows(), b.cols(), "sub");
  Matrix<T> out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
  return out;
}

template <typename T, typename S>
Matrix<T> scale(const S& s, const Matrix<T>& a) {
  Matrix<T> out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = s * a(i, j);
  return out;
}

template <typename T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("mul: " + std::to_string(a.cols()) + " columns vs " +
                            std::to_string(b.rows()) + " rows");
  }
  Matrix<T> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const T& x = a(i, l);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += x * b(l, j);
    }
  }
  return out;
}

template <typename T>
Matrix<T> transpose(const Matrix<T>& a) {
  Matrix<T> out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

/// Entrywise product.
template <typename T>
Matrix<T> hadamard(const Matrix<T>& a, const Matrix<T>& b) {
  detail::require_same_shape(a.rows(), a.cols(), b.rows(), b.cols(), "hadamard");
  Matrix<T> out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) * b(i, j);
  return out;
}

/// Kronecker product: block (i, j) of the result is a(i, j) * b.
template <typename T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const T& x = a(i, j);
      if (x == 0) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q)
          out(i * b.rows() + p, j * b.cols() + q) = x * b(p, q);
    }
  }
  return out;
}

template <typename T>
std::vector<T> kron(const std::vector<T>& a, const std::vector<T>& b) {
  std::vector<T> out(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = a[i] * b[j];
  return out;
}

template <typename T>
bool is_symmetric(const Matrix<T>& a) {
  if (!a.is_square()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j)
      if (a(i, j) != a(j, i)) return false;
  return true;
}

template <typename T>
T trace(const Matrix<T>& a) {
  T sum = 0;
  for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i) sum += a(i, i);
  return sum;
}

std::vector<BigInt> row_sums(const IntMatrix& a);

/// max_i sum_j |a_ij|; bounds every eigenvalue in absolute value.
BigInt max_abs_row_sum(const IntMatrix& a);

bool is_zero(const IntMatrix& a);

/// Symmetric, zero diagonal, entries in {0, 1}.
bool is_adjacency_matrix(const IntMatrix& a);

/// Product of an integer matrix with a rational vector.
RationalVector apply(const IntMatrix& a, const RationalVector& v);
RealVector apply(const IntMatrix& a, const RealVector& v);

RealMatrix to_real(const IntMatrix& a);
RealVector to_real(const RationalVector& v);

double frobenius_norm(const IntMatrix& a);
double norm2(const RealVector& v);

/// Rows of 0/1 (or decimal) entries separated by spaces.
std::string render_matrix(const IntMatrix& a);

}  // namespace sudoku_spectra
