#include "sudoku_spectra/linalg/matrix.hpp"

#include <cmath>
#include <sstream>

namespace sudoku_spectra {

std::vector<BigInt> row_sums(const IntMatrix& a) {
  std::vector<BigInt> sums(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (const auto& x : a.row(i)) sums[i] += x;
  return sums;
}

BigInt max_abs_row_sum(const IntMatrix& a) {
  BigInt best = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    BigInt s = 0;
    for (const auto& x : a.row(i)) s += abs(x);
    if (s > best) best = s;
  }
  return best;
}

bool is_zero(const IntMatrix& a) {
  for (const auto& x : a.data())
    if (x != 0) return false;
  return true;
}

bool is_adjacency_matrix(const IntMatrix& a) {
  if (!is_symmetric(a)) return false;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (a(i, i) != 0) return false;
    for (const auto& x : a.row(i))
      if (x != 0 && x != 1) return false;
  }
  return true;
}

RationalVector apply(const IntMatrix& a, const RationalVector& v) {
  if (a.cols() != v.size()) throw DimensionMismatch("apply: vector length mismatch");
  RationalVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Rational sum = 0;
    const auto row = a.row(i);
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] == 0 || v[j] == 0) continue;
      if (row[j] == 1) {
        sum += v[j];
      } else {
        sum += Rational(row[j]) * v[j];
      }
    }
    out[i] = sum;
  }
  return out;
}

RealVector apply(const IntMatrix& a, const RealVector& v) {
  if (a.cols() != v.size()) throw DimensionMismatch("apply: vector length mismatch");
  RealVector out(a.rows(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const auto row = a.row(i);
    double sum = 0.0;
    for (std::size_t j = 0; j < row.size(); ++j)
      if (row[j] != 0) sum += row[j].get_d() * v[j];
    out[i] = sum;
  }
  return out;
}

RealMatrix to_real(const IntMatrix& a) {
  RealMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j).get_d();
  return out;
}

RealVector to_real(const RationalVector& v) {
  RealVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].get_d();
  return out;
}

double frobenius_norm(const IntMatrix& a) {
  double sum = 0.0;
  for (const auto& x : a.data()) {
    const double d = x.get_d();
    sum += d * d;
  }
  return std::sqrt(sum);
}

double norm2(const RealVector& v) {
  double sum = 0.0;
  for (double x : v) sum += x * x;
  return std::sqrt(sum);
}

std::string render_matrix(const IntMatrix& a) {
  std::ostringstream out;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) out << ' ';
      out << a(i, j).get_str();
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace sudoku_spectra
