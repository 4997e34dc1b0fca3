#include "sudoku_spectra/linalg/symmetric_eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace sudoku_spectra {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kResidualTolerance = 1e-8;

double frobenius(const RealMatrix& a) {
  double sum = 0.0;
  for (double x : a.data()) sum += x * x;
  return std::sqrt(sum);
}

double off_diagonal(const RealMatrix& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j) sum += a(i, j) * a(i, j);
  return std::sqrt(2.0 * sum);
}

void rotate(RealMatrix& a, RealMatrix& v, std::size_t p, std::size_t q) {
  const double apq = a(p, q);
  const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
  double t = 1.0 / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
  if (theta < 0.0) t = -t;
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const std::size_t n = a.rows();

  for (std::size_t r = 0; r < n; ++r) {
    if (r == p || r == q) continue;
    const double arp = a(r, p);
    const double arq = a(r, q);
    a(r, p) = a(p, r) = c * arp - s * arq;
    a(r, q) = a(q, r) = s * arp + c * arq;
  }
  a(p, p) -= t * apq;
  a(q, q) += t * apq;
  a(p, q) = a(q, p) = 0.0;

  for (std::size_t r = 0; r < n; ++r) {
    const double vrp = v(r, p);
    const double vrq = v(r, q);
    v(r, p) = c * vrp - s * vrq;
    v(r, q) = s * vrp + c * vrq;
  }
}

}  // namespace

SymmetricEigen symmetric_eigen(const RealMatrix& input) {
  if (!is_symmetric(input)) throw DimensionMismatch("symmetric_eigen: matrix is not symmetric");
  const std::size_t n = input.rows();
  const double norm = frobenius(input);

  RealMatrix a = input;
  RealMatrix v = RealMatrix::identity(n);
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    const double off = off_diagonal(a);
    if (off == 0.0 || off <= 1e-15 * norm) break;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q)
        if (a(p, q) != 0.0) rotate(a, v, p, q);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x) < a(y, y); });

  SymmetricEigen out;
  out.values.resize(n);
  out.vectors = RealMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    out.values[j] = a(order[j], order[j]);
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, j) = v(r, order[j]);
  }

  for (std::size_t j = 0; j < n; ++j) {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double av = 0.0;
      for (std::size_t l = 0; l < n; ++l) av += input(i, l) * out.vectors(l, j);
      const double r = av - out.values[j] * out.vectors(i, j);
      sum += r * r;
    }
    out.max_residual = std::max(out.max_residual, std::sqrt(sum));
  }
  if (out.max_residual > kResidualTolerance * norm) {
    throw ConvergenceError("symmetric_eigen: residual " + std::to_string(out.max_residual) +
                           " exceeds tolerance after " + std::to_string(kMaxSweeps) + " sweeps");
  }
  return out;
}

SymmetricEigen symmetric_eigen(const IntMatrix& a) { return symmetric_eigen(to_real(a)); }

std::vector<double> float_eigen(const IntMatrix& a) { return symmetric_eigen(a).values; }

std::size_t numerical_rank(const std::vector<RealVector>& vectors, double threshold) {
  if (vectors.empty()) return 0;
  const std::size_t dim = vectors.front().size();
  std::vector<RealVector> cols;
  cols.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (v.size() != dim) throw DimensionMismatch("numerical_rank: vectors of different length");
    const double len = norm2(v);
    if (len == 0.0) continue;
    RealVector u(v);
    for (double& x : u) x /= len;
    cols.push_back(std::move(u));
  }

  std::size_t rank = 0;
  for (std::size_t step = 0; step < std::min(dim, cols.size()); ++step) {
    // Pivot: the remaining column with the largest norm below row `step`.
    std::size_t best = step;
    double best_norm = -1.0;
    for (std::size_t j = step; j < cols.size(); ++j) {
      double s = 0.0;
      for (std::size_t i = step; i < dim; ++i) s += cols[j][i] * cols[j][i];
      if (s > best_norm) {
        best_norm = s;
        best = j;
      }
    }
    best_norm = std::sqrt(best_norm);
    if (best_norm <= threshold) break;
    std::swap(cols[step], cols[best]);
    ++rank;

    // Householder reflector mapping cols[step][step..] onto a multiple of e_step.
    RealVector w(cols[step].begin() + static_cast<long>(step), cols[step].end());
    const double alpha = w[0] >= 0.0 ? -best_norm : best_norm;
    w[0] -= alpha;
    const double wn = norm2(w);
    if (wn == 0.0) continue;
    for (double& x : w) x /= wn;
    for (std::size_t j = step; j < cols.size(); ++j) {
      double d = 0.0;
      for (std::size_t i = 0; i < w.size(); ++i) d += w[i] * cols[j][step + i];
      for (std::size_t i = 0; i < w.size(); ++i) cols[j][step + i] -= 2.0 * d * w[i];
    }
  }
  return rank;
}

}  // namespace sudoku_spectra
