#include "sudoku_spectra/linalg/exact.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>

namespace sudoku_spectra {

namespace {

// Fraction-free (Bareiss) row echelon form, in place. Every intermediate entry
// is a minor of the input, so the division by the previous pivot is exact even
// when columns without a pivot are skipped.
struct Echelon {
  std::vector<std::size_t> pivot_cols;
  int sign = 1;
};

Echelon bareiss(IntMatrix& m) {
  Echelon e;
  BigInt prev = 1;
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
    std::size_t p = r;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
      e.sign = -e.sign;
    }
    const BigInt pivot = m(r, col);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      const BigInt factor = m(i, col);
      for (std::size_t j = col + 1; j < m.cols(); ++j) {
        BigInt v = pivot * m(i, j) - factor * m(r, j);
#ifndef NDEBUG
        assert(mpz_divisible_p(v.get_mpz_t(), prev.get_mpz_t()));
#endif
        mpz_divexact(m(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, col) = 0;
    }
    prev = pivot;
    e.pivot_cols.push_back(col);
    ++r;
  }
  return e;
}

BigInt lcm_of_denominators(const RationalVector& v) {
  BigInt l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  return l;
}

// Modular arithmetic for the characteristic polynomial.
using u64 = std::uint64_t;
__extension__ using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powmod(u64 base, u64 e, u64 p) {
  u64 result = 1;
  base %= p;
  while (e) {
    if (e & 1) result = mulmod(result, base, p);
    base = mulmod(base, base, p);
    e >>= 1;
  }
  return result;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

// Deterministic Miller-Rabin; these bases are exact for all n < 3.3e24.
bool is_prime(u64 n) {
  if (n < 2) return false;
  static constexpr u64 kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 b : kBases) {
    if (n % b == 0) return n == b;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 b : kBases) {
    u64 x = powmod(b, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// Largest prime strictly below n (n > 3).
u64 next_prime_below(u64 n) {
  u64 c = n - 1;
  if (c % 2 == 0) --c;
  while (!is_prime(c)) c -= 2;
  return c;
}

// Coefficients (ascending, monic) of det(xI - a) over GF(p).
std::vector<u64> char_poly_mod(const IntMatrix& a, u64 p) {
  const std::size_t n = a.rows();
  std::vector<u64> h(n * n);
  auto at = [&](std::size_t i, std::size_t j) -> u64& { return h[i * n + j]; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) at(i, j) = mpz_fdiv_ui(a(i, j).get_mpz_t(), p);

  // Similarity reduction to upper Hessenberg form.
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t piv = j + 1;
    while (piv < n && at(piv, j) == 0) ++piv;
    if (piv == n) continue;
    if (piv != j + 1) {
      for (std::size_t c = 0; c < n; ++c) std::swap(at(piv, c), at(j + 1, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(at(r, piv), at(r, j + 1));
    }
    const u64 inv = invmod(at(j + 1, j), p);
    for (std::size_t i = j + 2; i < n; ++i) {
      if (at(i, j) == 0) continue;
      const u64 u = mulmod(at(i, j), inv, p);
      for (std::size_t c = j; c < n; ++c) {
        at(i, c) = (at(i, c) + p - mulmod(u, at(j + 1, c), p)) % p;
      }
      for (std::size_t r = 0; r < n; ++r) {
        at(r, j + 1) = (at(r, j + 1) + mulmod(u, at(r, i), p)) % p;
      }
    }
  }

  // p_m = (x - h_{m-1,m-1}) p_{m-1} - sum_i h_{i-1,m-1} (prod sub-diagonal) p_{i-1}
  std::vector<std::vector<u64>> polys(n + 1);
  polys[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    const auto& prev = polys[m - 1];
    std::vector<u64> cur(m + 1, 0);
    const u64 diag = at(m - 1, m - 1);
    for (std::size_t d = 0; d < prev.size(); ++d) {
      cur[d + 1] = (cur[d + 1] + prev[d]) % p;
      cur[d] = (cur[d] + p - mulmod(diag, prev[d], p)) % p;
    }
    u64 t = 1;
    for (std::size_t i = m - 1; i >= 1; --i) {
      t = mulmod(t, at(i, i - 1), p);
      if (t == 0) break;
      const u64 coef = mulmod(at(i - 1, m - 1), t, p);
      if (coef != 0) {
        for (std::size_t d = 0; d < polys[i - 1].size(); ++d) {
          cur[d] = (cur[d] + p - mulmod(coef, polys[i - 1][d], p)) % p;
        }
      }
    }
    polys[m] = std::move(cur);
  }
  return polys[n];
}

std::size_t rank_mod(const IntMatrix& a, u64 p) {
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<u64> h(rows * cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) h[i * cols + j] = mpz_fdiv_ui(a(i, j).get_mpz_t(), p);
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t piv = r;
    while (piv < rows && h[piv * cols + col] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(h[piv * cols + j], h[r * cols + j]);
    const u64 inv = invmod(h[r * cols + col], p);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const u64 f = mulmod(h[i * cols + col], inv, p);
      if (f == 0) continue;
      for (std::size_t j = col; j < cols; ++j)
        h[i * cols + j] = (h[i * cols + j] + p - mulmod(f, h[r * cols + j], p)) % p;
    }
    ++r;
  }
  return r;
}

BigInt ceil_root(const BigInt& x, unsigned long k) {
  BigInt r;
  if (mpz_root(r.get_mpz_t(), x.get_mpz_t(), k) == 0) r += 1;
  return r;
}

// 2 * max(|a_{n-1}|, |a_{n-2}|^(1/2), ..., |a_0 / 2|^(1/n)) for monic p.
BigInt fujiwara_bound(const IntPolynomial& p) {
  const auto n = static_cast<std::size_t>(p.degree());
  BigInt best = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    BigInt c = abs(p.coeff(n - i));
    if (i == n) c = (c + 1) / 2;
    if (c == 0) continue;
    const BigInt r = ceil_root(c, static_cast<unsigned long>(i));
    if (r > best) best = r;
  }
  return 2 * best;
}

}  // namespace

BigInt determinant(IntMatrix a) {
  if (!a.is_square()) throw DimensionMismatch("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  const Echelon e = bareiss(a);
  if (e.pivot_cols.size() < n) return 0;
  return e.sign * a(n - 1, n - 1);
}

std::size_t rank(IntMatrix a) {
  // Rank modulo a prime never exceeds the rational rank, so a full modular rank
  // settles the question without coefficient growth.
  const std::size_t full = std::min(a.rows(), a.cols());
  if (full == 0) return 0;
  if (rank_mod(a, next_prime_below(u64{1} << 62)) == full) return full;
  return bareiss(a).pivot_cols.size();
}

std::size_t rank(const RationalMatrix& a) {
  IntMatrix m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const auto row = a.row(i);
    BigInt l = 1;
    for (const auto& x : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    for (std::size_t j = 0; j < a.cols(); ++j) {
      m(i, j) = row[j].get_num() * (l / row[j].get_den());
    }
  }
  return rank(std::move(m));
}

std::size_t rank(std::span<const RationalVector> vectors) {
  if (vectors.empty()) return 0;
  const std::size_t dim = vectors.front().size();
  IntMatrix m(vectors.size(), dim);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != dim) throw DimensionMismatch("rank: vectors of different length");
    const BigInt l = lcm_of_denominators(vectors[i]);
    for (std::size_t j = 0; j < dim; ++j) {
      m(i, j) = vectors[i][j].get_num() * (l / vectors[i][j].get_den());
    }
  }
  return rank(std::move(m));
}

IntPolynomial char_poly(const IntMatrix& a) {
  if (!a.is_square()) throw DimensionMismatch("char_poly of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return IntPolynomial::constant(1);

  BigInt bound;
  mpz_pow_ui(bound.get_mpz_t(), BigInt(max_abs_row_sum(a) + 1).get_mpz_t(), n);
  bound *= 2;

  std::vector<BigInt> coeffs(n + 1, 0);
  BigInt modulus = 1;
  u64 p = u64{1} << 62;
  while (modulus <= bound) {
    p = next_prime_below(p);
    const auto residues = char_poly_mod(a, p);
    const u64 m_inv = invmod(mpz_fdiv_ui(modulus.get_mpz_t(), p), p);
    for (std::size_t i = 0; i <= n; ++i) {
      const u64 current = mpz_fdiv_ui(coeffs[i].get_mpz_t(), p);
      const u64 delta = (residues[i] + p - current) % p;
      const u64 t = mulmod(delta, m_inv, p);
      coeffs[i] += modulus * BigInt(static_cast<unsigned long>(t));
    }
    modulus *= BigInt(static_cast<unsigned long>(p));
  }
  const BigInt half = modulus / 2;
  for (auto& c : coeffs)
    if (c > half) c -= modulus;
  return IntPolynomial(std::move(coeffs));
}

std::size_t IntegerRoots::root_count() const {
  std::size_t total = 0;
  for (const auto& [root, mult] : roots) total += mult;
  return total;
}

IntegerRoots integer_roots(const IntPolynomial& p, const std::optional<BigInt>& bound) {
  if (!p.is_monic()) throw DimensionMismatch("integer_roots expects a monic polynomial");
  IntegerRoots out;

  std::size_t zeros = 0;
  while (p.coeff(zeros) == 0) ++zeros;
  IntPolynomial rest(std::vector<BigInt>(p.coefficients().begin() + static_cast<long>(zeros),
                                         p.coefficients().end()));
  if (zeros) out.roots.emplace_back(BigInt(0), zeros);

  if (rest.degree() > 0) {
    BigInt limit = fujiwara_bound(rest);
    if (bound && *bound < limit) limit = *bound;
    for (BigInt r = 1; r <= limit && rest.degree() > 0; ++r) {
      for (const BigInt& candidate : {r, BigInt(-r)}) {
        if (!mpz_divisible_p(rest.coeff(0).get_mpz_t(), candidate.get_mpz_t())) continue;
        std::size_t mult = 0;
        for (;;) {
          BigInt rem;
          IntPolynomial q = divide_linear(rest, candidate, rem);
          if (rem != 0) break;
          rest = std::move(q);
          ++mult;
          if (rest.degree() == 0) break;
        }
        if (mult) out.roots.emplace_back(candidate, mult);
        if (rest.degree() == 0) break;
      }
    }
  }
  std::sort(out.roots.begin(), out.roots.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  out.residual = std::move(rest);
  return out;
}

RationalVector primitive(const RationalVector& v) {
  const BigInt l = lcm_of_denominators(v);
  std::vector<BigInt> ints(v.size());
  BigInt g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    ints[i] = v[i].get_num() * (l / v[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
  }
  if (g == 0) return v;
  for (const auto& x : ints) {
    if (x != 0) {
      if (x < 0) g = -g;
      break;
    }
  }
  RationalVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rational(BigInt(ints[i] / g));
  return out;
}

std::vector<RationalVector> rational_kernel(const IntMatrix& a, const BigInt& lambda) {
  if (!a.is_square()) throw DimensionMismatch("rational_kernel of a non-square matrix");
  const std::size_t n = a.rows();
  IntMatrix m = a;
  for (std::size_t i = 0; i < n; ++i) m(i, i) -= lambda;
  const Echelon e = bareiss(m);

  std::vector<bool> is_pivot(n, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;

  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(n, Rational(0));
    v[free] = 1;
    for (std::size_t r = e.pivot_cols.size(); r-- > 0;) {
      const std::size_t pc = e.pivot_cols[r];
      Rational s = 0;
      for (std::size_t j = pc + 1; j < n; ++j)
        if (m(r, j) != 0 && v[j] != 0) s += Rational(m(r, j)) * v[j];
      v[pc] = -s / Rational(m(r, pc));
    }
    basis.push_back(primitive(v));
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

}  // namespace sudoku_spectra
