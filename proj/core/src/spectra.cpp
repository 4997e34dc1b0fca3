#include "sudoku_spectra/spectra.hpp"

#include <cassert>
#include <map>

namespace sudoku_spectra {

std::size_t Spectrum::integer_count() const {
  std::size_t total = 0;
  for (const auto& [value, mult] : integer_part) total += mult;
  return total;
}

std::size_t Spectrum::residual_degree() const {
  return residual.degree() > 0 ? static_cast<std::size_t>(residual.degree()) : 0;
}

std::vector<BigInt> Spectrum::integer_values() const {
  std::vector<BigInt> out;
  for (const auto& [value, mult] : integer_part) out.insert(out.end(), mult, value);
  return out;
}

Spectrum exact_spectrum(const IntMatrix& a) {
  auto roots = integer_roots(char_poly(a), max_abs_row_sum(a));
  return Spectrum{std::move(roots.roots), std::move(roots.residual)};
}

bool is_integral(const IntMatrix& a) { return exact_spectrum(a).is_integral(); }

IntPolynomial multipartite_charpoly(const std::vector<std::size_t>& parts) {
  const std::size_t k = parts.size();
  std::size_t n = 0;
  for (auto p : parts) n += p;

  // e[j] = j-th elementary symmetric polynomial of the part sizes.
  std::vector<BigInt> e(k + 1, 0);
  e[0] = 1;
  for (auto p : parts)
    for (std::size_t j = k; j >= 1; --j) e[j] += e[j - 1] * static_cast<unsigned long>(p);

  std::vector<BigInt> inner(k + 1, 0);
  inner[k] = 1;
  for (std::size_t j = 2; j <= k; ++j) inner[k - j] -= static_cast<unsigned long>(j - 1) * e[j];
  return IntPolynomial::monomial(n - k) * IntPolynomial(std::move(inner));
}

Spectrum multipartite_spectrum(std::size_t q, std::size_t k) {
  std::map<BigInt, std::size_t> mult;
  const auto add = [&](const BigInt& value, std::size_t count) {
    if (count) mult[value] += count;
  };
  add(0, k * q - k);
  add(BigInt(static_cast<unsigned long>((k - 1) * q)), 1);
  add(-BigInt(static_cast<unsigned long>(q)), k - 1);

  Spectrum s;
  for (const auto& [value, count] : mult) s.integer_part.emplace_back(value, count);
#ifndef NDEBUG
  const auto check = integer_roots(multipartite_charpoly(std::vector<std::size_t>(k, q)));
  assert(check.residual.is_constant() && check.roots == s.integer_part);
#endif
  return s;
}

IntMatrix complete_multipartite(const std::vector<std::size_t>& parts) {
  std::vector<std::size_t> part_of;
  for (std::size_t i = 0; i < parts.size(); ++i) part_of.insert(part_of.end(), parts[i], i);
  IntMatrix a(part_of.size());
  for (std::size_t i = 0; i < part_of.size(); ++i)
    for (std::size_t j = 0; j < part_of.size(); ++j)
      if (part_of[i] != part_of[j]) a(i, j) = 1;
  return a;
}

}  // namespace sudoku_spectra
