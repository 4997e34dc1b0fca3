#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "sudoku_spectra/sudoku_spectra.hpp"

using namespace sudoku_spectra;
using namespace sudoku_spectra::testing;

namespace {

using Part = std::vector<std::pair<BigInt, std::size_t>>;

IntPolynomial poly(std::initializer_list<long> ascending) {
  std::vector<BigInt> c;
  for (long v : ascending) c.emplace_back(v);
  return IntPolynomial(std::move(c));
}

IntMatrix conjugate(const IntMatrix& a, const std::vector<std::size_t>& perm) {
  return permute(a, perm);
}

}  // namespace

TEST(ExactSpectrum, ClassicalShidokuPinned) {
  const Spectrum s = exact_spectrum(adjacency(classical_tiling(2)));
  EXPECT_TRUE(s.is_integral());
  EXPECT_EQ(s.integer_part, (Part{{-3, 4}, {-1, 5}, {1, 4}, {3, 2}, {7, 1}}));
  // Cross-check against the float oracle.
  std::vector<double> exact;
  for (const auto& v : s.integer_values()) exact.push_back(v.get_d());
  EXPECT_LT(max_paired_gap(exact, float_eigen(adjacency(classical_tiling(2)))), 1e-8);
}

TEST(ExactSpectrum, AllOnes) {
  const Spectrum s = exact_spectrum(IntMatrix::ones(4));
  EXPECT_EQ(s.integer_part, (Part{{0, 3}, {4, 1}}));
  EXPECT_EQ(s.residual, IntPolynomial::constant(1));
  EXPECT_EQ(s.dimension(), 4u);
}

TEST(ExactSpectrum, PinnedNonIntegralRandomTiling) {
  // random_tiling(4, 1): no integer eigenvalue at all.
  const IntMatrix a = adjacency(random_tiling(4, 1));
  const Spectrum s = exact_spectrum(a);
  EXPECT_TRUE(s.integer_part.empty());
  EXPECT_EQ(s.residual_degree(), 16u);
  EXPECT_FALSE(s.is_integral());
  // The oracle sees non-integers too.
  const auto eig = float_eigen(a);
  EXPECT_TRUE(std::any_of(eig.begin(), eig.end(),
                          [](double x) { return std::abs(x - std::round(x)) > 1e-3; }));
}

TEST(ExactSpectrum, ReferenceTiling) {
  const Spectrum s = exact_spectrum(adjacency(reference_tiling()));
  EXPECT_EQ(s.integer_part, (Part{{-2, 3}}));
  EXPECT_EQ(s.residual_degree(), 13u);
  EXPECT_EQ(s.dimension(), 16u);
}

TEST(IsIntegral, Examples) {
  EXPECT_TRUE(is_integral(adjacency(classical_tiling(3))));
  IntMatrix p3(3);
  p3(0, 1) = p3(1, 0) = p3(1, 2) = p3(2, 1) = 1;
  EXPECT_FALSE(is_integral(p3));
  for (std::size_t k = 1; k <= 6; ++k) {
    const IntMatrix kk = IntMatrix::ones(k) - IntMatrix::identity(k);
    EXPECT_TRUE(is_integral(kk));
    Part expected;
    if (k > 1) expected.emplace_back(-1, k - 1);
    if (k == 1) expected.emplace_back(0, 1); else expected.emplace_back(k - 1, 1);
    EXPECT_EQ(exact_spectrum(kk).integer_part, expected);
  }
}

TEST(Multipartite, CharPolyExamples) {
  EXPECT_EQ(multipartite_charpoly({1, 1}), poly({-1, 0, 1}));
  EXPECT_EQ(multipartite_charpoly({1, 2}), poly({0, -2, 0, 1}));
  // Equal parts factor as x^(kq-k) (x - (k-1)q) (x + q)^(k-1).
  for (std::size_t q = 1; q <= 4; ++q) {
    for (std::size_t k = 1; k <= 4; ++k) {
      const IntPolynomial factored = IntPolynomial::monomial(k * q - k) *
                                     IntPolynomial::linear_root(BigInt((k - 1) * q)) *
                                     pow(IntPolynomial::linear_root(-BigInt(q)), k - 1);
      EXPECT_EQ(multipartite_charpoly(std::vector<std::size_t>(k, q)), factored);
    }
  }
}

TEST(Multipartite, SpectrumExamples) {
  EXPECT_EQ(multipartite_spectrum(3, 2).integer_part, (Part{{-3, 1}, {0, 4}, {3, 1}}));
  EXPECT_EQ(multipartite_spectrum(1, 5).integer_part, (Part{{-1, 4}, {4, 1}}));
  const Spectrum k222 = multipartite_spectrum(2, 3);
  EXPECT_EQ(k222.integer_part, (Part{{-2, 2}, {0, 3}, {4, 1}}));
  EXPECT_EQ(k222, exact_spectrum(complete_multipartite({2, 2, 2})));
}

TEST(Property, MultipartiteCharPolyMatchesConstruction) {
  for (std::size_t q = 1; q <= 5; ++q) {
    for (std::size_t k = 1; k <= 5; ++k) {
      const std::vector<std::size_t> parts(k, q);
      EXPECT_EQ(multipartite_charpoly(parts), char_poly(complete_multipartite(parts)));
      EXPECT_EQ(multipartite_spectrum(q, k), exact_spectrum(complete_multipartite(parts)));
    }
  }
  // Unequal parts as well.
  std::mt19937_64 rng(59);
  for (int i = 0; i < 40; ++i) {
    std::vector<std::size_t> parts;
    const std::size_t k = 1 + rng() % 5;
    for (std::size_t j = 0; j < k; ++j) parts.push_back(1 + rng() % 4);
    EXPECT_EQ(multipartite_charpoly(parts), char_poly(complete_multipartite(parts)));
  }
}

TEST(Property, ExactAgreesWithFloatOracle) {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 40; ++i) {
    const IntMatrix a = random_adjacency(rng, 1 + rng() % 30);
    const Spectrum s = exact_spectrum(a);
    EXPECT_EQ(s.dimension(), a.rows());
    std::vector<double> combined;
    for (const auto& v : s.integer_values()) combined.push_back(v.get_d());
    for (double r : real_roots(s.residual)) combined.push_back(r);
    EXPECT_LT(max_paired_gap(combined, float_eigen(a)), 1e-6);
  }
}

TEST(Property, IntegralityIsConjugationInvariant) {
  std::mt19937_64 rng(67);
  std::vector<Tiling> tilings{classical_tiling(2), reference_tiling(), noncommuting_tiling(),
                              row_tiling(3)};
  for (int i = 0; i < 20; ++i) tilings.push_back(random_tiling_from(rng, 2 + rng() % 3));
  for (const auto& t : tilings) {
    const IntMatrix a = adjacency(t);
    const Spectrum base = exact_spectrum(a);
    std::vector<std::size_t> perm(a.rows());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_EQ(exact_spectrum(conjugate(a, perm)), base);
    // Relabel blocks.
    std::vector<std::uint32_t> relabel(t.block_count());
    std::iota(relabel.begin(), relabel.end(), 0u);
    std::shuffle(relabel.begin(), relabel.end(), rng);
    std::vector<std::uint32_t> blocks;
    for (auto b : t.blocks()) blocks.push_back(relabel[b]);
    EXPECT_EQ(is_integral(adjacency(Tiling(t.size(), blocks))), base.is_integral());
  }
}

TEST(Spectrum, TraceThroughCoefficients) {
  std::mt19937_64 rng(71);
  for (int i = 0; i < 30; ++i) {
    const IntMatrix a = adjacency(random_tiling_from(rng, 2 + rng() % 3));
    const Spectrum s = exact_spectrum(a);
    BigInt sum = 0;
    for (const auto& v : s.integer_values()) sum += v;
    // Sum of residual roots is minus the subleading coefficient.
    if (!s.residual.is_constant()) sum -= s.residual.coeff(s.residual.degree() - 1);
    EXPECT_EQ(sum, trace(a));
  }
}
