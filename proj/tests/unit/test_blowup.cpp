#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "sudoku_spectra/sudoku_spectra.hpp"

using namespace sudoku_spectra;
using namespace sudoku_spectra::testing;

TEST(Substitution, KOne) {
  const auto s = substitution_set(1);
  const IntMatrix one = IntMatrix::ones(1);
  EXPECT_EQ(s.h, one);
  EXPECT_EQ(s.v, one);
  EXPECT_EQ(s.b, one);
  EXPECT_EQ(s.d, IntMatrix(1));
  EXPECT_EQ(s.n, IntMatrix(1));
}

TEST(Substitution, NineByNineReference) {
  const auto s = substitution_set(3);
  EXPECT_EQ(s.h, load_int_matrix("substitution_h3.txt"));
  EXPECT_EQ(s.v, load_int_matrix("substitution_v3.txt"));
}

TEST(Substitution, DefinitionsForKTwo) {
  const auto s = substitution_set(2);
  EXPECT_EQ(s.b, IntMatrix::ones(4));
  EXPECT_EQ(s.d, IntMatrix::ones(4) - IntMatrix::identity(4));
  EXPECT_EQ(s.h, kron(IntMatrix::identity(2), IntMatrix::ones(2)));
  EXPECT_EQ(s.v, kron(IntMatrix::ones(2), IntMatrix::identity(2)));
  EXPECT_EQ(s[TemplateSymbol::N], IntMatrix(4));
  EXPECT_EQ(s[TemplateSymbol::B], s.b);
}

TEST(BlownAdjacency, KOneIsAdjacency) {
  std::mt19937_64 rng(89);
  for (int i = 0; i < 20; ++i) {
    const Tiling t = random_tiling_from(rng, 1 + rng() % 5);
    EXPECT_EQ(blown_adjacency(t, 1), adjacency(t));
  }
}

TEST(BlownAdjacency, ReferenceThreeFoldNeighbourhood) {
  const Tiling t = reference_tiling();
  const IntMatrix up = blown_adjacency(t, 3);
  ASSERT_EQ(up.rows(), 144u);
  EXPECT_TRUE(is_adjacency_matrix(up));
  // Inner position (1,1) of original cell 6 (row 2, column 2, block 2).
  const std::size_t v = 5 * 9 + 4;
  const auto perm = subsquare_permutation(4, 3);
  const Tiling big = blow_up_tiling(t, 3);
  const std::size_t g = perm[v];
  for (std::size_t w = 0; w < 144; ++w) {
    if (w == v) continue;
    const std::size_t h = perm[w];
    const bool expected = big.block_of(h) == big.block_of(g) || big.row(h) == big.row(g) ||
                          big.col(h) == big.col(g);
    EXPECT_EQ(up(v, w), expected ? 1 : 0) << w;
  }
  // Block of 36 vertices, plus row and column neighbours outside it.
  std::size_t degree = 0;
  for (std::size_t w = 0; w < 144; ++w) degree += up(v, w) == 1;
  std::size_t row_out = 0, col_out = 0;
  for (std::size_t c = 0; c < 12; ++c) {
    row_out += big.block_of(big.cell_at(big.row(g), c)) != big.block_of(g);
    col_out += big.block_of(big.cell_at(c, big.col(g))) != big.block_of(g);
  }
  EXPECT_EQ(degree, 35 + row_out + col_out);
}

TEST(Permutation, Examples) {
  const auto id = subsquare_permutation(3, 1);
  for (std::size_t i = 0; i < id.size(); ++i) EXPECT_EQ(id[i], i);
  // m = 2, k = 2: one-based subsquare index 3 (cell 1, inner (1, 0)) lands
  // on big-grid row 2, column 1, one-based row-major index 5.
  EXPECT_EQ(subsquare_permutation(2, 2)[2], 4u);
}

TEST(Property, PermutationRoundTrip) {
  for (std::size_t m = 1; m <= 4; ++m) {
    for (std::size_t k = 1; k <= 4; ++k) {
      const auto p = subsquare_permutation(m, k);
      const auto inv = invert_permutation(p);
      for (std::size_t i = 0; i < p.size(); ++i) {
        EXPECT_EQ(p[inv[i]], i);
        EXPECT_EQ(inv[p[i]], i);
      }
    }
  }
}

TEST(Permute, MatchesPermutationMatrix) {
  std::mt19937_64 rng(97);
  const IntMatrix a = random_int_matrix(rng, 5, 5, -4, 4);
  std::vector<std::size_t> perm(5);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  IntMatrix p(5);
  for (std::size_t s = 0; s < 5; ++s) p(perm[s], s) = 1;
  EXPECT_EQ(permute(a, perm), transpose(p) * a * p);
}

TEST(Reconcile, Examples) {
  EXPECT_TRUE(reconcile(reference_tiling(), 2));
  EXPECT_TRUE(reconcile(reference_tiling(), 3));
  EXPECT_TRUE(reconcile(classical_tiling(2), 2));
  EXPECT_TRUE(reconcile(classical_tiling(2), 3));
  EXPECT_TRUE(reconcile(row_tiling(2), 2));
  EXPECT_TRUE(reconcile(noncommuting_tiling(), 1));
}

TEST(Property, ReconcileRandom) {
  std::mt19937_64 rng(101);
  for (int i = 0; i < 60; ++i) {
    const Tiling t = random_tiling_from(rng, 1 + rng() % 4);
    EXPECT_TRUE(reconcile(t, 1 + rng() % 3)) << render_tiling(t);
  }
}

TEST(Property, TemplateRouteEqualsKroneckerRoute) {
  std::mt19937_64 rng(103);
  for (int i = 0; i < 40; ++i) {
    const Tiling t = random_tiling_from(rng, 1 + rng() % 4);
    const std::size_t k = 1 + rng() % 3;
    EXPECT_EQ(blown_adjacency_from_template(t, k), blown_adjacency(t, k));
  }
}

TEST(Property, RowSumsScale) {
  std::mt19937_64 rng(107);
  for (int i = 0; i < 40; ++i) {
    const Tiling t = random_tiling_from(rng, 1 + rng() % 4);
    const std::size_t k = 1 + rng() % 3;
    const auto d = layers(t);
    const auto b = row_sums(d.l_b), h = row_sums(d.l_h), v = row_sums(d.l_v);
    const auto up = row_sums(blown_adjacency(t, k));
    const long kk = static_cast<long>(k);
    for (std::size_t c = 0; c < t.cell_count(); ++c) {
      // rowsum(X (x) Y) = rowsum(X) rowsum(Y); D contributes k^2 - 1.
      const BigInt expected = b[c] * kk * kk + h[c] * kk + v[c] * kk + (kk * kk - 1);
      for (std::size_t s = 0; s < k * k; ++s) EXPECT_EQ(up[c * k * k + s], expected);
    }
  }
}
