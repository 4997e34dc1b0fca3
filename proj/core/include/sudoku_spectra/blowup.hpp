#pragma once

#include <cstddef>
#include <vector>

#include "sudoku_spectra/graph.hpp"
#include "sudoku_spectra/linalg/matrix.hpp"
#include "sudoku_spectra/tiling.hpp"

namespace sudoku_spectra {

/// The k^2 x k^2 blocks that replace template symbols in the blow-up.
struct SubstitutionSet {
  std::size_t k = 0;
  IntMatrix h;  ///< I_k (x) J_k: same inner row
  IntMatrix v;  ///< J_k (x) I_k: same inner column
  IntMatrix b;  ///< J_{k^2}
  IntMatrix d;  ///< J_{k^2} - I_{k^2}
  IntMatrix n;  ///< zero

  const IntMatrix& operator[](TemplateSymbol s) const;
};

SubstitutionSet substitution_set(std::size_t k);

/// Adjacency of the k-fold blow-up, l_b (x) B + l_h (x) H + l_v (x) V + I (x) D.
///
/// Vertex order is subsquare order: all k^2 vertices replacing original cell 1,
/// then those replacing cell 2, and so on, row-major inside each subsquare.
/// Vertex c*k^2 + a*k + b is inner position (a, b) of original cell c.
IntMatrix blown_adjacency(const Tiling& t, std::size_t k);

/// Same matrix, assembled by replacing each entry of template_matrix(t) with
/// its substitution block.
IntMatrix blown_adjacency_from_template(const Tiling& t, std::size_t k);

/// perm[s] is the zero-based row-major index, in the blown-up km x km grid, of
/// the vertex with zero-based subsquare index s.
std::vector<std::size_t> subsquare_permutation(std::size_t m, std::size_t k);

std::vector<std::size_t> invert_permutation(const std::vector<std::size_t>& perm);

/// P^T a P for the permutation matrix with P(perm[s], s) = 1, i.e. the result
/// has entry (s, t) = a(perm[s], perm[t]).
IntMatrix permute(const IntMatrix& a, const std::vector<std::size_t>& perm);

/// True iff adjacency(blow_up_tiling(t, k)), reordered into subsquare order,
/// equals blown_adjacency(t, k).
bool reconcile(const Tiling& t, std::size_t k);

}  // namespace sudoku_spectra
