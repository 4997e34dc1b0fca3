#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sudoku_spectra/linalg/matrix.hpp"
#include "sudoku_spectra/tiling.hpp"

namespace sudoku_spectra {

enum class Axis { Row, Column };

/// Adjacency split by cause. All three are m^2 x m^2, symmetric, 0/1 with zero
/// diagonal, in row-major cell order. The implicit fourth layer is the identity.
struct LayerDecomposition {
  std::size_t m = 0;
  std::size_t blocks = 0;  ///< block count; 0 means m
  IntMatrix l_b;  ///< same block
  IntMatrix l_h;  ///< same row, different blocks
  IntMatrix l_v;  ///< same column, different blocks
};

LayerDecomposition layers(const Tiling& t);

/// l_b + l_h + l_v.
IntMatrix adjacency(const Tiling& t);

/// counts[i][j] = number of cells of row i (or column i) lying in block j.
/// Every row of counts sums to m.
struct BlockRowProfile {
  Axis axis = Axis::Row;
  std::vector<std::vector<std::size_t>> counts;
};

BlockRowProfile block_row_profile(const Tiling& t, Axis axis);

enum class TemplateSymbol : char { D = 'D', B = 'B', H = 'H', V = 'V', N = 'N' };

/// Symbolic adjacency: D on the diagonal, otherwise the layer the pair of cells
/// belongs to, or N for non-adjacent cells.
struct TemplateMatrix {
  std::size_t n = 0;
  std::vector<TemplateSymbol> symbols;  ///< row-major n x n

  TemplateSymbol operator()(std::size_t i, std::size_t j) const { return symbols[i * n + j]; }
  friend bool operator==(const TemplateMatrix&, const TemplateMatrix&) = default;
};

TemplateMatrix template_matrix(const Tiling& t);

/// Rows of space-separated symbols.
std::string render_template(const TemplateMatrix& tm);

struct StructureReport {
  /// Sizes of the cliques found in l_b, one per block.
  std::vector<std::size_t> block_cliques;
  /// Part sizes of the complete multipartite graph induced by l_h on each row
  /// (l_v on each column), ascending.
  std::vector<std::vector<std::size_t>> row_parts;
  std::vector<std::vector<std::size_t>> column_parts;
};

/// Checks that l_b is m disjoint copies of K_m (in general: one clique per
/// block, all of equal size) and that l_h (l_v) restricted to each row
/// (column) is complete multipartite with no edges leaving it.
/// Throws StructureViolation naming the offending block, row or column.
StructureReport verify_layer_structure(const LayerDecomposition& d);

}  // namespace sudoku_spectra
