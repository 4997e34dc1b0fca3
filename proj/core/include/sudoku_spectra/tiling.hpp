#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sudoku_spectra {

/// One-based row-major cell number, as used in all user-facing I/O.
struct CellIndex {
  std::size_t value;

  std::size_t row(std::size_t m) const { return (value - 1) / m + 1; }
  std::size_t col(std::size_t m) const { return (value - 1) % m + 1; }
};

/// Partition of the m x m cell grid into blocks of equal size.
///
/// A puzzle tiling has m blocks of m cells. A k-fold blow-up keeps the block
/// count of its original, so it has side km and blocks of k^2 m cells; the
/// block count is therefore stored separately.
///
/// Cells are stored row-major and zero-based; `block_of(c)` is in
/// [0, block_count()). A Tiling is validated on construction and immutable.
class Tiling {
 public:
  /// Throws PartitionError unless every label in [0, m) occurs exactly m times.
  Tiling(std::size_t m, std::vector<std::uint32_t> block_of);

  /// Throws PartitionError unless block_count divides m^2 and every label in
  /// [0, block_count) occurs exactly m^2 / block_count times.
  Tiling(std::size_t m, std::vector<std::uint32_t> block_of, std::size_t block_count);

  std::size_t size() const noexcept { return m_; }
  std::size_t cell_count() const noexcept { return block_of_.size(); }
  std::size_t block_count() const noexcept { return blocks_; }
  std::size_t block_size() const noexcept { return block_of_.size() / blocks_; }
  /// True for the puzzle shape: m blocks of m cells.
  bool is_square() const noexcept { return blocks_ == m_; }

  std::uint32_t block_of(std::size_t cell) const { return block_of_[cell]; }
  std::span<const std::uint32_t> blocks() const noexcept { return block_of_; }

  std::size_t row(std::size_t cell) const noexcept { return cell / m_; }
  std::size_t col(std::size_t cell) const noexcept { return cell % m_; }
  std::size_t cell_at(std::size_t row, std::size_t col) const noexcept {
    return row * m_ + col;
  }

  /// Zero-based cells of each block, in increasing cell order.
  std::vector<std::vector<std::size_t>> cells_by_block() const;

  friend bool operator==(const Tiling&, const Tiling&) = default;

 private:
  std::size_t m_;
  std::size_t blocks_;
  std::vector<std::uint32_t> block_of_;
};

/// Builds a tiling from one-based cell sets, e.g. {{1,2,3,4},{5,9,13,14},...}.
/// Block ids follow the order of the sets.
Tiling tiling_from_cell_sets(std::size_t m,
                             const std::vector<std::vector<std::size_t>>& sets);

/// Parses the text format: a line with m, then m rows of m block labels.
/// Lines starting with '#' and blank lines are skipped; CRLF is accepted.
/// The size line may carry a second integer, the block count, for tilings
/// whose block count differs from m (blow-ups); it defaults to m.
/// Throws SyntaxError or PartitionError.
Tiling parse_tiling(std::string_view text);

/// Inverse of parse_tiling. The block count is written only when it differs from m.
std::string render_tiling(const Tiling& t);

/// The n-Sudoku: m = n^2, blocks are the n x n boxes, numbered row-major.
Tiling classical_tiling(std::size_t n);

/// Each row is its own block.
Tiling row_tiling(std::size_t m);

/// Uniformly shuffled assignment of m copies of each label to the m^2 cells.
///
/// Reproducible across platforms: the engine is std::mt19937_64 seeded with
/// `seed` (fully specified by the standard), the shuffle is a descending
/// Fisher-Yates, and bounded draws use rejection sampling on the raw 64-bit
/// output. Uniform over labelings, not over isomorphism classes.
Tiling random_tiling(std::size_t m, std::uint64_t seed);

/// k-fold blow-up: each cell becomes a k x k subsquare carrying its block id.
/// The result has side km, the same block count, and blocks k^2 times larger.
Tiling blow_up_tiling(const Tiling& t, std::size_t k);

}  // namespace sudoku_spectra
