#pragma once

#include <string>
#include <vector>

#include "sudoku_spectra/sudoku_spectra.hpp"

namespace sudoku_spectra::testing {

std::string data_path(const std::string& name);
std::string read_file(const std::string& path);

/// Blocks {1,2,3,4}, {5,9,13,14}, {6,8,12,16}, {7,10,11,15} on the 4x4 grid.
Tiling reference_tiling();

/// Blocks {1,8,9,16}, {3,6,10,15}, {2,7,11,14}, {4,5,12,13}: constant layer row
/// sums, yet l_h and l_v do not commute.
Tiling noncommuting_tiling();

/// Whitespace-separated 0/1 rows.
IntMatrix load_int_matrix(const std::string& name);

/// Whitespace-separated symbol rows.
std::vector<std::vector<char>> load_symbol_matrix(const std::string& name);

}  // namespace sudoku_spectra::testing
