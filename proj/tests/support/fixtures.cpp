#include "fixtures.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#ifndef SUDOKU_SPECTRA_TEST_DATA
#error "SUDOKU_SPECTRA_TEST_DATA must point at tests/data"
#endif

namespace sudoku_spectra::testing {

std::string data_path(const std::string& name) {
  return std::string(SUDOKU_SPECTRA_TEST_DATA) + "/" + name;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Tiling reference_tiling() {
  return tiling_from_cell_sets(4, {{1, 2, 3, 4}, {5, 9, 13, 14}, {6, 8, 12, 16}, {7, 10, 11, 15}});
}

Tiling noncommuting_tiling() {
  return tiling_from_cell_sets(4, {{1, 8, 9, 16}, {3, 6, 10, 15}, {2, 7, 11, 14}, {4, 5, 12, 13}});
}

namespace {

std::vector<std::vector<std::string>> load_tokens(const std::string& name) {
  std::istringstream in(read_file(data_path(name)));
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<std::string> row;
    std::string tok;
    while (ls >> tok) row.push_back(tok);
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

IntMatrix load_int_matrix(const std::string& name) {
  const auto rows = load_tokens(name);
  IntMatrix a(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != a.cols()) throw std::runtime_error(name + ": ragged row");
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = BigInt(rows[i][j]);
  }
  return a;
}

std::vector<std::vector<char>> load_symbol_matrix(const std::string& name) {
  std::vector<std::vector<char>> out;
  for (const auto& row : load_tokens(name)) {
    std::vector<char> r;
    for (const auto& tok : row) r.push_back(tok.at(0));
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace sudoku_spectra::testing
