#include <iostream>

#include "sudoku_spectra_cli/commands.hpp"

int main(int argc, char** argv) {
  return sudoku_spectra::cli::run(argc, argv, std::cout, std::cerr);
}
