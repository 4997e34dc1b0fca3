#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "sudoku_spectra_cli/report.hpp"

namespace sudoku_spectra::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitInputError = 2,
  kExitComputeError = 3,
  kExitVerificationFailed = 4,
};

/// Unreadable files, bad flag values.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Entry point of the sudoku-spectra tool. Never throws; returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

struct SearchOptions {
  std::size_t m = 4;
  std::size_t count = 100;
  std::uint64_t seed = 0;
  std::optional<std::size_t> blowup_k;
  std::size_t jobs = 1;
};

/// Record for random_tiling(m, seed).
SearchRecord search_record(std::size_t m, std::uint64_t seed, std::optional<std::size_t> blowup_k);

/// Tests seeds seed, seed + 1, ..., seed + count - 1; records sorted by seed
/// whatever the number of jobs.
SearchReport run_search(const SearchOptions& options);

/// FNV-1a 64 over the decimal coefficients, comma separated, as 16 hex digits.
std::string spectrum_digest(const IntPolynomial& char_poly);

}  // namespace sudoku_spectra::cli
