#include "sudoku_spectra/tiling.hpp"

#include <charconv>
#include <random>
#include <sstream>
#include <utility>

#include "sudoku_spectra/errors.hpp"

namespace sudoku_spectra {

Tiling::Tiling(std::size_t m, std::vector<std::uint32_t> block_of)
    : Tiling(m, std::move(block_of), m) {}

Tiling::Tiling(std::size_t m, std::vector<std::uint32_t> block_of, std::size_t block_count)
    : m_(m), blocks_(block_count), block_of_(std::move(block_of)) {
  if (m_ == 0) throw PartitionError("tiling size must be positive");
  if (blocks_ == 0 || (m_ * m_) % blocks_ != 0) {
    throw PartitionError(std::to_string(blocks_) + " blocks cannot split " +
                         std::to_string(m_ * m_) + " cells evenly");
  }
  const std::size_t per_block = m_ * m_ / blocks_;
  if (block_of_.size() != m_ * m_) {
    throw PartitionError("expected " + std::to_string(m_ * m_) +
                         " cells, got " + std::to_string(block_of_.size()));
  }
  std::vector<std::size_t> count(blocks_, 0);
  for (std::size_t c = 0; c < block_of_.size(); ++c) {
    if (block_of_[c] >= blocks_) {
      throw PartitionError("cell " + std::to_string(c + 1) + " has block id " +
                           std::to_string(block_of_[c]) + " outside [0, " +
                           std::to_string(blocks_ - 1) + "]");
    }
    ++count[block_of_[c]];
  }
  for (std::size_t b = 0; b < blocks_; ++b) {
    if (count[b] != per_block) {
      throw PartitionError("block " + std::to_string(b) + " has " +
                           std::to_string(count[b]) + " cells, expected " +
                           std::to_string(per_block));
    }
  }
}

std::vector<std::vector<std::size_t>> Tiling::cells_by_block() const {
  std::vector<std::vector<std::size_t>> cells(blocks_);
  for (std::size_t c = 0; c < block_of_.size(); ++c) cells[block_of_[c]].push_back(c);
  return cells;
}

Tiling tiling_from_cell_sets(std::size_t m,
                             const std::vector<std::vector<std::size_t>>& sets) {
  if (sets.size() != m) {
    throw PartitionError("expected " + std::to_string(m) + " blocks, got " +
                         std::to_string(sets.size()));
  }
  constexpr auto kUnset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> block_of(m * m, kUnset);
  for (std::size_t b = 0; b < sets.size(); ++b) {
    for (std::size_t cell : sets[b]) {
      if (cell < 1 || cell > m * m) {
        throw PartitionError("cell " + std::to_string(cell) + " out of range");
      }
      if (block_of[cell - 1] != kUnset) {
        throw PartitionError("cell " + std::to_string(cell) +
                             " assigned to two blocks");
      }
      block_of[cell - 1] = static_cast<std::uint32_t>(b);
    }
  }
  for (std::size_t c = 0; c < block_of.size(); ++c) {
    if (block_of[c] == kUnset) {
      throw PartitionError("cell " + std::to_string(c + 1) + " not covered");
    }
  }
  return Tiling(m, std::move(block_of));
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) tokens.push_back(s.substr(i, j - i));
    i = j;
  }
  return tokens;
}

std::uint64_t parse_unsigned(std::string_view token, std::size_t line) {
  std::uint64_t value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw SyntaxError(line, "expected a non-negative integer, got '" +
                                std::string(token) + "'");
  }
  return value;
}

// Bounded draw in [0, range) without modulo bias.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t range) {
  const std::uint64_t threshold = (0 - range) % range;
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % range;
  }
}

}  // namespace

Tiling parse_tiling(std::string_view text) {
  std::size_t m = 0;
  std::size_t block_count = 0;
  bool have_size = false;
  std::vector<std::uint32_t> labels;
  std::size_t rows_read = 0;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    const auto line = trim(text.substr(pos, nl - pos));
    pos = nl + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    const auto tokens = split_ws(line);
    if (!have_size) {
      if (tokens.empty() || tokens.size() > 2) {
        throw SyntaxError(line_no, "expected the puzzle size m, optionally followed by the block count");
      }
      const auto value = parse_unsigned(tokens[0], line_no);
      if (value == 0 || value > 4096) throw SyntaxError(line_no, "puzzle size out of range");
      m = static_cast<std::size_t>(value);
      block_count = m;
      if (tokens.size() == 2) {
        const auto blocks = parse_unsigned(tokens[1], line_no);
        if (blocks == 0 || blocks > m * m) throw SyntaxError(line_no, "block count out of range");
        block_count = static_cast<std::size_t>(blocks);
      }
      have_size = true;
      labels.reserve(m * m);
      continue;
    }
    if (rows_read == m) throw SyntaxError(line_no, "more than m rows");
    if (tokens.size() != m) {
      throw SyntaxError(line_no, "expected " + std::to_string(m) + " labels, got " +
                                     std::to_string(tokens.size()));
    }
    for (auto token : tokens) {
      const auto value = parse_unsigned(token, line_no);
      if (value >= block_count) {
        throw PartitionError("line " + std::to_string(line_no) + ": block id " +
                             std::to_string(value) + " outside [0, " +
                             std::to_string(block_count - 1) + "]");
      }
      labels.push_back(static_cast<std::uint32_t>(value));
    }
    ++rows_read;
  }
  if (!have_size) throw SyntaxError(line_no, "empty tiling");
  if (rows_read != m) {
    throw SyntaxError(line_no, "expected " + std::to_string(m) + " rows, got " +
                                   std::to_string(rows_read));
  }
  return Tiling(m, std::move(labels), block_count);
}

std::string render_tiling(const Tiling& t) {
  std::ostringstream out;
  out << t.size();
  if (!t.is_square()) out << ' ' << t.block_count();
  out << '\n';
  for (std::size_t r = 0; r < t.size(); ++r) {
    for (std::size_t c = 0; c < t.size(); ++c) {
      if (c) out << ' ';
      out << t.block_of(t.cell_at(r, c));
    }
    out << '\n';
  }
  return out.str();
}

Tiling classical_tiling(std::size_t n) {
  if (n == 0) throw PartitionError("classical tiling needs n >= 1");
  const std::size_t m = n * n;
  std::vector<std::uint32_t> block_of(m * m);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < m; ++c) {
      block_of[r * m + c] = static_cast<std::uint32_t>((r / n) * n + c / n);
    }
  }
  return Tiling(m, std::move(block_of));
}

Tiling row_tiling(std::size_t m) {
  if (m == 0) throw PartitionError("row tiling needs m >= 1");
  std::vector<std::uint32_t> block_of(m * m);
  for (std::size_t c = 0; c < m * m; ++c) block_of[c] = static_cast<std::uint32_t>(c / m);
  return Tiling(m, std::move(block_of));
}

Tiling random_tiling(std::size_t m, std::uint64_t seed) {
  if (m == 0) throw PartitionError("random tiling needs m >= 1");
  std::vector<std::uint32_t> block_of(m * m);
  for (std::size_t c = 0; c < m * m; ++c) block_of[c] = static_cast<std::uint32_t>(c / m);
  std::mt19937_64 rng(seed);
  for (std::size_t i = block_of.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(bounded(rng, i));
    std::swap(block_of[i - 1], block_of[j]);
  }
  return Tiling(m, std::move(block_of));
}

Tiling blow_up_tiling(const Tiling& t, std::size_t k) {
  if (k == 0) throw PartitionError("blow-up factor must be positive");
  const std::size_t big = t.size() * k;
  std::vector<std::uint32_t> block_of(big * big);
  for (std::size_t r = 0; r < big; ++r) {
    for (std::size_t c = 0; c < big; ++c) {
      block_of[r * big + c] = t.block_of(t.cell_at(r / k, c / k));
    }
  }
  return Tiling(big, std::move(block_of), t.block_count());
}

}  // namespace sudoku_spectra
