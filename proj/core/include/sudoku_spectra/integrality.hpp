#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "sudoku_spectra/graph.hpp"
#include "sudoku_spectra/tiling.hpp"

namespace sudoku_spectra {

/// q if every cell shares its row (column) and block with exactly q cells,
/// itself included; empty otherwise.
std::optional<std::size_t> check_condition_q(const Tiling& t, Axis axis);

/// Cell-quantified rectangle test. For cells C1, C2 in different rows and
/// columns let X = (row C1, col C2) and Y = (row C2, col C1); the condition is
/// block(X) = block(C1) <=> block(Y) = block(C2) and
/// block(X) = block(C2) <=> block(Y) = block(C1), for every such pair.
bool condition_iii_direct(const Tiling& t);

/// l_h * l_v == l_v * l_h.
bool condition_iii_commuting(const Tiling& t);

/// Both tests above; throws EquivalenceViolation if they disagree.
bool check_condition_iii(const Tiling& t);

struct RegCommute {
  bool regular = false;            ///< every cell has the same layer degree
  bool constant_row_sum = false;   ///< the layer matrix has constant row sums
  bool commutes_with_lb = false;   ///< l_b * layer == layer * l_b

  bool agree() const { return regular == constant_row_sum && regular == commutes_with_lb; }
  friend bool operator==(const RegCommute&, const RegCommute&) = default;
};

/// The three properties of the row layer (Axis::Row, l_h) or column layer
/// (Axis::Column, l_v). Regularity is read off the block/row profile, the row
/// sums off the matrix, commutation off the matrix products.
RegCommute check_regcommute(const Tiling& t, Axis axis);

enum class Verdict { GuaranteedIntegral, Inconclusive };

std::string_view to_string(Verdict v);

struct ConditionReport {
  std::optional<std::size_t> cond_i;
  std::optional<std::size_t> cond_ii;
  bool cond_iii = false;
  RegCommute regcommute_h;
  RegCommute regcommute_v;
  /// GuaranteedIntegral iff cond_i and cond_ii hold and cond_iii is true.
  /// Inconclusive says nothing about integrality.
  Verdict verdict = Verdict::Inconclusive;

  friend bool operator==(const ConditionReport&, const ConditionReport&) = default;
};

ConditionReport theorem_verdict(const Tiling& t);

}  // namespace sudoku_spectra
