#include "sudoku_spectra/integrality.hpp"

#include <cassert>

#include "sudoku_spectra/spectra.hpp"

namespace sudoku_spectra {

std::optional<std::size_t> check_condition_q(const Tiling& t, Axis axis) {
  const auto profile = block_row_profile(t, axis);
  std::optional<std::size_t> q;
  for (const auto& line : profile.counts) {
    for (std::size_t count : line) {
      if (count == 0) continue;
      if (q && *q != count) return std::nullopt;
      q = count;
    }
  }
  return q;
}

bool condition_iii_direct(const Tiling& t) {
  const std::size_t n = t.cell_count();
  for (std::size_t c1 = 0; c1 < n; ++c1) {
    for (std::size_t c2 = 0; c2 < n; ++c2) {
      if (t.row(c1) == t.row(c2) || t.col(c1) == t.col(c2)) continue;
      const auto x = t.block_of(t.cell_at(t.row(c1), t.col(c2)));
      const auto y = t.block_of(t.cell_at(t.row(c2), t.col(c1)));
      const auto b1 = t.block_of(c1);
      const auto b2 = t.block_of(c2);
      if ((x == b1) != (y == b2) || (x == b2) != (y == b1)) return false;
    }
  }
  return true;
}

bool condition_iii_commuting(const Tiling& t) {
  const auto d = layers(t);
  return d.l_h * d.l_v == d.l_v * d.l_h;
}

bool check_condition_iii(const Tiling& t) {
  const bool direct = condition_iii_direct(t);
  const bool commuting = condition_iii_commuting(t);
  if (direct != commuting) {
    throw EquivalenceViolation("condition (iii): direct test says " +
                               std::string(direct ? "true" : "false") +
                               ", commutation test says " + (commuting ? "true" : "false") +
                               "\n" + render_tiling(t));
  }
  return direct;
}

RegCommute check_regcommute(const Tiling& t, Axis axis) {
  RegCommute r;
  const std::size_t m = t.size();

  // Layer degree of a cell is m minus the cells sharing its line and block.
  const auto profile = block_row_profile(t, axis);
  std::optional<std::size_t> degree;
  r.regular = true;
  for (std::size_t c = 0; c < t.cell_count() && r.regular; ++c) {
    const std::size_t line = axis == Axis::Row ? t.row(c) : t.col(c);
    const std::size_t d = m - profile.counts[line][t.block_of(c)];
    if (degree && *degree != d) r.regular = false;
    degree = d;
  }

  const auto d = layers(t);
  const IntMatrix& layer = axis == Axis::Row ? d.l_h : d.l_v;
  const auto sums = row_sums(layer);
  r.constant_row_sum = true;
  for (const auto& s : sums)
    if (s != sums.front()) r.constant_row_sum = false;

  r.commutes_with_lb = d.l_b * layer == layer * d.l_b;
  return r;
}

std::string_view to_string(Verdict v) {
  return v == Verdict::GuaranteedIntegral ? "GuaranteedIntegral" : "Inconclusive";
}

ConditionReport theorem_verdict(const Tiling& t) {
  ConditionReport r;
  r.cond_i = check_condition_q(t, Axis::Row);
  r.cond_ii = check_condition_q(t, Axis::Column);
  r.cond_iii = check_condition_iii(t);
  r.regcommute_h = check_regcommute(t, Axis::Row);
  r.regcommute_v = check_regcommute(t, Axis::Column);
  r.verdict = r.cond_i && r.cond_ii && r.cond_iii ? Verdict::GuaranteedIntegral
                                                  : Verdict::Inconclusive;
#ifndef NDEBUG
  if (r.verdict == Verdict::GuaranteedIntegral) assert(is_integral(adjacency(t)));
#endif
  return r;
}

}  // namespace sudoku_spectra
