// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "sudoku_spectra/sudoku_spectra.hpp"

using namespace sudoku_spectra;
using namespace sudoku_spectra::testing;

namespace {

constexpr double kSpectrumTol = 1e-6;

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && passed) {
      passed = false;
      detail = what;
    }
  }
};

struct Criterion {
  int id;
  std::string name;
  double time_limit_s;  ///< 0 means no limit
  std::function<Outcome()> body;
};

std::string fmt(double x) {
  std::ostringstream s;
  s.precision(3);
  s << x;
  return s.str();
}

bool matches_symbols(const TemplateMatrix& tm, const std::vector<std::vector<char>>& expected) {
  if (expected.size() != tm.n) return false;
  for (std::size_t i = 0; i < tm.n; ++i) {
    if (expected[i].size() != tm.n) return false;
    for (std::size_t j = 0; j < tm.n; ++j)
      if (static_cast<char>(tm(i, j)) != expected[i][j]) return false;
  }
  return true;
}

// The fixed random sample shared by criteria 5 and 6.
std::vector<Tiling> random_sample() {
  std::vector<Tiling> out;
  for (std::uint64_t seed = 0; seed < 150; ++seed) out.push_back(random_tiling(2 + seed % 5, seed));
  return out;
}

bool constant(const std::vector<BigInt>& v) {
  for (const auto& x : v)
    if (x != v.front()) return false;
  return true;
}

struct EigenCase {
  std::string label;
  Tiling tiling;
  std::size_t k;
  std::array<std::size_t, 4> sizes;
  std::size_t rank;
};

std::vector<EigenCase> eigen_cases() {
  return {
      {"reference tiling, k=3", reference_tiling(), 3, {32, 32, 64, 16}, 144},
      {"2x2 board (blocks = rows), k=3", parse_tiling("2\n0 0\n1 1\n"), 3, {8, 8, 16, 4}, 36},
      {"2x2 board (blocks = diagonals), k=3", parse_tiling("2\n0 1\n1 0\n"), 3, {8, 8, 16, 4}, 36},
      {"classical n=2, k=2", classical_tiling(2), 2, {16, 16, 16, 16}, 64},
  };
}

Outcome eigen_case(const EigenCase& c) {
  Outcome o;
  const auto families = build_families(c.tiling, c.k);
  const std::array<std::size_t, 4> sizes{families[0].vectors.size(), families[1].vectors.size(),
                                         families[2].vectors.size(), families[3].vectors.size()};
  o.require(sizes == c.sizes, c.label + ": family sizes differ");

  const IntMatrix up = blown_adjacency(c.tiling, c.k);
  std::vector<RationalVector> exact_stack;
  std::vector<RealVector> real_stack;
  bool all_exact = true;
  for (const auto& f : families) {
    for (const auto& v : f.vectors) {
      if (v.is_exact()) {
        RationalVector mu_v = v.exact;
        for (auto& x : mu_v) x *= v.predicted.exact;
        o.require(sudoku_spectra::apply(up, v.exact) == mu_v, c.label + ": exact eigen-equation fails");
        exact_stack.push_back(v.exact);
        real_stack.push_back(to_real(v.exact));
      } else {
        all_exact = false;
        real_stack.push_back(v.approx);
      }
    }
  }
  const std::size_t r = all_exact ? rank(std::span<const RationalVector>(exact_stack))
                                  : numerical_rank(real_stack, 1e-8);
  o.require(r == c.rank, c.label + ": stacked rank " + std::to_string(r));

  std::vector<double> predicted;
  for (const auto& p : predicted_spectrum(c.tiling, c.k)) predicted.push_back(p.value.value());
  const double gap = max_paired_gap(predicted, float_eigen(up));
  o.require(gap <= kSpectrumTol, c.label + ": spectrum deviation " + fmt(gap));
  if (o.passed) {
    o.detail += (o.detail.empty() ? "" : "; ") + c.label + " sizes (" + std::to_string(sizes[0]) +
                "," + std::to_string(sizes[1]) + "," + std::to_string(sizes[2]) + "," +
                std::to_string(sizes[3]) + ") rank " + std::to_string(r) +
                (all_exact ? " exact" : " numerical") + ", deviation " + fmt(gap);
  }
  return o;
}

std::vector<Criterion> criteria() {
  std::vector<Criterion> out;

  out.push_back({1, "golden adjacency and template of the m=4 tiling", 1.0, [] {
    Outcome o;
    const Tiling t = reference_tiling();
    o.require(adjacency(t) == load_int_matrix("reference_adjacency.txt"), "adjacency differs");
    o.require(matches_symbols(template_matrix(t), load_symbol_matrix("reference_template.txt")),
              "template differs");
    if (o.passed) o.detail = "16x16 A and template bit-exact";
    return o;
  }});

  out.push_back({2, "substitution matrices H and V for k=3", 0, [] {
    Outcome o;
    const auto s = substitution_set(3);
    o.require(s.h == load_int_matrix("substitution_h3.txt"), "H differs");
    o.require(s.v == load_int_matrix("substitution_v3.txt"), "V differs");
    if (o.passed) o.detail = "9x9 H and V bit-exact";
    return o;
  }});

  out.push_back({3, "multipartite closed form, 1 <= q,k <= 5", 5.0, [] {
    Outcome o;
    for (std::size_t q = 1; q <= 5; ++q)
      for (std::size_t k = 1; k <= 5; ++k)
        o.require(multipartite_spectrum(q, k) ==
                      exact_spectrum(complete_multipartite(std::vector<std::size_t>(k, q))),
                  "mismatch at q=" + std::to_string(q) + ", k=" + std::to_string(k));
    if (o.passed) o.detail = "25 cases exact";
    return o;
  }});

  out.push_back({4, "classical Sudokus n=2, 3 are integral and guaranteed", 60.0, [] {
    Outcome o;
    for (std::size_t n : {2u, 3u}) {
      const Tiling t = classical_tiling(n);
      o.require(is_integral(adjacency(t)), "n=" + std::to_string(n) + " not integral");
      o.require(theorem_verdict(t).verdict == Verdict::GuaranteedIntegral,
                "n=" + std::to_string(n) + " verdict inconclusive");
    }
    if (o.passed) o.detail = "both integral, both GuaranteedIntegral";
    return o;
  }});

  out.push_back({5, "regularity / row sum / commutation equivalence", 0, [] {
    Outcome o;
    std::size_t checked = 0, counterexamples = 0;
    for (const Tiling& t : random_sample()) {
      for (Axis axis : {Axis::Row, Axis::Column}) {
        ++checked;
        if (!check_regcommute(t, axis).agree()) ++counterexamples;
      }
    }
    o.require(counterexamples == 0, std::to_string(counterexamples) + " counterexamples");
    if (o.passed) o.detail = std::to_string(checked / 2) + " tilings, m in 2..6, both axes, 0 counterexamples";
    return o;
  }});

  out.push_back({6, "condition (iii): direct form equals commutation", 0, [] {
    Outcome o;
    std::size_t tilings = 0;
    for (const Tiling& t : random_sample()) {
      ++tilings;
      o.require(condition_iii_direct(t) == condition_iii_commuting(t),
                "forms disagree on\n" + render_tiling(t));
    }
    const Tiling nc = noncommuting_tiling();
    const auto d = layers(nc);
    o.require(constant(row_sums(d.l_h)) && constant(row_sums(d.l_v)),
              "non-commuting tiling lacks constant row sums");
    o.require(!check_condition_iii(nc), "non-commuting tiling has cond_iii = true");
    if (o.passed)
      o.detail = std::to_string(tilings) + " tilings agree; non-commuting tiling: constant row sums, cond_iii false";
    return o;
  }});

  out.push_back({7, "blow-up reconciliation", 0, [] {
    Outcome o;
    std::vector<std::pair<Tiling, std::size_t>> cases{
        {reference_tiling(), 2}, {reference_tiling(), 3}, {classical_tiling(2), 2}, {classical_tiling(2), 3}};
    for (std::uint64_t seed = 0; seed < 60; ++seed)
      cases.emplace_back(random_tiling(1 + seed % 4, 1000 + seed), 1 + seed % 3);
    for (const auto& [t, k] : cases) {
      o.require(reconcile(t, k), "reconcile false for k=" + std::to_string(k) + "\n" + render_tiling(t));
      o.require(blown_adjacency(t, 1) == adjacency(t), "k=1 differs from adjacency");
      o.require(reconcile(t, 1), "reconcile false for k=1");
    }
    if (o.passed) o.detail = std::to_string(cases.size()) + " cases (60 random), k=1 identity";
    return o;
  }});

  out.push_back({8, "eigenbasis theorem", 0, [] {
    Outcome all;
    for (const auto& c : eigen_cases()) {
      const auto start = std::chrono::steady_clock::now();
      Outcome o = eigen_case(c);
      const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      o.require(s < 30.0, c.label + " took " + fmt(s) + " s");
      all.require(o.passed, o.detail);
      if (all.passed) all.detail += (all.detail.empty() ? "" : "; ") + o.detail;
    }
    return all;
  }});

  out.push_back({9, "largest eigenvalue comes from XM", 0, [] {
    Outcome o;
    std::string details;
    for (const auto& c : eigen_cases()) {
      const auto predicted = predicted_spectrum(c.tiling, c.k);
      const auto& top = predicted.back();
      const double kk = static_cast<double>(c.k * c.k);
      const double m_max = float_eigen(family_m_matrix(c.tiling, c.k)).back();
      const double oracle_max = float_eigen(blown_adjacency(c.tiling, c.k)).back();
      // Lower bound with n the side length of the original board.
      const double bound = static_cast<double>(c.tiling.size()) * kk - 1.0;
      o.require(top.family == FamilyKind::XM, c.label + ": maximum not from XM");
      o.require(std::fabs(m_max + kk - 1.0 - oracle_max) <= kSpectrumTol,
                c.label + ": lambda_max(M) + k^2 - 1 misses the oracle");
      o.require(std::fabs(top.value.value() - oracle_max) <= kSpectrumTol,
                c.label + ": predicted maximum misses the oracle");
      o.require(top.value.value() >= bound, c.label + ": below n k^2 - 1");
      details += (details.empty() ? "" : "; ") + c.label + " max " + fmt(oracle_max) + " >= " + fmt(bound);
    }
    if (o.passed) o.detail = details;
    return o;
  }});

  out.push_back({10, "blow-ups of the classical Shidoku are integral", 0, [] {
    Outcome o;
    for (std::size_t k : {2u, 3u}) {
      const Spectrum s = exact_spectrum(blown_adjacency(classical_tiling(2), k));
      o.require(s.residual_degree() == 0,
                "k=" + std::to_string(k) + " residual degree " + std::to_string(s.residual_degree()));
    }
    if (o.passed) o.detail = "k=2 and k=3 residual degree 0";
    return o;
  }});

  out.push_back({11, "float oracle against exact roots", 0, [] {
    Outcome o;
    std::mt19937_64 rng(20240611);
    double worst = 0, worst_trace = 0;
    for (int i = 0; i < 50; ++i) {
      const std::size_t n = 1 + rng() % 30;
      const IntMatrix a = random_adjacency(rng, n, 0.2 + 0.6 * static_cast<double>(rng() % 100) / 100.0);
      const auto eig = float_eigen(a);
      const Spectrum s = exact_spectrum(a);
      std::vector<double> exact;
      for (const auto& v : s.integer_values()) exact.push_back(v.get_d());
      for (double r : real_roots(s.residual)) exact.push_back(r);
      const double gap = max_paired_gap(eig, exact);
      worst = std::max(worst, gap);
      double sum = 0;
      for (double x : eig) sum += x;
      const double trace_gap = std::fabs(sum - trace(a).get_d());
      worst_trace = std::max(worst_trace, trace_gap / static_cast<double>(n));
      o.require(gap <= kSpectrumTol, "matrix " + std::to_string(i) + " deviates by " + fmt(gap));
      o.require(trace_gap <= 1e-6 * static_cast<double>(n), "trace mismatch on matrix " + std::to_string(i));
    }
    if (o.passed) o.detail = "50 matrices, max deviation " + fmt(worst) + ", max trace gap/dim " + fmt(worst_trace);
    return o;
  }});

  return out;
}

}  // namespace

int main() {
  int failures = 0;
  for (const auto& c : criteria()) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0 && s >= c.time_limit_s) {
      o.passed = false;
      o.detail = "took " + fmt(s) + " s, limit " + fmt(c.time_limit_s) + " s";
    }
    failures += !o.passed;
    std::printf("%s %2d %s: %s (%.3f s)\n", o.passed ? "PASS" : "FAIL", c.id, c.name.c_str(),
                o.detail.c_str(), s);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria().size()) - failures,
              criteria().size());
  return failures;
}
