#include "sudoku_spectra/eigenbasis.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

#include "sudoku_spectra/blowup.hpp"
#include "sudoku_spectra/graph.hpp"
#include "sudoku_spectra/linalg/exact.hpp"
#include "sudoku_spectra/linalg/symmetric_eigen.hpp"
#include "sudoku_spectra/spectra.hpp"

namespace sudoku_spectra {

std::string Eigenvalue::to_string() const {
  if (is_exact) return exact.get_str();
  std::ostringstream out;
  out << std::setprecision(12) << approx;
  return out.str();
}

bool operator<(const Eigenvalue& a, const Eigenvalue& b) {
  if (a.is_exact && b.is_exact) return a.exact < b.exact;
  return a.value() < b.value();
}

std::string_view to_string(FamilyKind f) {
  switch (f) {
    case FamilyKind::XV: return "XV";
    case FamilyKind::XH: return "XH";
    case FamilyKind::XE: return "XE";
    case FamilyKind::XM: return "XM";
  }
  return "?";
}

namespace {

constexpr double kResidualTolerance = 1e-8;
constexpr double kSpectrumTolerance = 1e-6;
constexpr double kRankThreshold = 1e-8;

// Integer eigenvalues exactly, plus the oracle eigenpairs left over once each
// integer eigenvalue has claimed its multiplicity of nearest float values.
struct SplitSpectrum {
  Spectrum exact;
  SymmetricEigen oracle;
  std::vector<std::size_t> residual_indices;
};

SplitSpectrum split_spectrum(const IntMatrix& a) {
  SplitSpectrum s{exact_spectrum(a), {}, {}};
  if (s.exact.is_integral()) return s;
  s.oracle = symmetric_eigen(a);
  std::vector<bool> used(s.oracle.values.size(), false);
  for (const auto& [value, mult] : s.exact.integer_part) {
    const double target = value.get_d();
    for (std::size_t r = 0; r < mult; ++r) {
      std::size_t best = used.size();
      double best_gap = std::numeric_limits<double>::infinity();
      for (std::size_t j = 0; j < used.size(); ++j) {
        if (used[j]) continue;
        const double gap = std::fabs(s.oracle.values[j] - target);
        if (gap < best_gap) {
          best_gap = gap;
          best = j;
        }
      }
      used[best] = true;
    }
  }
  for (std::size_t j = 0; j < used.size(); ++j)
    if (!used[j]) s.residual_indices.push_back(j);
  return s;
}

RealVector column(const RealMatrix& m, std::size_t j) {
  RealVector v(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) v[i] = m(i, j);
  return v;
}

std::vector<RealVector> to_real(const std::vector<RationalVector>& vs) {
  std::vector<RealVector> out;
  for (const auto& v : vs) out.push_back(sudoku_spectra::to_real(v));
  return out;
}

// Attaches predicted eigenvalue f(l) to ingredient eigenvectors of one matrix
// and expands each through `expand_exact` / `expand_approx`.
template <typename Shift, typename ExpandExact, typename ExpandApprox>
void append_family(EigenFamily& family, const std::vector<EigenSpace>& spaces, Shift shift,
                   ExpandExact expand_exact, ExpandApprox expand_approx) {
  for (const auto& space : spaces) {
    const Eigenvalue mu = shift(space.value);
    for (const auto& x : space.exact_vectors)
      for (auto& v : expand_exact(x)) family.vectors.push_back({mu, std::move(v), {}});
    for (const auto& x : space.approx_vectors)
      for (auto& v : expand_approx(x)) family.vectors.push_back({mu, {}, std::move(v)});
  }
}

Eigenvalue affine(const Eigenvalue& l, long scale, long offset) {
  if (l.is_exact) return Eigenvalue::integer(l.exact * scale + offset);
  return Eigenvalue::floating(l.approx * static_cast<double>(scale) + static_cast<double>(offset));
}

}  // namespace

std::vector<EigenSpace> eigenvector_basis(const IntMatrix& a) {
  const auto split = split_spectrum(a);
  std::vector<EigenSpace> out;
  for (const auto& [value, mult] : split.exact.integer_part) {
    auto kernel = rational_kernel(a, value);
    if (kernel.size() != mult) {
      throw EquivalenceViolation("eigenspace of " + value.get_str() + " has dimension " +
                                 std::to_string(kernel.size()) + " but multiplicity " +
                                 std::to_string(mult));
    }
    out.push_back({Eigenvalue::integer(value), std::move(kernel), {}});
  }
  for (std::size_t j : split.residual_indices) {
    out.push_back({Eigenvalue::floating(split.oracle.values[j]), {},
                   {column(split.oracle.vectors, j)}});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const EigenSpace& x, const EigenSpace& y) { return x.value < y.value; });
  return out;
}

std::vector<Eigenvalue> eigenvalues_of(const IntMatrix& a) {
  const auto split = split_spectrum(a);
  std::vector<Eigenvalue> out;
  for (const auto& [value, mult] : split.exact.integer_part)
    out.insert(out.end(), mult, Eigenvalue::integer(value));
  for (std::size_t j : split.residual_indices)
    out.push_back(Eigenvalue::floating(split.oracle.values[j]));
  std::stable_sort(out.begin(), out.end());
  return out;
}

std::vector<RationalVector> kj_basis(std::size_t k) {
  std::vector<RationalVector> out;
  for (std::size_t j = 1; j < k; ++j) {
    RationalVector v(k, Rational(0));
    v[0] = 1;
    v[j] = -1;
    out.push_back(std::move(v));
  }
  return out;
}

IntMatrix family_m_matrix(const Tiling& t, std::size_t k) {
  const auto d = layers(t);
  const auto kk = BigInt(static_cast<unsigned long>(k));
  return scale(kk * kk, d.l_b) + scale(kk, d.l_h) + scale(kk, d.l_v);
}

std::array<EigenFamily, 4> build_families(const Tiling& t, std::size_t k) {
  const auto d = layers(t);
  const std::size_t cells = t.cell_count();
  const long kl = static_cast<long>(k);

  const auto kj = kj_basis(k);
  const auto kj_real = to_real(kj);
  const RationalVector ones_k(k, Rational(1));
  const RationalVector ones_kk(k * k, Rational(1));
  const RealVector ones_k_real(k, 1.0);
  const RealVector ones_kk_real(k * k, 1.0);

  std::array<EigenFamily, 4> families{EigenFamily{FamilyKind::XV, {}},
                                      EigenFamily{FamilyKind::XH, {}},
                                      EigenFamily{FamilyKind::XE, {}},
                                      EigenFamily{FamilyKind::XM, {}}};
  if (!kj.empty()) {
    const auto shift = [&](const Eigenvalue& l) { return affine(l, kl, -1); };
    append_family(
        families[0], eigenvector_basis(d.l_v), shift,
        [&](const RationalVector& x) {
          std::vector<RationalVector> vs;
          for (const auto& y : kj) vs.push_back(kron(kron(x, ones_k), y));
          return vs;
        },
        [&](const RealVector& x) {
          std::vector<RealVector> vs;
          for (const auto& y : kj_real) vs.push_back(kron(kron(x, ones_k_real), y));
          return vs;
        });
    append_family(
        families[1], eigenvector_basis(d.l_h), shift,
        [&](const RationalVector& x) {
          std::vector<RationalVector> vs;
          for (const auto& y : kj) vs.push_back(kron(kron(x, y), ones_k));
          return vs;
        },
        [&](const RealVector& x) {
          std::vector<RealVector> vs;
          for (const auto& y : kj_real) vs.push_back(kron(kron(x, y), ones_k_real));
          return vs;
        });
    for (std::size_t i = 0; i < cells; ++i) {
      RationalVector e(cells, Rational(0));
      e[i] = 1;
      for (const auto& y : kj)
        for (const auto& z : kj)
          families[2].vectors.push_back({Eigenvalue::integer(-1), kron(kron(e, y), z), {}});
    }
  }
  append_family(
      families[3], eigenvector_basis(family_m_matrix(t, k)),
      [&](const Eigenvalue& l) { return affine(l, 1, kl * kl - 1); },
      [&](const RationalVector& x) { return std::vector<RationalVector>{kron(x, ones_kk)}; },
      [&](const RealVector& x) { return std::vector<RealVector>{kron(x, ones_kk_real)}; });
  return families;
}

std::vector<PredictedEigenvalue> predicted_spectrum(const Tiling& t, std::size_t k) {
  const auto d = layers(t);
  const long kl = static_cast<long>(k);
  std::vector<PredictedEigenvalue> out;
  if (k > 1) {
    for (const auto& l : eigenvalues_of(d.l_v))
      out.insert(out.end(), k - 1, PredictedEigenvalue{affine(l, kl, -1), FamilyKind::XV});
    for (const auto& l : eigenvalues_of(d.l_h))
      out.insert(out.end(), k - 1, PredictedEigenvalue{affine(l, kl, -1), FamilyKind::XH});
    out.insert(out.end(), (k - 1) * (k - 1) * t.cell_count(),
               PredictedEigenvalue{Eigenvalue::integer(-1), FamilyKind::XE});
  }
  for (const auto& l : eigenvalues_of(family_m_matrix(t, k)))
    out.push_back({affine(l, 1, kl * kl - 1), FamilyKind::XM});
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& x, const auto& y) { return x.value < y.value; });
  return out;
}

bool EigenBasisReport::passed() const {
  return std::all_of(clauses.begin(), clauses.end(), [](const auto& c) { return c.passed; });
}

namespace {

struct SparseRows {
  std::vector<std::vector<std::pair<std::size_t, BigInt>>> rows;
};

SparseRows sparse(const IntMatrix& a) {
  SparseRows s;
  s.rows.resize(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0) s.rows[i].emplace_back(j, a(i, j));
  return s;
}

bool exact_eigen_equation(const SparseRows& a, const RationalVector& v, const BigInt& mu) {
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    Rational sum = 0;
    for (const auto& [j, x] : a.rows[i]) {
      if (v[j] == 0) continue;
      if (x == 1) {
        sum += v[j];
      } else {
        sum += Rational(x) * v[j];
      }
    }
    if (sum != Rational(mu) * v[i]) return false;
  }
  return true;
}

double relative_residual(const SparseRows& a, double a_norm, const RealVector& v, double mu) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    double av = 0.0;
    for (const auto& [j, x] : a.rows[i]) av += x.get_d() * v[j];
    const double r = av - mu * v[i];
    sum += r * r;
  }
  const double scale = a_norm * norm2(v);
  return scale > 0.0 ? std::sqrt(sum) / scale : std::sqrt(sum);
}

std::string fmt(double x) {
  std::ostringstream out;
  out << std::setprecision(12) << x;
  return out.str();
}

}  // namespace

EigenBasisReport analyze(const Tiling& t, std::size_t k) {
  EigenBasisReport r;
  r.m = t.size();
  r.k = k;
  r.block_size = t.block_size();
  const std::size_t cells = t.cell_count();
  const std::size_t dim = k * k * cells;

  const auto families = build_families(t, k);
  const IntMatrix up = blown_adjacency(t, k);
  const SparseRows up_sparse = sparse(up);
  const double up_norm = frobenius_norm(up);

  // Family sizes.
  const std::array<std::size_t, 4> expected{(k - 1) * cells, (k - 1) * cells,
                                            (k - 1) * (k - 1) * cells, cells};
  for (std::size_t f = 0; f < 4; ++f) r.family_sizes[f] = families[f].vectors.size();
  {
    std::ostringstream detail;
    detail << "sizes (" << r.family_sizes[0] << ", " << r.family_sizes[1] << ", "
           << r.family_sizes[2] << ", " << r.family_sizes[3] << "), expected (" << expected[0]
           << ", " << expected[1] << ", " << expected[2] << ", " << expected[3] << ")";
    r.clauses.push_back({"family_sizes", r.family_sizes == expected, detail.str()});
  }

  // Nonzero vectors and eigen-equations.
  bool nonzero = true;
  bool equations = true;
  std::string first_bad;
  std::vector<RationalVector> exact_stack;
  std::vector<RealVector> real_stack;
  for (const auto& family : families) {
    for (std::size_t idx = 0; idx < family.vectors.size(); ++idx) {
      const auto& fv = family.vectors[idx];
      const std::string label = std::string(to_string(family.kind)) + "[" + std::to_string(idx) + "]";
      if (fv.is_exact()) {
        ++r.exact_vectors;
        const bool zero = std::all_of(fv.exact.begin(), fv.exact.end(),
                                      [](const Rational& x) { return x == 0; });
        if (zero) {
          nonzero = false;
          if (first_bad.empty()) first_bad = label + " is the zero vector";
        }
        if (!exact_eigen_equation(up_sparse, fv.exact, fv.predicted.exact)) {
          equations = false;
          if (first_bad.empty()) first_bad = label + " violates Up v = " + fv.predicted.to_string() + " v";
        }
        exact_stack.push_back(fv.exact);
        real_stack.push_back(sudoku_spectra::to_real(fv.exact));
      } else {
        ++r.approx_vectors;
        if (norm2(fv.approx) == 0.0) {
          nonzero = false;
          if (first_bad.empty()) first_bad = label + " is the zero vector";
        }
        const double res = relative_residual(up_sparse, up_norm, fv.approx, fv.predicted.approx);
        r.max_residual = std::max(r.max_residual, res);
        if (!(res <= kResidualTolerance)) {
          equations = false;
          if (first_bad.empty()) first_bad = label + " relative residual " + fmt(res);
        }
        real_stack.push_back(fv.approx);
      }
    }
  }
  r.clauses.push_back({"nonzero_vectors", nonzero, nonzero ? "all vectors nonzero" : first_bad});
  r.clauses.push_back(
      {"eigen_equations", equations,
       equations ? std::to_string(r.exact_vectors) + " exact vectors with zero residual, " +
                       std::to_string(r.approx_vectors) + " approximate with max relative residual " +
                       fmt(r.max_residual)
                 : first_bad});

  // Rank.
  r.rank_exact = r.approx_vectors == 0;
  r.total_rank = r.rank_exact ? rank(std::span<const RationalVector>(exact_stack))
                              : numerical_rank(real_stack, kRankThreshold);
  r.clauses.push_back({"rank", r.total_rank == dim,
                       std::string(r.rank_exact ? "exact" : "numerical") + " rank " +
                           std::to_string(r.total_rank) + " of " + std::to_string(dim)});

  // Predicted against oracle spectrum.
  r.predicted = predicted_spectrum(t, k);
  r.oracle = float_eigen(up);
  bool spectrum_ok = r.predicted.size() == r.oracle.size();
  if (spectrum_ok) {
    for (std::size_t i = 0; i < r.oracle.size(); ++i) {
      r.max_spectrum_deviation =
          std::max(r.max_spectrum_deviation, std::fabs(r.predicted[i].value.value() - r.oracle[i]));
    }
    spectrum_ok = r.max_spectrum_deviation <= kSpectrumTolerance;
  }
  r.clauses.push_back({"spectrum_match", spectrum_ok,
                       std::to_string(r.predicted.size()) + " predicted vs " +
                           std::to_string(r.oracle.size()) + " oracle values, max deviation " +
                           fmt(r.max_spectrum_deviation)});

  // Largest eigenvalue.
  const PredictedEigenvalue* best = nullptr;
  const PredictedEigenvalue* best_m = nullptr;
  for (const auto& p : r.predicted) {
    if (!best || !(p.value < best->value)) best = &p;
    if (p.family == FamilyKind::XM && (!best_m || !(p.value < best_m->value))) best_m = &p;
  }
  bool largest_ok = best && best_m && !r.oracle.empty();
  if (largest_ok) {
    const double slack = 1e-9 * std::max(1.0, std::fabs(best->value.value()));
    const bool from_m = best_m->value.value() >= best->value.value() - slack;
    r.predicted_max = best_m->value.value();
    r.predicted_max_family = from_m ? FamilyKind::XM : best->family;
    r.m_lambda_max = float_eigen(family_m_matrix(t, k)).back();
    r.oracle_max = r.oracle.back();
    const BigInt bound = BigInt(static_cast<unsigned long>(r.block_size * k * k)) - 1;
    r.lower_bound = bound.get_d();
    const bool above_bound = best_m->value.is_exact ? best_m->value.exact >= bound
                                                    : best_m->value.approx >= r.lower_bound;
    const double shifted = r.m_lambda_max + static_cast<double>(k * k) - 1.0;
    largest_ok = from_m && above_bound &&
                 std::fabs(r.predicted_max - r.oracle_max) <= kSpectrumTolerance &&
                 std::fabs(shifted - r.oracle_max) <= kSpectrumTolerance;
  }
  r.clauses.push_back(
      {"largest_eigenvalue", largest_ok,
       "max predicted " + fmt(r.predicted_max) + " from " +
           std::string(to_string(r.predicted_max_family)) + ", lambda_max(M) + k^2 - 1 = " +
           fmt(r.m_lambda_max + static_cast<double>(k * k) - 1.0) + ", oracle max " +
           fmt(r.oracle_max) + ", lower bound " + fmt(r.lower_bound)});
  return r;
}

EigenBasisReport verify(const Tiling& t, std::size_t k) {
  auto report = analyze(t, k);
  for (const auto& c : report.clauses)
    if (!c.passed) throw VerificationFailure(c.name, c.detail);
  return report;
}

}  // namespace sudoku_spectra
