#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "sudoku_spectra/linalg/matrix.hpp"
#include "sudoku_spectra/tiling.hpp"

namespace sudoku_spectra {

/// An eigenvalue that is either an exact integer or a float from the oracle.
struct Eigenvalue {
  BigInt exact;
  double approx = 0.0;
  bool is_exact = true;

  static Eigenvalue integer(const BigInt& v) { return {v, v.get_d(), true}; }
  static Eigenvalue floating(double v) { return {0, v, false}; }

  double value() const { return is_exact ? exact.get_d() : approx; }
  /// Decimal integer, or the float with 12 significant digits.
  std::string to_string() const;

  friend bool operator==(const Eigenvalue&, const Eigenvalue&) = default;
};

/// Orders exact values exactly and mixed pairs by their float value.
bool operator<(const Eigenvalue& a, const Eigenvalue& b);

struct EigenSpace {
  Eigenvalue value;
  /// Primitive integer kernel basis when the eigenvalue is an integer.
  std::vector<RationalVector> exact_vectors;
  /// Unit oracle eigenvectors otherwise.
  std::vector<RealVector> approx_vectors;

  std::size_t dimension() const { return exact_vectors.size() + approx_vectors.size(); }
};

/// Eigenspaces of a symmetric matrix, ascending by eigenvalue. Integer
/// eigenvalues come from exact_spectrum and get exact kernel bases; the
/// remaining eigenpairs come from the float oracle, one space per eigenpair.
/// Throws ConvergenceError if the oracle fails.
std::vector<EigenSpace> eigenvector_basis(const IntMatrix& a);

/// All eigenvalues with multiplicity, ascending; exact where integer.
std::vector<Eigenvalue> eigenvalues_of(const IntMatrix& a);

/// Kernel basis of J_k: e_1 - e_j for j = 2..k. Empty for k = 1.
std::vector<RationalVector> kj_basis(std::size_t k);

enum class FamilyKind { XV, XH, XE, XM };

std::string_view to_string(FamilyKind f);

struct FamilyVector {
  Eigenvalue predicted;
  RationalVector exact;  ///< set when every ingredient is exact
  RealVector approx;     ///< set otherwise

  bool is_exact() const { return predicted.is_exact; }
};

/// One of the four vector families of the blow-up eigenbasis, in subsquare
/// vertex order (see blown_adjacency):
///   XV  x (x) 1_k (x) y,   x eigenvector of l_v for l, y in kj_basis(k)  -> l*k - 1
///   XH  x (x) y (x) 1_k,   x eigenvector of l_h for l                     -> l*k - 1
///   XE  e_i (x) y (x) z,   y, z in kj_basis(k)                            -> -1
///   XM  x (x) 1_{k^2},     x eigenvector of M = k^2 l_b + k l_h + k l_v   -> l + k^2 - 1
struct EigenFamily {
  FamilyKind kind = FamilyKind::XV;
  std::vector<FamilyVector> vectors;
};

/// k^2 l_b + k l_h + k l_v.
IntMatrix family_m_matrix(const Tiling& t, std::size_t k);

/// The four families, in the order XV, XH, XE, XM.
std::array<EigenFamily, 4> build_families(const Tiling& t, std::size_t k);

struct PredictedEigenvalue {
  Eigenvalue value;
  FamilyKind family = FamilyKind::XM;
};

/// Spectrum of the k-fold blow-up predicted from the spectra of l_v, l_h and M,
/// ascending, each value tagged with the family it comes from.
std::vector<PredictedEigenvalue> predicted_spectrum(const Tiling& t, std::size_t k);

struct ClauseResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct EigenBasisReport {
  std::size_t m = 0;
  std::size_t k = 0;
  std::size_t block_size = 0;
  std::array<std::size_t, 4> family_sizes{};
  std::size_t exact_vectors = 0;
  std::size_t approx_vectors = 0;
  std::size_t total_rank = 0;
  bool rank_exact = true;
  /// Largest relative residual |Up v - mu v| / (|Up|_F |v|) over approximate
  /// vectors; exact vectors must have zero residual and do not contribute.
  double max_residual = 0.0;
  std::vector<PredictedEigenvalue> predicted;
  std::vector<double> oracle;
  double max_spectrum_deviation = 0.0;
  double predicted_max = 0.0;
  FamilyKind predicted_max_family = FamilyKind::XM;
  double m_lambda_max = 0.0;
  double oracle_max = 0.0;
  double lower_bound = 0.0;
  std::vector<ClauseResult> clauses;

  bool passed() const;
};

/// Builds the families and checks every clause: family sizes, nonzero vectors,
/// eigen-equations (exactly for exact vectors, within 1e-8 relative otherwise),
/// rank k^2 m^2 (exact when every vector is exact, else numerical), predicted
/// against oracle spectrum within 1e-6, and that the largest eigenvalue comes
/// from XM, matches lambda_max(M) + k^2 - 1 and is at least s k^2 - 1, where
/// s is the block size (s = m for puzzle tilings): each blown-up block is a
/// clique on s k^2 vertices.
/// Never throws on a failed clause.
EigenBasisReport analyze(const Tiling& t, std::size_t k);

/// analyze, then throws VerificationFailure naming the first failed clause.
EigenBasisReport verify(const Tiling& t, std::size_t k);

}  // namespace sudoku_spectra
