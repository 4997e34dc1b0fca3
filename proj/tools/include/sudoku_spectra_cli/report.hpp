#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sudoku_spectra/sudoku_spectra.hpp"

namespace sudoku_spectra::cli {

using nlohmann::json;

/// Block labels, row-major.
struct TilingRecord {
  std::size_t m = 0;
  std::vector<std::uint32_t> blocks;

  static TilingRecord of(const Tiling& t);
  friend bool operator==(const TilingRecord&, const TilingRecord&) = default;
};

struct EigenvalueCount {
  std::string value;  ///< decimal integer
  std::size_t multiplicity = 0;
  friend bool operator==(const EigenvalueCount&, const EigenvalueCount&) = default;
};

struct ExactSpectrumRecord {
  std::vector<EigenvalueCount> integer_part;
  std::vector<std::string> residual;  ///< coefficients, ascending, decimal
  std::size_t residual_degree = 0;
  bool integral = false;

  static ExactSpectrumRecord of(const Spectrum& s);
  friend bool operator==(const ExactSpectrumRecord&, const ExactSpectrumRecord&) = default;
};

struct SpectrumReport {
  std::string command = "spectrum";
  std::string mode;  ///< exact, float or both
  TilingRecord tiling;
  std::optional<ExactSpectrumRecord> exact;
  std::optional<std::vector<double>> float_eigenvalues;
  double elapsed_ms = 0.0;
  friend bool operator==(const SpectrumReport&, const SpectrumReport&) = default;
};

struct RegCommuteRecord {
  bool regular = false;
  bool constant_row_sum = false;
  bool commutes_with_lb = false;
  friend bool operator==(const RegCommuteRecord&, const RegCommuteRecord&) = default;
};

struct CheckReport {
  std::string command = "check";
  TilingRecord tiling;
  std::optional<std::size_t> cond_i;
  std::optional<std::size_t> cond_ii;
  bool cond_iii = false;
  RegCommuteRecord regcommute_h;
  RegCommuteRecord regcommute_v;
  std::string verdict;
  double elapsed_ms = 0.0;

  static CheckReport of(const Tiling& t, const ConditionReport& r);
  friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

struct ClauseRecord {
  std::string name;
  bool passed = false;
  std::string detail;
  friend bool operator==(const ClauseRecord&, const ClauseRecord&) = default;
};

struct PredictedRecord {
  std::string value;  ///< decimal integer when exact, float text otherwise
  bool exact = true;
  std::string family;
  friend bool operator==(const PredictedRecord&, const PredictedRecord&) = default;
};

struct VerificationRecord {
  bool reconcile = false;
  bool passed = false;
  std::vector<ClauseRecord> clauses;
  std::array<std::size_t, 4> family_sizes{};
  std::size_t total_rank = 0;
  bool rank_exact = true;
  double max_residual = 0.0;
  std::vector<PredictedRecord> predicted;
  std::vector<double> oracle;
  double max_spectrum_deviation = 0.0;
  double predicted_max = 0.0;
  std::string predicted_max_family;
  double m_lambda_max = 0.0;
  double oracle_max = 0.0;
  double lower_bound = 0.0;

  static VerificationRecord of(bool reconciled, const EigenBasisReport& r);
  friend bool operator==(const VerificationRecord&, const VerificationRecord&) = default;
};

struct BlowupReport {
  std::string command = "blowup";
  std::size_t k = 0;
  TilingRecord tiling;
  TilingRecord blown;
  std::optional<std::string> out_file;
  std::optional<std::string> matrix_file;
  std::optional<std::string> permutation_file;
  std::optional<VerificationRecord> verification;
  double elapsed_ms = 0.0;
  friend bool operator==(const BlowupReport&, const BlowupReport&) = default;
};

struct SearchRecord {
  std::uint64_t seed = 0;
  std::size_t m = 0;
  bool integral = false;
  std::string theorem_verdict;
  std::optional<std::size_t> blowup_k;
  std::optional<bool> blowup_integral;
  std::string spectrum_digest;  ///< FNV-1a 64 of the characteristic polynomial, hex
  friend bool operator==(const SearchRecord&, const SearchRecord&) = default;
};

struct SearchSummary {
  std::size_t integral_guaranteed = 0;
  std::size_t integral_inconclusive = 0;
  /// Non-integral tilings whose blow-up is integral.
  std::size_t nonintegral_blowup_integral = 0;
  friend bool operator==(const SearchSummary&, const SearchSummary&) = default;
};

struct SearchReport {
  std::string command = "search";
  std::size_t m = 0;
  std::size_t count = 0;
  std::uint64_t seed = 0;
  std::optional<std::size_t> blowup_k;
  std::vector<SearchRecord> records;
  SearchSummary summary;
  double elapsed_ms = 0.0;
  friend bool operator==(const SearchReport&, const SearchReport&) = default;
};

void to_json(json& j, const TilingRecord& r);
void from_json(const json& j, TilingRecord& r);
void to_json(json& j, const EigenvalueCount& r);
void from_json(const json& j, EigenvalueCount& r);
void to_json(json& j, const ExactSpectrumRecord& r);
void from_json(const json& j, ExactSpectrumRecord& r);
void to_json(json& j, const SpectrumReport& r);
void from_json(const json& j, SpectrumReport& r);
void to_json(json& j, const RegCommuteRecord& r);
void from_json(const json& j, RegCommuteRecord& r);
void to_json(json& j, const CheckReport& r);
void from_json(const json& j, CheckReport& r);
void to_json(json& j, const ClauseRecord& r);
void from_json(const json& j, ClauseRecord& r);
void to_json(json& j, const PredictedRecord& r);
void from_json(const json& j, PredictedRecord& r);
void to_json(json& j, const VerificationRecord& r);
void from_json(const json& j, VerificationRecord& r);
void to_json(json& j, const BlowupReport& r);
void from_json(const json& j, BlowupReport& r);
void to_json(json& j, const SearchRecord& r);
void from_json(const json& j, SearchRecord& r);
void to_json(json& j, const SearchSummary& r);
void from_json(const json& j, SearchSummary& r);
void to_json(json& j, const SearchReport& r);
void from_json(const json& j, SearchReport& r);

/// Square matrix as an array of rows of decimal strings.
json matrix_to_json(const IntMatrix& a);
IntMatrix matrix_from_json(const json& j);

}  // namespace sudoku_spectra::cli
