#include "sudoku_spectra_cli/report.hpp"

namespace sudoku_spectra::cli {

namespace {

template <typename T>
void put(json& j, const char* key, const std::optional<T>& v) {
  j[key] = v ? json(*v) : json(nullptr);
}

template <typename T>
void get(const json& j, const char* key, std::optional<T>& v) {
  if (!j.contains(key) || j.at(key).is_null()) {
    v.reset();
  } else {
    v = j.at(key).get<T>();
  }
}

}  // namespace

TilingRecord TilingRecord::of(const Tiling& t) {
  return {t.size(), std::vector<std::uint32_t>(t.blocks().begin(), t.blocks().end())};
}

ExactSpectrumRecord ExactSpectrumRecord::of(const Spectrum& s) {
  ExactSpectrumRecord r;
  for (const auto& [value, mult] : s.integer_part) r.integer_part.push_back({value.get_str(), mult});
  for (const auto& c : s.residual.coefficients()) r.residual.push_back(c.get_str());
  r.residual_degree = s.residual_degree();
  r.integral = s.is_integral();
  return r;
}

CheckReport CheckReport::of(const Tiling& t, const ConditionReport& c) {
  CheckReport r;
  r.tiling = TilingRecord::of(t);
  r.cond_i = c.cond_i;
  r.cond_ii = c.cond_ii;
  r.cond_iii = c.cond_iii;
  r.regcommute_h = {c.regcommute_h.regular, c.regcommute_h.constant_row_sum,
                    c.regcommute_h.commutes_with_lb};
  r.regcommute_v = {c.regcommute_v.regular, c.regcommute_v.constant_row_sum,
                    c.regcommute_v.commutes_with_lb};
  r.verdict = std::string(to_string(c.verdict));
  return r;
}

VerificationRecord VerificationRecord::of(bool reconciled, const EigenBasisReport& e) {
  VerificationRecord r;
  r.reconcile = reconciled;
  r.passed = reconciled && e.passed();
  for (const auto& c : e.clauses) r.clauses.push_back({c.name, c.passed, c.detail});
  r.family_sizes = e.family_sizes;
  r.total_rank = e.total_rank;
  r.rank_exact = e.rank_exact;
  r.max_residual = e.max_residual;
  for (const auto& p : e.predicted)
    r.predicted.push_back({p.value.to_string(), p.value.is_exact, std::string(to_string(p.family))});
  r.oracle = e.oracle;
  r.max_spectrum_deviation = e.max_spectrum_deviation;
  r.predicted_max = e.predicted_max;
  r.predicted_max_family = std::string(to_string(e.predicted_max_family));
  r.m_lambda_max = e.m_lambda_max;
  r.oracle_max = e.oracle_max;
  r.lower_bound = e.lower_bound;
  return r;
}

void to_json(json& j, const TilingRecord& r) { j = json{{"m", r.m}, {"blocks", r.blocks}}; }
void from_json(const json& j, TilingRecord& r) {
  j.at("m").get_to(r.m);
  j.at("blocks").get_to(r.blocks);
}

void to_json(json& j, const EigenvalueCount& r) {
  j = json{{"value", r.value}, {"multiplicity", r.multiplicity}};
}
void from_json(const json& j, EigenvalueCount& r) {
  j.at("value").get_to(r.value);
  j.at("multiplicity").get_to(r.multiplicity);
}

void to_json(json& j, const ExactSpectrumRecord& r) {
  j = json{{"integer_part", r.integer_part},
           {"residual", r.residual},
           {"residual_degree", r.residual_degree},
           {"integral", r.integral}};
}
void from_json(const json& j, ExactSpectrumRecord& r) {
  j.at("integer_part").get_to(r.integer_part);
  j.at("residual").get_to(r.residual);
  j.at("residual_degree").get_to(r.residual_degree);
  j.at("integral").get_to(r.integral);
}

void to_json(json& j, const SpectrumReport& r) {
  j = json{{"command", r.command}, {"mode", r.mode}, {"tiling", r.tiling}, {"elapsed_ms", r.elapsed_ms}};
  put(j, "exact", r.exact);
  put(j, "float_eigenvalues", r.float_eigenvalues);
}
void from_json(const json& j, SpectrumReport& r) {
  j.at("command").get_to(r.command);
  j.at("mode").get_to(r.mode);
  j.at("tiling").get_to(r.tiling);
  j.at("elapsed_ms").get_to(r.elapsed_ms);
  get(j, "exact", r.exact);
  get(j, "float_eigenvalues", r.float_eigenvalues);
}

void to_json(json& j, const RegCommuteRecord& r) {
  j = json{{"regular", r.regular},
           {"constant_row_sum", r.constant_row_sum},
           {"commutes_with_lb", r.commutes_with_lb}};
}
void from_json(const json& j, RegCommuteRecord& r) {
  j.at("regular").get_to(r.regular);
  j.at("constant_row_sum").get_to(r.constant_row_sum);
  j.at("commutes_with_lb").get_to(r.commutes_with_lb);
}

void to_json(json& j, const CheckReport& r) {
  j = json{{"command", r.command},         {"tiling", r.tiling},
           {"cond_iii", r.cond_iii},       {"regcommute_h", r.regcommute_h},
           {"regcommute_v", r.regcommute_v}, {"verdict", r.verdict},
           {"elapsed_ms", r.elapsed_ms}};
  put(j, "cond_i", r.cond_i);
  put(j, "cond_ii", r.cond_ii);
}
void from_json(const json& j, CheckReport& r) {
  j.at("command").get_to(r.command);
  j.at("tiling").get_to(r.tiling);
  j.at("cond_iii").get_to(r.cond_iii);
  j.at("regcommute_h").get_to(r.regcommute_h);
  j.at("regcommute_v").get_to(r.regcommute_v);
  j.at("verdict").get_to(r.verdict);
  j.at("elapsed_ms").get_to(r.elapsed_ms);
  get(j, "cond_i", r.cond_i);
  get(j, "cond_ii", r.cond_ii);
}

void to_json(json& j, const ClauseRecord& r) {
  j = json{{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}};
}
void from_json(const json& j, ClauseRecord& r) {
  j.at("name").get_to(r.name);
  j.at("passed").get_to(r.passed);
  j.at("detail").get_to(r.detail);
}

void to_json(json& j, const PredictedRecord& r) {
  j = json{{"value", r.value}, {"exact", r.exact}, {"family", r.family}};
}
void from_json(const json& j, PredictedRecord& r) {
  j.at("value").get_to(r.value);
  j.at("exact").get_to(r.exact);
  j.at("family").get_to(r.family);
}

void to_json(json& j, const VerificationRecord& r) {
  j = json{{"reconcile", r.reconcile},
           {"passed", r.passed},
           {"clauses", r.clauses},
           {"family_sizes", r.family_sizes},
           {"total_rank", r.total_rank},
           {"rank_exact", r.rank_exact},
           {"max_residual", r.max_residual},
           {"predicted", r.predicted},
           {"oracle", r.oracle},
           {"max_spectrum_deviation", r.max_spectrum_deviation},
           {"predicted_max", r.predicted_max},
           {"predicted_max_family", r.predicted_max_family},
           {"m_lambda_max", r.m_lambda_max},
           {"oracle_max", r.oracle_max},
           {"lower_bound", r.lower_bound}};
}
void from_json(const json& j, VerificationRecord& r) {
  j.at("reconcile").get_to(r.reconcile);
  j.at("passed").get_to(r.passed);
  j.at("clauses").get_to(r.clauses);
  j.at("family_sizes").get_to(r.family_sizes);
  j.at("total_rank").get_to(r.total_rank);
  j.at("rank_exact").get_to(r.rank_exact);
  j.at("max_residual").get_to(r.max_residual);
  j.at("predicted").get_to(r.predicted);
  j.at("oracle").get_to(r.oracle);
  j.at("max_spectrum_deviation").get_to(r.max_spectrum_deviation);
  j.at("predicted_max").get_to(r.predicted_max);
  j.at("predicted_max_family").get_to(r.predicted_max_family);
  j.at("m_lambda_max").get_to(r.m_lambda_max);
  j.at("oracle_max").get_to(r.oracle_max);
  j.at("lower_bound").get_to(r.lower_bound);
}

void to_json(json& j, const BlowupReport& r) {
  j = json{{"command", r.command}, {"k", r.k}, {"tiling", r.tiling},
           {"blown", r.blown},     {"elapsed_ms", r.elapsed_ms}};
  put(j, "out_file", r.out_file);
  put(j, "matrix_file", r.matrix_file);
  put(j, "permutation_file", r.permutation_file);
  put(j, "verification", r.verification);
}
void from_json(const json& j, BlowupReport& r) {
  j.at("command").get_to(r.command);
  j.at("k").get_to(r.k);
  j.at("tiling").get_to(r.tiling);
  j.at("blown").get_to(r.blown);
  j.at("elapsed_ms").get_to(r.elapsed_ms);
  get(j, "out_file", r.out_file);
  get(j, "matrix_file", r.matrix_file);
  get(j, "permutation_file", r.permutation_file);
  get(j, "verification", r.verification);
}

void to_json(json& j, const SearchRecord& r) {
  j = json{{"seed", r.seed},
           {"m", r.m},
           {"integral", r.integral},
           {"theorem_verdict", r.theorem_verdict},
           {"spectrum_digest", r.spectrum_digest}};
  put(j, "blowup_k", r.blowup_k);
  put(j, "blowup_integral", r.blowup_integral);
}
void from_json(const json& j, SearchRecord& r) {
  j.at("seed").get_to(r.seed);
  j.at("m").get_to(r.m);
  j.at("integral").get_to(r.integral);
  j.at("theorem_verdict").get_to(r.theorem_verdict);
  j.at("spectrum_digest").get_to(r.spectrum_digest);
  get(j, "blowup_k", r.blowup_k);
  get(j, "blowup_integral", r.blowup_integral);
}

void to_json(json& j, const SearchSummary& r) {
  j = json{{"integral_guaranteed", r.integral_guaranteed},
           {"integral_inconclusive", r.integral_inconclusive},
           {"nonintegral_blowup_integral", r.nonintegral_blowup_integral}};
}
void from_json(const json& j, SearchSummary& r) {
  j.at("integral_guaranteed").get_to(r.integral_guaranteed);
  j.at("integral_inconclusive").get_to(r.integral_inconclusive);
  j.at("nonintegral_blowup_integral").get_to(r.nonintegral_blowup_integral);
}

void to_json(json& j, const SearchReport& r) {
  j = json{{"command", r.command}, {"m", r.m},           {"count", r.count},
           {"seed", r.seed},       {"records", r.records}, {"summary", r.summary},
           {"elapsed_ms", r.elapsed_ms}};
  put(j, "blowup_k", r.blowup_k);
}
void from_json(const json& j, SearchReport& r) {
  j.at("command").get_to(r.command);
  j.at("m").get_to(r.m);
  j.at("count").get_to(r.count);
  j.at("seed").get_to(r.seed);
  j.at("records").get_to(r.records);
  j.at("summary").get_to(r.summary);
  j.at("elapsed_ms").get_to(r.elapsed_ms);
  get(j, "blowup_k", r.blowup_k);
}

json matrix_to_json(const IntMatrix& a) {
  json rows = json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    json row = json::array();
    for (const auto& x : a.row(i)) row.push_back(x.get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix matrix_from_json(const json& j) {
  const std::size_t n = j.size();
  IntMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (j.at(i).size() != n) throw DimensionMismatch("matrix JSON is not square");
    for (std::size_t c = 0; c < n; ++c) a(i, c) = BigInt(j.at(i).at(c).get<std::string>());
  }
  return a;
}

}  // namespace sudoku_spectra::cli
