#include "sudoku_spectra_cli/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

namespace sudoku_spectra::cli {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << content;
  if (!out) throw InputError("failed writing " + path);
}

Tiling load_tiling(const std::string& path) { return parse_tiling(read_input(path)); }

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string optional_q(const std::optional<std::size_t>& q) {
  return q ? std::to_string(*q) : std::string("absent");
}

// spectrum

void print_spectrum(std::ostream& out, const SpectrumReport& r) {
  out << "tiling: m=" << r.tiling.m << ", " << r.tiling.m * r.tiling.m << " vertices\n";
  if (r.exact) {
    out << "exact spectrum (eigenvalue x multiplicity):\n";
    for (const auto& e : r.exact->integer_part) out << "  " << e.value << " x" << e.multiplicity << '\n';
    out << "residual degree: " << r.exact->residual_degree
        << (r.exact->integral ? " (integral)" : " (not integral)") << '\n';
    if (!r.exact->integral) {
      std::vector<BigInt> coeffs;
      for (const auto& c : r.exact->residual) coeffs.emplace_back(c);
      out << "residual factor: " << IntPolynomial(std::move(coeffs)).to_string() << '\n';
    }
  }
  if (r.float_eigenvalues) {
    out << "float eigenvalues:\n";
    out << std::setprecision(10);
    for (double v : *r.float_eigenvalues) out << "  " << v << '\n';
  }
}

int cmd_spectrum(const std::string& file, const std::string& mode, bool as_json, std::ostream& out) {
  const auto start = Clock::now();
  const Tiling t = load_tiling(file);
  const IntMatrix a = adjacency(t);
  SpectrumReport r;
  r.mode = mode;
  r.tiling = TilingRecord::of(t);
  if (mode != "float") r.exact = ExactSpectrumRecord::of(exact_spectrum(a));
  if (mode != "exact") r.float_eigenvalues = float_eigen(a);
  r.elapsed_ms = elapsed_ms(start);
  if (as_json) {
    out << json(r).dump(2) << '\n';
  } else {
    print_spectrum(out, r);
  }
  return kExitOk;
}

// check

void print_regcommute(std::ostream& out, const char* label, const RegCommuteRecord& r) {
  out << label << ": regular=" << yes_no(r.regular)
      << " constant_row_sum=" << yes_no(r.constant_row_sum)
      << " commutes_with_lb=" << yes_no(r.commutes_with_lb) << '\n';
}

int cmd_check(const std::string& file, bool as_json, std::ostream& out) {
  const auto start = Clock::now();
  const Tiling t = load_tiling(file);
  CheckReport r = CheckReport::of(t, theorem_verdict(t));
  r.elapsed_ms = elapsed_ms(start);
  if (as_json) {
    out << json(r).dump(2) << '\n';
    return kExitOk;
  }
  out << "tiling: m=" << r.tiling.m << '\n';
  out << "cond (i)   row q:    " << optional_q(r.cond_i) << '\n';
  out << "cond (ii)  column q: " << optional_q(r.cond_ii) << '\n';
  out << "cond (iii) l_h l_v = l_v l_h: " << yes_no(r.cond_iii) << '\n';
  print_regcommute(out, "row layer", r.regcommute_h);
  print_regcommute(out, "column layer", r.regcommute_v);
  out << "verdict: " << r.verdict << '\n';
  return kExitOk;
}

// blowup

void print_verification(std::ostream& out, const VerificationRecord& v) {
  out << "verification:\n";
  out << "  reconcile: " << (v.reconcile ? "pass" : "FAIL") << '\n';
  for (const auto& c : v.clauses)
    out << "  " << c.name << ": " << (c.passed ? "pass" : "FAIL") << " (" << c.detail << ")\n";
  out << "predicted eigenvalues (value family x count):\n";
  for (std::size_t i = 0; i < v.predicted.size();) {
    std::size_t j = i;
    while (j < v.predicted.size() && v.predicted[j] == v.predicted[i]) ++j;
    out << "  " << v.predicted[i].value << ' ' << v.predicted[i].family << " x" << (j - i) << '\n';
    i = j;
  }
  out << "result: " << (v.passed ? "PASS" : "FAIL") << '\n';
}

std::string render_permutation(const std::vector<std::size_t>& perm) {
  std::ostringstream out;
  out << "# subsquare_index row_major_index (1-based)\n";
  for (std::size_t s = 0; s < perm.size(); ++s) out << s + 1 << ' ' << perm[s] + 1 << '\n';
  return out.str();
}

struct BlowupArgs {
  std::string file;
  std::size_t k = 2;
  std::optional<std::string> out_file;
  std::optional<std::string> matrix_file;
  std::string matrix_format = "text";
  std::optional<std::string> permutation_file;
  bool verify = false;
  bool json = false;
};

int cmd_blowup(const BlowupArgs& args, std::ostream& out) {
  const auto start = Clock::now();
  if (args.k < 1) throw InputError("--k must be at least 1");
  const Tiling t = load_tiling(args.file);
  const Tiling blown = blow_up_tiling(t, args.k);

  BlowupReport r;
  r.k = args.k;
  r.tiling = TilingRecord::of(t);
  r.blown = TilingRecord::of(blown);
  r.out_file = args.out_file;
  r.matrix_file = args.matrix_file;
  r.permutation_file = args.permutation_file;

  if (args.out_file) write_file(*args.out_file, render_tiling(blown));
  if (args.matrix_file) {
    const IntMatrix up = blown_adjacency(t, args.k);
    write_file(*args.matrix_file,
               args.matrix_format == "json" ? matrix_to_json(up).dump() + "\n" : render_matrix(up));
  }
  if (args.permutation_file) {
    write_file(*args.permutation_file, render_permutation(subsquare_permutation(t.size(), args.k)));
  }
  if (args.verify) {
    const bool reconciled = reconcile(t, args.k);
    r.verification = VerificationRecord::of(reconciled, analyze(t, args.k));
  }
  r.elapsed_ms = elapsed_ms(start);

  if (args.json) {
    out << json(r).dump(2) << '\n';
  } else {
    out << "# blow-up k=" << r.k << ": " << t.size() << "x" << t.size() << " -> " << blown.size()
        << "x" << blown.size() << '\n';
    if (args.out_file) {
      out << "tiling written to " << *args.out_file << '\n';
    } else {
      out << render_tiling(blown);
    }
    if (args.matrix_file) out << "matrix written to " << *args.matrix_file << '\n';
    if (args.permutation_file) out << "permutation written to " << *args.permutation_file << '\n';
    if (r.verification) print_verification(out, *r.verification);
  }
  return r.verification && !r.verification->passed ? kExitVerificationFailed : kExitOk;
}

// search

void print_search(std::ostream& out, const SearchReport& r) {
  for (const auto& rec : r.records) {
    out << "seed=" << rec.seed << " m=" << rec.m << " integral=" << yes_no(rec.integral)
        << " verdict=" << rec.theorem_verdict;
    if (rec.blowup_k) {
      out << " blowup_k=" << *rec.blowup_k << " blowup_integral=" << yes_no(*rec.blowup_integral);
    }
    out << " digest=" << rec.spectrum_digest << '\n';
  }
}

void print_summary(std::ostream& out, const SearchReport& r) {
  out << "tested: " << r.records.size() << '\n';
  out << "integral and guaranteed: " << r.summary.integral_guaranteed << '\n';
  out << "integral and inconclusive: " << r.summary.integral_inconclusive << '\n';
  out << "non-integral with integral blow-up: " << r.summary.nonintegral_blowup_integral << '\n';
}

struct SearchArgs {
  SearchOptions options;
  std::optional<std::string> out_file;
  bool json = false;
};

int cmd_search(const SearchArgs& args, std::ostream& out) {
  if (args.options.m < 2) throw InputError("--m must be at least 2");
  if (args.options.blowup_k && *args.options.blowup_k < 1) throw InputError("--blowup-k must be at least 1");
  if (args.options.jobs < 1) throw InputError("--jobs must be at least 1");
  const SearchReport r = run_search(args.options);

  std::ostringstream body;
  if (args.json) {
    body << json(r).dump(2) << '\n';
  } else {
    print_search(body, r);
    print_summary(body, r);
  }
  if (args.out_file) {
    write_file(*args.out_file, body.str());
    if (args.json) {
      out << json{{"command", r.command}, {"out_file", *args.out_file}, {"summary", r.summary}}.dump(2)
          << '\n';
    } else {
      print_summary(out, r);
    }
  } else {
    out << body.str();
  }
  return kExitOk;
}

// gen

int emit_tiling(const Tiling& t, const std::optional<std::string>& out_file, std::ostream& out) {
  if (out_file) {
    write_file(*out_file, render_tiling(t));
  } else {
    out << render_tiling(t);
  }
  return kExitOk;
}

}  // namespace

std::string spectrum_digest(const IntPolynomial& char_poly) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  bool first = true;
  for (const auto& c : char_poly.coefficients()) {
    std::string s = (first ? "" : ",") + c.get_str();
    first = false;
    for (unsigned char ch : s) {
      h ^= ch;
      h *= 0x100000001b3ULL;
    }
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

SearchRecord search_record(std::size_t m, std::uint64_t seed, std::optional<std::size_t> blowup_k) {
  const Tiling t = random_tiling(m, seed);
  const IntMatrix a = adjacency(t);
  const IntPolynomial p = char_poly(a);
  const auto roots = integer_roots(p, max_abs_row_sum(a));

  SearchRecord r;
  r.seed = seed;
  r.m = m;
  r.integral = roots.residual.is_constant();
  r.theorem_verdict = std::string(to_string(theorem_verdict(t).verdict));
  r.spectrum_digest = spectrum_digest(p);
  if (blowup_k) {
    r.blowup_k = blowup_k;
    r.blowup_integral = is_integral(blown_adjacency(t, *blowup_k));
  }
  return r;
}

SearchReport run_search(const SearchOptions& options) {
  const auto start = Clock::now();
  SearchReport report;
  report.m = options.m;
  report.count = options.count;
  report.seed = options.seed;
  report.blowup_k = options.blowup_k;
  report.records.resize(options.count);

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto worker = [&] {
    for (std::size_t i = next++; i < options.count; i = next++) {
      try {
        report.records[i] = search_record(options.m, options.seed + i, options.blowup_k);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const std::size_t jobs = std::max<std::size_t>(1, std::min(options.jobs, options.count));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (std::size_t j = 0; j < jobs; ++j) threads.emplace_back(worker);
    for (auto& th : threads) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  for (const auto& r : report.records) {
    const bool guaranteed = r.theorem_verdict == to_string(Verdict::GuaranteedIntegral);
    if (r.integral && guaranteed) ++report.summary.integral_guaranteed;
    if (r.integral && !guaranteed) ++report.summary.integral_inconclusive;
    if (!r.integral && r.blowup_integral.value_or(false)) ++report.summary.nonintegral_blowup_integral;
  }
  report.elapsed_ms = elapsed_ms(start);
  return report;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectra of free-form Sudoku graphs and their blow-ups", "sudoku-spectra"};
  app.require_subcommand(1);

  std::string file;
  bool as_json = false;

  auto* spectrum = app.add_subcommand("spectrum", "Exact and/or float spectrum of a tiling's graph");
  spectrum->add_option("file", file, "Tiling file ('-' for stdin)")->required();
  auto* exact_flag = spectrum->add_flag("--exact", "Exact spectrum only");
  auto* float_flag = spectrum->add_flag("--float", "Float oracle eigenvalues only");
  auto* both_flag = spectrum->add_flag("--both", "Both (default)");
  exact_flag->excludes(float_flag)->excludes(both_flag);
  float_flag->excludes(both_flag);
  spectrum->add_flag("--json", as_json, "JSON report");

  auto* check = app.add_subcommand("check", "Sufficient integrality conditions");
  check->add_option("file", file, "Tiling file ('-' for stdin)")->required();
  check->add_flag("--json", as_json, "JSON report");

  BlowupArgs blowup_args;
  auto* blowup = app.add_subcommand("blowup", "k-fold blow-up, optionally verified");
  blowup->add_option("file", blowup_args.file, "Tiling file ('-' for stdin)")->required();
  blowup->add_option("--k", blowup_args.k, "Blow-up factor")->required();
  blowup->add_option("--out", blowup_args.out_file, "Write the blown-up tiling here");
  blowup->add_option("--matrix", blowup_args.matrix_file,
                     "Write the blown-up adjacency (subsquare order) here");
  blowup->add_option("--matrix-format", blowup_args.matrix_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  blowup->add_option("--permutation", blowup_args.permutation_file,
                     "Write the subsquare to row-major permutation here");
  blowup->add_flag("--verify", blowup_args.verify, "Reconcile and verify the eigenbasis");
  blowup->add_flag("--json", blowup_args.json, "JSON report");

  SearchArgs search_args;
  auto* search = app.add_subcommand("search", "Random tilings: integrality and theorem verdicts");
  search->add_option("--m", search_args.options.m, "Puzzle size")->required();
  search->add_option("--count", search_args.options.count, "Number of tilings");
  search->add_option("--seed", search_args.options.seed, "First seed");
  search->add_option("--blowup-k", search_args.options.blowup_k, "Also test the k-fold blow-up");
  search->add_option("--jobs", search_args.options.jobs, "Worker threads");
  search->add_option("--out", search_args.out_file, "Write records here");
  search->add_flag("--json", search_args.json, "JSON report");

  std::optional<std::string> gen_out;
  std::size_t gen_n = 2, gen_m = 4;
  std::uint64_t gen_seed = 0;
  auto* gen = app.add_subcommand("gen", "Emit a tiling file");
  gen->require_subcommand(1);
  auto* gen_classical = gen->add_subcommand("classical", "Classical n-Sudoku, m = n^2");
  gen_classical->add_option("--n", gen_n, "Box size")->required();
  gen_classical->add_option("--out", gen_out, "Output file");
  auto* gen_row = gen->add_subcommand("row", "Blocks are rows");
  gen_row->add_option("--m", gen_m, "Puzzle size")->required();
  gen_row->add_option("--out", gen_out, "Output file");
  auto* gen_random = gen->add_subcommand("random", "Uniformly shuffled equal-size labels");
  gen_random->add_option("--m", gen_m, "Puzzle size")->required();
  gen_random->add_option("--seed", gen_seed, "Seed")->required();
  gen_random->add_option("--out", gen_out, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (spectrum->parsed()) {
      const std::string mode = *exact_flag ? "exact" : *float_flag ? "float" : "both";
      return cmd_spectrum(file, mode, as_json, out);
    }
    if (check->parsed()) return cmd_check(file, as_json, out);
    if (blowup->parsed()) return cmd_blowup(blowup_args, out);
    if (search->parsed()) return cmd_search(search_args, out);
    if (gen_classical->parsed()) {
      if (gen_n < 1 || gen_n > 64) throw InputError("--n must be in [1, 64]");
      return emit_tiling(classical_tiling(gen_n), gen_out, out);
    }
    if (gen_row->parsed() || gen_random->parsed()) {
      if (gen_m < 1 || gen_m > 4096) throw InputError("--m must be in [1, 4096]");
      return emit_tiling(gen_row->parsed() ? row_tiling(gen_m) : random_tiling(gen_m, gen_seed),
                         gen_out, out);
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const SyntaxError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const PartitionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const VerificationFailure& e) {
    err << "verification failed: " << e.what() << '\n';
    return kExitVerificationFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitComputeError;
  }
  return kExitOk;
}

}  // namespace sudoku_spectra::cli
