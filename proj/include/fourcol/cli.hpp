#pragma once

// Command-line front end. `run` parses arguments, dispatches to a
// subcommand and returns the process exit code:
//   0  all computations completed and every required claim passed
//   1  usage error (bad flags, unreadable or malformed input, unwritable output)
//   2  a required claim failed
//   3  internal consistency fault

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "fourcol/asymptotics.hpp"
#include "fourcol/census.hpp"
#include "fourcol/census_table.hpp"
#include "fourcol/chromatic.hpp"
#include "fourcol/claims.hpp"
#include "fourcol/errors.hpp"
#include "fourcol/planar_code.hpp"

namespace fourcol::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kClaimFailed = 2, kConsistency = 3 };

struct RunConfig {
  std::string subcommand;
  int order = 200;
  int vmax = 8;
  int qmax = 9;
  int digits = 30;
  std::string output = ".";
  int threads = 0;
  std::string input;
  std::optional<long> lambda;
};

namespace detail {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline void write_file(const RunConfig& cfg, const std::string& name, const std::string& bytes, std::ostream& out) {
  std::error_code ec;
  std::filesystem::create_directories(cfg.output, ec);
  const auto path = std::filesystem::path(cfg.output) / name;
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << bytes) || !f.flush()) throw UsageError("cannot write " + path.string());
  out << "wrote " << path.string() << "\n";
}

inline std::string real_str(const Real& x, const RunConfig& cfg) { return format_real(x, cfg.digits); }

inline int series_cmd(const RunConfig& cfg, std::ostream& out) {
  const TruncatedSeries g = g_series(cfg.order);
  const TruncatedSeries h = h_candidate(cfg.order);
  const TruncatedSeries d = g - h;
  const TruncatedSeries q = mul(d, d);
  std::ostringstream csv;
  csv << "n,g,h,g_minus_h,q\n";
  out << "n\tg\th\tg-h\t(g-h)^2\n";
  for (int n = 0; n <= cfg.order; ++n) {
    csv << n << ',' << to_string(g[n]) << ',' << to_string(h[n]) << ',' << to_string(d[n]) << ',' << to_string(q[n])
        << '\n';
    out << n << '\t' << to_string(g[n]) << '\t' << to_string(h[n]) << '\t' << to_string(d[n]) << '\t'
        << to_string(q[n]) << '\n';
  }
  write_file(cfg, "series.csv", csv.str(), out);
  return kOk;
}

inline int verify_cmd(const RunConfig& cfg, std::ostream& out) {
  VerifyOptions o;
  o.order = cfg.order;
  o.vmax = cfg.vmax;
  o.qmax = cfg.qmax;
  o.digits = cfg.digits;
  o.threads = cfg.threads;
  const LedgerRun run = run_claims(o, [&](const ClaimRecord& r) {
    out << to_string(r.status) << "\t" << r.claim_id << "\t" << r.detail << "\n";
  });
  write_file(cfg, "ledger.csv", ledger_csv(run.rows), out);
  if (run.consistency_fault) return kConsistency;
  return run.required_failed ? kClaimFailed : kOk;
}

inline int asymptotics_cmd(const RunConfig& cfg, std::ostream& out) {
  PrecisionScope scope(static_cast<unsigned>(cfg.digits + 10));
  std::vector<std::pair<std::string, std::string>> rows;
  auto emit = [&](const std::string& k, const std::string& v) {
    rows.emplace_back(k, v);
    out << k << " = " << v << "\n";
  };

  const AEnclosure a = eval_A(std::max(12, cfg.digits));
  emit("A_lower", to_string(a.value.lower));
  emit("A_upper", to_string(a.value.upper));
  emit("A", real_str(midpoint(a.value), cfg));
  emit("A_literal_reading", real_str(midpoint(a.literal_reading), cfg));
  emit("B", real_str(const_B(cfg.digits).value, cfg));

  const TruncatedSeries g = g_series(cfg.order + 1);
  const int window = std::max(8, cfg.order / 4);
  emit("radius_g", real_str(radius_estimate(g.coefficients(), window, cfg.digits).value, cfg));
  emit("radius_g_exact", to_string(singularity()));
  const TruncatedSeries h = h_candidate(cfg.order);
  emit("radius_h_candidate", real_str(radius_estimate(h.coefficients(), window, cfg.digits).value, cfg));
  emit("radius_h_formula", to_string(h_formula_radius()));

  const SingularExpansion s = singular_fit(cfg.order, cfg.digits);
  emit("fit_A", real_str(s.A.value, cfg));
  emit("fit_A1", real_str(s.A1.value, cfg));
  emit("fit_B", real_str(s.B.value, cfg));
  emit("fit_two_term_residual", real_str(s.two_term_residual, cfg));

  const RatioTable t = ratio_table(cfg.order, cfg.digits, cfg.digits);
  emit("ratio_extrapolated_limit", real_str(t.extrapolated_limit, cfg));
  emit("ratio_two_A", real_str(t.two_a, cfg));
  emit("ratio_stated_constant", real_str(t.paper_constant, cfg));
  emit("ratio_implied_constant", real_str(t.implied_constant, cfg));
  emit("ratio_peak_n", std::to_string(t.peak_n));

  std::ostringstream csv;
  csv << "quantity,value\n";
  for (const auto& [k, v] : rows) csv << k << ',' << v << '\n';
  out << "n\t[x^n]g^2/[x^n]g\n";
  for (const RatioRow& r : t.rows) {
    csv << "ratio_" << r.n << ',' << to_string(r.ratio) << '\n';
    if (r.n <= 20 || r.n % std::max(1, cfg.order / 10) == 0) out << r.n << '\t' << format_real(to_real(r.ratio), cfg.digits) << '\n';
  }
  write_file(cfg, "asymptotics.csv", csv.str(), out);
  return kOk;
}

inline int census_cmd(const RunConfig& cfg, std::ostream& out) {
  const CensusTable t = census_table(cfg.vmax, cfg.threads);
  std::ostringstream csv;
  csv << "V,classes,rooted_total,rooted_4connected,rooted_in_Q,g_index,q_fraction\n";
  out << "V\tclasses\trooted\t4-connected\tQ\tg index\n";
  for (const CensusRow& r : t.rows) {
    const std::string n = r.aligned_n ? std::to_string(*r.aligned_n) : "";
    csv << r.V << ',' << r.classes << ',' << r.rooted_total << ',' << r.rooted_4connected << ',' << r.rooted_in_Q << ','
        << n << ',' << to_string(r.q_fraction()) << '\n';
    out << r.V << '\t' << r.classes << '\t' << r.rooted_total << '\t' << r.rooted_4connected << '\t' << r.rooted_in_Q
        << '\t' << n << '\n';
  }
  out << "offset: " << (t.offset ? "n = V - " + std::to_string(*t.offset) : std::string("none")) << "\n";
  write_file(cfg, "census.csv", csv.str(), out);
  return kOk;
}

inline int chromatic_cmd(const RunConfig& cfg, std::ostream& out) {
  std::vector<PlanarTriangulation> maps;
  try {
    maps = read_planar_code(read_file_bytes(cfg.input));
  } catch (const std::runtime_error& e) {  // unreadable file or ParseError
    throw UsageError(cfg.input + ": " + e.what());
  }
  ChromaticCache cache;
  std::ostringstream csv;
  csv << "map,V,polynomial,P4" << (cfg.lambda ? ",P_lambda" : "") << '\n';
  for (std::size_t i = 0; i < maps.size(); ++i) {
    const auto p = chromatic_poly(maps[i], &cache);
    four_colourable(maps[i], &cache);  // throws on a method disagreement
    out << "map " << i + 1 << " (V=" << maps[i].vertex_count() << "): P(T,λ) = " << p.to_string() << "\n";
    out << "P(T,4) = " << p.evaluate(4).get_str() << "\n";
    if (cfg.lambda) out << "P(T," << *cfg.lambda << ") = " << p.evaluate(*cfg.lambda).get_str() << "\n";
    csv << i + 1 << ',' << maps[i].vertex_count() << ',' << csv_field(p.to_string()) << ',' << p.evaluate(4).get_str();
    if (cfg.lambda) csv << ',' << p.evaluate(*cfg.lambda).get_str();
    csv << '\n';
  }
  write_file(cfg, "chromatic.csv", csv.str(), out);
  return kOk;
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Triangulation census, chromatic polynomials and generating-function checks", "fourcol"};
  app.require_subcommand(1, 1);
  app.add_option("--order", cfg.order, "series order")->check(CLI::Range(8, 5000));
  app.add_option("--vmax", cfg.vmax, "largest vertex count for census and brute-force checks")->check(CLI::Range(4, 12));
  app.add_option("--qmax", cfg.qmax, "largest vertex count for the Q colourability check")->check(CLI::Range(4, 12));
  app.add_option("--digits", cfg.digits, "significant digits for reals")->check(CLI::Range(12, 200));
  app.add_option("--output", cfg.output, "directory for CSV output");
  app.add_option("--threads", cfg.threads, "worker threads, 0 = hardware concurrency")->check(CLI::NonNegativeNumber);
  app.add_option("--input", cfg.input, "planar_code file");
  app.add_option("--lambda", cfg.lambda, "extra evaluation point for P(T,λ)");

  const std::vector<std::pair<const char*, const char*>> subs{
      {"series", "print g, h, g-h and (g-h)^2 coefficients"},
      {"verify", "run every registered claim and write ledger.csv"},
      {"asymptotics", "print A, B, radius estimates, singular fit and the ratio table"},
      {"census", "enumerate triangulations and write census.csv"},
      {"chromatic", "chromatic polynomials of maps read from a planar_code file"}};
  for (const auto& [name, help] : subs) app.add_subcommand(name, help)->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();

  try {
    if (cfg.subcommand == "chromatic" && cfg.input.empty()) throw detail::UsageError("chromatic: --input is required");
    if (cfg.subcommand == "series") return detail::series_cmd(cfg, out);
    if (cfg.subcommand == "verify") return detail::verify_cmd(cfg, out);
    if (cfg.subcommand == "asymptotics") return detail::asymptotics_cmd(cfg, out);
    if (cfg.subcommand == "census") return detail::census_cmd(cfg, out);
    return detail::chromatic_cmd(cfg, out);
  } catch (const detail::UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ConsistencyFault& e) {
    err << "consistency fault: " << e.what() << "\n";
    return kConsistency;
  }
}

}  // namespace fourcol::cli
