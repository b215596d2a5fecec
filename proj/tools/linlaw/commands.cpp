#include "commands.hpp"

#include <fstream>
#include <sstream>

#ifdef LINLAW_CLI11_PACKAGE
#include <CLI/CLI.hpp>
#else
#include <CLI11.hpp>
#endif
#include <fmt/format.h>
#include <fmt/ostream.h>
#include <nlohmann/json.hpp>

#include "linlaw/error.hpp"
#include "linlaw/linear_law.hpp"
#include "linlaw/markov.hpp"
#include "linlaw/price_ingest.hpp"
#include "linlaw/reference_chains.hpp"
#include "linlaw/score_table.hpp"
#include "linlaw/text_io.hpp"
#include "linlaw/time_format.hpp"

namespace linlaw::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string format_complex(std::complex<double> z) {
  if (z.imag() == 0.0) return fmt::format("{}", z.real());
  return fmt::format("{}{:+}i", z.real(), z.imag());
}

// Spectrum, score and (when well defined) the law of one autocorrelation.
struct Analysis {
  GramSpectrum spectrum;
  std::optional<LinearLaw> law;
  std::optional<double> score;
  bool degenerate = false;
};

Analysis analyze(const AutocorrSequence& c, const EmbeddingConfig& cfg) {
  Analysis a;
  a.spectrum = embed_and_decompose(c, cfg);
  try {
    a.law = extract_law(a.spectrum);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::DegenerateNullspace) throw;
    a.degenerate = true;
  }
  if (a.spectrum.eigenvalues[0] == 0.0) a.degenerate = true;
  if (cfg.order >= 3) a.score = a.degenerate ? 0.0 : excess_rank_score(a.spectrum);
  return a;
}

void write_analysis_csv(std::ostream& out, const Analysis& a) {
  out << "index,eigenvalue,normalized,law_coeff,root_re,root_im,degenerate\n";
  const std::size_t n = a.spectrum.order();
  for (std::size_t i = 0; i < n; ++i) {
    std::string coeff, re, im;
    if (a.law) {
      coeff = fmt::format("{}", a.law->coeffs[i]);
      if (i < a.law->roots.size()) {
        re = fmt::format("{}", a.law->roots[i].real());
        im = fmt::format("{}", a.law->roots[i].imag());
      }
    }
    out << fmt::format("{},{},{},{},{},{},{}\n", i + 1, a.spectrum.eigenvalues[i],
                       a.spectrum.normalized[i], coeff, re, im, a.degenerate ? 1 : 0);
  }
}

void write_analysis_json(std::ostream& out, const Analysis& a, const EmbeddingConfig& cfg,
                         std::size_t samples) {
  Json j;
  j["samples"] = samples;
  j["lags"] = cfg.lags;
  j["order"] = cfg.order;
  j["eigenvalues"] = a.spectrum.eigenvalues;
  j["normalized"] = a.spectrum.normalized;
  j["score"] = a.score ? Json(*a.score) : Json(nullptr);
  j["degenerate"] = a.degenerate;
  if (a.law) {
    Json roots = Json::array();
    for (auto r : a.law->roots) roots.push_back({{"re", r.real()}, {"im", r.imag()}});
    j["law"] = {{"coeffs", a.law->coeffs}, {"residual", a.law->residual}, {"roots", roots}};
  } else {
    j["law"] = nullptr;
  }
  out << j.dump() << '\n';
}

void print_chain_diagnostics(const TransferMatrix& t, std::ostream& diag) {
  std::vector<std::string> eig;
  for (auto l : spectrum(t)) eig.push_back(format_complex(l));
  fmt::print(diag, "spectrum: {}\n", fmt::join(eig, " "));
  try {
    fmt::print(diag, "equilibrium: {}\n", fmt::join(equilibrium(t).probs, " "));
  } catch (const Error& e) {
    fmt::print(diag, "equilibrium: {}\n", e.what());
  }
}

void print_report(const IngestReport& r, std::ostream& diag) {
  fmt::print(diag,
             "ingest: rows_read={} rows_kept={} malformed={} ohlc_violations={} "
             "duplicates_dropped={} gaps_detected={} missing_samples={} cadence_s={} "
             "missing_rate={:.6f}\n",
             r.rows_read, r.rows_kept, r.malformed, r.ohlc_violations, r.duplicates_dropped,
             r.gaps_detected, r.missing_samples, r.cadence_seconds, r.missing_rate);
}

}  // namespace

void cmd_simulate(const RunConfig& cfg, std::ostream& out, std::ostream& diag) {
  const auto t = load_transfer_matrix(cfg.matrix, cfg.normalize);
  print_chain_diagnostics(t, diag);
  write_series(out, simulate(t, cfg.x0, cfg.length, cfg.seed));
}

void cmd_analyze(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& diag) {
  const auto series = read_series(in);
  const auto embedding = cfg.embedding();
  embedding.validate();
  const auto c = estimate_autocorr(series, embedding.required_k_max());
  const auto a = analyze(c, embedding);
  fmt::print(diag, "samples={} alphabet={} score={} degenerate={}\n", series.size(),
             series.alphabet_size(), a.score ? fmt::format("{}", *a.score) : "n/a", a.degenerate);
  if (cfg.format == OutputFormat::Json)
    write_analysis_json(out, a, embedding, series.size());
  else
    write_analysis_csv(out, a);
}

void cmd_scan(const RunConfig& cfg, std::ostream& out, std::ostream& diag) {
  TimeRange range;
  if (cfg.from) range.from = parse_iso8601_utc(*cfg.from);
  if (cfg.to) range.to = parse_iso8601_utc(*cfg.to);

  ParsedCsv parsed = parse_csv(cfg.input);
  auto [prices, report] = to_price_series(std::move(parsed.rows), range, parsed.report);
  print_report(report, diag);

  const auto moves = binarize(prices);
  const auto times = movement_times(prices);
  ScanConfig scan_cfg{cfg.width, cfg.stride, cfg.embedding(), cfg.threads};
  const auto scores = scan(moves.states(), scan_cfg, times);
  fmt::print(diag, "scan: {} binary samples, {} windows\n", moves.size(), scores.size());

  const auto table = score_table(scores);
  if (cfg.format == OutputFormat::Json)
    write_jsonl(out, table);
  else
    write_csv(out, table);
}

void cmd_demo(const RunConfig& cfg, std::ostream& out, std::ostream& diag) {
  const auto embedding = cfg.embedding();
  embedding.validate();
  const std::size_t k_max = embedding.required_k_max();

  const auto tx = reference_chain_x();
  const auto ty = reference_chain_y();
  const auto x = simulate(tx, kChainXInitial, cfg.length, cfg.seed);
  const auto y = simulate(ty, kChainYInitial, cfg.length, cfg.seed + 1);
  const auto z = project(y, kLeftBitMap);

  const auto sx = embed_and_decompose(estimate_autocorr(x, k_max), embedding).normalized;
  const auto sy = embed_and_decompose(estimate_autocorr(y, k_max), embedding).normalized;
  const auto sz = embed_and_decompose(estimate_autocorr(z, k_max), embedding).normalized;
  fmt::print(diag, "demo: length={} seeds x={} y={} (z = left bit of y)\n", cfg.length, cfg.seed,
             cfg.seed + 1);

  if (cfg.format == OutputFormat::Json) {
    Json j;
    j["length"] = cfg.length;
    j["lags"] = embedding.lags;
    j["order"] = embedding.order;
    j["lambda_x"] = sx;
    j["lambda_y"] = sy;
    j["lambda_z"] = sz;
    out << j.dump() << '\n';
    return;
  }
  out << "rank,lambda_x,lambda_y,lambda_z\n";
  for (std::size_t i = 0; i < embedding.order; ++i)
    out << fmt::format("{},{},{},{}\n", i + 1, sx[i], sy[i], sz[i]);
}

int exit_status_for(ErrorCode code) noexcept {
  if (is_numerical(code)) return kNumericalFault;
  switch (code) {
    case ErrorCode::WindowTooSmall:
    case ErrorCode::EmptyScan:
    case ErrorCode::OrderTooSmall:
      return kScanError;
    default:
      return kInputError;
  }
}

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Linear laws of categorical Markov chains and excess-rank anomaly scans", "linlaw"};
  app.require_subcommand(1);

  const std::map<std::string, OutputFormat> formats{{"csv", OutputFormat::Csv},
                                                    {"json", OutputFormat::Json}};
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--out,-o", cfg.output, "Output file (default: stdout)");
    sub->add_option("--format", cfg.format, "Output format: csv or json")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
        ->default_str("csv");
  };
  auto add_embedding = [&](CLI::App* sub) {
    sub->add_option("--lags", cfg.lags,
                    "Embedding rows K, lag offsets 0..K-1 (default 20, as in the "
                    "hidden-Markov demo)")
        ->capture_default_str();
    sub->add_option("--order", cfg.order,
                    "Embedding columns n = law coefficients (default 5, as in the "
                    "hidden-Markov demo)")
        ->capture_default_str();
  };

  auto* sim = app.add_subcommand("simulate", "Simulate a Markov chain from a transfer-matrix file");
  sim->add_option("--matrix,-m", cfg.matrix,
                  "Transfer matrix: dim, then dim rows; entry (x, y) = P(y -> x)")
      ->required();
  sim->add_flag("--normalize", cfg.normalize, "Rescale columns to sum to one before validation");
  sim->add_option("--x0", cfg.x0, "Initial state")->capture_default_str();
  sim->add_option("--length,-N", cfg.length, "Series length (default 10^6, the demo length)")
      ->capture_default_str();
  sim->add_option("--seed", cfg.seed, "RNG seed (mt19937_64)")->capture_default_str();
  sim->add_option("--out,-o", cfg.output, "Output file (default: stdout)");

  auto* ana = app.add_subcommand("analyze", "Gram spectrum and linear law of a categorical series");
  ana->add_option("input", cfg.input, "Newline-delimited state indices (default: stdin)");
  add_embedding(ana);
  add_output(ana);

  auto* scn = app.add_subcommand("scan", "Windowed excess-rank scores of an OHLCV price export");
  scn->add_option("input", cfg.input, "OHLCV CSV file")->required();
  scn->add_option("--width", cfg.width,
                  "Samples per window (default 30000, the Bitcoin minute-price scan width)")
      ->capture_default_str();
  scn->add_option("--stride", cfg.stride, "Offset between windows (default: width, non-overlapping)");
  add_embedding(scn);
  scn->add_option("--from", cfg.from, "First timestamp kept, ISO-8601 UTC");
  scn->add_option("--to", cfg.to, "Last timestamp kept, ISO-8601 UTC");
  scn->add_option("--threads", cfg.threads, "Worker threads (default: hardware concurrency)");
  add_output(scn);

  auto* demo = app.add_subcommand("demo", "Spectra of the two-state, four-state and left-bit chains");
  demo->add_option("--length,-N", cfg.length, "Series length (default 10^6)")->capture_default_str();
  demo->add_option("--seed", cfg.seed, "RNG seed of x; y uses seed + 1")->capture_default_str();
  add_embedding(demo);
  add_output(demo);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "linlaw: " << e.what() << '\n';
    return kInputError;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!cfg.output.empty() && cfg.output != "-") {
    file.open(cfg.output, std::ios::binary);
    if (!file) {
      err << "linlaw: cannot open " << cfg.output << " for writing\n";
      return kInputError;
    }
    sink = &file;
  }

  try {
    if (sim->parsed()) {
      cmd_simulate(cfg, *sink, err);
    } else if (ana->parsed()) {
      if (cfg.input.empty() || cfg.input == "-") {
        cmd_analyze(cfg, in, *sink, err);
      } else {
        std::ifstream series_file(cfg.input);
        if (!series_file) throw Error(ErrorCode::UnreadableSource, "cannot open " + cfg.input);
        cmd_analyze(cfg, series_file, *sink, err);
      }
    } else if (scn->parsed()) {
      cmd_scan(cfg, *sink, err);
    } else if (demo->parsed()) {
      cmd_demo(cfg, *sink, err);
    }
  } catch (const Error& e) {
    err << "linlaw: " << e.what() << '\n';
    return exit_status_for(e.code());
  } catch (const std::exception& e) {
    err << "linlaw: internal error: " << e.what() << '\n';
    return kInternalError;
  }
  sink->flush();
  return kSuccess;
}

}  // namespace linlaw::cli
