#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "uttp/analysis.hpp"
#include "uttp/solver.hpp"

namespace uttp::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInvalidInstance = 2,
  kInfeasibleSchedule = 3,
  kCertificateFailure = 4,
  kIoError = 5,
};

/// Entry point shared by the `uttp` binary and the tests. `args` excludes
/// the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses --tsp values: "exact", "christofides" or "tour-file=PATH".
struct TspChoice {
  TspMode mode = TspMode::exact;
  std::filesystem::path tour_path;
};
TspChoice parse_tsp_choice(const std::string& text);

/// "key: value" lines with the stable report keys, followed by the
/// certificate checks when present.
std::string render_report_text(const SolveReport& report,
                               const std::optional<BoundCertificate>& certificate);

/// Same content as a JSON document (integral instances give integer
/// distances, decimal instances give numbers in instance units).
std::string render_report_json(const SolveResult& result,
                               const std::optional<BoundCertificate>& certificate,
                               bool include_candidates);

struct BenchRow {
  std::string family;
  int n = 0;
  std::string status;  // "ok", "skipped" or "error"
  std::string note;
  TspMode mode = TspMode::exact;
  Distance total = 0;
  std::optional<Distance> lower_bound;
  std::optional<double> gap;
  std::optional<Distance> best_known;
  int decimals = 0;
};

struct BenchOptions {
  int max_n = 40;
  TspMode mode = TspMode::exact;
  int held_karp_cap = kDefaultHeldKarpCap;
};

/// Runs every instance file named <family><n>[.ext] in `dir`, ordered by
/// family then n. A <family><n>.tour file next to an instance supplies the
/// full tour when n exceeds the Held-Karp cap in exact mode; without one the
/// row is reported as skipped.
std::vector<BenchRow> run_bench(const std::filesystem::path& dir, const BenchOptions& options);

enum class TableFormat { text, csv, json };
std::string render_bench(const std::vector<BenchRow>& rows, TableFormat format);

/// Published best known upper bounds for the NL and galaxy benchmark
/// families (optimal for n <= 8, incumbents at n = 10).
std::optional<Distance> best_known_upper_bound(const std::string& family, int n);

}  // namespace uttp::cli
