#include "uttp/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <regex>
#include <sstream>

#include "uttp/instance.hpp"
#include "uttp/oracle.hpp"
#include "uttp/schedule.hpp"

namespace uttp::cli {

namespace {

using nlohmann::json;

DistanceMatrix read_instance(const std::string& path) {
  if (path == "-") return parse_distance_matrix(std::cin);
  return load_distance_matrix(path);
}

json distance_json(Distance v, int decimals) {
  if (decimals == 0) return v;
  return std::stod(format_distance(v, decimals));
}

std::string opt_distance(const std::optional<Distance>& v, int decimals) {
  return v ? format_distance(*v, decimals) : "n/a";
}

// Maps library exceptions onto exit codes; `body` does the work.
template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const std::ios_base::failure& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const InstanceError& e) {
    err << "error: invalid instance: " << e.what() << '\n';
    return kInvalidInstance;
  } catch (const ScheduleError& e) {
    err << "error: invalid schedule: " << e.what() << '\n';
    return kInfeasibleSchedule;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInstance;
  }
}

std::optional<BoundCertificate> certificate_for(const DistanceMatrix& d, const SolveResult& r) {
  if (!r.report.tau) return std::nullopt;
  return certify(d, r.cycle.pivoted, r.vertex_of_team, *r.report.tau, r.report.total_distance,
                 r.report.tsp_mode, r.report.matching_exact);
}

SolveOptions solve_options(const DistanceMatrix& d, const TspChoice& choice, int cap) {
  SolveOptions opts;
  opts.mode = choice.mode;
  opts.held_karp_cap = cap;
  if (choice.mode == TspMode::tour_file) opts.supplied_tour = load_tour(choice.tour_path, d);
  return opts;
}

int cmd_solve(const std::string& path, const std::string& tsp, const std::string& format,
              bool dump, int cap, const std::string& schedule_out, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    const auto d = read_instance(path);
    if (!d.metric())
      err << "warning: distances violate the triangle inequality; approximation guarantees "
             "do not apply\n";
    auto opts = solve_options(d, parse_tsp_choice(tsp), cap);
    opts.keep_candidates = dump;
    const auto result = solve(d, opts);
    const auto cert = certificate_for(d, result);

    if (format == "json") {
      out << render_report_json(result, cert, dump) << '\n';
    } else {
      out << render_report_text(result.report, cert);
      out << "\nschedule:\n" << render_schedule(result.schedule, ScheduleFormat::grid);
      if (dump) {
        out << "\ncandidates (r direction m total):\n";
        for (const auto& c : result.candidates)
          out << c.transform.cycle_rotation << ' ' << to_string(c.transform.direction) << ' '
              << c.transform.slot_rotation << ' '
              << format_distance(c.total, d.decimals()) << '\n';
      }
    }
    if (!schedule_out.empty()) {
      std::ofstream f(schedule_out);
      if (!f) throw std::ios_base::failure("cannot write " + schedule_out);
      f << render_schedule(result.schedule, ScheduleFormat::rows);
    }
    if (cert && result.report.guarantees_valid && !cert->all_hold()) {
      err << "error: bound certificate failed\n";
      return static_cast<int>(kCertificateFailure);
    }
    return static_cast<int>(kOk);
  });
}

void print_violations(std::ostream& out, std::string_view name, const std::vector<Violation>& v) {
  out << name << ": " << (v.empty() ? "pass" : "FAIL (" + std::to_string(v.size()) + ")") << '\n';
  for (const auto& x : v) out << "  [" << to_string(x.kind) << "] " << x.message << '\n';
}

int cmd_validate(const std::string& schedule_path, const std::string& instance_path,
                 std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    std::ifstream in(schedule_path);
    if (!in) throw std::ios_base::failure("cannot open " + schedule_path);
    const auto schedule = parse_schedule_rows(in);
    const auto drr = check_drr(schedule);
    print_violations(out, "double_round_robin", drr);
    print_violations(out, "mirrored", check_mirrored(schedule));
    print_violations(out, "no_repeater", check_no_repeater(schedule));
    const auto streaks = streak_stats(schedule);
    out << "streaks (team max_home max_away):\n";
    for (int t = 0; t < schedule.teams(); ++t)
      out << "  " << t << ' ' << streaks[t].max_home << ' ' << streaks[t].max_away << '\n';
    if (!instance_path.empty()) {
      const auto d = read_instance(instance_path);
      if (d.size() != schedule.teams())
        throw InstanceError("instance has " + std::to_string(d.size()) + " teams, schedule has " +
                            std::to_string(schedule.teams()));
      const auto eval = evaluate_athome(schedule, all_vertices(d.size()), d);
      out << "total_distance: " << format_distance(eval.total, d.decimals()) << '\n';
    }
    return static_cast<int>(drr.empty() ? kOk : kInfeasibleSchedule);
  });
}

int cmd_bound(const std::string& path, const std::string& tsp, int cap, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    const auto d = read_instance(path);
    const auto result = solve(d, solve_options(d, parse_tsp_choice(tsp), cap));
    const auto cert = certificate_for(d, result);
    out << "n: " << d.size() << '\n'
        << "metric: " << (d.metric() ? "true" : "false") << '\n'
        << "pivot: " << result.report.pivot << '\n'
        << "tau: " << opt_distance(result.report.tau, d.decimals()) << '\n'
        << "tau_prime: " << format_distance(result.report.tau_prime, d.decimals()) << '\n'
        << "lower_bound: " << opt_distance(result.report.lower_bound, d.decimals()) << '\n';
    if (!cert) {
      out << "certificate: unavailable (tau unknown)\n";
      return static_cast<int>(kOk);
    }
    out << "certificate_applicable: " << (cert->applicable ? "true" : "false") << '\n';
    for (const auto& c : cert->checks)
      out << "  " << std::left << std::setw(24) << c.name << (c.holds() ? "ok  " : "FAIL")
          << "  lhs=" << c.lhs << " rhs=" << c.rhs << " den=" << c.denominator << '\n';
    return static_cast<int>(cert->applicable && !cert->all_hold() ? kCertificateFailure : kOk);
  });
}

int cmd_oracle(const std::string& path, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto d = read_instance(path);
    const auto r = exact_uttp(d);
    out << "n: " << d.size() << '\n'
        << "optimum: " << format_distance(r.optimum, d.decimals()) << '\n'
        << "nodes: " << r.nodes << '\n'
        << "\nschedule:\n"
        << render_schedule(r.schedule, ScheduleFormat::grid);
    return static_cast<int>(kOk);
  });
}

int cmd_bench(const std::string& dir, int max_n, const std::string& tsp, int cap,
              const std::string& format, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    BenchOptions opts;
    opts.max_n = max_n;
    opts.held_karp_cap = cap;
    opts.mode = parse_tsp_choice(tsp).mode;
    if (opts.mode == TspMode::tour_file)
      throw std::invalid_argument("bench picks up <name>.tour files itself; use exact or christofides");
    const auto rows = run_bench(dir, opts);
    if (rows.empty()) {
      err << "error: no instance files in " << dir << '\n';
      return static_cast<int>(kIoError);
    }
    TableFormat f = format == "csv" ? TableFormat::csv
                    : format == "json" ? TableFormat::json
                                       : TableFormat::text;
    out << render_bench(rows, f);
    return static_cast<int>(kOk);
  });
}

}  // namespace

TspChoice parse_tsp_choice(const std::string& text) {
  if (text == "exact") return {TspMode::exact, {}};
  if (text == "christofides") return {TspMode::christofides, {}};
  const std::string prefix = "tour-file=";
  if (text.rfind(prefix, 0) == 0 && text.size() > prefix.size())
    return {TspMode::tour_file, text.substr(prefix.size())};
  throw std::invalid_argument("unknown --tsp value '" + text +
                              "' (expected exact, christofides or tour-file=PATH)");
}

std::string render_report_text(const SolveReport& r,
                               const std::optional<BoundCertificate>& certificate) {
  std::ostringstream out;
  const int dec = r.decimals;
  out << "n: " << r.n << '\n'
      << "total_distance: " << format_distance(r.total_distance, dec) << '\n'
      << "tau: " << opt_distance(r.tau, dec) << '\n'
      << "tau_source: " << to_string(r.tau_source) << '\n'
      << "tau_prime: " << format_distance(r.tau_prime, dec) << '\n'
      << "lower_bound: " << opt_distance(r.lower_bound, dec) << '\n'
      << "gap_percent: " << format_gap(r.gap_percent) << '\n'
      << "tsp_mode: " << to_string(r.tsp_mode) << '\n'
      << "matching_exact: " << (r.matching_exact ? "true" : "false") << '\n'
      << "metric: " << (r.metric ? "true" : "false") << '\n'
      << "guarantees_valid: " << (r.guarantees_valid ? "true" : "false") << '\n'
      << "pivot: " << r.pivot << '\n'
      << "best_r: " << r.best_transform.cycle_rotation << '\n'
      << "best_direction: " << to_string(r.best_transform.direction) << '\n'
      << "best_m: " << r.best_transform.slot_rotation << '\n'
      << "per_team_distances:";
  for (Distance x : r.per_team_distances) out << ' ' << format_distance(x, dec);
  out << '\n';
  if (certificate) {
    out << "certificate_ratio_bound: " << certificate->ratio_bound << '\n'
        << "certificate_applicable: " << (certificate->applicable ? "true" : "false") << '\n'
        << "certificate:\n";
    for (const auto& c : certificate->checks)
      out << "  " << std::left << std::setw(24) << c.name << (c.holds() ? "ok" : "FAIL")
          << "  slack=" << format_distance(c.slack(), dec) << '/' << c.denominator << '\n';
  }
  return out.str();
}

std::string render_report_json(const SolveResult& result,
                               const std::optional<BoundCertificate>& certificate,
                               bool include_candidates) {
  const auto& r = result.report;
  const int dec = r.decimals;
  json j;
  j["n"] = r.n;
  j["total_distance"] = distance_json(r.total_distance, dec);
  j["tau"] = r.tau ? distance_json(*r.tau, dec) : json(nullptr);
  j["tau_source"] = std::string(to_string(r.tau_source));
  j["tau_prime"] = distance_json(r.tau_prime, dec);
  j["lower_bound"] = r.lower_bound ? distance_json(*r.lower_bound, dec) : json(nullptr);
  j["gap_percent"] = r.gap_percent ? json(*r.gap_percent) : json(nullptr);
  j["tsp_mode"] = std::string(to_string(r.tsp_mode));
  j["matching_exact"] = r.matching_exact;
  j["metric"] = r.metric;
  j["guarantees_valid"] = r.guarantees_valid;
  j["pivot"] = r.pivot;
  j["best_r"] = r.best_transform.cycle_rotation;
  j["best_direction"] = std::string(to_string(r.best_transform.direction));
  j["best_m"] = r.best_transform.slot_rotation;
  j["per_team_distances"] = json::array();
  for (Distance x : r.per_team_distances) j["per_team_distances"].push_back(distance_json(x, dec));
  j["vertex_of_team"] = result.vertex_of_team;

  std::istringstream rows(render_schedule(result.schedule, ScheduleFormat::rows));
  j["schedule"] = json::array();
  for (std::string line; std::getline(rows, line);) j["schedule"].push_back(line);

  if (certificate) {
    json c;
    c["applicable"] = certificate->applicable;
    c["ratio_bound"] = certificate->ratio_bound;
    c["all_hold"] = certificate->all_hold();
    c["checks"] = json::array();
    for (const auto& ch : certificate->checks)
      c["checks"].push_back({{"name", ch.name},
                             {"lhs", ch.lhs},
                             {"rhs", ch.rhs},
                             {"denominator", ch.denominator},
                             {"holds", ch.holds()}});
    j["certificate"] = c;
  }
  if (include_candidates) {
    j["candidates"] = json::array();
    for (const auto& c : result.candidates)
      j["candidates"].push_back({{"r", c.transform.cycle_rotation},
                                 {"direction", std::string(to_string(c.transform.direction))},
                                 {"m", c.transform.slot_rotation},
                                 {"total", distance_json(c.total, dec)}});
  }
  return j.dump(2);
}

std::optional<Distance> best_known_upper_bound(const std::string& family, int n) {
  static const std::map<std::pair<std::string, int>, Distance> table = {
      {{"nl", 4}, 8276},     {{"nl", 6}, 19900},    {{"nl", 8}, 30700},
      {{"nl", 10}, 45605},   {{"galaxy", 4}, 416},  {{"galaxy", 6}, 1178},
      {{"galaxy", 8}, 1890}, {{"galaxy", 10}, 3570},
  };
  std::string f = family;
  std::transform(f.begin(), f.end(), f.begin(), [](unsigned char c) { return std::tolower(c); });
  auto it = table.find({f, n});
  if (it == table.end()) return std::nullopt;
  return it->second;
}

std::vector<BenchRow> run_bench(const std::filesystem::path& dir, const BenchOptions& options) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw std::ios_base::failure("not a directory: " + dir.string());

  static const std::regex name_re(R"(([A-Za-z_]+?)(\d+)(\.(txt|dat))?)");
  struct Entry {
    std::string family;
    int n;
    fs::path path;
  };
  std::vector<Entry> entries;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (!e.is_regular_file()) continue;
    std::smatch m;
    const std::string name = e.path().filename().string();
    if (!std::regex_match(name, m, name_re)) continue;
    entries.push_back({m[1].str(), std::stoi(m[2].str()), e.path()});
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    return std::tie(a.family, a.n) < std::tie(b.family, b.n);
  });

  std::vector<BenchRow> rows;
  for (const auto& e : entries) {
    if (e.n > options.max_n) continue;
    BenchRow row;
    row.family = e.family;
    row.n = e.n;
    row.mode = options.mode;
    row.best_known = best_known_upper_bound(e.family, e.n);
    try {
      const auto d = load_distance_matrix(e.path);
      row.n = d.size();
      row.decimals = d.decimals();
      SolveOptions so;
      so.mode = options.mode;
      so.held_karp_cap = options.held_karp_cap;
      if (options.mode == TspMode::exact && d.size() > options.held_karp_cap) {
        auto tour_path = e.path.parent_path() / (e.path.stem().string() + ".tour");
        if (!fs::exists(tour_path)) {
          row.status = "skipped";
          row.note = "n exceeds the Held-Karp cap and no " + tour_path.filename().string();
          rows.push_back(row);
          continue;
        }
        so.mode = TspMode::tour_file;
        so.supplied_tour = load_tour(tour_path, d);
      }
      const auto r = solve(d, so);
      row.mode = so.mode;
      row.status = "ok";
      row.total = r.report.total_distance;
      row.lower_bound = r.report.lower_bound;
      row.gap = r.report.gap_percent;
      if (!r.report.lower_bound) row.note = "no exact tour; lower bound not claimed";
    } catch (const std::exception& ex) {
      row.status = "error";
      row.note = ex.what();
    }
    rows.push_back(row);
  }
  return rows;
}

std::string render_bench(const std::vector<BenchRow>& rows, TableFormat format) {
  std::ostringstream out;
  auto cells = [](const BenchRow& r) {
    const bool ok = r.status == "ok";
    return std::vector<std::string>{
        r.family,
        std::to_string(r.n),
        ok ? format_distance(r.total, r.decimals) : "-",
        ok && r.lower_bound ? format_distance(*r.lower_bound, r.decimals) : "-",
        ok ? format_gap(r.gap) : "-",
        r.best_known ? std::to_string(*r.best_known) : "-",
        std::string(to_string(r.mode)),
        r.status,
        r.note,
    };
  };
  const std::vector<std::string> header{"family", "n",    "approx", "n*TSP", "gap(%)",
                                        "best_UB", "mode", "status", "note"};
  if (format == TableFormat::json) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : rows) {
      auto c = cells(r);
      nlohmann::json o;
      for (std::size_t i = 0; i < header.size(); ++i) o[header[i]] = c[i];
      j.push_back(o);
    }
    out << j.dump(2) << '\n';
  } else if (format == TableFormat::csv) {
    for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
    out << '\n';
    for (const auto& r : rows) {
      auto c = cells(r);
      for (std::size_t i = 0; i < c.size(); ++i) {
        std::string v = c[i];
        if (v.find_first_of(",\"") != std::string::npos) {
          std::string q = "\"";
          for (char ch : v) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
          v = q + "\"";
        }
        out << (i ? "," : "") << v;
      }
      out << '\n';
    }
  } else {
    const std::vector<int> widths{8, 4, 12, 12, 8, 9, 14, 8};
    for (std::size_t i = 0; i + 1 < header.size(); ++i)
      out << (i < 2 ? std::left : std::right) << std::setw(widths[i]) << header[i] << ' ';
    out << header.back() << '\n';
    for (const auto& r : rows) {
      auto c = cells(r);
      for (std::size_t i = 0; i + 1 < c.size(); ++i)
        out << (i < 2 ? std::left : std::right) << std::setw(widths[i]) << c[i] << ' ';
      out << c.back() << '\n';
    }
  }
  return out.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Approximate solver for the unconstrained traveling tournament problem", "uttp"};
  app.require_subcommand(1);

  std::string instance, tsp = "exact", format = "text", schedule_out, schedule_path,
                        instance_path, dir;
  bool dump = false;
  int cap = kDefaultHeldKarpCap, max_n = 40, n = 0, m = 0;
  std::uint64_t seed = 1;
  double box = 1000.0;

  auto* solve_cmd = app.add_subcommand("solve", "Solve an instance and print the report");
  solve_cmd->add_option("instance", instance, "Instance file, or - for stdin")->required();
  solve_cmd->add_option("--tsp", tsp, "exact | christofides | tour-file=PATH");
  solve_cmd->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));
  solve_cmd->add_flag("--dump-candidates", dump, "List every candidate total");
  solve_cmd->add_option("--cap", cap, "Held-Karp vertex cap");
  solve_cmd->add_option("--schedule-out", schedule_out, "Write the best schedule (rows format)");

  auto* validate_cmd = app.add_subcommand("validate", "Check a rows-format schedule");
  validate_cmd->add_option("schedule", schedule_path, "Schedule file")->required();
  validate_cmd->add_option("--instance", instance_path, "Instance file for travel totals");

  auto* bound_cmd = app.add_subcommand("bound", "Print tau, the lower bound and the certificate");
  bound_cmd->add_option("instance", instance, "Instance file, or - for stdin")->required();
  bound_cmd->add_option("--tsp", tsp, "exact | christofides | tour-file=PATH");
  bound_cmd->add_option("--cap", cap, "Held-Karp vertex cap");

  auto* oracle_cmd = app.add_subcommand("oracle", "Exact optimum by exhaustive search (n = 4)");
  oracle_cmd->add_option("instance", instance, "Instance file, or - for stdin")->required();

  auto* bench_cmd = app.add_subcommand("bench", "Benchmark table over a directory of instances");
  bench_cmd->add_option("dir", dir, "Directory of <family><n> instance files")->required();
  bench_cmd->add_option("--max-n", max_n, "Largest n to run");
  bench_cmd->add_option("--tsp", tsp, "exact | christofides");
  bench_cmd->add_option("--cap", cap, "Held-Karp vertex cap");
  bench_cmd->add_option("--format", format, "text | csv | json")
      ->check(CLI::IsMember({"text", "csv", "json"}));

  auto* gen_cmd = app.add_subcommand("generate", "Random Euclidean instance");
  gen_cmd->add_option("--n", n, "Number of venues")->required();
  gen_cmd->add_option("--seed", seed, "Random seed");
  gen_cmd->add_option("--box", box, "Side length of the square");

  auto* sched_cmd = app.add_subcommand("schedule", "Print the mirrored circle schedule");
  sched_cmd->add_option("--n", n, "Number of teams")->required();
  sched_cmd->add_option("--m", m, "Slot rotation");
  sched_cmd->add_option("--format", format, "grid | rows")->check(CLI::IsMember({"grid", "rows"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kUsage;
  }

  if (solve_cmd->parsed()) return cmd_solve(instance, tsp, format, dump, cap, schedule_out, out, err);
  if (validate_cmd->parsed()) return cmd_validate(schedule_path, instance_path, out, err);
  if (bound_cmd->parsed()) return cmd_bound(instance, tsp, cap, out, err);
  if (oracle_cmd->parsed()) return cmd_oracle(instance, out, err);
  if (bench_cmd->parsed()) return cmd_bench(dir, max_n, tsp, cap, format, out, err);
  if (gen_cmd->parsed())
    return guarded(err, [&] {
      out << render_distance_matrix(random_euclidean_instance(n, seed, box));
      return static_cast<int>(kOk);
    });
  if (sched_cmd->parsed())
    return guarded(err, [&] {
      auto s = mirror_and_assign(n);
      if (m != 0) s = rotate(s, m);
      out << render_schedule(s, format == "rows" ? ScheduleFormat::rows : ScheduleFormat::grid);
      return static_cast<int>(kOk);
    });
  return kUsage;
}

}  // namespace uttp::cli
