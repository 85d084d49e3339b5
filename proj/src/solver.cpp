#include "uttp/solver.hpp"

#include <stdexcept>

#include "uttp/analysis.hpp"

namespace uttp {

namespace {

// Venue (vertex) where `team` plays in each slot.
std::vector<int> venue_row(const Schedule& schedule, int team, std::span<const int> vertex_of_team) {
  std::vector<int> row(static_cast<std::size_t>(schedule.slots()));
  for (int s = 0; s < schedule.slots(); ++s) {
    const auto& g = schedule.at(team, s);
    row[s] = g.venue == Venue::home ? vertex_of_team[team] : vertex_of_team[g.opponent];
  }
  return row;
}

void require_map(const Schedule& schedule, std::span<const int> vertex_of_team) {
  if (static_cast<int>(vertex_of_team.size()) != schedule.teams())
    throw std::invalid_argument("team-to-vertex map has the wrong size");
}

}  // namespace

std::string_view to_string(Direction direction) {
  return direction == Direction::forward ? "forward" : "reversed";
}

std::string_view to_string(TauSource source) {
  switch (source) {
    case TauSource::none: return "none";
    case TauSource::held_karp: return "held-karp";
    case TauSource::tour_file: return "tour-file";
  }
  return "unknown";
}

std::vector<int> team_assignment(const PivotedCycle& cycle, int r, Direction direction) {
  const int k = static_cast<int>(cycle.cycle.size());
  if (k < 1) throw std::invalid_argument("empty pivoted cycle");
  if (r < 0 || r >= k) throw std::invalid_argument("cycle rotation out of range");
  std::vector<int> map(static_cast<std::size_t>(k) + 1);
  for (int i = 0; i < k; ++i) {
    int idx = direction == Direction::forward ? (r + i) % k : ((r - i) % k + k) % k;
    map[i] = cycle.cycle[idx];
  }
  map[k] = cycle.pivot;
  return map;
}

TravelEvaluation evaluate_athome(const Schedule& schedule, std::span<const int> vertex_of_team,
                                 const DistanceMatrix& d) {
  require_map(schedule, vertex_of_team);
  TravelEvaluation out;
  out.per_team.resize(schedule.teams());
  for (int t = 0; t < schedule.teams(); ++t) {
    const int home = vertex_of_team[t];
    int at = home;
    Distance sum = 0;
    for (int v : venue_row(schedule, t, vertex_of_team)) {
      sum += d(at, v);
      at = v;
    }
    sum += d(at, home);
    out.per_team[t] = sum;
    out.total += sum;
  }
  return out;
}

TravelEvaluation evaluate_assumption_a(const Schedule& schedule,
                                       std::span<const int> vertex_of_team,
                                       const DistanceMatrix& d) {
  require_map(schedule, vertex_of_team);
  TravelEvaluation out = evaluate_athome(schedule, vertex_of_team, d);
  const int last = schedule.slots() - 1;
  out.total = 0;
  for (int t = 0; t < schedule.teams(); ++t) {
    if (!schedule.home(t, 0) && !schedule.home(t, last)) {
      const auto row = venue_row(schedule, t, vertex_of_team);
      const int home = vertex_of_team[t];
      out.per_team[t] += d(row[last], row[0]) - d(home, row[0]) - d(row[last], home);
    }
    out.total += out.per_team[t];
  }
  return out;
}

std::vector<int> assumption_a_route(const Schedule& schedule, int team,
                                    std::span<const int> vertex_of_team) {
  require_map(schedule, vertex_of_team);
  const auto row = venue_row(schedule, team, vertex_of_team);
  const int home = vertex_of_team[team];
  const int slots = static_cast<int>(row.size());

  // Start right after a home slot so the walk begins at the home venue.
  int start = -1;
  for (int s = 0; s < slots; ++s)
    if (row[s] == home && row[(s + 1) % slots] != home) start = (s + 1) % slots;

  std::vector<int> route{home};
  if (start < 0) return route;
  for (int i = 0; i < slots; ++i) {
    int v = row[(start + i) % slots];
    if (v != route.back()) route.push_back(v);
  }
  if (route.size() > 1 && route.back() == home) route.pop_back();
  return route;
}

SolveResult solve(const DistanceMatrix& d, const SolveOptions& options) {
  const int n = d.size();
  if (n < 4 || n % 2 != 0) throw std::invalid_argument("n must be even and at least 4");

  CycleBuild build = build_pivoted_cycle(d, options.mode, options.supplied_tour,
                                         options.held_karp_cap);

  SolveReport report;
  report.n = n;
  report.pivot = build.pivoted.pivot;
  report.tau_prime = build.pivoted.cycle_length;
  report.tsp_mode = options.mode;
  report.matching_exact = build.matching_exact;
  report.metric = d.metric();
  report.decimals = d.decimals();

  if (options.mode == TspMode::exact) {
    report.tau = build.full_tour->length;
    report.tau_source = TauSource::held_karp;
  } else if (n <= options.held_karp_cap) {
    report.tau = held_karp(d, all_vertices(n), options.held_karp_cap).length;
    report.tau_source = TauSource::held_karp;
  } else if (options.mode == TspMode::tour_file) {
    report.tau = build.full_tour->length;
    report.tau_source = TauSource::tour_file;
  }
  report.guarantees_valid =
      report.metric && (options.mode != TspMode::christofides || build.matching_exact);

  const Schedule base = mirror_and_assign(n);
  const int slots = base.slots();
  const int k = n - 1;

  SolveResult result{report, base, build, {}, {}};
  Distance best_total = 0;
  bool have_best = false;
  std::vector<Distance> totals(static_cast<std::size_t>(slots));

  for (int r = 0; r < k; ++r) {
    for (Direction dir : {Direction::forward, Direction::reversed}) {
      const auto map = team_assignment(build.pivoted, r, dir);
      std::fill(totals.begin(), totals.end(), 0);
      for (int t = 0; t < n; ++t) {
        const auto row = venue_row(base, t, map);
        const int home = map[t];
        Distance cyclic = 0;
        for (int s = 0; s < slots; ++s) cyclic += d(row[s], row[(s + 1) % slots]);
        // Rotation m starts at row[m] and ends at row[m-1].
        for (int m = 0; m < slots; ++m) {
          const int first = row[m];
          const int last = row[(m + slots - 1) % slots];
          totals[m] += cyclic - d(last, first) + d(home, first) + d(last, home);
        }
      }
      for (int m = 0; m < slots; ++m) {
        CandidateTransform tr{r, dir, m};
        if (options.keep_candidates) result.candidates.push_back({tr, totals[m]});
        if (!have_best || totals[m] < best_total) {
          have_best = true;
          best_total = totals[m];
          result.report.best_transform = tr;
          result.vertex_of_team = map;
        }
      }
    }
  }

  result.schedule = relabel(rotate(base, result.report.best_transform.slot_rotation),
                            result.vertex_of_team);
  const auto eval = evaluate_athome(result.schedule, all_vertices(n), d);
  if (eval.total != best_total)
    throw std::logic_error("incremental and direct travel evaluation disagree");
  result.report.total_distance = eval.total;
  result.report.per_team_distances = eval.per_team;

  if (result.report.tau) {
    result.report.lower_bound = lower_bound(d, *result.report.tau);
    result.report.gap_percent = gap_percent(eval.total, *result.report.lower_bound);
  }
  return result;
}

}  // namespace uttp
