#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "uttp/instance.hpp"
#include "uttp/schedule.hpp"
#include "uttp/tsp.hpp"

namespace uttp {

enum class Direction { forward, reversed };

std::string_view to_string(Direction direction);

/// One member of the candidate family: a labeling of the pivoted cycle
/// (start offset and direction) plus a slot rotation m.
struct CandidateTransform {
  int cycle_rotation = 0;
  Direction direction = Direction::forward;
  int slot_rotation = 0;

  auto operator<=>(const CandidateTransform&) const = default;
};

/// Team n-1 always plays at the pivot; team i (i <= n-2) gets
/// cycle[(r + i) mod (n-1)] forward or cycle[(r - i) mod (n-1)] reversed.
/// Returns the vertex of each team.
std::vector<int> team_assignment(const PivotedCycle& cycle, int r, Direction direction);

struct TravelEvaluation {
  std::vector<Distance> per_team;
  Distance total = 0;
};

/// Athome travel: every team leaves home before slot 0 and returns after
/// the last slot. `vertex_of_team[t]` is the venue of team t.
TravelEvaluation evaluate_athome(const Schedule& schedule, std::span<const int> vertex_of_team,
                                 const DistanceMatrix& d);

/// As evaluate_athome, except a team away in both the first and last slot
/// travels last venue -> first venue instead of the two legs through home.
TravelEvaluation evaluate_assumption_a(const Schedule& schedule,
                                       std::span<const int> vertex_of_team,
                                       const DistanceMatrix& d);

/// The cyclic venue route of `team` with stays collapsed, starting at its
/// home. Under the assumption-A travel rule its length is the team's travel.
std::vector<int> assumption_a_route(const Schedule& schedule, int team,
                                    std::span<const int> vertex_of_team);

struct CandidateResult {
  CandidateTransform transform;
  Distance total = 0;
};

struct SolveOptions {
  TspMode mode = TspMode::exact;
  std::optional<Tour> supplied_tour;
  int held_karp_cap = kDefaultHeldKarpCap;
  bool keep_candidates = false;
};

enum class TauSource { none, held_karp, tour_file };

std::string_view to_string(TauSource source);

struct SolveReport {
  int n = 0;
  CandidateTransform best_transform;
  Distance total_distance = 0;
  /// Indexed by the instance's own team/venue numbering.
  std::vector<Distance> per_team_distances;
  int pivot = 0;
  Distance tau_prime = 0;
  TspMode tsp_mode = TspMode::exact;
  bool matching_exact = true;
  std::optional<Distance> tau;
  TauSource tau_source = TauSource::none;
  std::optional<Distance> lower_bound;
  std::optional<double> gap_percent;
  bool metric = true;
  bool guarantees_valid = false;
  int decimals = 0;
};

struct SolveResult {
  SolveReport report;
  /// Best schedule expressed on the instance's team numbering.
  Schedule schedule;
  CycleBuild cycle;
  std::vector<int> vertex_of_team;
  /// Every candidate in (r, direction, m) order when keep_candidates is set.
  std::vector<CandidateResult> candidates;
};

/// Builds the pivoted cycle, evaluates all 2(n-1)(2n-2) candidates of the
/// rotated mirrored circle schedule and returns the cheapest, ties going to
/// the lexicographically least (r, direction, m). Each labeling is scored
/// for all rotations in O(n^2) so the whole search is O(n^3).
SolveResult solve(const DistanceMatrix& d, const SolveOptions& options = {});

}  // namespace uttp
