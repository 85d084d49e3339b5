#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace uttp {

class ScheduleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Single round-robin without venues: opponent of team t in slot s,
/// slots 0..n-2.
class OpponentTable {
 public:
  OpponentTable(int n, std::vector<int> entries);

  int teams() const { return n_; }
  int slots() const { return n_ - 1; }
  int operator()(int team, int slot) const {
    return entries_[static_cast<std::size_t>(team) * slots() + slot];
  }

 private:
  int n_;
  std::vector<int> entries_;
};

/// Circle-method table K*: for t != n-1, K(t,s) = (s - t) mod (n-1),
/// or n-1 when that equals t; for t = n-1, K(t,s) = s/2 if s is even,
/// (s + n - 1)/2 if s is odd.
OpponentTable circle_schedule(int n);

/// Violations of the single round-robin invariants, empty when valid.
std::vector<std::string> check_opponent_table(const OpponentTable& table);

enum class Venue : std::uint8_t { home, away };

struct Game {
  int opponent = 0;
  Venue venue = Venue::home;

  bool operator==(const Game&) const = default;
};

/// Double round-robin table over 2n-2 slots. The constructor only checks
/// shape and index ranges; semantic feasibility is left to the checkers so
/// corrupted schedules can still be inspected.
class Schedule {
 public:
  Schedule(int n, std::vector<Game> games);

  int teams() const { return n_; }
  int slots() const { return 2 * n_ - 2; }
  const Game& at(int team, int slot) const {
    return games_[static_cast<std::size_t>(team) * slots() + slot];
  }
  bool home(int team, int slot) const { return at(team, slot).venue == Venue::home; }

  const std::vector<Game>& games() const { return games_; }

  bool operator==(const Schedule&) const = default;

 private:
  int n_;
  std::vector<Game> games_;
};

/// K*_DRR: (K* | K*) with the home/away pattern
///   t < n/2          home in slots 2t .. n+2t-2
///   n/2 <= t <= n-2  away in slots 2t-n+2 .. 2t
///   t = n-1          away in slots 0 .. n-2
Schedule mirror_and_assign(int n);

/// Slot s of the result is slot (s + m) mod (2n-2) of `schedule`.
Schedule rotate(const Schedule& schedule, int m);

/// Team perm[t] takes over the row of team t; opponents are mapped through perm.
Schedule relabel(const Schedule& schedule, std::span<const int> perm);

struct Violation {
  enum class Kind {
    self_game,
    inconsistent_pairing,
    venue_conflict,
    ordered_pair_count,
    not_mirrored,
    repeater,
  };
  Kind kind;
  int team = -1;
  int other = -1;
  int slot = -1;
  std::string message;
};

std::string_view to_string(Violation::Kind kind);

/// One game per team per slot, consistent pairings, one home and one away
/// side per game, and every ordered pair (i hosts j) exactly once.
std::vector<Violation> check_drr(const Schedule& schedule);
/// Slot s and slot s+n-1 pair the same teams with venues swapped.
std::vector<Violation> check_mirrored(const Schedule& schedule);
/// No pair meets in two consecutive slots.
std::vector<Violation> check_no_repeater(const Schedule& schedule);

struct StreakStats {
  int max_home = 0;
  int max_away = 0;

  bool operator==(const StreakStats&) const = default;
};

std::vector<StreakStats> streak_stats(const Schedule& schedule);

enum class ScheduleFormat { grid, rows };

/// grid: header of slot indices, then "team | cells"; rows: one line per
/// team of space-separated cells. A cell is the opponent followed by H or A.
std::string render_schedule(const Schedule& schedule, ScheduleFormat format);

/// Parses the rows format. Throws ScheduleError on malformed input.
Schedule parse_schedule_rows(std::istream& in);
Schedule parse_schedule_rows(std::string_view text);

}  // namespace uttp
