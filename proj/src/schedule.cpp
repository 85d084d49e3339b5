#include "uttp/schedule.hpp"

#include <algorithm>
#include <charconv>
#include <iomanip>
#include <sstream>

namespace uttp {

namespace {

void require_even_n(int n) {
  if (n < 4 || n % 2 != 0) throw std::invalid_argument("n must be even and at least 4");
}

int mod(int a, int m) { return ((a % m) + m) % m; }

std::string pair_text(int a, int b) {
  return std::to_string(a) + " vs " + std::to_string(b);
}

}  // namespace

OpponentTable::OpponentTable(int n, std::vector<int> entries)
    : n_(n), entries_(std::move(entries)) {
  if (n < 2) throw ScheduleError("table needs at least two teams");
  if (entries_.size() != static_cast<std::size_t>(n) * (n - 1))
    throw ScheduleError("table needs n*(n-1) entries");
  for (int e : entries_)
    if (e < 0 || e >= n) throw ScheduleError("opponent index out of range");
}

OpponentTable circle_schedule(int n) {
  require_even_n(n);
  const int k = n - 1;
  std::vector<int> e(static_cast<std::size_t>(n) * k);
  for (int t = 0; t < n; ++t)
    for (int s = 0; s < k; ++s) {
      int v;
      if (t != n - 1) {
        v = mod(s - t, k) == t ? n - 1 : mod(s - t, k);
      } else {
        v = s % 2 == 0 ? s / 2 : (s + n - 1) / 2;
      }
      e[static_cast<std::size_t>(t) * k + s] = v;
    }
  return OpponentTable(n, std::move(e));
}

std::vector<std::string> check_opponent_table(const OpponentTable& table) {
  std::vector<std::string> out;
  const int n = table.teams();
  for (int t = 0; t < n; ++t) {
    std::vector<int> met(n, 0);
    for (int s = 0; s < table.slots(); ++s) {
      int o = table(t, s);
      if (o == t) out.push_back("team " + std::to_string(t) + " meets itself in slot " + std::to_string(s));
      else if (table(o, s) != t)
        out.push_back("slot " + std::to_string(s) + ": " + pair_text(t, o) + " is not mutual");
      ++met[o];
    }
    for (int o = 0; o < n; ++o)
      if (o != t && met[o] != 1)
        out.push_back(pair_text(t, o) + " meet " + std::to_string(met[o]) + " times");
  }
  return out;
}

Schedule::Schedule(int n, std::vector<Game> games) : n_(n), games_(std::move(games)) {
  if (n < 2) throw ScheduleError("schedule needs at least two teams");
  if (games_.size() != static_cast<std::size_t>(n) * (2 * n - 2))
    throw ScheduleError("schedule needs n rows of 2n-2 slots");
  for (const auto& g : games_)
    if (g.opponent < 0 || g.opponent >= n) throw ScheduleError("opponent index out of range");
}

Schedule mirror_and_assign(int n) {
  const auto k = circle_schedule(n);
  const int slots = 2 * n - 2;
  std::vector<Game> games(static_cast<std::size_t>(n) * slots);
  for (int t = 0; t < n; ++t) {
    for (int s = 0; s < slots; ++s) {
      bool home;
      if (t < n / 2) home = 2 * t <= s && s <= n + 2 * t - 2;
      else if (t <= n - 2) home = !(2 * t - n + 2 <= s && s <= 2 * t);
      else home = s >= n - 1;
      games[static_cast<std::size_t>(t) * slots + s] =
          Game{k(t, s % (n - 1)), home ? Venue::home : Venue::away};
    }
  }
  return Schedule(n, std::move(games));
}

Schedule rotate(const Schedule& schedule, int m) {
  const int slots = schedule.slots();
  if (m < 0 || m >= slots) throw std::invalid_argument("rotation out of range");
  std::vector<Game> games(schedule.games().size());
  for (int t = 0; t < schedule.teams(); ++t)
    for (int s = 0; s < slots; ++s)
      games[static_cast<std::size_t>(t) * slots + s] = schedule.at(t, (s + m) % slots);
  return Schedule(schedule.teams(), std::move(games));
}

Schedule relabel(const Schedule& schedule, std::span<const int> perm) {
  const int n = schedule.teams();
  if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("permutation size mismatch");
  std::vector<bool> seen(n, false);
  for (int p : perm) {
    if (p < 0 || p >= n || seen[p]) throw std::invalid_argument("not a permutation");
    seen[p] = true;
  }
  const int slots = schedule.slots();
  std::vector<Game> games(schedule.games().size());
  for (int t = 0; t < n; ++t)
    for (int s = 0; s < slots; ++s) {
      const auto& g = schedule.at(t, s);
      games[static_cast<std::size_t>(perm[t]) * slots + s] = Game{perm[g.opponent], g.venue};
    }
  return Schedule(n, std::move(games));
}

std::string_view to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::self_game: return "self_game";
    case Violation::Kind::inconsistent_pairing: return "inconsistent_pairing";
    case Violation::Kind::venue_conflict: return "venue_conflict";
    case Violation::Kind::ordered_pair_count: return "ordered_pair_count";
    case Violation::Kind::not_mirrored: return "not_mirrored";
    case Violation::Kind::repeater: return "repeater";
  }
  return "unknown";
}

std::vector<Violation> check_drr(const Schedule& schedule) {
  using K = Violation::Kind;
  std::vector<Violation> out;
  const int n = schedule.teams();
  std::vector<int> hosted(static_cast<std::size_t>(n) * n, 0);

  for (int s = 0; s < schedule.slots(); ++s) {
    for (int t = 0; t < n; ++t) {
      const auto& g = schedule.at(t, s);
      const int o = g.opponent;
      if (o == t) {
        out.push_back({K::self_game, t, o, s, "team " + std::to_string(t) + " plays itself"});
        continue;
      }
      const auto& back = schedule.at(o, s);
      if (back.opponent != t) {
        out.push_back({K::inconsistent_pairing, t, o, s,
                       "team " + std::to_string(t) + " lists " + std::to_string(o) + " but " +
                           std::to_string(o) + " lists " + std::to_string(back.opponent)});
        continue;
      }
      if (t < o && back.venue == g.venue) {
        out.push_back({K::venue_conflict, t, o, s,
                       pair_text(t, o) + ": both sides " +
                           (g.venue == Venue::home ? "home" : "away")});
      }
      if (g.venue == Venue::home) ++hosted[static_cast<std::size_t>(t) * n + o];
    }
  }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      int c = hosted[static_cast<std::size_t>(i) * n + j];
      if (c != 1)
        out.push_back({K::ordered_pair_count, i, j, -1,
                       std::to_string(i) + " hosts " + std::to_string(j) + " " +
                           std::to_string(c) + " times"});
    }
  return out;
}

std::vector<Violation> check_mirrored(const Schedule& schedule) {
  std::vector<Violation> out;
  const int half = schedule.teams() - 1;
  for (int s = 0; s < half; ++s)
    for (int t = 0; t < schedule.teams(); ++t) {
      const auto& a = schedule.at(t, s);
      const auto& b = schedule.at(t, s + half);
      if (a.opponent != b.opponent || a.venue == b.venue)
        out.push_back({Violation::Kind::not_mirrored, t, a.opponent, s,
                       "team " + std::to_string(t) + ": slot " + std::to_string(s) +
                           " is not mirrored by slot " + std::to_string(s + half)});
    }
  return out;
}

std::vector<Violation> check_no_repeater(const Schedule& schedule) {
  std::vector<Violation> out;
  for (int s = 0; s + 1 < schedule.slots(); ++s)
    for (int t = 0; t < schedule.teams(); ++t) {
      const int o = schedule.at(t, s).opponent;
      if (t < o && schedule.at(t, s + 1).opponent == o)
        out.push_back({Violation::Kind::repeater, t, o, s,
                       pair_text(t, o) + " in slots " + std::to_string(s) + " and " +
                           std::to_string(s + 1)});
    }
  return out;
}

std::vector<StreakStats> streak_stats(const Schedule& schedule) {
  std::vector<StreakStats> out(schedule.teams());
  for (int t = 0; t < schedule.teams(); ++t) {
    int run = 0;
    for (int s = 0; s < schedule.slots(); ++s) {
      run = (s > 0 && schedule.home(t, s) == schedule.home(t, s - 1)) ? run + 1 : 1;
      auto& best = schedule.home(t, s) ? out[t].max_home : out[t].max_away;
      best = std::max(best, run);
    }
  }
  return out;
}

std::string render_schedule(const Schedule& schedule, ScheduleFormat format) {
  std::ostringstream out;
  auto cell = [&](int t, int s) {
    const auto& g = schedule.at(t, s);
    return std::to_string(g.opponent) + (g.venue == Venue::home ? "H" : "A");
  };
  if (format == ScheduleFormat::rows) {
    for (int t = 0; t < schedule.teams(); ++t) {
      for (int s = 0; s < schedule.slots(); ++s) out << (s ? " " : "") << cell(t, s);
      out << '\n';
    }
    return out.str();
  }

  const int team_w = std::max(5, static_cast<int>(std::to_string(schedule.teams() - 1).size()));
  const int cell_w = static_cast<int>(std::to_string(schedule.teams() - 1).size()) + 1;
  const int col_w = std::max(cell_w, static_cast<int>(std::to_string(schedule.slots() - 1).size()));
  out << std::setw(team_w) << "slots" << " |";
  for (int s = 0; s < schedule.slots(); ++s) out << ' ' << std::setw(col_w) << s;
  out << '\n' << std::string(static_cast<std::size_t>(team_w) + 2 + schedule.slots() * (col_w + 1), '-')
      << '\n';
  for (int t = 0; t < schedule.teams(); ++t) {
    out << std::setw(team_w) << t << " |";
    for (int s = 0; s < schedule.slots(); ++s) out << ' ' << std::setw(col_w) << cell(t, s);
    out << '\n';
  }
  return out.str();
}

Schedule parse_schedule_rows(std::istream& in) {
  std::vector<std::vector<Game>> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<Game> row;
    std::string tok;
    while (ls >> tok) {
      const char v = tok.back();
      if (tok.size() < 2 || (v != 'H' && v != 'A'))
        throw ScheduleError("bad schedule cell '" + tok + "'");
      int opp = -1;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size() - 1, opp);
      if (ec != std::errc() || ptr != tok.data() + tok.size() - 1)
        throw ScheduleError("bad schedule cell '" + tok + "'");
      row.push_back({opp, v == 'H' ? Venue::home : Venue::away});
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  const int n = static_cast<int>(rows.size());
  if (n < 2) throw ScheduleError("schedule needs at least two team rows");
  std::vector<Game> games;
  for (int t = 0; t < n; ++t) {
    if (static_cast<int>(rows[t].size()) != 2 * n - 2)
      throw ScheduleError("row " + std::to_string(t) + " has " + std::to_string(rows[t].size()) +
                          " cells, expected " + std::to_string(2 * n - 2));
    games.insert(games.end(), rows[t].begin(), rows[t].end());
  }
  return Schedule(n, std::move(games));
}

Schedule parse_schedule_rows(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_schedule_rows(in);
}

}  // namespace uttp
