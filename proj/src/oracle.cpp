#include "uttp/oracle.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <stdexcept>

namespace uttp {

namespace {

constexpr int kTeams = 4;
constexpr int kSlots = 2 * kTeams - 2;

struct SlotChoice {
  std::array<int, kTeams> opponent;
  std::array<bool, kTeams> home;
  unsigned games = 0;  // bit host*4+guest per ordered game
};

std::vector<SlotChoice> slot_choices() {
  const int matchings[3][2][2] = {{{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}, {{0, 3}, {1, 2}}};
  std::vector<SlotChoice> out;
  for (const auto& m : matchings)
    for (int orient = 0; orient < 4; ++orient) {
      SlotChoice c{};
      for (int g = 0; g < 2; ++g) {
        int host = m[g][0], guest = m[g][1];
        if (orient >> g & 1) std::swap(host, guest);
        c.opponent[host] = guest;
        c.opponent[guest] = host;
        c.home[host] = true;
        c.home[guest] = false;
        c.games |= 1u << (host * kTeams + guest);
      }
      out.push_back(c);
    }
  return out;
}

struct Search {
  const DistanceMatrix& d;
  std::vector<SlotChoice> choices = slot_choices();
  std::array<int, kSlots> picked{};
  std::array<int, kSlots> best_picked{};
  Distance best = std::numeric_limits<Distance>::max();
  std::uint64_t nodes = 0;

  void run(int slot, unsigned used, std::array<int, kTeams> at, Distance cost) {
    ++nodes;
    if (cost >= best) return;
    if (slot == kSlots) {
      for (int t = 0; t < kTeams; ++t) cost += d(at[t], t);
      if (cost < best) {
        best = cost;
        best_picked = picked;
      }
      return;
    }
    for (int c = 0; c < static_cast<int>(choices.size()); ++c) {
      const auto& ch = choices[c];
      if (used & ch.games) continue;
      std::array<int, kTeams> next{};
      Distance step = 0;
      for (int t = 0; t < kTeams; ++t) {
        next[t] = ch.home[t] ? t : ch.opponent[t];
        step += d(at[t], next[t]);
      }
      picked[slot] = c;
      run(slot + 1, used | ch.games, next, cost + step);
    }
  }
};

}  // namespace

OracleResult exact_uttp(const DistanceMatrix& d) {
  if (d.size() != kTeams) throw std::invalid_argument("exact_uttp supports exactly 4 teams");
  Search search{d};
  search.run(0, 0, {0, 1, 2, 3}, 0);

  std::vector<Game> games(static_cast<std::size_t>(kTeams) * kSlots);
  for (int s = 0; s < kSlots; ++s) {
    const auto& ch = search.choices[search.best_picked[s]];
    for (int t = 0; t < kTeams; ++t)
      games[static_cast<std::size_t>(t) * kSlots + s] =
          Game{ch.opponent[t], ch.home[t] ? Venue::home : Venue::away};
  }
  return OracleResult{search.best, Schedule(kTeams, std::move(games)), search.nodes};
}

Tour brute_force_tsp(const DistanceMatrix& d, std::span<const int> vertex_set) {
  std::vector<int> verts(vertex_set.begin(), vertex_set.end());
  std::sort(verts.begin(), verts.end());
  if (verts.size() < 3) throw std::invalid_argument("brute_force_tsp needs at least 3 vertices");
  if (static_cast<int>(verts.size()) > kBruteForceTspLimit)
    throw std::invalid_argument("brute_force_tsp is limited to " +
                                std::to_string(kBruteForceTspLimit) + " vertices");
  Tour best{verts, cycle_length(d, verts)};
  while (std::next_permutation(verts.begin() + 1, verts.end())) {
    Distance len = cycle_length(d, verts);
    if (len < best.length) best = Tour{verts, len};
  }
  return best;
}

}  // namespace uttp
