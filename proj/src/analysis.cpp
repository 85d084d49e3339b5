#include "uttp/analysis.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>

#include "uttp/schedule.hpp"
#include "uttp/solver.hpp"

namespace uttp {

namespace {

// The cycle order each team follows under the assumption-A rule, written
// in terms of v_i = vertex_of_team[i] and the pivot v* = vertex_of_team[n-1].
std::vector<int> expected_route(int team, std::span<const int> vertex_of_team) {
  const int n = static_cast<int>(vertex_of_team.size());
  const int k = n - 1;
  const int pivot = vertex_of_team[k];
  std::vector<int> route{vertex_of_team[team]};
  if (team < n / 2) route.push_back(pivot);
  for (int i = 1; i < k; ++i) route.push_back(vertex_of_team[(team + i) % k]);
  if (team >= n / 2) route.push_back(pivot);
  return route;
}

bool is_hamiltonian(const std::vector<int>& route, int n) {
  if (static_cast<int>(route.size()) != n) return false;
  std::vector<bool> seen(n, false);
  for (int v : route) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

}  // namespace

Distance lower_bound(const DistanceMatrix& d, Distance tau) {
  return static_cast<Distance>(d.size()) * tau;
}

std::optional<double> gap_percent(Distance total, Distance bound) {
  if (bound == 0) return std::nullopt;
  return static_cast<double>(total - bound) * 100.0 / static_cast<double>(bound);
}

std::string format_gap(std::optional<double> gap) {
  if (!gap) return "n/a";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", *gap);
  return buf;
}

const BoundCheck* BoundCertificate::find(std::string_view name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

bool BoundCertificate::all_hold() const {
  return std::all_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return c.holds(); });
}

BoundCertificate certify(const DistanceMatrix& d, const PivotedCycle& cycle,
                         std::span<const int> vertex_of_team, Distance tau,
                         Distance solution_total, TspMode mode, bool matching_exact) {
  const int n = d.size();
  const Distance nn = n;
  const Schedule base = mirror_and_assign(n);
  const int slots = base.slots();
  const int pivot = cycle.pivot;

  BoundCertificate cert;
  cert.tau = tau;
  cert.tau_prime = cycle.cycle_length;
  cert.applicable = d.metric() && (mode != TspMode::christofides || matching_exact);
  cert.ratio_bound = mode == TspMode::christofides ? 2.75 : 2.25;
  auto add = [&](std::string name, Distance lhs, Distance rhs, Distance den) {
    cert.checks.push_back({std::move(name), lhs, rhs, den});
    return cert.checks.back().holds();
  };

  cert.edge_max_ok = add("edge_max", 2 * d.max_entry(), tau, 2);

  // Routes of K*_DRR under assumption A; they do not depend on m.
  const auto ell_a = evaluate_assumption_a(base, vertex_of_team, d);
  int non_hamiltonian = 0, identity_mismatch = 0;
  Distance longest_route = 0;
  for (int t = 0; t < n; ++t) {
    const auto route = assumption_a_route(base, t, vertex_of_team);
    if (!is_hamiltonian(route, n)) ++non_hamiltonian;
    if (t < n - 1 && route != expected_route(t, vertex_of_team)) ++identity_mismatch;
    longest_route = std::max(longest_route, cycle_length(d, route));
  }
  cert.hamilton_ok = add("hamilton_cycles", 2 * longest_route, nn * tau, 2);
  cert.pair_sum_ok = add("pair_sum", 4 * d.total_sum(), nn * nn * tau, 4);
  cert.pivot_sum_ok = add("pivot_sum", 4 * d.row_sum(pivot), nn * tau, 4);
  if (mode == TspMode::christofides)
    add("tau_prime", 2 * cycle.cycle_length, 3 * tau, 2);
  else
    add("tau_prime", cycle.cycle_length, tau, 1);
  add("route_hamiltonian", non_hamiltonian, 0, 1);
  add("route_identity", identity_mismatch, 0, 1);
  add("pivot_team", 2 * ell_a.per_team[n - 1], nn * tau, 2);

  Distance a_min = std::numeric_limits<Distance>::max(), a_max = 0;
  Distance sum_totals = 0, best_m_total = std::numeric_limits<Distance>::max();
  std::vector<Distance> team_sums(static_cast<std::size_t>(n), 0);
  for (int m = 0; m < slots; ++m) {
    const Schedule rotated = rotate(base, m);
    const auto a = evaluate_assumption_a(rotated, vertex_of_team, d);
    a_min = std::min(a_min, a.total);
    a_max = std::max(a_max, a.total);
    const auto athome = evaluate_athome(rotated, vertex_of_team, d);
    sum_totals += athome.total;
    best_m_total = std::min(best_m_total, athome.total);
    for (int t = 0; t < n; ++t) team_sums[t] += athome.per_team[t];
  }
  add("assumption_a_invariance", a_max - a_min, 0, 1);

  Distance pivot_sum = 0;
  for (int v = 0; v < n; ++v)
    if (v != pivot) pivot_sum += d(v, pivot);
  const Distance k = n - 1;
  cert.avg_bound_lhs = sum_totals;
  cert.avg_bound_rhs = 2 * k * (nn - 2) * cycle.cycle_length + 4 * k * pivot_sum +
                       3 * k * tau + nn * k * tau + 2 * d.total_sum();
  add("average_total", cert.avg_bound_lhs, cert.avg_bound_rhs, 2 * k);

  // Report the team with the least slack.
  BoundCheck worst{"per_team_average", 0, 0, 2 * k};
  bool first = true;
  for (int t = 0; t < n; ++t) {
    Distance lhs = team_sums[t];
    Distance rhs = 2 * k * ell_a.per_team[t] + 2 * d.row_sum(vertex_of_team[t]);
    if (first || rhs - lhs < worst.slack()) {
      worst.lhs = lhs;
      worst.rhs = rhs;
      first = false;
    }
  }
  cert.checks.push_back(worst);

  add("min_le_mean", 2 * k * best_m_total, sum_totals, 2 * k);
  add("lower_bound", nn * tau, solution_total, 1);
  const Distance ratio_num = mode == TspMode::christofides ? 11 : 9;
  cert.ratio_ok = add("ratio", 4 * solution_total, ratio_num * nn * tau, 4);
  return cert;
}

}  // namespace uttp
