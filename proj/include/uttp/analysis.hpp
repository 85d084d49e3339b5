#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "uttp/instance.hpp"
#include "uttp/tsp.hpp"

namespace uttp {

/// n * tau: no double round-robin schedule travels less.
Distance lower_bound(const DistanceMatrix& d, Distance tau);

/// (total / bound - 1) * 100; empty when bound is zero.
std::optional<double> gap_percent(Distance total, Distance bound);

/// One decimal, or "n/a".
std::string format_gap(std::optional<double> gap);

/// The inequality lhs / denominator <= rhs / denominator, kept as exact
/// integers in the instance's scaled units.
struct BoundCheck {
  std::string name;
  Distance lhs = 0;
  Distance rhs = 0;
  Distance denominator = 1;

  bool holds() const { return lhs <= rhs; }
  /// rhs - lhs, still over `denominator`.
  Distance slack() const { return rhs - lhs; }
};

struct BoundCertificate {
  Distance tau = 0;
  Distance tau_prime = 0;
  /// Metric input and a cycle built with an exact tour or exact matching.
  /// When false the inequalities are still evaluated but prove nothing.
  bool applicable = false;

  bool edge_max_ok = false;   // every edge <= tau / 2
  bool hamilton_ok = false;   // every produced Hamilton cycle <= n tau / 2
  bool pair_sum_ok = false;   // sum over ordered pairs <= n^2 tau / 4
  bool pivot_sum_ok = false;  // pivot row sum <= n tau / 4

  /// Mean athome total over all rotations against its closed-form bound,
  /// both multiplied by 2(n-1).
  Distance avg_bound_lhs = 0;
  Distance avg_bound_rhs = 0;

  double ratio_bound = 2.75;
  bool ratio_ok = false;

  std::vector<BoundCheck> checks;

  const BoundCheck* find(std::string_view name) const;
  bool all_hold() const;
};

/// Re-derives every bound the approximation guarantee rests on for the
/// schedule family {K*_DRR(m)} under the labeling `vertex_of_team`, and the
/// final ratio for `solution_total`.
///
/// Check names: edge_max, hamilton_cycles, pair_sum, pivot_sum, tau_prime,
/// route_hamiltonian, route_identity, assumption_a_invariance, pivot_team,
/// average_total, per_team_average, min_le_mean, lower_bound, ratio.
BoundCertificate certify(const DistanceMatrix& d, const PivotedCycle& cycle,
                         std::span<const int> vertex_of_team, Distance tau,
                         Distance solution_total, TspMode mode, bool matching_exact);

}  // namespace uttp
