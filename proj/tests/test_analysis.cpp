#include <doctest.h>

#include <algorithm>

#include "test_support.hpp"
#include "uttp/analysis.hpp"
#include "uttp/solver.hpp"

using namespace uttp;

namespace {

BoundCertificate certify_solution(const DistanceMatrix& d, const SolveResult& res) {
  return certify(d, res.cycle.pivoted, res.vertex_of_team, *res.report.tau,
                 res.report.total_distance, res.report.tsp_mode, res.report.matching_exact);
}

// Mean athome total over all rotations, recomputed in long double from a
// plain walk of each rotated schedule.
long double mean_total(const DistanceMatrix& d, const std::vector<int>& map) {
  const int n = d.size();
  auto base = mirror_and_assign(n);
  long double sum = 0;
  for (int m = 0; m < 2 * n - 2; ++m) {
    auto s = rotate(base, m);
    for (int t = 0; t < n; ++t) {
      int at = map[t];
      for (int sl = 0; sl < s.slots(); ++sl) {
        int v = s.home(t, sl) ? map[t] : map[s.at(t, sl).opponent];
        sum += d(at, v);
        at = v;
      }
      sum += d(at, map[t]);
    }
  }
  return sum / (2 * n - 2);
}

}  // namespace

TEST_CASE("lower bound and gap") {
  auto nl4 = test::load_data("nl4.txt");
  CHECK(lower_bound(nl4, 2011) == 8044);
  CHECK(lower_bound(DistanceMatrix::zeros(10), 3834) == 38340);
  CHECK(format_gap(gap_percent(47930, 38340)) == "25.0");
  CHECK(format_gap(gap_percent(8276, 8044)) == "2.9");
  CHECK(format_gap(gap_percent(20547, 17826)) == "15.3");
  CHECK(format_gap(gap_percent(500, 500)) == "0.0");
  CHECK_FALSE(gap_percent(0, 0));
  CHECK(format_gap(gap_percent(0, 0)) == "n/a");
}

TEST_CASE("certificate holds on random metric instances") {
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 8;
    auto d = random_euclidean_instance(n, 1000 + trial);
    for (auto mode : {TspMode::exact, TspMode::christofides}) {
      SolveOptions opt;
      opt.mode = mode;
      auto res = solve(d, opt);
      auto cert = certify_solution(d, res);
      CHECK(cert.applicable);
      CHECK(cert.all_hold());
      CHECK(cert.edge_max_ok);
      CHECK(cert.hamilton_ok);
      CHECK(cert.pair_sum_ok);
      CHECK(cert.pivot_sum_ok);
      CHECK(cert.ratio_ok);
      CHECK(cert.ratio_bound == doctest::Approx(mode == TspMode::exact ? 2.25 : 2.75));
      for (const char* name :
           {"edge_max", "hamilton_cycles", "pair_sum", "pivot_sum", "tau_prime",
            "route_hamiltonian", "route_identity", "assumption_a_invariance", "pivot_team",
            "average_total", "per_team_average", "min_le_mean", "lower_bound", "ratio"})
        CHECK_MESSAGE(cert.find(name) != nullptr, name);
    }
  }
}

TEST_CASE("certificate values agree with an independent recomputation") {
  for (int trial = 0; trial < 12; ++trial) {
    const int n = 4 + 2 * (trial % 5);
    auto d = random_euclidean_instance(n, 2000 + trial);
    auto res = solve(d);
    auto cert = certify_solution(d, res);
    const long double tau = static_cast<long double>(*res.report.tau);
    const long double tp = static_cast<long double>(res.cycle.pivoted.cycle_length);
    const int pivot = res.cycle.pivoted.pivot;

    Distance max_edge = 0, pair_sum = 0, pivot_row = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        max_edge = std::max(max_edge, d(i, j));
        pair_sum += d(i, j);
        if (i == pivot) pivot_row += d(i, j);
      }
    CHECK(cert.edge_max_ok == (max_edge <= tau / 2));
    CHECK(cert.pair_sum_ok == (pair_sum <= n * n * tau / 4));
    CHECK(cert.pivot_sum_ok == (pivot_row <= n * tau / 4));

    const long double mean = mean_total(d, res.vertex_of_team);
    const long double bound =
        (n - 2) * tp + 2 * pivot_row + (3 + n) * tau / 2 + pair_sum / (long double)(n - 1);
    CHECK(static_cast<double>(cert.avg_bound_lhs / (long double)(2 * n - 2)) ==
          doctest::Approx(static_cast<double>(mean)));
    CHECK(static_cast<double>(cert.avg_bound_rhs / (long double)(2 * n - 2)) ==
          doctest::Approx(static_cast<double>(bound)));
    CHECK(mean <= bound);
    CHECK(res.report.total_distance <= mean);
    CHECK(4 * res.report.total_distance <= 9 * n * *res.report.tau);
  }
}

TEST_CASE("non-metric input is marked not applicable") {
  // Venue 0 is far from everything except through venue 1.
  auto d = parse_distance_matrix(
      "0 1 50 50\n"
      "1 0 1 1\n"
      "50 1 0 1\n"
      "50 1 1 0\n");
  CHECK_FALSE(d.metric());
  auto res = solve(d);
  CHECK_FALSE(res.report.metric);
  CHECK_FALSE(res.report.guarantees_valid);
  auto cert = certify_solution(d, res);
  CHECK_FALSE(cert.applicable);
  CHECK_FALSE(cert.edge_max_ok);
}

TEST_CASE("christofides with heuristic matching is not applicable") {
  auto d = random_euclidean_instance(6, 4);
  auto res = solve(d);
  auto cert = certify(d, res.cycle.pivoted, res.vertex_of_team, *res.report.tau,
                      res.report.total_distance, TspMode::christofides, false);
  CHECK_FALSE(cert.applicable);
}

TEST_CASE("zero matrix certificate") {
  auto d = DistanceMatrix::zeros(6);
  auto res = solve(d);
  auto cert = certify_solution(d, res);
  CHECK(cert.all_hold());
  CHECK(cert.avg_bound_lhs == 0);
  CHECK(cert.avg_bound_rhs == 0);
  for (const auto& c : cert.checks) CHECK(c.slack() == 0);
}
