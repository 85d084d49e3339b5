#include <doctest.h>

#include <random>

#include "test_support.hpp"
#include "uttp/oracle.hpp"
#include "uttp/solver.hpp"

using namespace uttp;

TEST_CASE("exact four-team optimum") {
  auto d = test::load_data("nl4.txt");
  auto o = exact_uttp(d);
  CHECK(o.optimum == 8276);
  CHECK(check_drr(o.schedule).empty());
  CHECK(evaluate_athome(o.schedule, all_vertices(4), d).total == o.optimum);
  CHECK(solve(d).report.total_distance == o.optimum);

  CHECK(exact_uttp(DistanceMatrix::zeros(4)).optimum == 0);
  CHECK_THROWS_AS(exact_uttp(DistanceMatrix::zeros(6)), std::invalid_argument);
}

TEST_CASE("oracle brackets the approximation on random four-team instances") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    auto d = random_euclidean_instance(4, seed);
    auto o = exact_uttp(d);
    auto tau = held_karp(d, all_vertices(4)).length;
    CHECK(check_drr(o.schedule).empty());
    CHECK(evaluate_athome(o.schedule, all_vertices(4), d).total == o.optimum);
    CHECK(o.optimum >= 4 * tau);
    CHECK(o.optimum <= solve(d).report.total_distance);
  }
}

TEST_CASE("brute-force TSP") {
  auto tri = parse_distance_matrix("0 1 1\n1 0 1\n1 1 0");
  CHECK(brute_force_tsp(tri, all_vertices(3)).length == 3);
  CHECK(brute_force_tsp(test::line_metric(5), all_vertices(5)).length == 8);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto d = random_euclidean_instance(8, seed);
    auto b = brute_force_tsp(d, all_vertices(8));
    CHECK(is_valid_tour(d, b, all_vertices(8)));
    CHECK(b.length == held_karp(d, all_vertices(8)).length);
  }
  CHECK_THROWS_AS(brute_force_tsp(random_euclidean_instance(11, 1), all_vertices(11)),
                  std::invalid_argument);
  std::vector<int> two{0, 1};
  CHECK_THROWS_AS(brute_force_tsp(tri, two), std::invalid_argument);
}
