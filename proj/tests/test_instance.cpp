#include <doctest.h>

#include <sstream>

#include "test_support.hpp"
#include "uttp/instance.hpp"
#include "uttp/tsp.hpp"

using namespace uttp;

TEST_CASE("parse smallest symmetric matrix") {
  auto d = parse_distance_matrix("0 1\n1 0");
  CHECK(d.size() == 2);
  CHECK(d(0, 1) == 1);
  CHECK(d.decimals() == 0);
  CHECK(d.metric());
}

TEST_CASE("parse NL4 file") {
  auto d = test::load_data("nl4.txt");
  REQUIRE(d.size() == 4);
  CHECK(d.metric());
  CHECK(4 * held_karp(d, all_vertices(4)).length == 8044);
}

TEST_CASE("parse flags a triangle violation but accepts it") {
  auto d = parse_distance_matrix("0 1 1\n1 0 3\n1 3 0");
  CHECK_FALSE(d.metric());
  auto v = validate_metric(d);
  REQUIRE(v.size() == 1);
  CHECK(v[0] == TriangleViolation{1, 0, 2, 1});
}

TEST_CASE("leading-n form is detected by token count") {
  auto a = parse_distance_matrix("3\n0 2 4\n2 0 3\n4 3 0\n");
  auto b = parse_distance_matrix("0 2 4 2 0 3 4 3 0");
  CHECK(a == b);
  CHECK(a.size() == 3);
  CHECK_THROWS_AS(parse_distance_matrix("4\n0 2 4\n2 0 3\n4 3 0\n"), InstanceError);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_distance_matrix(""), InstanceError);
  CHECK_THROWS_AS(parse_distance_matrix("0 1 1"), InstanceError);
  CHECK_THROWS_AS(parse_distance_matrix("0 -1\n-1 0"), InstanceError);
  CHECK_THROWS_AS(parse_distance_matrix("1 1\n1 0"), InstanceError);
  CHECK_THROWS_AS(parse_distance_matrix("0 1\n2 0"), InstanceError);
  CHECK_THROWS_AS(parse_distance_matrix("0 x\nx 0"), InstanceError);
  CHECK_THROWS_AS(parse_distance_matrix("0 1e3\n1e3 0"), InstanceError);
  CHECK_THROWS_AS(parse_distance_matrix("0 0.0000000001\n0.0000000001 0"), InstanceError);
}

TEST_CASE("decimal entries are scaled exactly") {
  auto d = parse_distance_matrix("0 1.5 2\n1.5 0 0.25\n2 0.25 0");
  CHECK(d.decimals() == 2);
  CHECK(d.scale() == 100);
  CHECK(d(0, 1) == 150);
  CHECK(d(0, 2) == 200);
  CHECK(d(1, 2) == 25);
  CHECK(format_distance(d(1, 2), d.decimals()) == "0.25");
  CHECK_THROWS_AS(parse_distance_matrix("0 1.5\n1.50001 0"), InstanceError);
}

TEST_CASE("validate_metric on metric inputs") {
  CHECK(validate_metric(DistanceMatrix::zeros(4)).empty());
  CHECK(validate_metric(random_euclidean_instance(12, 7)).empty());
  CHECK(validate_metric(test::line_metric(6)).empty());
}

TEST_CASE("validate_metric caps its output") {
  // Vertex 0 is a shortcut for every pair of the others.
  std::vector<Distance> v;
  const int n = 6;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) v.push_back(i == j ? 0 : (i == 0 || j == 0 ? 1 : 10));
  DistanceMatrix d(n, v);
  CHECK(validate_metric(d).size() == 10);
  CHECK(validate_metric(d, 3).size() == 3);
}

TEST_CASE("random_euclidean_instance contract") {
  auto a = random_euclidean_instance(4, 1);
  auto b = random_euclidean_instance(4, 1);
  auto c = random_euclidean_instance(4, 2);
  CHECK(a == b);
  CHECK(c.size() == 4);
  CHECK(c.metric());
  CHECK_THROWS_AS(random_euclidean_instance(2, 1), std::invalid_argument);
}

TEST_CASE("generated and parsed matrices keep their invariants and round-trip") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const int n = 3 + static_cast<int>(seed % 14);
    auto d = random_euclidean_instance(n, seed, seed % 2 ? 1000.0 : 10.0);
    CHECK(d.metric());
    CHECK(validate_metric(d).empty());
    for (int i = 0; i < n; ++i) {
      CHECK(d(i, i) == 0);
      for (int j = 0; j < n; ++j) CHECK(d(i, j) == d(j, i));
    }
    auto again = parse_distance_matrix(render_distance_matrix(d));
    CHECK(again == d);
  }
}

TEST_CASE("format_distance") {
  CHECK(format_distance(8044, 0) == "8044");
  CHECK(format_distance(5, 3) == "0.005");
  CHECK(format_distance(123456, 3) == "123.456");
  CHECK(format_distance(-1500, 3) == "-1.500");
}

TEST_CASE("load_distance_matrix reports missing files as I/O failures") {
  CHECK_THROWS_AS(load_distance_matrix(test::data_dir() / "does-not-exist.txt"),
                  std::ios_base::failure);
}
