#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "uttp/instance.hpp"

namespace uttp {

/// A Hamilton cycle over its vertex set; the closing edge is implicit.
struct Tour {
  std::vector<int> vertices;
  Distance length = 0;

  bool operator==(const Tour&) const = default;
};

Distance cycle_length(const DistanceMatrix& d, std::span<const int> cycle);

/// True when `tour` visits every vertex of `vertex_set` exactly once and
/// its stored length matches the recomputed one.
bool is_valid_tour(const DistanceMatrix& d, const Tour& tour,
                   std::span<const int> vertex_set);

std::vector<int> all_vertices(int n);

/// Vertex with the smallest row sum, lowest index on ties.
int select_pivot(const DistanceMatrix& d);

inline constexpr int kDefaultHeldKarpCap = 20;

/// Shortest Hamilton cycle on the induced subgraph by subset dynamic
/// programming. The tour starts at the lowest vertex of the set; among
/// equal-length choices the lowest predecessor index wins, so the result
/// is deterministic. Memory is O(2^(k-1) * k) for k = |vertex_set|.
Tour held_karp(const DistanceMatrix& d, std::span<const int> vertex_set,
               int cap = kDefaultHeldKarpCap);

struct Matching {
  std::vector<std::pair<int, int>> pairs;  // each pair ordered (low, high)
  Distance weight = 0;
  bool exact = true;
};

inline constexpr int kExactMatchingLimit = 16;

/// Minimum-weight perfect matching. Exact (subset DP) up to `exact_limit`
/// vertices, otherwise greedy nearest pair followed by pairwise swaps until
/// no swap improves; `exact` records which path ran.
Matching min_weight_perfect_matching(const DistanceMatrix& d,
                                     std::span<const int> odd_set,
                                     int exact_limit = kExactMatchingLimit);

struct ChristofidesTour {
  Tour tour;
  bool matching_exact = true;
};

/// MST + perfect matching on odd-degree vertices + Euler circuit +
/// first-visit shortcut.
ChristofidesTour christofides(const DistanceMatrix& d, std::span<const int> vertex_set,
                              int exact_matching_limit = kExactMatchingLimit);

enum class TspMode { exact, christofides, tour_file };

std::string_view to_string(TspMode mode);

/// The pivot v* and a Hamilton cycle (v_0, ..., v_{n-2}) on the others.
struct PivotedCycle {
  int pivot = 0;
  std::vector<int> cycle;
  Distance cycle_length = 0;

  bool operator==(const PivotedCycle&) const = default;
};

/// Removes `vertex` from a Hamilton cycle on all of V, joining its neighbors.
PivotedCycle skip_vertex(const DistanceMatrix& d, const Tour& full_tour, int vertex);

struct CycleBuild {
  PivotedCycle pivoted;
  TspMode mode = TspMode::exact;
  bool matching_exact = true;
  /// The full-G tour the cycle was cut from (exact and tour-file modes).
  std::optional<Tour> full_tour;
};

/// Builds the pivoted cycle. Exact mode runs held_karp on all of V and
/// skips the pivot; tour-file mode skips the pivot in `supplied`;
/// christofides mode runs christofides on V minus the pivot.
CycleBuild build_pivoted_cycle(const DistanceMatrix& d, TspMode mode,
                               const std::optional<Tour>& supplied = std::nullopt,
                               int held_karp_cap = kDefaultHeldKarpCap);

/// Tour file: n whitespace-separated vertex indices forming a permutation.
Tour parse_tour(std::istream& in, const DistanceMatrix& d);
Tour load_tour(const std::filesystem::path& path, const DistanceMatrix& d);
std::string render_tour(const Tour& tour);

}  // namespace uttp
