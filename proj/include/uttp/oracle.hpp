#pragma once

#include <cstdint>
#include <span>

#include "uttp/instance.hpp"
#include "uttp/schedule.hpp"
#include "uttp/tsp.hpp"

namespace uttp {

struct OracleResult {
  Distance optimum = 0;
  Schedule schedule;
  std::uint64_t nodes = 0;
};

/// Exact UTTP optimum for four teams: depth-first search over the twelve
/// (matching, orientation) choices per slot, every ordered game used once,
/// pruned by the travel already incurred. No mirrored or no-repeater
/// requirement.
OracleResult exact_uttp(const DistanceMatrix& d);

inline constexpr int kBruteForceTspLimit = 10;

/// Minimum over all (k-1)!/2 cycles, by enumerating permutations with the
/// lowest vertex fixed.
Tour brute_force_tsp(const DistanceMatrix& d, std::span<const int> vertex_set);

}  // namespace uttp
