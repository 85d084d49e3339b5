#pragma once

#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

#include "uttp/instance.hpp"

namespace uttp::test {

inline std::filesystem::path data_dir() { return UTTP_DATA_DIR; }

inline DistanceMatrix load_data(const std::string& name) {
  return load_distance_matrix(data_dir() / name);
}

/// Venues on a line at coordinates 0, 1, ..., n-1.
inline DistanceMatrix line_metric(int n) {
  std::vector<Distance> v;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) v.push_back(std::abs(i - j));
  return DistanceMatrix(n, v);
}

inline DistanceMatrix all_equal(int n, Distance c) {
  std::vector<Distance> v;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) v.push_back(i == j ? 0 : c);
  return DistanceMatrix(n, v);
}

/// Fresh scratch directory under the system temp dir.
inline std::filesystem::path scratch_dir(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("uttp_test_" + name);
  std::filesystem::remove_all(p);
  std::filesystem::create_directories(p);
  return p;
}

}  // namespace uttp::test
