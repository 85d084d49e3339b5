#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace uttp {

// Distances are exact fixed-point integers: a stored value v stands for
// v / 10^decimals in the instance's own units. Integral instances use
// decimals == 0, so every total computed on them is the plain integer.
using Distance = std::int64_t;

/// Raised for malformed or invalid instance, tour and schedule files.
class InstanceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// d[from][via] + d[via][to] < d[from][to], short by `deficit`.
struct TriangleViolation {
  int from = 0;
  int via = 0;
  int to = 0;
  Distance deficit = 0;

  bool operator==(const TriangleViolation&) const = default;
};

/// Symmetric, zero-diagonal, nonnegative n x n matrix of venue distances.
///
/// Immutable after construction. The constructor enforces the structural
/// invariants and records whether the triangle inequality holds; non-metric
/// matrices are accepted and flagged rather than rejected.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;

  /// `values` is row-major with n*n entries, already scaled by 10^decimals.
  /// Throws InstanceError on a negative entry, nonzero diagonal or asymmetry.
  DistanceMatrix(int n, std::vector<Distance> values, int decimals = 0);

  static DistanceMatrix zeros(int n);

  int size() const { return n_; }
  int decimals() const { return decimals_; }
  Distance scale() const;
  bool metric() const { return metric_; }

  Distance operator()(int i, int j) const {
    return values_[static_cast<std::size_t>(i) * n_ + j];
  }

  Distance row_sum(int v) const;
  /// Sum over all ordered pairs, i.e. twice the sum over edges.
  Distance total_sum() const;
  Distance max_entry() const;

  bool operator==(const DistanceMatrix&) const = default;

 private:
  int n_ = 0;
  int decimals_ = 0;
  bool metric_ = true;
  std::vector<Distance> values_;
};

/// Largest supported number of fraction digits in instance files.
inline constexpr int kMaxDecimals = 9;

DistanceMatrix parse_distance_matrix(std::istream& in);
DistanceMatrix parse_distance_matrix(std::string_view text);
DistanceMatrix load_distance_matrix(const std::filesystem::path& path);

/// Plain square form, one row per line; re-parses to an identical matrix.
std::string render_distance_matrix(const DistanceMatrix& d);

/// Formats a scaled distance as a decimal with exactly `decimals` digits.
std::string format_distance(Distance value, int decimals);

/// Triples breaking the triangle inequality, each unordered endpoint pair
/// reported once (from < to), at most `cap` entries.
std::vector<TriangleViolation> validate_metric(const DistanceMatrix& d,
                                               std::size_t cap = 32);

/// n uniform points in [0, box]^2 with Euclidean distances rounded to
/// kEuclideanDecimals fraction digits. If rounding breaks a triangle, the
/// precision is raised one digit at a time up to kMaxDecimals; as a last
/// resort the rounded matrix is replaced by its shortest-path closure.
inline constexpr int kEuclideanDecimals = 3;
DistanceMatrix random_euclidean_instance(int n, std::uint64_t seed,
                                         double box = 1000.0);

}  // namespace uttp
