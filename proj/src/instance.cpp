#include "uttp/instance.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iterator>
#include <random>
#include <sstream>

namespace uttp {

namespace {

Distance pow10(int e) {
  Distance p = 1;
  for (int i = 0; i < e; ++i) p *= 10;
  return p;
}

bool all_digits(std::string_view s) {
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

// A token split into integer and fraction digits; sign handled separately.
struct DecimalToken {
  bool negative = false;
  std::string_view whole;
  std::string_view fraction;
};

DecimalToken split_token(std::string_view token) {
  DecimalToken t;
  if (!token.empty() && (token.front() == '-' || token.front() == '+')) {
    t.negative = token.front() == '-';
    token.remove_prefix(1);
  }
  auto dot = token.find('.');
  t.whole = token.substr(0, dot);
  if (dot != std::string_view::npos) t.fraction = token.substr(dot + 1);
  if ((t.whole.empty() && t.fraction.empty()) || !all_digits(t.whole) ||
      !all_digits(t.fraction)) {
    throw InstanceError("not a number: '" + std::string(token) + "'");
  }
  return t;
}

Distance digits_value(std::string_view digits) {
  Distance v = 0;
  if (digits.empty()) return 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw InstanceError("number out of range: '" + std::string(digits) + "'");
  }
  return v;
}

int integer_sqrt_exact(std::size_t count) {
  auto r = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(count))));
  for (std::size_t c = (r > 0 ? r - 1 : 0); c <= r + 1; ++c) {
    if (c * c == count) return static_cast<int>(c);
  }
  return -1;
}

bool check_metric(int n, const std::vector<Distance>& v) {
  auto at = [&](int i, int j) { return v[static_cast<std::size_t>(i) * n + j]; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (at(i, j) + at(j, k) < at(i, k)) return false;
  return true;
}

}  // namespace

DistanceMatrix::DistanceMatrix(int n, std::vector<Distance> values, int decimals)
    : n_(n), decimals_(decimals), values_(std::move(values)) {
  if (n < 1) throw InstanceError("matrix must have at least one row");
  if (decimals < 0 || decimals > kMaxDecimals)
    throw InstanceError("unsupported decimal precision");
  if (values_.size() != static_cast<std::size_t>(n) * n)
    throw InstanceError("matrix needs n*n entries");
  for (int i = 0; i < n; ++i) {
    if ((*this)(i, i) != 0)
      throw InstanceError("nonzero diagonal entry at row " + std::to_string(i));
    for (int j = 0; j < n; ++j) {
      if ((*this)(i, j) < 0)
        throw InstanceError("negative entry at (" + std::to_string(i) + ", " +
                            std::to_string(j) + ")");
      if ((*this)(i, j) != (*this)(j, i))
        throw InstanceError("asymmetric entries at (" + std::to_string(i) + ", " +
                            std::to_string(j) + ")");
    }
  }
  metric_ = check_metric(n_, values_);
}

DistanceMatrix DistanceMatrix::zeros(int n) {
  return DistanceMatrix(n, std::vector<Distance>(static_cast<std::size_t>(n) * n, 0));
}

Distance DistanceMatrix::scale() const { return pow10(decimals_); }

Distance DistanceMatrix::row_sum(int v) const {
  Distance s = 0;
  for (int j = 0; j < n_; ++j) s += (*this)(v, j);
  return s;
}

Distance DistanceMatrix::total_sum() const {
  Distance s = 0;
  for (Distance x : values_) s += x;
  return s;
}

Distance DistanceMatrix::max_entry() const {
  return values_.empty() ? 0 : *std::max_element(values_.begin(), values_.end());
}

DistanceMatrix parse_distance_matrix(std::istream& in) {
  std::vector<std::string> tokens{std::istream_iterator<std::string>(in),
                                  std::istream_iterator<std::string>()};
  if (tokens.empty()) throw InstanceError("empty instance");

  std::size_t first = 0;
  int n = integer_sqrt_exact(tokens.size());
  if (n < 0) {
    int inner = integer_sqrt_exact(tokens.size() - 1);
    bool leading = inner > 0 && all_digits(tokens.front()) &&
                   digits_value(tokens.front()) == inner;
    if (!leading)
      throw InstanceError("token count " + std::to_string(tokens.size()) +
                          " does not form a square matrix");
    n = inner;
    first = 1;
  }

  std::vector<DecimalToken> parsed;
  parsed.reserve(tokens.size() - first);
  int decimals = 0;
  for (std::size_t i = first; i < tokens.size(); ++i) {
    parsed.push_back(split_token(tokens[i]));
    decimals = std::max(decimals, static_cast<int>(parsed.back().fraction.size()));
  }
  if (decimals > kMaxDecimals)
    throw InstanceError("more than " + std::to_string(kMaxDecimals) +
                        " fraction digits are not supported");

  const Distance scale = pow10(decimals);
  std::vector<Distance> values;
  values.reserve(parsed.size());
  for (std::size_t i = 0; i < parsed.size(); ++i) {
    const auto& t = parsed[i];
    Distance v = digits_value(t.whole) * scale +
                 digits_value(t.fraction) * pow10(decimals - static_cast<int>(t.fraction.size()));
    if (t.negative && v != 0)
      throw InstanceError("negative entry at (" + std::to_string(i / n) + ", " +
                          std::to_string(i % n) + ")");
    values.push_back(v);
  }
  return DistanceMatrix(n, std::move(values), decimals);
}

DistanceMatrix parse_distance_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_distance_matrix(in);
}

DistanceMatrix load_distance_matrix(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open " + path.string());
  return parse_distance_matrix(in);
}

std::string format_distance(Distance value, int decimals) {
  if (decimals == 0) return std::to_string(value);
  const Distance scale = pow10(decimals);
  std::string sign = value < 0 ? "-" : "";
  Distance a = value < 0 ? -value : value;
  std::string frac = std::to_string(a % scale);
  frac.insert(0, static_cast<std::size_t>(decimals) - frac.size(), '0');
  return sign + std::to_string(a / scale) + "." + frac;
}

std::string render_distance_matrix(const DistanceMatrix& d) {
  std::ostringstream out;
  for (int i = 0; i < d.size(); ++i) {
    for (int j = 0; j < d.size(); ++j) {
      if (j) out << ' ';
      out << format_distance(d(i, j), d.decimals());
    }
    out << '\n';
  }
  return out.str();
}

std::vector<TriangleViolation> validate_metric(const DistanceMatrix& d, std::size_t cap) {
  std::vector<TriangleViolation> out;
  const int n = d.size();
  for (int i = 0; i < n; ++i)
    for (int k = i + 1; k < n; ++k)
      for (int j = 0; j < n; ++j) {
        Distance deficit = d(i, k) - d(i, j) - d(j, k);
        if (deficit > 0) {
          if (out.size() == cap) return out;
          out.push_back({i, j, k, deficit});
        }
      }
  return out;
}

DistanceMatrix random_euclidean_instance(int n, std::uint64_t seed, double box) {
  if (n < 3) throw std::invalid_argument("random instance needs n >= 3");
  if (!(box > 0)) throw std::invalid_argument("box side must be positive");

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(0.0, box);
  std::vector<std::pair<double, double>> pts(static_cast<std::size_t>(n));
  for (auto& p : pts) {
    p.first = coord(rng);
    p.second = coord(rng);
  }

  auto rounded = [&](int decimals) {
    const double scale = static_cast<double>(pow10(decimals));
    std::vector<Distance> v(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        double e = std::hypot(pts[i].first - pts[j].first, pts[i].second - pts[j].second);
        Distance r = std::llround(e * scale);
        v[static_cast<std::size_t>(i) * n + j] = r;
        v[static_cast<std::size_t>(j) * n + i] = r;
      }
    return v;
  };

  for (int decimals = kEuclideanDecimals; decimals <= kMaxDecimals; ++decimals) {
    DistanceMatrix d(n, rounded(decimals), decimals);
    if (d.metric()) return d;
  }

  // Floyd-Warshall closure never lengthens an edge and always yields a metric.
  auto v = rounded(kEuclideanDecimals);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        auto& ij = v[static_cast<std::size_t>(i) * n + j];
        ij = std::min(ij, v[static_cast<std::size_t>(i) * n + k] +
                              v[static_cast<std::size_t>(k) * n + j]);
      }
  return DistanceMatrix(n, std::move(v), kEuclideanDecimals);
}

}  // namespace uttp
