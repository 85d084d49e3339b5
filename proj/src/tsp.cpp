#include "uttp/tsp.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <fstream>
#include <iterator>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace uttp {

namespace {

constexpr Distance kInf = std::numeric_limits<Distance>::max() / 4;

std::vector<int> sorted_unique_set(std::span<const int> vertex_set, int n) {
  std::vector<int> v(vertex_set.begin(), vertex_set.end());
  std::sort(v.begin(), v.end());
  if (std::adjacent_find(v.begin(), v.end()) != v.end())
    throw std::invalid_argument("vertex set contains duplicates");
  for (int x : v)
    if (x < 0 || x >= n) throw std::invalid_argument("vertex index out of range");
  return v;
}

// Start at the lowest vertex and walk toward the smaller of its two neighbors.
void canonicalize(std::vector<int>& cycle) {
  if (cycle.size() < 3) return;
  auto lowest = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), lowest, cycle.end());
  if (cycle[1] > cycle.back()) std::reverse(cycle.begin() + 1, cycle.end());
}

}  // namespace

Distance cycle_length(const DistanceMatrix& d, std::span<const int> cycle) {
  Distance len = 0;
  for (std::size_t i = 0; i < cycle.size(); ++i)
    len += d(cycle[i], cycle[(i + 1) % cycle.size()]);
  return len;
}

bool is_valid_tour(const DistanceMatrix& d, const Tour& tour,
                   std::span<const int> vertex_set) {
  std::vector<int> a(tour.vertices), b(vertex_set.begin(), vertex_set.end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b && std::adjacent_find(a.begin(), a.end()) == a.end() &&
         cycle_length(d, tour.vertices) == tour.length;
}

std::vector<int> all_vertices(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  return v;
}

int select_pivot(const DistanceMatrix& d) {
  int best = 0;
  Distance best_sum = d.row_sum(0);
  for (int v = 1; v < d.size(); ++v) {
    Distance s = d.row_sum(v);
    if (s < best_sum) {
      best = v;
      best_sum = s;
    }
  }
  return best;
}

Tour held_karp(const DistanceMatrix& d, std::span<const int> vertex_set, int cap) {
  const auto verts = sorted_unique_set(vertex_set, d.size());
  const int k = static_cast<int>(verts.size());
  if (k < 3) throw std::invalid_argument("held_karp needs at least 3 vertices");
  if (k > cap || k > 31)
    throw std::invalid_argument("held_karp: " + std::to_string(k) +
                                " vertices exceed the cap of " + std::to_string(cap));

  // Local vertex 0 is the fixed start; masks range over locals 1..k-1.
  const int m = k - 1;
  const std::size_t states = std::size_t{1} << m;
  std::vector<Distance> cost(states * m, kInf);
  std::vector<std::uint8_t> prev(states * m, 0);
  auto at = [m](std::size_t mask, int j) { return mask * m + (j - 1); };

  for (int j = 1; j < k; ++j) cost[at(std::size_t{1} << (j - 1), j)] = d(verts[0], verts[j]);

  for (std::size_t mask = 1; mask < states; ++mask) {
    for (int j = 1; j < k; ++j) {
      if (!(mask >> (j - 1) & 1)) continue;
      const Distance c = cost[at(mask, j)];
      if (c >= kInf) continue;
      for (int nxt = 1; nxt < k; ++nxt) {
        if (mask >> (nxt - 1) & 1) continue;
        const std::size_t to = mask | (std::size_t{1} << (nxt - 1));
        const Distance cand = c + d(verts[j], verts[nxt]);
        if (cand < cost[at(to, nxt)]) {
          cost[at(to, nxt)] = cand;
          prev[at(to, nxt)] = static_cast<std::uint8_t>(j);
        }
      }
    }
  }

  const std::size_t full = states - 1;
  int last = 1;
  Distance best = kInf;
  for (int j = 1; j < k; ++j) {
    Distance c = cost[at(full, j)] + d(verts[j], verts[0]);
    if (c < best) {
      best = c;
      last = j;
    }
  }

  std::vector<int> order;
  order.reserve(k);
  std::size_t mask = full;
  for (int j = last; j != 0;) {
    order.push_back(verts[j]);
    int p = prev[at(mask, j)];
    mask &= ~(std::size_t{1} << (j - 1));
    j = p;
  }
  order.push_back(verts[0]);
  std::reverse(order.begin(), order.end());
  canonicalize(order);
  return Tour{std::move(order), best};
}

Matching min_weight_perfect_matching(const DistanceMatrix& d, std::span<const int> odd_set,
                                     int exact_limit) {
  const auto verts = sorted_unique_set(odd_set, d.size());
  const int k = static_cast<int>(verts.size());
  if (k % 2 != 0) throw std::invalid_argument("perfect matching needs an even vertex count");

  Matching result;
  if (k == 0) return result;

  if (k <= exact_limit && k <= 24) {
    const std::size_t states = std::size_t{1} << k;
    std::vector<Distance> best(states, kInf);
    std::vector<std::uint8_t> partner(states, 0);
    best[0] = 0;
    for (std::size_t mask = 1; mask < states; ++mask) {
      if (std::popcount(mask) % 2 != 0) continue;
      const int i = std::countr_zero(mask);
      for (int j = i + 1; j < k; ++j) {
        if (!(mask >> j & 1)) continue;
        const std::size_t rest = mask & ~(std::size_t{1} << i) & ~(std::size_t{1} << j);
        const Distance c = best[rest] + d(verts[i], verts[j]);
        if (c < best[mask]) {
          best[mask] = c;
          partner[mask] = static_cast<std::uint8_t>(j);
        }
      }
    }
    for (std::size_t mask = states - 1; mask != 0;) {
      const int i = std::countr_zero(mask);
      const int j = partner[mask];
      result.pairs.emplace_back(verts[i], verts[j]);
      mask &= ~(std::size_t{1} << i) & ~(std::size_t{1} << j);
    }
    result.weight = best[states - 1];
    result.exact = true;
  } else {
    struct Edge {
      Distance w;
      int a, b;
    };
    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) edges.push_back({d(verts[i], verts[j]), verts[i], verts[j]});
    std::sort(edges.begin(), edges.end(), [](const Edge& x, const Edge& y) {
      return std::tie(x.w, x.a, x.b) < std::tie(y.w, y.a, y.b);
    });
    std::vector<bool> used(static_cast<std::size_t>(d.size()), false);
    for (const auto& e : edges) {
      if (used[e.a] || used[e.b]) continue;
      used[e.a] = used[e.b] = true;
      result.pairs.emplace_back(e.a, e.b);
    }

    auto& p = result.pairs;
    for (bool improved = true; improved;) {
      improved = false;
      for (std::size_t x = 0; x < p.size(); ++x)
        for (std::size_t y = x + 1; y < p.size(); ++y) {
          auto [a, b] = p[x];
          auto [c, e] = p[y];
          const Distance now = d(a, b) + d(c, e);
          if (d(a, c) + d(b, e) < now) {
            p[x] = {a, c};
            p[y] = {b, e};
            improved = true;
          } else if (d(a, e) + d(b, c) < now) {
            p[x] = {a, e};
            p[y] = {b, c};
            improved = true;
          }
        }
    }
    result.weight = 0;
    for (const auto& [a, b] : p) result.weight += d(a, b);
    result.exact = false;
  }

  for (auto& pr : result.pairs)
    if (pr.first > pr.second) std::swap(pr.first, pr.second);
  std::sort(result.pairs.begin(), result.pairs.end());
  return result;
}

ChristofidesTour christofides(const DistanceMatrix& d, std::span<const int> vertex_set,
                              int exact_matching_limit) {
  const auto verts = sorted_unique_set(vertex_set, d.size());
  const int k = static_cast<int>(verts.size());
  if (k < 3) throw std::invalid_argument("christofides needs at least 3 vertices");

  // Prim on local indices; lowest index wins ties.
  std::vector<bool> in_tree(k, false);
  std::vector<Distance> key(k, kInf);
  std::vector<int> parent(k, -1);
  key[0] = 0;
  std::vector<std::pair<int, int>> edges;  // local endpoints
  for (int step = 0; step < k; ++step) {
    int u = -1;
    for (int v = 0; v < k; ++v)
      if (!in_tree[v] && (u < 0 || key[v] < key[u])) u = v;
    in_tree[u] = true;
    if (parent[u] >= 0) edges.emplace_back(parent[u], u);
    for (int v = 0; v < k; ++v) {
      if (in_tree[v]) continue;
      Distance w = d(verts[u], verts[v]);
      if (w < key[v]) {
        key[v] = w;
        parent[v] = u;
      }
    }
  }

  std::vector<int> degree(k, 0);
  for (auto [a, b] : edges) ++degree[a], ++degree[b];
  std::vector<int> odd;
  for (int v = 0; v < k; ++v)
    if (degree[v] % 2) odd.push_back(verts[v]);

  Matching matching = min_weight_perfect_matching(d, odd, exact_matching_limit);
  auto local = [&](int vertex) {
    return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), vertex) - verts.begin());
  };
  for (auto [a, b] : matching.pairs) edges.emplace_back(local(a), local(b));

  // Hierholzer's circuit on the Eulerian multigraph.
  std::vector<std::vector<std::pair<int, int>>> adj(k);
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    adj[edges[e].first].emplace_back(edges[e].second, e);
    adj[edges[e].second].emplace_back(edges[e].first, e);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  std::vector<bool> used(edges.size(), false);
  std::vector<std::size_t> next(k, 0);
  std::vector<int> stack{0}, circuit;
  while (!stack.empty()) {
    int u = stack.back();
    auto& nu = next[u];
    while (nu < adj[u].size() && used[adj[u][nu].second]) ++nu;
    if (nu == adj[u].size()) {
      circuit.push_back(u);
      stack.pop_back();
    } else {
      used[adj[u][nu].second] = true;
      stack.push_back(adj[u][nu].first);
    }
  }
  std::reverse(circuit.begin(), circuit.end());

  std::vector<bool> seen(k, false);
  std::vector<int> order;
  for (int u : circuit) {
    if (seen[u]) continue;
    seen[u] = true;
    order.push_back(verts[u]);
  }
  Distance len = cycle_length(d, order);
  return ChristofidesTour{Tour{std::move(order), len}, matching.exact};
}

std::string_view to_string(TspMode mode) {
  switch (mode) {
    case TspMode::exact: return "exact";
    case TspMode::christofides: return "christofides";
    case TspMode::tour_file: return "tour-file";
  }
  return "unknown";
}

PivotedCycle skip_vertex(const DistanceMatrix& d, const Tour& full_tour, int vertex) {
  PivotedCycle p;
  p.pivot = vertex;
  for (int v : full_tour.vertices)
    if (v != vertex) p.cycle.push_back(v);
  if (p.cycle.size() + 1 != full_tour.vertices.size())
    throw std::invalid_argument("vertex to skip is not on the tour");
  p.cycle_length = cycle_length(d, p.cycle);
  return p;
}

CycleBuild build_pivoted_cycle(const DistanceMatrix& d, TspMode mode,
                               const std::optional<Tour>& supplied, int held_karp_cap) {
  const int n = d.size();
  if (n < 4 || n % 2 != 0) throw std::invalid_argument("n must be even and at least 4");

  CycleBuild out;
  out.mode = mode;
  const int pivot = select_pivot(d);
  switch (mode) {
    case TspMode::exact: {
      out.full_tour = held_karp(d, all_vertices(n), held_karp_cap);
      out.pivoted = skip_vertex(d, *out.full_tour, pivot);
      break;
    }
    case TspMode::tour_file: {
      if (!supplied) throw std::invalid_argument("tour-file mode needs a supplied tour");
      if (!is_valid_tour(d, *supplied, all_vertices(n)))
        throw InstanceError("supplied tour is not a Hamilton cycle on all venues");
      out.full_tour = supplied;
      out.pivoted = skip_vertex(d, *supplied, pivot);
      break;
    }
    case TspMode::christofides: {
      std::vector<int> rest;
      for (int v = 0; v < n; ++v)
        if (v != pivot) rest.push_back(v);
      auto ct = christofides(d, rest);
      out.matching_exact = ct.matching_exact;
      out.pivoted = PivotedCycle{pivot, std::move(ct.tour.vertices), ct.tour.length};
      break;
    }
  }
  return out;
}

Tour parse_tour(std::istream& in, const DistanceMatrix& d) {
  const int n = d.size();
  std::vector<int> order;
  std::string token;
  while (in >> token) {
    int v = -1;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size())
      throw InstanceError("tour file: not a vertex index: '" + token + "'");
    if (v < 0 || v >= n) throw InstanceError("tour file: vertex " + token + " out of range");
    order.push_back(v);
  }
  if (static_cast<int>(order.size()) != n)
    throw InstanceError("tour file: expected " + std::to_string(n) + " vertices, got " +
                        std::to_string(order.size()));
  std::vector<bool> seen(n, false);
  for (int v : order) {
    if (seen[v]) throw InstanceError("tour file: vertex " + std::to_string(v) + " repeated");
    seen[v] = true;
  }
  Distance len = cycle_length(d, order);
  return Tour{std::move(order), len};
}

Tour load_tour(const std::filesystem::path& path, const DistanceMatrix& d) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open " + path.string());
  return parse_tour(in, d);
}

std::string render_tour(const Tour& tour) {
  std::ostringstream out;
  for (std::size_t i = 0; i < tour.vertices.size(); ++i) out << (i ? " " : "") << tour.vertices[i];
  out << '\n';
  return out.str();
}

}  // namespace uttp
