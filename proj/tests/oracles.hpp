// Independent reference implementations used only by the tests. None of them
// calls into the library beyond the Graph value type.
#pragma once

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "chromzeta/graph.hpp"

namespace oracle {

using chromzeta::Edge;
using chromzeta::Graph;

// Proper colourings by backtracking over vertices in label order.
inline std::uint64_t colourings(const Graph& g, int q) {
  const int k = g.order();
  std::vector<std::vector<int>> earlier(k + 1);
  for (const auto& e : g.edges()) earlier[e.v].push_back(e.u);
  std::vector<int> colour(k + 1, 0);
  std::function<std::uint64_t(int)> rec = [&](int v) -> std::uint64_t {
    if (v > k) return 1;
    std::uint64_t total = 0;
    for (int c = 0; c < q; ++c) {
      bool ok = true;
      for (int u : earlier[v]) ok = ok && colour[u] != c;
      if (!ok) continue;
      colour[v] = c;
      total += rec(v + 1);
    }
    return total;
  };
  return rec(1);
}

inline Graph delete_edge(const Graph& g, const Edge& e) {
  std::vector<Edge> rest;
  for (const auto& f : g.edges())
    if (f != e) rest.push_back(f);
  return Graph(g.order(), rest);
}

// Merge e.v into e.u, drop e, relabel vertices above e.v down by one and
// collapse parallel edges.
inline Graph contract_edge(const Graph& g, const Edge& e) {
  auto relabel = [&](int w) {
    if (w == e.v) w = e.u;
    return w > e.v ? w - 1 : w;
  };
  std::vector<Edge> out;
  for (const auto& f : g.edges()) {
    if (f == e) continue;
    int a = relabel(f.u), b = relabel(f.v);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    const Edge n{a, b};
    bool seen = false;
    for (const auto& x : out) seen = seen || x == n;
    if (!seen) out.push_back(n);
  }
  return Graph(g.order() - 1, out);
}

// All labeled graphs on k vertices, one per subset of the k(k-1)/2 pairs.
inline std::vector<Graph> all_labeled_graphs(int k) {
  std::vector<Edge> pairs;
  for (int u = 1; u <= k; ++u)
    for (int v = u + 1; v <= k; ++v) pairs.push_back({u, v});
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::vector<Edge> es;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1) es.push_back(pairs[i]);
    out.emplace_back(k, es);
  }
  return out;
}

inline Graph random_graph(std::mt19937_64& rng, int k, double density) {
  std::bernoulli_distribution coin(density);
  std::vector<Edge> es;
  for (int u = 1; u <= k; ++u)
    for (int v = u + 1; v <= k; ++v)
      if (coin(rng)) es.push_back({u, v});
  return Graph(k, es);
}

// Lattice points strictly between x and y, found by scanning the bounding box.
inline std::size_t segment_points_by_scan(const std::vector<std::int64_t>& x, const std::vector<std::int64_t>& y) {
  const std::size_t s = x.size();
  std::vector<std::int64_t> lo(s), hi(s), z(s);
  for (std::size_t i = 0; i < s; ++i) {
    lo[i] = std::min(x[i], y[i]);
    hi[i] = std::max(x[i], y[i]);
  }
  z = lo;
  std::size_t count = 0;
  while (true) {
    // z on the open segment iff z - x = t (y - x) with 0 < t < 1.
    bool on = z != x && z != y;
    std::int64_t num = 0, den = 0;
    for (std::size_t i = 0; i < s && on; ++i) {
      const std::int64_t d = y[i] - x[i], w = z[i] - x[i];
      if (d == 0) {
        on = w == 0;
      } else if (den == 0) {
        num = w;
        den = d;
      } else {
        on = w * den == num * d;
      }
    }
    if (on) ++count;
    std::size_t i = 0;
    while (i < s && z[i] == hi[i]) z[i] = lo[i], ++i;
    if (i == s) break;
    ++z[i];
  }
  return count;
}

// Number of H-visible configurations in [1,n]^s, enumerating every tuple.
inline std::uint64_t visible_configurations(const Graph& g, int n, int s) {
  const int k = g.order();
  std::vector<int> c(static_cast<std::size_t>(k * s), 1);
  std::uint64_t good = 0;
  while (true) {
    bool ok = true;
    for (const auto& e : g.edges()) {
      int d = 0;
      for (int i = 0; i < s; ++i) d = std::gcd(d, std::abs(c[(e.u - 1) * s + i] - c[(e.v - 1) * s + i]));
      ok = ok && d == 1;
    }
    if (ok) ++good;
    std::size_t i = 0;
    while (i < c.size() && c[i] == n) c[i] = 1, ++i;
    if (i == c.size()) break;
    ++c[i];
  }
  return good;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Wilson score interval from the textbook formula.
inline std::pair<double, double> wilson(double successes, double trials, double z) {
  const double p = successes / trials, z2 = z * z;
  const double centre = (p + z2 / (2 * trials)) / (1 + z2 / trials);
  const double half = z / (1 + z2 / trials) * std::sqrt(p * (1 - p) / trials + z2 / (4 * trials * trials));
  return {centre - half, centre + half};
}

}  // namespace oracle
