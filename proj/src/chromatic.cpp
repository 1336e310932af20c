#include "chromzeta/chromatic.hpp"

#include <bit>
#include <unordered_map>

#include "chromzeta/primes.hpp"

namespace chromzeta {

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(int v) { return Mask{1} << v; }

constexpr std::size_t kMemoCapacity = 1u << 20;

// Multigraph-tolerant working form: adjacency bitsets over 0-based vertices.
// OR-ing rows on contraction collapses parallel edges for free.
struct WorkGraph {
  Mask active = 0;
  std::vector<Mask> adj;

  int vertex_count() const { return std::popcount(active); }

  int edge_count() const {
    int twice = 0;
    for (Mask m = active; m; m &= m - 1) twice += std::popcount(adj[std::countr_zero(m)]);
    return twice / 2;
  }

  void remove_vertex(int v) {
    for (Mask m = adj[v]; m; m &= m - 1) adj[std::countr_zero(m)] &= ~bit(v);
    adj[v] = 0;
    active &= ~bit(v);
  }

  void remove_edge(int u, int v) {
    adj[u] &= ~bit(v);
    adj[v] &= ~bit(u);
  }

  void add_edge(int u, int v) {
    adj[u] |= bit(v);
    adj[v] |= bit(u);
  }

  // Identify v with u.
  void contract(int u, int v) {
    const Mask nv = adj[v] & ~bit(u);
    remove_vertex(v);
    for (Mask m = nv; m; m &= m - 1) add_edge(u, std::countr_zero(m));
  }

  WorkGraph restricted(Mask keep) const {
    WorkGraph r;
    r.active = keep;
    r.adj.assign(adj.size(), 0);
    for (Mask m = keep; m; m &= m - 1) {
      const int v = std::countr_zero(m);
      r.adj[v] = adj[v] & keep;
    }
    return r;
  }

  Mask component_of(int start) const {
    Mask seen = bit(start);
    Mask frontier = seen;
    while (frontier) {
      Mask next = 0;
      for (Mask m = frontier; m; m &= m - 1) next |= adj[std::countr_zero(m)];
      frontier = next & ~seen;
      seen |= frontier;
    }
    return seen;
  }

  std::string key() const {
    std::string k(reinterpret_cast<const char*>(&active), sizeof(Mask));
    for (Mask m = active; m; m &= m - 1) {
      const Mask row = adj[std::countr_zero(m)];
      k.append(reinterpret_cast<const char*>(&row), sizeof(Mask));
    }
    return k;
  }
};

// Stable-partition counting for a connected core of 10..18 vertices.
// a_j = number of partitions of the vertex set into j independent sets, by a
// subset DP over the block containing the lowest vertex (O(3^n) time, bounded
// memory); then P(x) = sum_j a_j x(x-1)...(x-j+1).
constexpr int kPartitionMinVertices = 10;
constexpr int kPartitionMaxVertices = 18;

IntPolynomial stable_partition_polynomial(const WorkGraph& g) {
  std::vector<int> verts;
  for (Mask m = g.active; m; m &= m - 1) verts.push_back(std::countr_zero(m));
  const int n = static_cast<int>(verts.size());
  std::vector<std::uint32_t> nb(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (g.adj[verts[i]] & bit(verts[j])) nb[i] |= 1u << j;

  const std::uint32_t full = (1u << n) - 1;
  std::vector<char> independent(full + 1, 0);
  independent[0] = 1;
  for (std::uint32_t S = 1; S <= full; ++S) {
    const std::uint32_t rest = S & (S - 1);
    independent[S] = independent[rest] && !(nb[std::countr_zero(S)] & rest);
  }

  const int width = n + 1;
  std::vector<std::uint64_t> parts(static_cast<std::size_t>(full + 1) * width, 0);
  parts[0] = 1;
  for (std::uint32_t S = 1; S <= full; ++S) {
    const std::uint32_t low = S & (~S + 1);
    const std::uint32_t rest = S ^ low;
    const int top = std::popcount(S);
    std::uint64_t* row = &parts[static_cast<std::size_t>(S) * width];
    for (std::uint32_t T = rest;; T = (T - 1) & rest) {
      const std::uint32_t block = T | low;
      if (independent[block]) {
        const std::uint64_t* prev = &parts[static_cast<std::size_t>(S ^ block) * width];
        for (int j = 1; j <= top; ++j) row[j] += prev[j - 1];
      }
      if (T == 0) break;
    }
  }

  IntPolynomial result;
  const std::uint64_t* counts = &parts[static_cast<std::size_t>(full) * width];
  for (int j = 1; j <= n; ++j)
    if (counts[j]) result += IntPolynomial::constant(BigInt(counts[j])) * IntPolynomial::falling_factorial(j);
  return result;
}

class ChromaticSolver {
 public:
  explicit ChromaticSolver(std::uint64_t max_steps) : max_steps_(max_steps) {}

  IntPolynomial solve(const WorkGraph& g) {
    if (++steps_ > max_steps_) {
      throw BudgetError("chromatic_polynomial: recursion budget of " + std::to_string(max_steps_) +
                        " steps exceeded");
    }
    const int n = g.vertex_count();
    const int m = g.edge_count();
    if (m == 0) return IntPolynomial::x().pow(n);

    const std::string key = g.key();
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    IntPolynomial result = solve_uncached(g, n, m);
    if (memo_.size() < kMemoCapacity) memo_.emplace(key, result);
    return result;
  }

 private:
  IntPolynomial solve_uncached(const WorkGraph& g, int n, int m) {
    const int first = std::countr_zero(g.active);
    const Mask comp = g.component_of(first);
    if (comp != g.active) {
      return solve(g.restricted(comp)) * solve(g.restricted(g.active & ~comp));
    }

    // Connected from here on.
    if (m == n - 1) return IntPolynomial::x() * IntPolynomial::linear(1).pow(n - 1);
    if (m == n * (n - 1) / 2) return IntPolynomial::falling_factorial(n);

    for (Mask a = g.active; a; a &= a - 1) {
      const int v = std::countr_zero(a);
      const Mask nbrs = g.adj[v];
      bool clique = true;
      for (Mask b = nbrs; b && clique; b &= b - 1) {
        const int w = std::countr_zero(b);
        clique = (nbrs & ~bit(w) & ~g.adj[w]) == 0;
      }
      if (clique) {
        WorkGraph rest = g;
        rest.remove_vertex(v);
        return IntPolynomial::linear(std::popcount(nbrs)) * solve(rest);
      }
    }

    if (n >= kPartitionMinVertices && n <= kPartitionMaxVertices && m >= 2 * n) {
      return stable_partition_polynomial(g);
    }

    // Branch vertex: highest degree.
    int u = first;
    for (Mask a = g.active; a; a &= a - 1) {
      const int v = std::countr_zero(a);
      if (std::popcount(g.adj[v]) > std::popcount(g.adj[u])) u = v;
    }

    WorkGraph contracted = g;
    if (2 * m > n * (n - 1) / 2) {
      // Dense: add a missing edge, P(g) = P(g + e) + P(g / e).
      const Mask missing = g.active & ~g.adj[u] & ~bit(u);
      int v = -1;
      if (missing) {
        v = std::countr_zero(missing);
      } else {
        // u is universal; pick a non-adjacent pair elsewhere.
        for (Mask a = g.active & ~bit(u); a && v < 0; a &= a - 1) {
          const int w = std::countr_zero(a);
          const Mask miss = g.active & ~g.adj[w] & ~bit(w);
          if (miss) {
            u = w;
            v = std::countr_zero(miss);
          }
        }
      }
      WorkGraph added = g;
      added.add_edge(u, v);
      contracted.contract(u, v);
      return solve(added) + solve(contracted);
    }

    // Sparse: P(g) = P(g - e) - P(g / e), e = {u, its highest-degree neighbour}.
    int v = -1;
    for (Mask b = g.adj[u]; b; b &= b - 1) {
      const int w = std::countr_zero(b);
      if (v < 0 || std::popcount(g.adj[w]) > std::popcount(g.adj[v])) v = w;
    }
    WorkGraph deleted = g;
    deleted.remove_edge(u, v);
    contracted.contract(u, v);
    return solve(deleted) - solve(contracted);
  }

  std::uint64_t max_steps_;
  std::uint64_t steps_ = 0;
  std::unordered_map<std::string, IntPolynomial> memo_;
};

}  // namespace

IntPolynomial chromatic_polynomial(const Graph& g, const ChromaticLimits& limits) {
  const int k = g.order();
  if (k > limits.max_vertices || k > kChromaticHardVertexLimit) {
    throw BudgetError("chromatic_polynomial: graph has " + std::to_string(k) +
                      " vertices, limit is " +
                      std::to_string(std::min(limits.max_vertices, kChromaticHardVertexLimit)));
  }
  WorkGraph w;
  w.adj.assign(k, 0);
  w.active = (k == 64) ? ~Mask{0} : (bit(k) - 1);
  for (const auto& e : g.edges()) w.add_edge(e.u - 1, e.v - 1);
  return ChromaticSolver(limits.max_steps).solve(w);
}

std::uint64_t count_colorings(const Graph& g, std::uint64_t q, std::uint64_t budget) {
  const int k = g.order();
  if (q == 0) return 0;

  std::uint64_t assignments = 1;
  for (int i = 0; i < k; ++i) {
    if (assignments > budget / q) {
      throw BudgetError("count_colorings: " + std::to_string(q) + "^" + std::to_string(k) +
                        " assignments exceed the enumeration budget of " + std::to_string(budget));
    }
    assignments *= q;
  }

  std::vector<std::uint64_t> colour(k, 0);
  std::uint64_t proper = 0;
  for (std::uint64_t n = 0; n < assignments; ++n) {
    bool ok = true;
    for (const auto& e : g.edges()) {
      if (colour[e.u - 1] == colour[e.v - 1]) {
        ok = false;
        break;
      }
    }
    if (ok) ++proper;
    for (int i = 0; i < k; ++i) {
      if (++colour[i] < q) break;
      colour[i] = 0;
    }
  }
  return proper;
}

BigInt eval_at_prime_power(const IntPolynomial& poly, std::uint64_t p, unsigned s) {
  if (!is_prime(p)) throw UsageError("eval_at_prime_power: " + std::to_string(p) + " is not prime");
  if (s < 1) throw UsageError("eval_at_prime_power: s must be >= 1");
  const BigInt q = boost::multiprecision::pow(BigInt(p), s);
  return poly(q);
}

std::vector<std::string> chromatic_invariant_violations(const IntPolynomial& poly, const Graph& g) {
  std::vector<std::string> bad;
  const int k = g.order();
  if (poly.degree() != k) bad.push_back("degree " + std::to_string(poly.degree()) + " != k = " + std::to_string(k));
  if (poly.leading() != 1) bad.push_back("not monic");
  if (poly.coefficient(0) != 0) bad.push_back("constant term is not zero");
  for (int i = 0; i <= poly.degree(); ++i) {
    const BigInt c = poly.coefficient(i);
    const bool should_be_nonneg = (k - i) % 2 == 0;
    if ((should_be_nonneg && c < 0) || (!should_be_nonneg && c > 0)) {
      bad.push_back("sign alternation fails at x^" + std::to_string(i));
    }
  }
  if (poly.coefficient(k - 1) != -BigInt(g.size())) bad.push_back("coefficient of x^(k-1) != -|E|");
  const bool vanishes_at_one = poly(BigInt(1)) == 0;
  if (vanishes_at_one != (g.size() > 0)) bad.push_back("P(1) == 0 iff an edge exists fails");
  return bad;
}

}  // namespace chromzeta
