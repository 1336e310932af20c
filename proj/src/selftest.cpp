#include "chromzeta/selftest.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <string>

#include "chromzeta/chromatic.hpp"
#include "chromzeta/euler.hpp"
#include "chromzeta/lattice.hpp"
#include "chromzeta/montecarlo.hpp"
#include "chromzeta/philox.hpp"

namespace chromzeta {

namespace {

// Returns an empty string on success, otherwise a description of the failure.
using Check = std::function<std::string()>;

std::string closed_forms() {
  const IntPolynomial x = IntPolynomial::x();
  const IntPolynomial x1 = IntPolynomial::linear(1);
  for (int k = 1; k <= 8; ++k) {
    if (chromatic_polynomial(family("path:" + std::to_string(k))) != x * x1.pow(k - 1)) return "path:" + std::to_string(k);
    if (chromatic_polynomial(family("complete:" + std::to_string(k))) != IntPolynomial::falling_factorial(k))
      return "complete:" + std::to_string(k);
  }
  for (int k = 3; k <= 8; ++k) {
    IntPolynomial expected = x1.pow(k) + (k % 2 == 0 ? x1 : -x1);
    if (chromatic_polynomial(family("cycle:" + std::to_string(k))) != expected) return "cycle:" + std::to_string(k);
  }
  return {};
}

std::string coloring_oracle() {
  // Every labeled graph on 4 vertices.
  std::vector<Edge> all;
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) all.push_back({i, j});
  for (unsigned mask = 0; mask < (1u << all.size()); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t b = 0; b < all.size(); ++b)
      if (mask & (1u << b)) edges.push_back(all[b]);
    const Graph g(4, edges);
    const IntPolynomial p = chromatic_polynomial(g);
    if (!chromatic_invariant_violations(p, g).empty()) return "invariants, mask " + std::to_string(mask);
    for (std::uint64_t q = 0; q <= 4; ++q) {
      if (p(BigInt(q)) != count_colorings(g, q)) return "mask " + std::to_string(mask) + ", q " + std::to_string(q);
    }
  }
  return {};
}

std::string residue_identity() {
  for (const char* label : {"path:3", "cycle:3", "cycle:4"}) {
    const Graph g = family(label);
    const IntPolynomial p = chromatic_polynomial(g);
    for (auto [prime, s] : {std::pair{2u, 1}, {3u, 1}, {2u, 2}}) {
      if (BigInt(count_Hp_visible_residue_tuples(g, prime, s)) != eval_at_prime_power(p, prime, s))
        return std::string(label) + " p=" + std::to_string(prime) + " s=" + std::to_string(s);
    }
  }
  return {};
}

std::string basel_constant() {
  const CertifiedProduct r = riemann_zeta_inverse(2.0);
  const double expected = 6.0 / (std::numbers::pi * std::numbers::pi);
  if (std::abs(r.value - expected) > r.width() + 1e-12) return "1/zeta(2) = " + std::to_string(r.value);
  return {};
}

std::string cycle_routes_agree() {
  for (int k = 3; k <= 5; ++k) {
    const CertifiedProduct a = cycle_limit_closed_form(k, 2.0);
    const CertifiedProduct b = zeta_H_inverse(family("cycle:" + std::to_string(k)), 2.0);
    if (!a.overlaps(b)) return "k=" + std::to_string(k);
  }
  return {};
}

std::string visibility_oracle() {
  for (Coord a = 1; a <= 5; ++a)
    for (Coord b = 1; b <= 5; ++b)
      for (Coord c = 1; c <= 5; ++c)
        for (Coord d = 1; d <= 5; ++d) {
          const LatticePoint x{a, b}, y{c, d};
          if (x == y) continue;
          if (visible(x, y) != segment_interior_points(x, y).empty()) return "mismatch";
        }
  return {};
}

std::string philox_vectors() {
  const auto out = Philox4x32::generate({0, 0, 0, 0}, {0, 0});
  if (out != Philox4x32::Counter{0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu, 0x9b00dbd8u}) return "zero vector";
  return {};
}

std::string simulation_deterministic() {
  const Graph g = family("cycle:3");
  SimulationOptions o{50'000, 7, 1};
  const Estimate one = estimate_probability(g, 1000, 2, o);
  o.workers = 3;
  const Estimate three = estimate_probability(g, 1000, 2, o);
  if (one.successes != three.successes) return "worker count changed the result";
  return {};
}

}  // namespace

SelftestSummary run_selftest(std::ostream& out) {
  const std::vector<std::pair<const char*, Check>> checks = {
      {"chromatic closed forms", closed_forms},
      {"chromatic vs brute-force colourings", coloring_oracle},
      {"residue tuples == P(p^s)", residue_identity},
      {"1/zeta(2) == 6/pi^2", basel_constant},
      {"cycle closed form vs chromatic product", cycle_routes_agree},
      {"gcd visibility vs segment points", visibility_oracle},
      {"philox known-answer vector", philox_vectors},
      {"simulation worker determinism", simulation_deterministic},
  };
  SelftestSummary summary;
  for (const auto& [name, check] : checks) {
    std::string problem;
    try {
      problem = check();
    } catch (const std::exception& e) {
      problem = std::string("exception: ") + e.what();
    }
    if (problem.empty()) {
      ++summary.passed;
      out << "PASS " << name << '\n';
    } else {
      ++summary.failed;
      out << "FAIL " << name << ": " << problem << '\n';
    }
  }
  out << summary.passed << " passed, " << summary.failed << " failed\n";
  return summary;
}

}  // namespace chromzeta
