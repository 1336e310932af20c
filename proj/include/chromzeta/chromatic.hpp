#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chromzeta/errors.hpp"
#include "chromzeta/graph.hpp"
#include "chromzeta/polynomial.hpp"

namespace chromzeta {

struct ChromaticLimits {
  int max_vertices = kDefaultMaxVertices;
  // Recursion nodes allowed in one chromatic_polynomial call.
  std::uint64_t max_steps = 2'000'000;
};

// Hard ceiling imposed by the bitset representation.
inline constexpr int kChromaticHardVertexLimit = 64;

/// Exact chromatic polynomial P_g by deletion-contraction.
///
/// The recursion factors disconnected graphs into components, peels simplicial
/// vertices (a vertex whose neighbourhood is a clique of size d contributes a
/// factor x - d), closes trees and complete graphs in one step, and otherwise
/// branches on an edge (sparse graphs: P = P(g - e) - P(g / e)) or on a
/// non-edge (dense graphs: P = P(g + e) + P(g / e)). Results are memoised on
/// the labeled edge set for the duration of the call.
///
/// Throws BudgetError when the graph exceeds the configured limits.
IntPolynomial chromatic_polynomial(const Graph& g, const ChromaticLimits& limits = {});

/// Proper colourings of g with q colours, by enumerating all q^k assignments.
/// Throws BudgetError if q^k exceeds the budget.
std::uint64_t count_colorings(const Graph& g, std::uint64_t q,
                              std::uint64_t budget = kDefaultEnumerationBudget);

/// P(p^s) in exact arithmetic. p must be prime and s >= 1.
BigInt eval_at_prime_power(const IntPolynomial& poly, std::uint64_t p, unsigned s);

/// Checks the structural invariants every chromatic polynomial of g must meet
/// (degree, monic, zero constant term, sign alternation, -|E| next-to-leading
/// coefficient, P(1) == 0 iff g has an edge). Returns human-readable violations.
std::vector<std::string> chromatic_invariant_violations(const IntPolynomial& poly, const Graph& g);

}  // namespace chromzeta
