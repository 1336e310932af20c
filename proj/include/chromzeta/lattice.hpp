#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "chromzeta/errors.hpp"
#include "chromzeta/graph.hpp"
#include "chromzeta/polynomial.hpp"

namespace chromzeta {

using Coord = std::int64_t;

// Largest box side accepted by the sampling and enumeration routines.
inline constexpr Coord kMaxBoxSide = 2147483647;

struct LatticePoint {
  std::vector<Coord> coords;

  LatticePoint() = default;
  LatticePoint(std::initializer_list<Coord> c) : coords(c) {}
  explicit LatticePoint(std::vector<Coord> c) : coords(std::move(c)) {}

  int dimension() const noexcept { return static_cast<int>(coords.size()); }
  bool operator==(const LatticePoint&) const = default;
};

/// Ordered k-tuple of points sharing one dimension. Repeated points are allowed.
struct LatticeConfig {
  std::vector<LatticePoint> points;
};

/// Residues of a point's coordinates modulo p, each in [0, p-1].
using PColour = std::vector<std::uint64_t>;

/// Exact fraction in lowest terms with positive denominator.
struct ExactFraction {
  BigInt numerator = 0;
  BigInt denominator = 1;

  static ExactFraction reduced(BigInt numerator, BigInt denominator);
  double to_double() const;
  // "numerator/denominator"
  std::string str() const;
  bool operator==(const ExactFraction&) const = default;
};

/// Mutual visibility: distinct points whose coordinate differences have gcd 1.
/// visible(x, x) is false. Throws UsageError on a dimension mismatch.
bool visible(const LatticePoint& x, const LatticePoint& y);
bool visible(std::span<const Coord> x, std::span<const Coord> y);

/// Lattice points strictly inside the segment from x to y. x != y.
std::vector<LatticePoint> segment_interior_points(const LatticePoint& x, const LatticePoint& y);

/// Every edge {i, j} of g joins visible points. cfg must hold exactly g.order() points.
bool is_H_visible(const LatticeConfig& cfg, const Graph& g);
// Same predicate over k * s row-major coordinates.
bool is_H_visible(std::span<const Coord> flat, int dimension, const Graph& g);

PColour p_colour(const LatticePoint& x, std::uint64_t p);

/// Every edge {i, j} of g joins points with distinct residue vectors mod p.
bool is_Hp_visible(const LatticeConfig& cfg, const Graph& g, std::uint64_t p);

/// Tuples of k residue vectors in [0, p-1]^s whose edge-adjacent entries differ,
/// by exhaustive enumeration. Equals P_g(p^s).
std::uint64_t count_Hp_visible_residue_tuples(const Graph& g, std::uint64_t p, int s,
                                              std::uint64_t budget = kDefaultEnumerationBudget);

/// Fraction of the n^{sk} configurations in [1, n]^s that are H-visible.
ExactFraction exact_probability(const Graph& g, Coord n, int s,
                                std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace chromzeta
