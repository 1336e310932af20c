#include "chromzeta/lattice.hpp"

#include <numeric>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "chromzeta/primes.hpp"

namespace chromzeta {

namespace {

std::uint64_t abs_diff(Coord a, Coord b) {
  return a >= b ? static_cast<std::uint64_t>(a) - static_cast<std::uint64_t>(b)
                : static_cast<std::uint64_t>(b) - static_cast<std::uint64_t>(a);
}

// gcd of |x_r - y_r| with gcd(0, d) = d; 0 only for equal points.
std::uint64_t difference_gcd(std::span<const Coord> x, std::span<const Coord> y) {
  std::uint64_t g = 0;
  for (std::size_t r = 0; r < x.size(); ++r) {
    g = std::gcd(g, abs_diff(x[r], y[r]));
    if (g == 1) return 1;
  }
  return g;
}

void require_same_dimension(std::size_t a, std::size_t b, const char* who) {
  if (a != b) {
    throw UsageError(std::string(who) + ": dimension mismatch (" + std::to_string(a) + " vs " +
                     std::to_string(b) + ")");
  }
}

int config_dimension(const LatticeConfig& cfg, const Graph& g, const char* who) {
  if (static_cast<int>(cfg.points.size()) != g.order()) {
    throw UsageError(std::string(who) + ": configuration has " + std::to_string(cfg.points.size()) +
                     " points but the graph has " + std::to_string(g.order()) + " vertices");
  }
  const int s = cfg.points.empty() ? 0 : cfg.points.front().dimension();
  for (const auto& pt : cfg.points) require_same_dimension(pt.coords.size(), s, who);
  return s;
}

// base^exponent, or 0 when it exceeds limit.
std::uint64_t bounded_power(std::uint64_t base, std::uint64_t exponent, std::uint64_t limit) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) {
    if (base != 0 && r > limit / base) return 0;
    r *= base;
  }
  return r <= limit ? r : 0;
}

}  // namespace

ExactFraction ExactFraction::reduced(BigInt numerator, BigInt denominator) {
  if (denominator == 0) throw UsageError("ExactFraction: zero denominator");
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  BigInt g = boost::multiprecision::gcd(numerator, denominator);
  if (g > 1) {
    numerator /= g;
    denominator /= g;
  }
  if (numerator == 0) denominator = 1;
  return {numerator, denominator};
}

double ExactFraction::to_double() const {
  using boost::multiprecision::cpp_bin_float_double;
  return static_cast<double>(cpp_bin_float_double(numerator) / cpp_bin_float_double(denominator));
}

std::string ExactFraction::str() const { return numerator.str() + "/" + denominator.str(); }

bool visible(std::span<const Coord> x, std::span<const Coord> y) {
  require_same_dimension(x.size(), y.size(), "visible");
  return difference_gcd(x, y) == 1;
}

bool visible(const LatticePoint& x, const LatticePoint& y) {
  return visible(std::span<const Coord>(x.coords), std::span<const Coord>(y.coords));
}

std::vector<LatticePoint> segment_interior_points(const LatticePoint& x, const LatticePoint& y) {
  require_same_dimension(x.coords.size(), y.coords.size(), "segment_interior_points");
  const std::uint64_t g = difference_gcd(x.coords, y.coords);
  if (g == 0) throw UsageError("segment_interior_points: endpoints are equal");

  const std::size_t s = x.coords.size();
  std::vector<Coord> step(s);
  for (std::size_t r = 0; r < s; ++r) {
    const auto d = static_cast<Coord>(abs_diff(x.coords[r], y.coords[r]) / g);
    step[r] = y.coords[r] >= x.coords[r] ? d : -d;
  }
  std::vector<LatticePoint> out;
  out.reserve(g - 1);
  for (std::uint64_t i = 1; i < g; ++i) {
    LatticePoint pt;
    pt.coords.resize(s);
    for (std::size_t r = 0; r < s; ++r) pt.coords[r] = x.coords[r] + static_cast<Coord>(i) * step[r];
    out.push_back(std::move(pt));
  }
  return out;
}

bool is_H_visible(std::span<const Coord> flat, int dimension, const Graph& g) {
  if (flat.size() != static_cast<std::size_t>(dimension) * g.order()) {
    throw UsageError("is_H_visible: flat configuration has the wrong length");
  }
  const std::size_t s = dimension;
  for (const auto& e : g.edges()) {
    if (difference_gcd(flat.subspan((e.u - 1) * s, s), flat.subspan((e.v - 1) * s, s)) != 1) return false;
  }
  return true;
}

bool is_H_visible(const LatticeConfig& cfg, const Graph& g) {
  config_dimension(cfg, g, "is_H_visible");
  for (const auto& e : g.edges()) {
    if (!visible(cfg.points[e.u - 1], cfg.points[e.v - 1])) return false;
  }
  return true;
}

PColour p_colour(const LatticePoint& x, std::uint64_t p) {
  if (p < 2) throw UsageError("p_colour: p must be >= 2");
  const auto m = static_cast<Coord>(p);
  PColour c(x.coords.size());
  for (std::size_t r = 0; r < c.size(); ++r) c[r] = static_cast<std::uint64_t>(((x.coords[r] % m) + m) % m);
  return c;
}

bool is_Hp_visible(const LatticeConfig& cfg, const Graph& g, std::uint64_t p) {
  config_dimension(cfg, g, "is_Hp_visible");
  for (const auto& e : g.edges()) {
    if (p_colour(cfg.points[e.u - 1], p) == p_colour(cfg.points[e.v - 1], p)) return false;
  }
  return true;
}

std::uint64_t count_Hp_visible_residue_tuples(const Graph& g, std::uint64_t p, int s, std::uint64_t budget) {
  if (!is_prime(p)) throw UsageError("count_Hp_visible_residue_tuples: " + std::to_string(p) + " is not prime");
  if (s < 1) throw UsageError("count_Hp_visible_residue_tuples: s must be >= 1");
  const int k = g.order();
  const std::uint64_t digits = static_cast<std::uint64_t>(k) * s;
  const std::uint64_t tuples = bounded_power(p, digits, budget);
  if (tuples == 0) {
    throw BudgetError("count_Hp_visible_residue_tuples: (p^s)^k exceeds the enumeration budget of " +
                      std::to_string(budget));
  }

  // residue[i * s + r] is coordinate r of the residue vector of vertex i.
  std::vector<std::uint64_t> residue(digits, 0);
  const auto differ = [&](int a, int b) {
    for (int r = 0; r < s; ++r)
      if (residue[a * s + r] != residue[b * s + r]) return true;
    return false;
  };
  std::uint64_t good = 0;
  for (std::uint64_t t = 0; t < tuples; ++t) {
    bool ok = true;
    for (const auto& e : g.edges()) {
      if (!differ(e.u - 1, e.v - 1)) {
        ok = false;
        break;
      }
    }
    if (ok) ++good;
    for (std::uint64_t d = 0; d < digits; ++d) {
      if (++residue[d] < p) break;
      residue[d] = 0;
    }
  }
  return good;
}

ExactFraction exact_probability(const Graph& g, Coord n, int s, std::uint64_t budget) {
  if (n < 1 || n > kMaxBoxSide) throw UsageError("exact_probability: n must be in [1, 2^31 - 1]");
  if (s < 1) throw UsageError("exact_probability: s must be >= 1");
  const int k = g.order();
  const std::uint64_t digits = static_cast<std::uint64_t>(k) * s;
  const std::uint64_t total = bounded_power(static_cast<std::uint64_t>(n), digits, budget);
  if (total == 0) {
    throw BudgetError("exact_probability: n^(sk) exceeds the enumeration budget of " + std::to_string(budget));
  }

  std::vector<Coord> flat(digits, 1);
  std::uint64_t hits = 0;
  for (std::uint64_t t = 0; t < total; ++t) {
    if (is_H_visible(flat, s, g)) ++hits;
    for (std::uint64_t d = 0; d < digits; ++d) {
      if (++flat[d] <= n) break;
      flat[d] = 1;
    }
  }
  return ExactFraction::reduced(BigInt(hits), BigInt(total));
}

}  // namespace chromzeta
