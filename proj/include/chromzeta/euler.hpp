#pragma once

#include <cstdint>
#include <string>

#include "chromzeta/chromatic.hpp"
#include "chromzeta/graph.hpp"
#include "chromzeta/polynomial.hpp"
#include "chromzeta/primes.hpp"

namespace chromzeta {

/// Truncated Euler product with rigorous enclosure.
///
/// value is the computed product, [lower, upper] encloses the true infinite
/// product. tail_epsilon bounds the error in log-space coming from primes
/// beyond truncation_prime (after any analytic tail correction); rounding is
/// the conservative relative float-rounding ledger rho.
struct CertifiedProduct {
  double value = 1.0;
  double lower = 1.0;
  double upper = 1.0;
  std::uint64_t truncation_prime = 0;
  double tail_epsilon = 0.0;
  double rounding = 0.0;
  bool exact_zero = false;

  double width() const noexcept { return upper - lower; }
  double midpoint() const noexcept { return 0.5 * (lower + upper); }
  bool contains(double x) const noexcept { return lower <= x && x <= upper; }
  bool overlaps(const CertifiedProduct& other) const noexcept {
    return lower <= other.upper && other.lower <= upper;
  }

  static CertifiedProduct zero(std::uint64_t truncation_prime);
};

enum class TailMode {
  // Plain truncation: M grows until 2 A M^{1-s} / (s-1) <= target_tail.
  truncated,
  // Explicit product up to M plus the analytic tail -sum_j S_j/j P_M(js),
  // where S_j are root power sums and P_M the prime zeta tail beyond M.
  corrected,
};

struct EulerOptions {
  double target_tail = 1e-10;
  TailMode tail_mode = TailMode::corrected;
  std::uint64_t prime_cap = kDefaultPrimeCap;
  // Smallest sieve bound used in corrected mode.
  std::uint64_t min_truncation = 100'000;
  // Nonzero: use exactly this sieve bound; the tail bound is then reported
  // as-is even if it exceeds target_tail.
  std::uint64_t truncation_override = 0;
  // Threads for the factor loop. The result is bit-identical for any value.
  unsigned workers = 1;
  ChromaticLimits chromatic{};
};

/// Local factor poly(p^s) / p^{s deg}, clamped to [0, 1].
/// Integer s is evaluated exactly through the deficit p^{ks} - P(p^s).
double euler_factor(const IntPolynomial& poly, std::uint64_t p, double s);

/// prod_p poly(p^s) / p^{s deg} for a monic poly with poly(q) <= q^deg.
CertifiedProduct monic_euler_product(const IntPolynomial& poly, double s,
                                     const EulerOptions& options = {});

/// Inverse chromatic zeta function of g at s > 1.
CertifiedProduct zeta_H_inverse(const Graph& g, double s, const EulerOptions& options = {});

/// 1 / zeta(s), evaluated as the chromatic zeta product of a single edge.
CertifiedProduct riemann_zeta_inverse(double s, const EulerOptions& options = {});

/// zeta(s)^-k * prod_p (1 + (-1)^k / (p^s - 1)^{k-1}), k >= 3.
CertifiedProduct cycle_limit_closed_form(int k, double s, const EulerOptions& options = {});

/// prod_p (1 - m / p^s); exactly zero when m >= 2^s.
CertifiedProduct rearick_ratio(std::uint64_t m, int s, const EulerOptions& options = {});

/// zeta_H_inverse(g) / zeta_H_inverse(sub) with interval division.
CertifiedProduct conditional_limit(const Graph& g, const Graph& sub, double s,
                                   const EulerOptions& options = {});

CertifiedProduct operator*(const CertifiedProduct& a, const CertifiedProduct& b);
CertifiedProduct quotient(const CertifiedProduct& numerator, const CertifiedProduct& denominator);
CertifiedProduct pow(const CertifiedProduct& base, int exponent);

}  // namespace chromzeta
