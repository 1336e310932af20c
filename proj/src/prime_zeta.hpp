#pragma once

// Analytic helpers for the Euler-product tail: Riemann zeta minus one by
// Euler-Maclaurin summation and the prime zeta function by Moebius inversion.

namespace chromzeta::detail {

struct BoundedValue {
  double value = 0.0;
  // Rigorous bound on the analytic truncation error (excludes float rounding).
  double truncation_error = 0.0;
  // Sum of |terms| that fed the result, for the rounding ledger.
  double magnitude = 0.0;
};

// zeta(u) - 1 for real u > 1.
BoundedValue zeta_minus_one(double u);

// Prime zeta function P(t) = sum over primes p of p^-t, for real t > 1.
BoundedValue prime_zeta(double t);

}  // namespace chromzeta::detail
