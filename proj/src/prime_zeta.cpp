#include "prime_zeta.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "chromzeta/primes.hpp"

namespace chromzeta::detail {

namespace {

// B_{2r} / (2r)! for r = 1..11.
constexpr std::array<double, 11> kBernoulliOverFactorial = {
    1.0 / 6.0 / 2.0,
    -1.0 / 30.0 / 24.0,
    1.0 / 42.0 / 720.0,
    -1.0 / 30.0 / 40320.0,
    5.0 / 66.0 / 3628800.0,
    -691.0 / 2730.0 / 479001600.0,
    7.0 / 6.0 / 87178291200.0,
    -3617.0 / 510.0 / 20922789888000.0,
    43867.0 / 798.0 / 6402373705728000.0,
    -174611.0 / 330.0 / 2432902008176640000.0,
    854513.0 / 138.0 / 1124000727777607680000.0,
};

constexpr int kDirectTerms = 20;  // Euler-Maclaurin cut-off N
constexpr int kCorrections = 10;  // Bernoulli corrections used; the 11th bounds the error

}  // namespace

BoundedValue zeta_minus_one(double u) {
  if (!(u > 1.0)) throw std::domain_error("zeta_minus_one: requires u > 1");
  const double n = kDirectTerms;

  double sum = 0.0;
  double magnitude = 0.0;
  for (int m = kDirectTerms - 1; m >= 2; --m) {
    const double t = std::pow(static_cast<double>(m), -u);
    sum += t;
    magnitude += t;
  }
  const double n_pow = std::pow(n, -u);
  const double integral = n * n_pow / (u - 1.0);
  sum += integral + 0.5 * n_pow;
  magnitude += integral + 0.5 * n_pow;

  // T_r = B_{2r}/(2r)! * u (u+1) ... (u+2r-2) * N^{-u-2r+1}
  double rising = u;           // u (u+1) ... (u+2r-2)
  double power = n_pow / n;    // N^{-u-2r+1}
  double next_term = 0.0;
  for (int r = 1; r <= kCorrections + 1; ++r) {
    const double term = kBernoulliOverFactorial[r - 1] * rising * power;
    if (r <= kCorrections) {
      sum += term;
      magnitude += std::abs(term);
    } else {
      next_term = term;
    }
    rising *= (u + 2 * r - 1) * (u + 2 * r);
    power /= n * n;
  }
  // For real u the remainder is bounded by the first omitted correction.
  return {sum, std::abs(next_term), magnitude};
}

BoundedValue prime_zeta(double t) {
  if (!(t > 1.0)) throw std::domain_error("prime_zeta: requires t > 1");
  BoundedValue out;
  double compensation = 0.0;
  for (int n = 1; n <= 2000; ++n) {
    const int mu = moebius(static_cast<std::uint64_t>(n));
    if (mu != 0) {
      const BoundedValue z = zeta_minus_one(n * t);
      const double term = mu * std::log1p(z.value) / n;
      // Neumaier summation.
      const double s = out.value + term;
      compensation += (std::abs(out.value) >= std::abs(term)) ? (out.value - s) + term
                                                              : (term - s) + out.value;
      out.value = s;
      out.magnitude += std::abs(term);
      out.truncation_error += z.truncation_error / n;
    }
    // For u >= 2, log zeta(u) <= zeta(u) - 1 <= 3 * 2^-u, so the remaining
    // terms sum to at most 3 * 2^{-(n+1)t} / ((n+1)(1 - 2^-t)).
    if ((n + 1) * t >= 2.0) {
      const double rest = 3.0 * std::exp2(-(n + 1) * t) / ((n + 1) * (1.0 - std::exp2(-t)));
      if (rest < 1e-40) {
        out.truncation_error += rest;
        out.value += compensation;
        return out;
      }
    }
  }
  throw std::runtime_error("prime_zeta: Moebius series did not converge");
}

}  // namespace chromzeta::detail
