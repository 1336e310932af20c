#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "chromzeta/euler.hpp"
#include "oracles.hpp"

using namespace chromzeta;

namespace {

constexpr double kPi = std::numbers::pi;

// zeta(s) by Euler-Maclaurin at N = 1000; the next omitted term is below 1e-20 for s >= 2.
double zeta_oracle(double s) {
  const int N = 1000;
  double sum = 0.0;
  for (int n = N - 1; n >= 1; --n) sum += std::pow(n, -s);
  sum += std::pow(N, 1 - s) / (s - 1) + 0.5 * std::pow(N, -s) + s / 12.0 * std::pow(N, -s - 1) -
         s * (s + 1) * (s + 2) / 720.0 * std::pow(N, -s - 3);
  return sum;
}

void expect_well_formed(const CertifiedProduct& c) {
  EXPECT_LE(c.lower, c.value);
  EXPECT_LE(c.value, c.upper);
  EXPECT_GE(c.lower, 0.0);
  if (c.exact_zero) {
    EXPECT_EQ(c.value, 0.0);
    EXPECT_EQ(c.lower, 0.0);
    EXPECT_EQ(c.upper, 0.0);
  } else {
    EXPECT_LE(c.upper / c.lower, std::exp(2 * c.tail_epsilon) * (1 + 4 * c.rounding) + 1e-15);
  }
}

Graph G(const std::string& label) { return family(label); }

}  // namespace

TEST(Primes, Examples) {
  EXPECT_EQ(primes_up_to(10), (std::vector<std::uint64_t>{2, 3, 5, 7}));
  EXPECT_EQ(primes_up_to(2), (std::vector<std::uint64_t>{2}));
  const auto p30 = primes_up_to(30);
  EXPECT_EQ(p30.size(), 10u);
  EXPECT_EQ(p30.back(), 29u);
  EXPECT_EQ(primes_up_to(1'000'000).size(), 78498u);
  EXPECT_THROW(primes_up_to(1), UsageError);
  EXPECT_THROW(primes_up_to(1001, 1000), BudgetError);
}

TEST(Primes, SieveMatchesTrialDivision) {
  const auto primes = primes_up_to(20000);
  std::size_t i = 0;
  for (std::uint64_t n = 0; n <= 20000; ++n) {
    const bool expect = oracle::is_prime(n);
    EXPECT_EQ(is_prime(n), expect) << n;
    if (expect) EXPECT_EQ(primes.at(i++), n);
  }
  EXPECT_EQ(i, primes.size());
}

TEST(Primes, Moebius) {
  const int expect[] = {1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0};
  for (int n = 1; n <= 12; ++n) EXPECT_EQ(moebius(n), expect[n - 1]) << n;
}

TEST(EulerFactor, Examples) {
  const IntPolynomial k2 = chromatic_polynomial(G("path:2"));
  EXPECT_DOUBLE_EQ(euler_factor(k2, 2, 2.0), 0.75);
  EXPECT_EQ(euler_factor(chromatic_polynomial(G("complete:5")), 2, 2.0), 0.0);
  for (std::uint64_t p : {2, 3, 101})
    for (double s : {1.5, 2.0, 3.0}) EXPECT_EQ(euler_factor(chromatic_polynomial(G("empty:3")), p, s), 1.0);
}

TEST(EulerFactor, InUnitInterval) {
  for (const char* label : {"path:4", "cycle:5", "cycle:6", "complete:4", "star:5"}) {
    const IntPolynomial p = chromatic_polynomial(G(label));
    for (std::uint64_t q : primes_up_to(200))
      for (double s : {1.25, 2.0, 2.5, 3.0}) {
        const double f = euler_factor(p, q, s);
        EXPECT_GE(f, 0.0);
        EXPECT_LE(f, 1.0);
      }
  }
}

TEST(ZetaInverse, KnownConstants) {
  const auto z2 = riemann_zeta_inverse(2);
  expect_well_formed(z2);
  EXPECT_LE(std::abs(z2.value - 6 / (kPi * kPi)), z2.width() + 1e-12);
  EXPECT_TRUE(z2.contains(6 / (kPi * kPi)));
  const auto z4 = riemann_zeta_inverse(4);
  EXPECT_LE(std::abs(z4.value - 90 / std::pow(kPi, 4)), z4.width() + 1e-12);
  for (double s : {1.5, 2.5, 3.0, 7.0}) {
    const auto z = riemann_zeta_inverse(s);
    EXPECT_LE(std::abs(z.value - 1 / zeta_oracle(s)), z.width() + 1e-12) << s;
  }
  const auto big = riemann_zeta_inverse(40);
  EXPECT_NEAR(big.value, 1 - std::pow(2, -40) - std::pow(3, -40), 1e-15);
}

TEST(ZetaInverse, Examples) {
  const auto path2 = zeta_H_inverse(G("path:2"), 2);
  EXPECT_NEAR(path2.value, 0.6079271, 5e-8);
  const auto k5 = zeta_H_inverse(G("complete:5"), 2);
  EXPECT_TRUE(k5.exact_zero);
  expect_well_formed(k5);
  const auto e4 = zeta_H_inverse(G("empty:4"), 2);
  EXPECT_EQ(e4.value, 1.0);
  EXPECT_EQ(e4.lower, 1.0);
  EXPECT_EQ(e4.upper, 1.0);
  const auto c3 = zeta_H_inverse(G("cycle:3"), 2);
  EXPECT_NEAR(c3.value, 0.196, 5e-4);
}

// Direct product of (1 - 3/p^2 + 2/p^4) over p <= 10^7 plus the first-order tail -3 sum_{p > M} p^-2
// estimated as 3 / (M ln M); the residual is far below the pinned 5e-8.
TEST(ZetaInverse, TriangleAgainstDirectProduct) {
  const std::uint64_t M = 10'000'000;
  std::vector<bool> composite(M + 1, false);
  double log_sum = 0.0;
  for (std::uint64_t p = 2; p <= M; ++p) {
    if (composite[p]) continue;
    for (std::uint64_t q = p * p; q <= M; q += p) composite[q] = true;
    const double x = 1.0 / static_cast<double>(p);
    log_sum += std::log1p(-3 * x * x + 2 * x * x * x * x);
  }
  const double direct = std::exp(log_sum - 3.0 / (M * std::log(static_cast<double>(M))));
  const auto c3 = zeta_H_inverse(G("cycle:3"), 2);
  EXPECT_NEAR(c3.value, direct, 5e-8);
}

TEST(ZetaInverse, Errors) {
  EXPECT_THROW(zeta_H_inverse(G("path:2"), 1.0), UsageError);
  EXPECT_THROW(zeta_H_inverse(G("path:2"), 0.5), UsageError);
  EXPECT_THROW(zeta_H_inverse(G("path:2"), std::nan("")), UsageError);
  EulerOptions plain;
  plain.tail_mode = TailMode::truncated;
  EXPECT_THROW(zeta_H_inverse(G("path:2"), 2, plain), BudgetError);
  EulerOptions bad;
  bad.target_tail = 0;
  EXPECT_THROW(zeta_H_inverse(G("path:2"), 2, bad), UsageError);
}

TEST(ZetaInverse, TruncatedModeMeetsTarget) {
  EulerOptions plain;
  plain.tail_mode = TailMode::truncated;
  plain.target_tail = 1e-6;
  const auto c = zeta_H_inverse(G("cycle:4"), 3, plain);
  expect_well_formed(c);
  EXPECT_LE(c.tail_epsilon, 1e-6);
  const auto corrected = zeta_H_inverse(G("cycle:4"), 3);
  EXPECT_TRUE(c.overlaps(corrected));
  EXPECT_LT(corrected.width(), c.width());
}

// Containment: the enclosure from M must hold the value recomputed at 10 M.
TEST(ZetaInverse, RecomputeAtTenfoldTruncationIsContained) {
  for (TailMode mode : {TailMode::corrected, TailMode::truncated}) {
    for (const char* label : {"path:2", "path:4", "cycle:3", "cycle:4", "complete:3", "star:4", "complete:4"}) {
      for (double s : {2.0, 3.0, 2.5}) {
        EulerOptions o;
        o.tail_mode = mode;
        if (mode == TailMode::truncated) o.target_tail = s == 2.0 ? 1e-3 : 1e-5;
        const auto first = zeta_H_inverse(G(label), s, o);
        expect_well_formed(first);
        EulerOptions deeper = o;
        deeper.truncation_override = first.truncation_prime * 10;
        const auto second = zeta_H_inverse(G(label), s, deeper);
        EXPECT_TRUE(first.contains(second.value)) << label << " s=" << s << " mode=" << int(mode);
        EXPECT_TRUE(first.overlaps(second));
      }
    }
  }
}

TEST(ZetaInverse, PartialProductNonIncreasing) {
  EulerOptions o;
  o.tail_mode = TailMode::truncated;
  double previous = 1.0;
  for (std::uint64_t m : {2, 10, 100, 1000, 10000, 100000}) {
    o.truncation_override = m;
    const auto c = zeta_H_inverse(G("cycle:5"), 2, o);
    EXPECT_LE(c.value, previous) << m;
    previous = c.value;
  }
}

TEST(ZetaInverse, PathIsPowerOfRiemann) {
  for (double s : {2.0, 3.0}) {
    const auto r = riemann_zeta_inverse(s);
    for (int k = 1; k <= 6; ++k) {
      const auto path = zeta_H_inverse(G("path:" + std::to_string(k)), s);
      const auto power = pow(r, k - 1);
      EXPECT_TRUE(path.overlaps(power)) << k << " " << s;
      EXPECT_NEAR(path.value, power.value, path.width() + power.width());
    }
  }
}

TEST(CycleClosedForm, MatchesChromaticRoute) {
  for (int k = 3; k <= 6; ++k)
    for (double s : {2.0, 3.0}) {
      const auto a = cycle_limit_closed_form(k, s);
      const auto b = zeta_H_inverse(G("cycle:" + std::to_string(k)), s);
      expect_well_formed(a);
      EXPECT_TRUE(a.overlaps(b)) << k << " " << s;
      EXPECT_LE(std::abs(a.midpoint() - b.midpoint()), 1e-9);
    }
  EXPECT_THROW(cycle_limit_closed_form(2, 2), UsageError);
}

TEST(CycleClosedForm, Parity) {
  for (double s : {2.0, 3.0}) {
    const auto r = riemann_zeta_inverse(s);
    for (int k = 3; k <= 6; ++k) {
      const auto c = zeta_H_inverse(G("cycle:" + std::to_string(k)), s);
      const auto rk = pow(r, k);
      if (k % 2) {
        EXPECT_LT(c.upper, rk.lower) << k << " " << s;
      } else {
        EXPECT_GT(c.lower, rk.upper) << k << " " << s;
      }
      const auto closed = cycle_limit_closed_form(k, s);
      EXPECT_EQ(k % 2 ? closed.upper < rk.lower : closed.lower > rk.upper, true);
    }
  }
}

TEST(Rearick, Examples) {
  const auto r1 = rearick_ratio(1, 2);
  EXPECT_TRUE(r1.overlaps(riemann_zeta_inverse(2)));
  EXPECT_TRUE(rearick_ratio(4, 2).exact_zero);
  EXPECT_TRUE(rearick_ratio(8, 3).exact_zero);
  EXPECT_FALSE(rearick_ratio(7, 3).exact_zero);
  for (std::uint64_t m = 1; m <= 3; ++m) {
    const auto q = quotient(zeta_H_inverse(G("complete:" + std::to_string(m + 1)), 2),
                            zeta_H_inverse(G("complete:" + std::to_string(m)), 2));
    const auto r = rearick_ratio(m, 2);
    EXPECT_TRUE(r.overlaps(q)) << m;
    EXPECT_LE(std::abs(r.value - q.value), r.width() + q.width());
  }
}

TEST(ConditionalLimit, Examples) {
  for (int k = 3; k <= 6; ++k) {
    for (double s : {2.0, 3.0}) {
      const std::string ks = std::to_string(k);
      const auto c = conditional_limit(G("cycle:" + ks), G("path:" + ks), s);
      const auto expect = quotient(cycle_limit_closed_form(k, s), pow(riemann_zeta_inverse(s), k - 1));
      EXPECT_TRUE(c.overlaps(expect)) << k << " " << s;
    }
  }
  const auto same = conditional_limit(G("cycle:5"), G("cycle:5"), 2);
  EXPECT_TRUE(same.contains(1.0));
  const auto k3 = conditional_limit(G("complete:3"), Graph(3, {{1, 2}, {1, 3}, {2, 3}}), 2);
  EXPECT_TRUE(k3.contains(1.0));
  const auto r2 = conditional_limit(G("complete:3"), Graph(3, {{1, 2}}), 2);
  EXPECT_TRUE(r2.overlaps(rearick_ratio(2, 2)));
  EXPECT_THROW(conditional_limit(G("path:3"), G("cycle:3"), 2), UsageError);
  EXPECT_THROW(conditional_limit(G("complete:5"), G("complete:5"), 2), UsageError);
  EXPECT_THROW(conditional_limit(G("path:3"), G("path:2"), 2), UsageError);
}

TEST(Euler, WorkerCountDoesNotChangeBits) {
  for (const char* label : {"cycle:5", "complete:3"}) {
    EulerOptions o;
    o.workers = 1;
    const auto a = zeta_H_inverse(G(label), 2, o);
    for (unsigned w : {2u, 3u, 8u}) {
      o.workers = w;
      const auto b = zeta_H_inverse(G(label), 2, o);
      EXPECT_EQ(a.value, b.value);
      EXPECT_EQ(a.lower, b.lower);
      EXPECT_EQ(a.upper, b.upper);
      EXPECT_EQ(a.truncation_prime, b.truncation_prime);
    }
  }
}

TEST(Euler, NonIntegerExponent) {
  const auto k5 = zeta_H_inverse(G("complete:5"), 2.5);
  EXPECT_FALSE(k5.exact_zero);
  EXPECT_GT(k5.value, 0.0);
  expect_well_formed(k5);
  const auto path = zeta_H_inverse(G("path:2"), 2.5);
  EXPECT_LE(std::abs(path.value - 1 / zeta_oracle(2.5)), path.width() + 1e-12);
}

TEST(Euler, IntervalArithmetic) {
  CertifiedProduct a{0.5, 0.4, 0.6, 10, 0.1, 0, false};
  CertifiedProduct b{0.5, 0.25, 1.0, 20, 0.1, 0, false};
  const auto m = a * b;
  EXPECT_LE(m.lower, 0.1);
  EXPECT_GE(m.upper, 0.6);
  EXPECT_TRUE(m.contains(0.25));
  const auto q = quotient(a, b);
  EXPECT_LE(q.lower, 0.4);
  EXPECT_GE(q.upper, 2.4);
  EXPECT_THROW(quotient(a, CertifiedProduct::zero(2)), UsageError);
  EXPECT_TRUE((a * CertifiedProduct::zero(2)).exact_zero);
  const auto sq = pow(a, 2);
  EXPECT_LE(sq.lower, 0.16);
  EXPECT_GE(sq.upper, 0.36);
}
